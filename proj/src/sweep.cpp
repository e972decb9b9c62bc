#include "domination/sweep.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "domination/errors.hpp"

namespace domination {

namespace {

std::vector<ExceptionalFiber> fiber_types(std::int64_t max_alpha) {
  std::vector<ExceptionalFiber> out;
  for (std::int64_t a = 2; a <= max_alpha; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

// Multisets of size `size` drawn from `pool`, as index sequences i1 <= i2 <= ...
template <class F>
void for_each_multiset(std::size_t pool, std::size_t size, F&& visit) {
  std::vector<std::size_t> idx(size, 0);
  if (size == 0) {
    visit(idx);
    return;
  }
  if (pool == 0) return;
  while (true) {
    visit(idx);
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == pool - 1) --k;
    if (k == 0) return;
    const std::size_t next = idx[k - 1] + 1;
    for (std::size_t j = k - 1; j < size; ++j) idx[j] = next;
  }
}

}  // namespace

std::vector<SeifertData> sweep_seifert_samples() {
  return {
      SeifertData{1, 0, {}},                                // T^3, E3
      SeifertData{2, 0, {}},                                // Sigma_2 x S^1, H2xR
      SeifertData{1, -1, {}},                               // Heisenberg, Nil
      SeifertData{2, 1, {}},                                // SL2Rtilde
      SeifertData{0, -2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}}, // E3 with fibres
      SeifertData{0, 1, {{2, 1}, {3, 1}, {7, 1}}},          // SL2Rtilde with fibres
  };
}

std::vector<Manifold> sweep_inputs() {
  std::vector<Manifold> out;

  const auto types = fiber_types(5);
  for (std::int64_t g = 0; g <= 2; ++g) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      for (std::size_t count = 0; count <= 3; ++count) {
        for_each_multiset(types.size(), count, [&](const std::vector<std::size_t>& idx) {
          SeifertData s{g, b, {}};
          for (std::size_t i : idx) s.fibers.push_back(types[i]);
          try {
            out.push_back(normalize_manifold(Manifold({s})));
          } catch (const NormalizationError&) {
            // spherical space forms are outside the Seifert part of the family
          }
        });
      }
    }
  }

  std::vector<PrimePiece> pool{S2xS1Piece{}, HyperbolicPiece{}, SolPiece{}, OtherAsphericalPiece{}};
  for (std::int64_t q = 2; q <= 8; ++q) pool.push_back(SphericalPiece{q});
  for (const auto& s : sweep_seifert_samples()) pool.push_back(s);
  for (std::size_t count = 1; count <= 3; ++count) {
    for_each_multiset(pool.size(), count, [&](const std::vector<std::size_t>& idx) {
      std::vector<PrimePiece> pieces;
      for (std::size_t i : idx) pieces.push_back(pool[i]);
      out.push_back(Manifold(std::move(pieces)));
    });
  }
  out.push_back(Manifold{});

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SweepSummary run_sweep(const std::vector<Manifold>& inputs, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, inputs.size())));

  // Each worker owns a contiguous slice; slices are concatenated in order.
  const std::size_t chunk = (inputs.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<ConsistencyReport>>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(inputs.size(), w * chunk);
    const std::size_t end = std::min(inputs.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&inputs, begin, end] {
      std::vector<ConsistencyReport> bad;
      for (std::size_t i = begin; i < end; ++i) {
        ConsistencyReport r = cross_check(inputs[i]);
        if (!r.consistent()) bad.push_back(std::move(r));
      }
      return bad;
    }));
  }
  SweepSummary summary;
  summary.inputs = inputs.size();
  for (auto& part : parts) {
    auto bad = part.get();
    std::move(bad.begin(), bad.end(), std::back_inserter(summary.discrepancies));
  }
  return summary;
}

}  // namespace domination
