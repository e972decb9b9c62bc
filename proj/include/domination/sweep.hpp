#pragma once

#include <cstddef>
#include <vector>

#include "domination/decision.hpp"

namespace domination {

/// The exhaustive cross-check family:
///  - every normalized Seifert piece with genus <= 2, |b| <= 3, alpha <= 5
///    and at most 3 exceptional fibres that survives normalization with
///    chi_orb <= 0;
///  - every connected sum of 1 to 3 pieces drawn from S2xS1, Spherical(q)
///    for 2 <= q <= 8, Hyperbolic, Sol, OtherAspherical and a few Seifert
///    samples of each geometry;
///  - S^3.
/// Sorted and free of duplicates.
std::vector<Manifold> sweep_inputs();

/// Seifert samples used inside the connected-sum part of the sweep.
std::vector<SeifertData> sweep_seifert_samples();

struct SweepSummary {
  std::size_t inputs = 0;
  std::vector<ConsistencyReport> discrepancies;  // in input order
};

/// Cross-checks every input, splitting the work over `workers` threads
/// (0 = hardware concurrency). The result does not depend on `workers`.
SweepSummary run_sweep(const std::vector<Manifold>& inputs, unsigned workers = 0);

}  // namespace domination
