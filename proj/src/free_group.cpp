#include "domination/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "domination/errors.hpp"

namespace domination {

namespace {

std::vector<int> reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw std::invalid_argument("word letters must be non-zero");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller id survives, which keeps the base vertex at 0.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Word::Word(std::vector<int> letters) : letters_(reduce(std::move(letters))) {}

int Word::max_generator() const noexcept {
  int m = 0;
  for (int x : letters_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return Word(std::move(inv));
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<int> cat(lhs.letters_);
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(cat));
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word{};
  std::vector<int> letters;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back(-(c - 'A' + 1));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw InputError(std::string("invalid letter '") + c + "' in word");
    }
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w.letters()) {
    if (std::abs(x) > 26) {
      out += (x > 0 ? "g" : "G") + std::to_string(std::abs(x));
      continue;
    }
    out += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
  }
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (int x : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (k > images.size()) throw std::invalid_argument("substitution has no image for generator " + std::to_string(k));
    out = out * (x > 0 ? images[k - 1] : images[k - 1].inverse());
  }
  return out;
}

SubgroupGraph::SubgroupGraph(int rank, std::size_t vertex_count, std::vector<LabeledEdge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw std::invalid_argument("subgroup graph needs a base vertex");
  for (const auto& e : edges_) {
    if (e.source >= vertex_count_ || e.target >= vertex_count_ || e.label < 0 || e.label >= rank_) {
      throw std::invalid_argument("subgroup graph edge out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool SubgroupGraph::is_folded() const {
  std::map<std::pair<std::size_t, int>, int> out, in;
  for (const auto& e : edges_) {
    if (++out[{e.source, e.label}] > 1) return false;
    if (++in[{e.target, e.label}] > 1) return false;
  }
  return true;
}

bool SubgroupGraph::is_connected() const {
  UnionFind uf(vertex_count_);
  std::size_t components = vertex_count_;
  for (const auto& e : edges_) components -= uf.unite(e.source, e.target) ? 1 : 0;
  return components == 1;
}

std::optional<std::size_t> SubgroupGraph::read(const Word& w) const {
  std::size_t v = 0;
  for (int x : w.letters()) {
    const int label = std::abs(x) - 1;
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const LabeledEdge& e) {
      return e.label == label && (x > 0 ? e.source == v : e.target == v);
    });
    if (it == edges_.end()) return std::nullopt;
    v = x > 0 ? it->target : it->source;
  }
  return v;
}

SubgroupGraph stallings_fold(std::span<const Word> words, int rank, FoldOrder order) {
  if (rank < 1) throw std::invalid_argument("stallings_fold needs a non-empty generator alphabet");

  // Bouquet of closed paths at the base vertex.
  std::vector<LabeledEdge> edges;
  std::size_t vertices = 1;
  for (const auto& w : words) {
    if (w.max_generator() > rank) throw std::invalid_argument("word uses a generator beyond the rank");
    std::size_t at = 0;
    const auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::size_t next = (i + 1 == letters.size()) ? 0 : vertices++;
      const int x = letters[i];
      if (x > 0) {
        edges.push_back({at, x - 1, next});
      } else {
        edges.push_back({next, -x - 1, at});
      }
      at = next;
    }
  }

  // A fold candidate is a (vertex, label, direction) key with two distinct
  // far endpoints; merging the endpoints identifies the two edges.
  UnionFind uf(vertices);
  while (true) {
    std::map<std::tuple<std::size_t, int, int>, std::vector<std::size_t>> fans;
    for (const auto& e : edges) {
      const std::size_t s = uf.find(e.source), t = uf.find(e.target);
      fans[{s, e.label, 0}].push_back(t);
      fans[{t, e.label, 1}].push_back(s);
    }
    bool merged = false;
    auto try_fold = [&](std::vector<std::size_t>& ends) {
      std::sort(ends.begin(), ends.end());
      ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
      if (ends.size() < 2) return false;
      if (order == FoldOrder::Lexicographic) return uf.unite(ends[0], ends[1]);
      return uf.unite(ends[ends.size() - 1], ends[ends.size() - 2]);
    };
    if (order == FoldOrder::Lexicographic) {
      for (auto it = fans.begin(); it != fans.end() && !merged; ++it) merged = try_fold(it->second);
    } else {
      for (auto it = fans.rbegin(); it != fans.rend() && !merged; ++it) merged = try_fold(it->second);
    }
    if (!merged) break;
  }

  for (auto& e : edges) {
    e.source = uf.find(e.source);
    e.target = uf.find(e.target);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Trim hanging trees away from the base.
  std::vector<bool> alive(vertices, false);
  for (std::size_t v = 0; v < vertices; ++v) alive[v] = (uf.find(v) == v);
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::vector<int> degree(vertices, 0);
    for (const auto& e : edges) {
      ++degree[e.source];
      ++degree[e.target];
    }
    for (std::size_t v = 1; v < vertices; ++v) {
      if (alive[v] && degree[v] <= 1) {
        alive[v] = false;
        trimmed = true;
      }
    }
    std::erase_if(edges, [&](const LabeledEdge& e) { return !alive[e.source] || !alive[e.target]; });
  }

  std::vector<std::size_t> renumber(vertices, 0);
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (alive[v]) renumber[v] = count++;
  }
  for (auto& e : edges) {
    e.source = renumber[e.source];
    e.target = renumber[e.target];
  }
  return SubgroupGraph(rank, count, std::move(edges));
}

std::optional<std::int64_t> subgroup_index(const SubgroupGraph& g) {
  const auto n = g.vertex_count();
  const auto r = static_cast<std::size_t>(g.rank());
  std::vector<int> out(n * r, 0), in(n * r, 0);
  for (const auto& e : g.edges()) {
    ++out[e.source * r + static_cast<std::size_t>(e.label)];
    ++in[e.target * r + static_cast<std::size_t>(e.label)];
  }
  for (std::size_t i = 0; i < n * r; ++i) {
    if (out[i] != 1 || in[i] != 1) return std::nullopt;
  }
  return static_cast<std::int64_t>(n);
}

std::int64_t graph_rank(const SubgroupGraph& g) {
  return static_cast<std::int64_t>(g.edges().size()) - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

bool isomorphic(const SubgroupGraph& a, const SubgroupGraph& b) {
  if (a.rank() != b.rank() || a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) {
    return false;
  }
  if (!a.is_folded() || !b.is_folded()) throw std::invalid_argument("isomorphic expects folded graphs");

  // Folded graphs are deterministic in both directions, so the map is forced
  // once the base points are matched.
  auto neighbours = [](const SubgroupGraph& g) {
    std::map<std::tuple<std::size_t, int, int>, std::size_t> m;
    for (const auto& e : g.edges()) {
      m[{e.source, e.label, 0}] = e.target;
      m[{e.target, e.label, 1}] = e.source;
    }
    return m;
  };
  const auto na = neighbours(a), nb = neighbours(b);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map_ab(a.vertex_count(), unset), map_ba(b.vertex_count(), unset);
  std::queue<std::size_t> pending;
  map_ab[0] = 0;
  map_ba[0] = 0;
  pending.push(0);
  while (!pending.empty()) {
    const std::size_t u = pending.front();
    pending.pop();
    for (int label = 0; label < a.rank(); ++label) {
      for (int dir = 0; dir < 2; ++dir) {
        auto ia = na.find({u, label, dir});
        auto ib = nb.find({map_ab[u], label, dir});
        if ((ia == na.end()) != (ib == nb.end())) return false;
        if (ia == na.end()) continue;
        const std::size_t x = ia->second, y = ib->second;
        if (map_ab[x] == unset && map_ba[y] == unset) {
          map_ab[x] = y;
          map_ba[y] = x;
          pending.push(x);
        } else if (map_ab[x] != y || map_ba[y] != x) {
          return false;
        }
      }
    }
  }
  return std::find(map_ab.begin(), map_ab.end(), unset) == map_ab.end();
}

std::vector<Word> free_basis(const SubgroupGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);  // (neighbour, signed letter)
  for (const auto& e : g.edges()) {
    adj[e.source].push_back({e.target, e.label + 1});
    adj[e.target].push_back({e.source, -(e.label + 1)});
  }
  // Path labels from the base to every vertex along a BFS tree.
  std::vector<std::optional<Word>> path(n);
  std::vector<bool> tree_edge(g.edges().size(), false);
  path[0] = Word{};
  std::queue<std::size_t> pending;
  pending.push(0);
  while (!pending.empty()) {
    const std::size_t u = pending.front();
    pending.pop();
    for (const auto& [v, letter] : adj[u]) {
      if (path[v]) continue;
      path[v] = *path[u] * Word({letter});
      pending.push(v);
      const auto& edges = g.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const bool forward = letter > 0 && e.source == u && e.target == v && e.label == letter - 1;
        const bool backward = letter < 0 && e.source == v && e.target == u && e.label == -letter - 1;
        if (forward || backward) {
          tree_edge[i] = true;
          break;
        }
      }
    }
  }
  std::vector<Word> basis;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (tree_edge[i]) continue;
    const auto& e = edges[i];
    if (!path[e.source] || !path[e.target]) throw std::invalid_argument("free_basis expects a connected graph");
    basis.push_back(*path[e.source] * Word({e.label + 1}) * path[e.target]->inverse());
  }
  return basis;
}

SubgroupGraph permutation_graph(const std::vector<std::vector<std::size_t>>& perms) {
  if (perms.empty()) throw std::invalid_argument("permutation_graph needs at least one generator");
  const std::size_t n = perms.front().size();
  if (n == 0) throw std::invalid_argument("permutation_graph needs at least one point");
  std::vector<LabeledEdge> edges;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (perms[k].size() != n) throw std::invalid_argument("permutations must act on a common set");
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = perms[k][i];
      if (j >= n || hit[j]) throw std::invalid_argument("not a permutation");
      hit[j] = true;
      edges.push_back({i, static_cast<int>(k), j});
    }
  }
  SubgroupGraph g(static_cast<int>(perms.size()), n, std::move(edges));
  if (!g.is_connected()) throw std::invalid_argument("permutation action is not transitive");
  return g;
}

}  // namespace domination
