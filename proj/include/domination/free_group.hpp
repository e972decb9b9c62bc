#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domination {

/// A freely reduced word in a free group. Letter +k is the k-th generator
/// (1-based), -k its inverse. Reduction is applied on construction.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Largest generator index used (0 for the identity).
  int max_generator() const noexcept;

  Word inverse() const;
  friend Word operator*(const Word& lhs, const Word& rhs);
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

/// Fixture syntax: "a".."z" are generators 1..26, upper case their inverses.
/// The empty string and "1" denote the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Commutator x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

/// Replaces each letter +-k of `w` by images[k-1]^{+-1}.
Word substitute(const Word& w, std::span<const Word> images);

struct LabeledEdge {
  std::size_t source = 0;
  int label = 0;  // 0-based generator index
  std::size_t target = 0;

  auto operator<=>(const LabeledEdge&) const = default;
};

/// Labelled, base-pointed graph of a finitely generated subgroup of the free
/// group of the given rank. The base vertex is always 0.
class SubgroupGraph {
 public:
  SubgroupGraph(int rank, std::size_t vertex_count, std::vector<LabeledEdge> edges);

  int rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::span<const LabeledEdge> edges() const noexcept { return edges_; }
  std::size_t base() const noexcept { return 0; }

  /// No vertex has two outgoing or two incoming edges with the same label.
  bool is_folded() const;
  bool is_connected() const;

  /// Follows `w` from the base vertex; nullopt if the path leaves the graph.
  std::optional<std::size_t> read(const Word& w) const;

  bool operator==(const SubgroupGraph&) const = default;

 private:
  int rank_;
  std::size_t vertex_count_;
  std::vector<LabeledEdge> edges_;  // sorted, no duplicates
};

enum class FoldOrder {
  Lexicographic,         // smallest (vertex, label, direction) first
  ReverseLexicographic,  // largest first
};

/// Stallings folding of the bouquet of `words` over the free group of rank
/// `rank`. Vertices of the result are numbered by their smallest original id,
/// so different fold orders give isomorphic but not necessarily equal graphs.
/// Throws std::invalid_argument if rank < 1 or a word uses a generator > rank.
SubgroupGraph stallings_fold(std::span<const Word> words, int rank,
                             FoldOrder order = FoldOrder::Lexicographic);

/// Index of the subgroup: the vertex count when every vertex has exactly one
/// outgoing and one incoming edge per generator, nullopt (infinite) otherwise.
std::optional<std::int64_t> subgroup_index(const SubgroupGraph& g);

/// First Betti number E - V + 1, the rank of the represented subgroup.
std::int64_t graph_rank(const SubgroupGraph& g);

/// Isomorphism respecting base point and labels, for folded graphs.
bool isomorphic(const SubgroupGraph& a, const SubgroupGraph& b);

/// Free basis of the subgroup read off a BFS spanning tree of the graph.
std::vector<Word> free_basis(const SubgroupGraph& g);

/// Schreier graph of a transitive permutation action: generator k sends point
/// i to perms[k][i]. Point 0 is the base. Throws std::invalid_argument if the
/// arrays are not permutations of a common size or the action is intransitive.
SubgroupGraph permutation_graph(const std::vector<std::vector<std::size_t>>& perms);

}  // namespace domination
