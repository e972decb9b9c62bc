#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "domination/errors.hpp"
#include "domination/free_group.hpp"
#include "domination/free_product.hpp"
#include "domination/parser.hpp"

using namespace domination;

namespace {

std::vector<Word> words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t));
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(1, rank), sign(0, 1);
  std::vector<int> letters(len(rng));
  for (int& l : letters) l = sign(rng) ? gen(rng) : -gen(rng);
  return Word(std::move(letters));
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("words reduce freely") {
  CHECK(parse_word("abBA").empty());
  CHECK(to_string(parse_word("aabBc")) == "aac");
  CHECK(to_string(parse_word("1")) == "1");
  CHECK(parse_word("").empty());
  CHECK(to_string(commutator(parse_word("a"), parse_word("b"))) == "abAB");
  CHECK((parse_word("ab") * parse_word("Bc")) == parse_word("ac"));
  CHECK(parse_word("abc").inverse() == parse_word("CBA"));
  CHECK(to_string(Word({27, -28})) == "g27G28");
  const std::vector<Word> images = words({"ab", "1"});
  CHECK(substitute(parse_word("aBA"), images) == parse_word("abBA"));
}

TEST_CASE("folding a^2, b, a b a^-1 gives the index-2 kernel") {
  const auto g = stallings_fold(words({"aa", "b", "abA"}), 2);
  CHECK(g.is_folded());
  CHECK(g.vertex_count() == 2);
  CHECK(subgroup_index(g) == 2);
  CHECK(graph_rank(g) == 3);
  CHECK(graph_rank(g) == nielsen_schreier_rank(2, 2));
}

TEST_CASE("folding examples with infinite index") {
  const auto g = stallings_fold(words({"aa", "abA"}), 2);
  CHECK(g.vertex_count() == 2);
  CHECK_FALSE(subgroup_index(g).has_value());
  CHECK(graph_rank(g) == 2);

  const auto trivial = stallings_fold(words({"abAB", "baBA"}), 2);
  CHECK(graph_rank(trivial) == 1);

  const auto whole = stallings_fold(words({"a", "b"}), 2);
  CHECK(subgroup_index(whole) == 1);
  CHECK(whole.read(parse_word("abABba")).has_value());

  const auto empty = stallings_fold({}, 3);
  CHECK(empty.vertex_count() == 1);
  CHECK(graph_rank(empty) == 0);

  CHECK_THROWS_AS(stallings_fold(words({"c"}), 2), std::invalid_argument);
  CHECK_THROWS_AS(stallings_fold({}, 0), std::invalid_argument);
}

TEST_CASE("folding is confluent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    std::vector<Word> gens;
    const int count = static_cast<int>(rng() % 4);
    for (int j = 0; j < count; ++j) gens.push_back(random_word(rng, rank, 8));
    const auto lex = stallings_fold(gens, rank, FoldOrder::Lexicographic);
    std::vector<Word> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto rev = stallings_fold(shuffled, rank, FoldOrder::ReverseLexicographic);
    REQUIRE(lex.is_folded());
    REQUIRE(rev.is_folded());
    REQUIRE(isomorphic(lex, rev));
    for (const Word& w : gens) REQUIRE(lex.read(w) == std::optional<std::size_t>(0));
  }
}

TEST_CASE("Nielsen-Schreier via folding of finite-index subgroups") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    const std::size_t n = 1 + rng() % 7;
    std::vector<std::vector<std::size_t>> perms;
    for (int r = 0; r < rank; ++r) perms.push_back(random_permutation(rng, n));
    SubgroupGraph cosets(rank, 1, {});
    try {
      cosets = permutation_graph(perms);
    } catch (const std::invalid_argument&) {
      continue;  // not transitive
    }
    const auto basis = free_basis(cosets);
    REQUIRE(static_cast<std::int64_t>(basis.size()) == nielsen_schreier_rank(rank, static_cast<std::int64_t>(n)));
    const auto refolded = stallings_fold(basis, rank);
    REQUIRE(subgroup_index(refolded) == static_cast<std::int64_t>(n));
    REQUIRE(graph_rank(refolded) == nielsen_schreier_rank(rank, static_cast<std::int64_t>(n)));
    REQUIRE(isomorphic(refolded, cosets));
  }
}

TEST_CASE("free product data") {
  CHECK(!free_product_data(parse_manifold("Hyperbolic")).has_value());
  const auto d = free_product_data(parse_manifold("Spherical(3) # S2xS1 # Spherical(2)"));
  REQUIRE(d.has_value());
  CHECK(d->free_rank == 1);
  CHECK(d->orders == std::vector<std::int64_t>{2, 3});
  CHECK(free_product_euler_characteristic(*d) == Rational(-7, 6));
}

TEST_CASE("free cover rank") {
  auto rank = [](std::int64_t l, std::vector<std::int64_t> q) {
    const FreeCover c = free_cover_rank(FreeProductData{l, std::move(q)});
    return std::pair{c.rank, c.degree};
  };
  CHECK(rank(0, {2}) == std::pair<BigInt, BigInt>{0, 2});
  CHECK(rank(0, {2, 2}) == std::pair<BigInt, BigInt>{1, 4});
  CHECK(rank(1, {2}) == std::pair<BigInt, BigInt>{2, 2});
  CHECK(rank(0, {120}) == std::pair<BigInt, BigInt>{0, 120});
  CHECK(rank(2, {3, 4}) == std::pair<BigInt, BigInt>{30, 12});
  CHECK(rank(3, {2, 2, 5}) == std::pair<BigInt, BigInt>{77, 20});
  CHECK(rank(0, {}) == std::pair<BigInt, BigInt>{0, 1});
  CHECK(rank(4, {}) == std::pair<BigInt, BigInt>{4, 1});
  CHECK(nielsen_schreier_rank(2, 3) == 4);
}

TEST_CASE("coset oracle") {
  CHECK(reidemeister_schreier_rank_oracle(FreeProductData{0, {2}}) == 0);
  CHECK(reidemeister_schreier_rank_oracle(FreeProductData{0, {2, 2}}) == 1);
  CHECK(reidemeister_schreier_rank_oracle(FreeProductData{1, {2}}) == 2);
  CHECK(reidemeister_schreier_rank_oracle(FreeProductData{0, {120}}) == 0);
  CHECK(reidemeister_schreier_rank_oracle(FreeProductData{3, {2, 2, 5}}) == 77);
  CHECK_THROWS_AS(reidemeister_schreier_rank_oracle(FreeProductData{0, {7, 11}}, 50), OracleBoundError);
}
