#include <doctest.h>

#include <random>

#include "clusterdenom/errors.hpp"
#include "clusterdenom/exmat.hpp"
#include "oracles.hpp"

using namespace clusterdenom;
using Rows = std::vector<std::vector<ExchangeMatrix::Entry>>;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4",
                                         "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

std::vector<ExchangeMatrix::Entry> sym(const ExchangeMatrix& b) {
  return {b.symmetrizer().begin(), b.symmetrizer().end()};
}

}  // namespace

TEST_CASE("mutation of the rank-2 matrix negates everything") {
  auto b = ExchangeMatrix::from_rows(Rows{{0, 1}, {-1, 0}});
  CHECK(b.mutate(0) == ExchangeMatrix::from_rows(Rows{{0, -1}, {1, 0}}));
}

TEST_CASE("mutation formula on a 3-cycle") {
  // b'_ij = b_ij + [b_ik]+[b_kj]+ - [-b_ik]+[-b_kj]+
  auto b = ExchangeMatrix::from_rows(Rows{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  auto m = b.mutate(1);
  CHECK(m == ExchangeMatrix::from_rows(Rows{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}));
}

TEST_CASE("mutation is an involution and keeps the symmetrizer") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto b = oracle::random_exchange_matrix(rng, n);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n));
    auto m = b.mutate(k);
    CHECK(m.mutate(k) == b);
    auto recomputed = find_symmetrizer(n, m.entries());
    REQUIRE(recomputed);
    CHECK(*recomputed == sym(b));
  }
}

TEST_CASE("mutate rejects a bad index") {
  auto b = standard_matrix("A2");
  CHECK_THROWS_AS((void)b.mutate(2), std::out_of_range);
  CHECK_THROWS_AS((void)b.mutate(-1), std::out_of_range);
}

TEST_CASE("F4 mutation keeps the recomputed symmetrizer") {
  auto f4 = standard_matrix("F4");
  auto m = f4.mutate(1);
  auto d = find_symmetrizer(4, m.entries());
  REQUIRE(d);
  CHECK(*d == sym(f4));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{0, 1}, {1, 0}}), InvalidMatrix);
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{1, 1}, {-1, 0}}), InvalidMatrix);
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{0, 1, 0}, {-1, 0}}), InvalidMatrix);
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{0, 1}, {-2, 0}}, {1, 1}), InvalidMatrix);
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{0, 1}, {-2, 0}}, {0, 1}), InvalidMatrix);
  // a sign-coherent but unsymmetrizable 3-cycle
  CHECK_THROWS_AS(ExchangeMatrix::from_rows(Rows{{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}), InvalidMatrix);
}

TEST_CASE("supplied symmetrizers are reduced") {
  auto b = ExchangeMatrix::from_rows(Rows{{0, 1}, {-2, 0}}, {4, 2});
  CHECK(sym(b) == std::vector<ExchangeMatrix::Entry>{2, 1});
}

TEST_CASE("standard A2") { CHECK(standard_matrix("A2") == ExchangeMatrix::from_rows(Rows{{0, 1}, {-1, 0}})); }

TEST_CASE("D4 Cartan companion has determinant 4") {
  // independent: D4 Cartan matrix written out by hand
  std::vector<std::vector<BigInt>> d4 = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  CHECK(oracle::cofactor_det(d4) == 4);
  auto c = cartan_companion(standard_matrix("D4"));
  std::vector<std::vector<BigInt>> big;
  for (auto& row : c) big.emplace_back(row.begin(), row.end());
  CHECK(oracle::cofactor_det(big) == 4);
}

TEST_CASE("Cartan determinants match the classical values") {
  // det = order of the fundamental group: A_n n+1, B/C 2, D 4, E6 3, E7 2, E8 1, F4 1, G2 1
  const std::map<std::string, int> expected = {{"A3", 4}, {"A5", 6}, {"B3", 2}, {"C4", 2}, {"D5", 4},
                                               {"E6", 3}, {"E7", 2}, {"E8", 1}, {"F4", 1}, {"G2", 1}};
  for (const auto& [name, value] : expected) {
    auto c = cartan_companion(standard_matrix(name));
    std::vector<std::vector<BigInt>> big;
    for (auto& row : c) big.emplace_back(row.begin(), row.end());
    CHECK_MESSAGE(oracle::cofactor_det(big) == value, name);
  }
}

TEST_CASE("standard matrices have the named Cartan companion and are bipartite") {
  for (const auto& name : kTypes) {
    auto b = standard_matrix(name);
    CHECK_MESSAGE(cartan_companion(b) == cartan_matrix(parse_cartan_type(name)), name);
    // every vertex is a source or a sink
    for (int i = 0; i < b.rank(); ++i) {
      bool pos = false, neg = false;
      for (int j = 0; j < b.rank(); ++j) {
        pos |= b(i, j) > 0;
        neg |= b(i, j) < 0;
      }
      CHECK_FALSE((pos && neg));
    }
  }
}

TEST_CASE("F4 has a non-trivial symmetrizer") {
  auto d = sym(standard_matrix("F4"));
  CHECK(std::any_of(d.begin(), d.end(), [](auto x) { return x != 1; }));
  CHECK(sym(standard_matrix("A4")) == std::vector<ExchangeMatrix::Entry>(4, 1));
}

TEST_CASE("invalid Cartan types") {
  CHECK_THROWS_AS(standard_matrix("E5"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("E9"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("D3"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("F5"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("G3"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("A0"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix("X2"), InvalidArgument);
  CHECK_THROWS_AS(standard_matrix(""), InvalidArgument);
  CHECK(parse_cartan_type("E6").name() == "E6");
}

TEST_CASE("finite type recognition") {
  CHECK(is_finite_type(standard_matrix("A2")));
  CHECK_FALSE(is_finite_type(ExchangeMatrix::from_rows(Rows{{0, 2}, {-2, 0}})));
  CHECK_FALSE(is_finite_type(ExchangeMatrix::from_rows(Rows{{0, 1}, {-4, 0}})));
  // affine A2 tilde: acyclic triangle
  CHECK_FALSE(is_finite_type(ExchangeMatrix::from_rows(Rows{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}})));
  for (const auto& name : kTypes) CHECK_MESSAGE(is_finite_type(standard_matrix(name)), name);
}

TEST_CASE("class enumeration budget is an error, not an answer") {
  CHECK_THROWS_AS((void)is_finite_type(standard_matrix("D5"), {3}), BudgetExhausted);
}

TEST_CASE("mutation classes") {
  CHECK(mutation_classes(standard_matrix("A2")).size() == 1);
  // rank 3: linear, source-centre, sink-centre, oriented 3-cycle
  CHECK(mutation_classes(standard_matrix("A3")).size() == 4);
  // regression baselines
  CHECK(mutation_classes(standard_matrix("D4")).size() == 6);
  CHECK(mutation_classes(standard_matrix("F4")).size() == 15);
  CHECK_THROWS_AS(mutation_classes(ExchangeMatrix::from_rows(Rows{{0, 2}, {-2, 0}})), InvalidArgument);
}

TEST_CASE("mutation classes are mutation invariant and deterministic") {
  for (const char* name : {"A3", "B3", "D4", "G2"}) {
    auto b = standard_matrix(name);
    auto base = mutation_classes(b);
    CHECK(mutation_classes(b) == base);
    for (int k = 0; k < b.rank(); ++k) CHECK(mutation_classes(b.mutate(k)) == base);
    // closed under mutation up to canonical form
    for (const auto& rep : base.representatives) {
      CHECK(canonical_form(rep).matrix == rep);
      for (int k = 0; k < rep.rank(); ++k) {
        auto c = canonical_form(rep.mutate(k)).matrix;
        CHECK(std::binary_search(base.representatives.begin(), base.representatives.end(), c));
      }
    }
  }
}

TEST_CASE("canonical form is permutation invariant and idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    auto b = oracle::random_exchange_matrix(rng, n);
    auto c = canonical_form(b);
    CHECK(b.permuted(c.permutation) == c.matrix);
    CHECK(canonical_form(c.matrix).matrix == c.matrix);
    auto p = oracle::random_permutation(rng, n);
    CHECK(canonical_form(b.permuted(p)).matrix == c.matrix);
  }
}

TEST_CASE("canonical form is the lexicographic minimum (brute force)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    auto b = oracle::random_exchange_matrix(rng, n);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::optional<ExchangeMatrix> best;
    do {
      auto q = b.permuted(p);
      std::vector<ExchangeMatrix::Entry> flat(q.entries().begin(), q.entries().end());
      if (!best || flat < std::vector<ExchangeMatrix::Entry>(best->entries().begin(), best->entries().end())) best = q;
    } while (std::next_permutation(p.begin(), p.end()));
    auto c = canonical_form(b).matrix;
    CHECK(std::vector<ExchangeMatrix::Entry>(c.entries().begin(), c.entries().end()) ==
          std::vector<ExchangeMatrix::Entry>(best->entries().begin(), best->entries().end()));
  }
}
