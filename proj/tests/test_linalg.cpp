#include <doctest.h>

#include <random>

#include "evoder/errors.hpp"
#include "evoder/families.hpp"
#include "evoder/rational_matrix.hpp"
#include "oracles.hpp"

using namespace evoder;

namespace {

RationalMatrix m(const std::vector<std::vector<Rational>>& rows) { return RationalMatrix::from_rows(rows); }

RationalMatrix adjacency(const Graph& g) {
  RationalMatrix a(g.size(), g.size());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational(" -4/6 ") == Rational(-2, 3));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("123456789012345678901234567890/2") ==
        Rational(mpz_class("61728394506172839450617283945")));
  CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("1.5"), MalformedInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), MalformedInput);
  CHECK_THROWS_AS(parse_rational(""), MalformedInput);
  CHECK_THROWS_AS(parse_rational("abc"), MalformedInput);
}

TEST_CASE("rref examples") {
  auto r = rref(m({{2, 4}, {1, 2}}));
  CHECK(r.reduced == m({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  r = rref(RationalMatrix::identity(3));
  CHECK(r.reduced == RationalMatrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = rref(m({{1, 1}, {1, -1}}));
  CHECK(r.reduced == RationalMatrix::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  r = rref(m({{0, 3, 6}, {0, 1, 2}, {2, 0, 1}}));
  CHECK(r.reduced == m({{1, 0, Rational(1, 2)}, {0, 1, 2}, {0, 0, 0}}));
}

TEST_CASE("rank of family adjacency matrices") {
  CHECK(rank(adjacency(generate_family({Family::path, {9}}))) == 8);
  CHECK(rank(adjacency(generate_family({Family::wheel, {9}}))) == 7);
  CHECK(rank(adjacency(generate_family({Family::complete_multipartite, {3, 4, 5}}))) == 3);
}

TEST_CASE("null_space examples") {
  CHECK(null_space(RationalMatrix::identity(2)).empty());

  const auto k = null_space(m({{1, 1}, {1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalMatrix::column({-1, 1}));

  const auto row = m({{1, 2, 3}});
  const auto plane = null_space(row);
  CHECK(plane.size() == 2);
  for (const auto& x : plane) CHECK(mat_mul(row, x).is_zero());
}

TEST_CASE("empty shapes") {
  const auto k = null_space(RationalMatrix(0, 3));
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    RationalMatrix e(3, 1);
    e(i, 0) = 1;
    CHECK(k[i] == e);
  }
  CHECK(rank(RationalMatrix(0, 0)) == 0);
  CHECK(rank(RationalMatrix(4, 0)) == 0);
  CHECK(null_space(RationalMatrix(4, 0)).empty());
}

TEST_CASE("mat_mul") {
  const auto a = m({{1, 2}, {3, 4}});
  CHECK(mat_mul(RationalMatrix::identity(2), a) == a);
  CHECK(mat_mul(m({{1, 1, 1}}), m({{1}, {1}, {1}})) == m({{3}}));
  CHECK_THROWS_AS(mat_mul(a, m({{1, 2, 3}})), DimensionMismatch);

  // Conjugating by a permutation matrix preserves rank.
  std::mt19937 rng(3);
  const auto d = evoder::testing::random_int_matrix(rng, 5, 5, -1, 1);
  const auto perm = evoder::testing::random_permutation(rng, 5);
  RationalMatrix p(5, 5);
  for (int i = 0; i < 5; ++i) p(perm(i), i) = 1;
  CHECK(rank(mat_mul(mat_mul(p, d), p.transposed())) == rank(d));
}

TEST_CASE("matrix CSV") {
  const auto a = parse_matrix_csv("1, -1/2,0\n\n3,4 ,5/7\n");
  CHECK(a == m({{1, Rational(-1, 2), 0}, {3, 4, Rational(5, 7)}}));
  CHECK(parse_matrix_csv(to_csv(a)) == a);
  CHECK_THROWS_AS(parse_matrix_csv("1,2\n3"), MalformedInput);
  CHECK_THROWS_AS(parse_matrix_csv("1,,2"), MalformedInput);
}

TEST_CASE("span helpers") {
  const auto a = RationalMatrix::column({1, 0, 1});
  const auto b = RationalMatrix::column({0, 1, 1});
  const auto sum = RationalMatrix::column({1, 1, 2});
  CHECK(same_span({a, b}, {sum, b}));
  CHECK(same_span({a, b, sum}, {a, b}));
  CHECK_FALSE(same_span({a}, {b}));
  CHECK(same_span({}, {}));
  CHECK(same_span({}, {RationalMatrix(3, 1)}));
  CHECK(in_span({a, b}, sum));
  CHECK_FALSE(in_span({a}, b));
}

TEST_CASE("linear algebra properties on random integer matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = trial % 6 + 1;
    const std::size_t cols = (trial / 6) % 6 + 1;
    // Narrow entry ranges make rank deficiency common.
    const auto a = evoder::testing::random_int_matrix(rng, rows, cols, trial % 3 == 0 ? 0 : -2, 2);

    const auto [reduced, pivots] = rref(a);
    CHECK(std::is_sorted(pivots.begin(), pivots.end()));
    CHECK(std::adjacent_find(pivots.begin(), pivots.end()) == pivots.end());
    CHECK(rref(reduced).reduced == reduced);

    const auto kernel = null_space(a);
    CHECK(rank(a) + kernel.size() == cols);
    for (const auto& x : kernel) CHECK(mat_mul(a, x).is_zero());

    // Row and column permutations leave the rank alone.
    const auto rp = evoder::testing::random_permutation(rng, static_cast<int>(rows));
    const auto cp = evoder::testing::random_permutation(rng, static_cast<int>(cols));
    RationalMatrix shuffled(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) shuffled(rp(r), cp(c)) = a(r, c);
    CHECK(rank(shuffled) == rank(a));
    CHECK(rank(a.transposed()) == rank(a));
  }
}
