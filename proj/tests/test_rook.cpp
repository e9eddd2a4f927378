#include "doctest.h"
#include "oracles.hpp"
#include "renner/error.hpp"
#include "renner/rook.hpp"
#include "renner/symplectic.hpp"

#include <random>

using namespace renner;

namespace {

std::vector<Rook> all_rooks(int n) {
  std::vector<Rook> out;
  for_each_rook(n, nullptr, [&](const Rook& x) { out.push_back(x); });
  return out;
}

}  // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK_THROWS_AS(Rook({1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Rook({4, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(Rook({-1, 0}), InvalidArgument);
  CHECK_NOTHROW(Rook({0, 0, 0}));
  const Rook x({3, 0, 4, 0});
  CHECK(x.rank() == 2);
  CHECK(x.domain() == std::vector<int>{1, 3});
  CHECK(x.range() == std::vector<int>{3, 4});
}

TEST_CASE("parse_one_line") {
  const Rook x = parse_one_line("(3,0,4,0)", 4);
  const auto cells = oracle::to_dense(x);
  CHECK(cells[2][0] == 1);  // cell (3,1)
  CHECK(cells[3][2] == 1);  // cell (4,3)
  CHECK(x.rank() == 2);
  CHECK(parse_one_line("(0,0,0,0)", 4).is_zero());
  CHECK_THROWS_AS(parse_one_line("(1,1,0)", 3), InvalidArgument);
  CHECK(parse_one_line(" ( 2 , 1 ) ") == Rook({2, 1}));
  CHECK_THROWS_AS(parse_one_line("(1,2)", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_one_line("1,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_one_line("(1,x)"), InvalidArgument);
  CHECK_THROWS_AS(parse_one_line("()"), InvalidArgument);
}

TEST_CASE("round trip through text for every rook up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t count = 0, bad = 0;
    for_each_rook(n, nullptr, [&](const Rook& x) {
      ++count;
      if (parse_one_line(x.to_string(), n) != x) ++bad;
    });
    CHECK(bad == 0);
    std::size_t expected = 0;
    for (int k = 0; k <= n; ++k) {
      std::size_t c = 1;
      for (int i = 0; i < k; ++i) c = c * static_cast<std::size_t>((n - i) * (n - i)) / static_cast<std::size_t>(i + 1);
      expected += c;
    }
    CHECK(count == expected);
  }
}

TEST_CASE("for_each_rook matches a scan of all 0/1 matrices") {
  for (int n = 1; n <= 4; ++n) CHECK(all_rooks(n) == oracle::all_rooks_by_scan(n));
  CHECK(all_rooks(2).size() == 7);
}

TEST_CASE("multiply agrees with dense products") {
  CHECK(Rook({0, 0, 1, 2}) * Rook({0, 0, 0, 3}) == Rook({0, 0, 0, 1}));
  CHECK(Rook({0, 1, 0, 3}) * Rook({0, 0, 2, 1}) == Rook({0, 0, 1, 0}));
  for (int n = 1; n <= 3; ++n) {
    const auto xs = all_rooks(n);
    for (const auto& x : xs) {
      CHECK(Rook::identity(n) * x == x);
      CHECK(x * Rook::identity(n) == x);
      for (const auto& y : xs) {
        REQUIRE(x * y == oracle::from_dense(oracle::dense_mul(oracle::to_dense(x), oracle::to_dense(y))));
        for (const auto& z : xs) REQUIRE((x * y) * z == x * (y * z));
      }
    }
  }
  CHECK_THROWS_AS(Rook({1}) * Rook({1, 2}), InvalidArgument);
}

TEST_CASE("multiply is associative on random triples up to n = 6") {
  std::mt19937 rng(20261016);
  for (int n = 4; n <= 6; ++n) {
    const auto xs = all_rooks(n);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto& x = xs[pick(rng)];
      const auto& y = xs[pick(rng)];
      const auto& z = xs[pick(rng)];
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * y == oracle::from_dense(oracle::dense_mul(oracle::to_dense(x), oracle::to_dense(y))));
    }
  }
}

TEST_CASE("nilpotency by cycle detection matches powers") {
  CHECK(is_nilpotent_rook(Rook({0, 1, 0, 3})));
  CHECK_FALSE(is_nilpotent_rook(Rook({1, 0, 0, 0})));
  CHECK(is_nilpotent_rook(Rook({2, 0})));
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : all_rooks(n)) REQUIRE(is_nilpotent_rook(x) == oracle::nilpotent_by_powers(x));
}

TEST_CASE("triangular decomposition") {
  auto parts = triangular_decompose(Rook({3, 1, 5, 2, 4}));
  CHECK(parts.lower == Rook({3, 0, 5, 0, 0}));
  CHECK(parts.diag.is_zero());
  CHECK(parts.upper == Rook({0, 1, 0, 2, 4}));
  CHECK(parts.lower_rank() == 2);
  CHECK(parts.diag_rank() == 0);
  CHECK(parts.upper_rank() == 3);

  parts = triangular_decompose(Rook::identity(3));
  CHECK(parts.lower.is_zero());
  CHECK(parts.diag == Rook::identity(3));
  CHECK(parts.upper.is_zero());

  parts = triangular_decompose(Rook({2, 1}));
  CHECK(parts.lower == Rook({2, 0}));
  CHECK(parts.upper == Rook({0, 1}));

  for (int n = 1; n <= 4; ++n)
    for (const auto& x : all_rooks(n)) {
      const auto p = triangular_decompose(x);
      for (int j = 1; j <= n; ++j) {
        const int nonzero = (p.lower.at(j) != 0) + (p.diag.at(j) != 0) + (p.upper.at(j) != 0);
        REQUIRE(nonzero == (x.at(j) != 0));
        REQUIRE(p.lower.at(j) + p.diag.at(j) + p.upper.at(j) == x.at(j));
        if (p.lower.at(j)) REQUIRE(p.lower.at(j) > j);
        if (p.diag.at(j)) REQUIRE(p.diag.at(j) == j);
        if (p.upper.at(j)) REQUIRE(p.upper.at(j) < j);
      }
    }
}

TEST_CASE("shape predicates and inverse") {
  CHECK(Rook({1, 0, 2}).is_upper_triangular());
  CHECK_FALSE(Rook({1, 0, 2}).is_strictly_upper_triangular());
  CHECK(Rook({0, 1, 2}).is_strictly_upper_triangular());
  CHECK_FALSE(Rook({2, 0}).is_upper_triangular());
  CHECK(Rook({1, 0, 3}).is_diagonal());
  for (const auto& x : all_rooks(4)) {
    REQUIRE(x.inverse().inverse() == x);
    // The inverse is the transpose.
    const auto d = oracle::to_dense(x), t = oracle::to_dense(x.inverse());
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) REQUIRE(d[r][c] == t[c][r]);
  }
}

TEST_CASE("diagonal idempotents") {
  CHECK(diagonal_idempotent(4, {1, 2}) == Rook({1, 2, 0, 0}));
  CHECK(diagonal_idempotent(4, {1, 2}) == leading_idempotent(4, 2));
  CHECK(diagonal_idempotent(4, {2, 4}) == Rook({0, 2, 0, 4}));
  CHECK_THROWS_AS(diagonal_idempotent(4, {5}), InvalidArgument);
  const Rook e = diagonal_idempotent(5, {1, 3, 4});
  CHECK(e * e == e);
}

TEST_CASE("msp_membership") {
  CHECK(msp_membership(RationalMatrix::identity(4)) == Rational(1));
  CHECK(msp_membership(RationalMatrix::from_rook(Rook({0, 0, 2, 1}))) == Rational(0));
  const std::vector<Rational> d{1, 1, 1, 2};
  CHECK_FALSE(msp_membership(RationalMatrix::diagonal(d)).has_value());
  const std::vector<Rational> scaled{3, 3, 3, 3};
  CHECK(msp_membership(RationalMatrix::diagonal(scaled)) == Rational(9));
  CHECK_THROWS_AS(msp_membership(RationalMatrix::identity(3)), InvalidArgument);

  // Singular symplectic rooks sit in MSp with factor zero; any rook matrix in
  // MSp is a symplectic rook.
  for (const auto& x : all_rooks(4)) {
    const auto c = msp_membership(RationalMatrix::from_rook(x));
    if (is_symplectic_rook(x) && !x.is_permutation()) REQUIRE(c == Rational(0));
    if (c) REQUIRE(is_symplectic_rook(x));
  }
}

TEST_CASE("symplectic form is skew with J_l blocks") {
  const auto j = RationalMatrix::symplectic_form(4);
  CHECK(j(1, 4) == Rational(1));
  CHECK(j(2, 3) == Rational(1));
  CHECK(j(3, 2) == Rational(-1));
  CHECK(j(4, 1) == Rational(-1));
  CHECK(j.transpose() == j.scaled(-1));
}
