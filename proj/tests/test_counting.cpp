#include "doctest.h"
#include "oracles.hpp"
#include "renner/counting.hpp"
#include "renner/error.hpp"
#include "renner/symplectic.hpp"

#include <map>
#include <tuple>

using namespace renner;

namespace {

BigInt big(__int128 v) {
  BigInt out = static_cast<std::int64_t>(v / 1000000000000000000LL);
  out = out * BigInt(1000000000000000000LL) + static_cast<std::int64_t>(v % 1000000000000000000LL);
  return out;
}

const CountReport* find_triple(const TriangularCensus& c, int a, int b, int d) {
  for (const auto& r : c.triples) {
    std::map<std::string, std::int64_t> p(r.parameters.begin(), r.parameters.end());
    if (p["a"] == a && p["b"] == b && p["c"] == d) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("Stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(2, 3) == 0);
  CHECK(stirling2(-1, 0) == 0);
  CHECK(stirling2(3, -1) == 0);
  for (int m = 0; m <= 12; ++m)
    for (int k = 0; k <= m; ++k) REQUIRE(stirling2(m, k) == big(oracle::stirling_inclusion_exclusion(m, k)));
}

TEST_CASE("Bell numbers") {
  CHECK(bell(0) == 1);
  CHECK(bell(3) == 5);
  CHECK(bell(5) == 52);
  CHECK(bell(7) == 877);
  const auto tri = oracle::bell_triangle(20);
  for (int m = 0; m < 20; ++m) REQUIRE(bell(m) == tri[static_cast<std::size_t>(m)]);
}

TEST_CASE("big integer arithmetic does not wrap") {
  CHECK(factorial(30).str() == "265252859812191058636308480000000");
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  CHECK(power(3, 50).str() == "717897987691852588770249");
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(factorial(-1), InvalidArgument);
}

TEST_CASE("admissible_count") {
  CHECK(admissible_count(4, 2) == 4);
  CHECK(admissible_count(4, 3) == 0);
  BigInt total = 0;
  for (int k = 0; k <= 6; ++k) total += admissible_count(6, k);
  CHECK(total == 27);
  CHECK_THROWS_AS(admissible_count(5, 1), InvalidArgument);
  for (int l = 1; l <= 6; ++l)
    for (int k = 0; k <= 2 * l; ++k)
      REQUIRE(admissible_count(2 * l, k) == enum_admissible(2 * l, k).size());
}

TEST_CASE("rank_count_rook") {
  CHECK(rank_count_rook(4, 0) == 1);
  CHECK(rank_count_rook(2, 1) == 4);
  CHECK(rank_count_rook(4, 2) == 72);
  CHECK_THROWS_AS(rank_count_rook(3, 4), InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> by_rank(static_cast<std::size_t>(n) + 1, 0);
    for_each_rook(n, nullptr, [&](const Rook& x) { ++by_rank[static_cast<std::size_t>(x.rank())]; });
    for (int k = 0; k <= n; ++k) REQUIRE(rank_count_rook(n, k) == by_rank[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("CountReport flags follow the stored values") {
  auto r = make_report("q", {{"n", 2}}, 5, BigInt(5), BigInt(6));
  CHECK(r.agree_oracle_proof);
  CHECK_FALSE(r.agree_oracle_paper);
  r.paper_form = std::nullopt;
  r.settle();
  CHECK(r.agree_oracle_paper);
  r.proof_form = BigInt(4);
  r.settle();
  CHECK_FALSE(r.agree_oracle_proof);
  CHECK(r.parameter_string() == "n=2");
}

TEST_CASE("triangular census") {
  const auto c2 = triangular_census(2);
  REQUIRE(find_triple(c2, 1, 0, 1));
  CHECK(find_triple(c2, 1, 0, 1)->oracle == 1);
  CHECK(find_triple(c2, 1, 1, 0)->oracle == 0);
  CHECK(find_triple(c2, 1, 1, 0)->paper_form == BigInt(6));
  CHECK_FALSE(find_triple(c2, 1, 1, 0)->agree_oracle_paper);
  for (int n = 1; n <= 5; ++n) {
    const auto c = triangular_census(n);
    CHECK(find_triple(c, 0, 0, 0)->oracle == 1);
    for (const auto& r : c.rank_sums) CHECK(r.agree_oracle_proof);
    // The census itself, recomputed cell by cell.
    std::map<std::tuple<int, int, int>, std::int64_t> counts;
    for_each_rook(n, nullptr, [&](const Rook& x) {
      int a = 0, b = 0, d = 0;
      for (int j = 1; j <= n; ++j) {
        if (x.at(j) > j) ++a;
        else if (x.at(j) == j) ++b;
        else if (x.at(j) != 0) ++d;
      }
      ++counts[{a, b, d}];
    });
    for (const auto& r : c.triples) {
      std::map<std::string, std::int64_t> p(r.parameters.begin(), r.parameters.end());
      const auto it = counts.find({static_cast<int>(p["a"]), static_cast<int>(p["b"]), static_cast<int>(p["c"])});
      REQUIRE(r.oracle == (it == counts.end() ? 0 : it->second));
    }
  }
  CHECK_THROWS_AS(triangular_census(9), ResourceLimit);
}

TEST_CASE("symplectic Borel rank counts") {
  auto r = borel_sp_rank_count(2, 0);
  CHECK(r.oracle == 1);
  CHECK(r.proof_form == BigInt(1));
  CHECK(r.paper_form == BigInt(1));
  r = borel_sp_rank_count(2, 1);
  CHECK(r.oracle == 10);
  CHECK(r.proof_form == BigInt(10));
  CHECK(r.paper_form == BigInt(18));
  CHECK_FALSE(r.agree_oracle_paper);
  r = borel_sp_rank_count(2, 2);
  CHECK(r.oracle == 13);
  CHECK(r.proof_form == BigInt(13));
  CHECK_THROWS_AS(borel_sp_rank_count(5, 1), ResourceLimit);
  CHECK_THROWS_AS(borel_sp_rank_count(2, 3), InvalidArgument);

  for (int l = 1; l <= 4; ++l) {
    BigInt total = 1;  // the identity
    for (int k = 0; k <= l; ++k) {
      const auto rep = borel_sp_rank_count(l, k);
      REQUIRE(rep.agree_oracle_proof);
      REQUIRE(rep.oracle == enum_family({2 * l, Family::borel_sp, k}).size());
      total += rep.oracle;
    }
    CHECK(total == enum_family({2 * l, Family::borel_sp, std::nullopt}).size());
  }
}

TEST_CASE("preimage weights") {
  CHECK(preimage_weight(Rook({2, 1})) == 4);
  CHECK(preimage_weight(Rook::identity(2)) == 9);
  CHECK(preimage_weight(Rook::zero(3)) == 1);
}
