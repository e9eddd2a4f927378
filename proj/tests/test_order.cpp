#include "doctest.h"
#include "oracles.hpp"
#include "renner/error.hpp"
#include "renner/order.hpp"
#include "renner/symplectic.hpp"

#include <set>

using namespace renner;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<Rook> family(int n, Family f, std::optional<int> rank = {}) {
  return enum_family({n, f, rank});
}

}  // namespace

TEST_CASE("ehresmann order on permutations") {
  for (const auto& v : oracle::all_permutations(4)) CHECK(ehresmann_le(Permutation::identity(4), v));
  CHECK(ehresmann_le(P({2, 1, 4, 3}), P({4, 3, 2, 1})));
  CHECK_FALSE(ehresmann_le(P({3, 1, 2, 4}), P({2, 4, 1, 3})));
}

TEST_CASE("one-line criterion examples") {
  CHECK(bcr_le(Rook({3, 1, 5, 2, 4}), Rook({5, 2, 4, 3, 1})));
  CHECK(bcr_le(Rook({0, 0, 1, 2}), Rook({0, 0, 2, 1})));
  CHECK_FALSE(bcr_le(Rook({0, 0, 0, 2}), Rook({0, 0, 1, 0})));
  CHECK_FALSE(bcr_le(Rook({0, 0, 1, 0}), Rook({0, 0, 0, 2})));
  // The literal set reading never looks at the last column.
  CHECK(bcr_le_set_form(Rook({0, 0, 0, 2}), Rook::zero(4)));
  CHECK_FALSE(bcr_le(Rook({0, 0, 0, 2}), Rook::zero(4)));
  CHECK_THROWS_AS(bcr_le(Rook({1}), Rook({1, 2})), InvalidArgument);
}

TEST_CASE("one-line criterion equals threshold counting") {
  for (int n = 1; n <= 4; ++n) {
    const auto xs = family(n, Family::rook);
    for (const auto& x : xs)
      for (const auto& y : xs) REQUIRE(bcr_le(x, y) == oracle::threshold_le(x, y));
  }
}

TEST_CASE("one-line criterion is a partial order on R_n, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto xs = family(n, Family::rook);
    const std::size_t m = xs.size();
    std::vector<std::vector<char>> le(m, std::vector<char>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) le[i][j] = bcr_le(xs[i], xs[j]);
    for (std::size_t i = 0; i < m; ++i) {
      REQUIRE(le[i][i]);
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && le[i][j]) REQUIRE_FALSE(le[j][i]);
        if (!le[i][j]) continue;
        for (std::size_t k = 0; k < m; ++k)
          if (le[j][k]) REQUIRE(le[i][k]);
      }
    }
  }
}

TEST_CASE("restricted to permutations the order is Bruhat order") {
  for (int n = 1; n <= 5; ++n) {
    const auto ws = oracle::all_permutations(n);
    for (const auto& u : ws)
      for (const auto& v : ws) REQUIRE(bcr_le(u.rook(), v.rook()) == ehresmann_le(u, v));
  }
  // On W_G the intrinsic comparison with the full-rank idempotent matches.
  const RennerContext ctx(GroupContext::symplectic(2));
  for (const auto& u : ctx.group().elements())
    for (const auto& v : ctx.group().elements())
      REQUIRE(bcr_le_ppr(u.rook(), v.rook(), ctx) == ehresmann_le(u, v));
}

TEST_CASE("standard form examples") {
  const RennerContext s4(GroupContext::symmetric(4));
  auto sf = standard_form(Rook({0, 0, 1, 2}), s4);
  CHECK(sf.a == Permutation::identity(4));
  CHECK(sf.e == Rook({1, 2, 0, 0}));
  CHECK(sf.b == P({3, 4, 1, 2}));
  sf = standard_form(Rook::identity(4), s4);
  CHECK(sf.a == Permutation::identity(4));
  CHECK(sf.e == Rook::identity(4));
  CHECK(sf.b == Permutation::identity(4));
  for (int k = 0; k <= 4; ++k) {
    sf = standard_form(leading_idempotent(4, k), s4);
    CHECK(sf.a == Permutation::identity(4));
    CHECK(sf.e == leading_idempotent(4, k));
    CHECK(sf.b == Permutation::identity(4));
  }
  const RennerContext wg(GroupContext::symplectic(2));
  CHECK_THROWS_AS(standard_form(Rook({0, 0, 2, 3}), wg), InvalidArgument);
}

TEST_CASE("standard forms decompose, lie in the coset tables and are unique") {
  auto check_monoid = [](const std::vector<Rook>& xs, const RennerContext& ctx) {
    for (const auto& x : xs) {
      const auto sf = standard_form(x, ctx);
      const auto product = oracle::dense_mul(oracle::dense_mul(oracle::to_dense(sf.a.rook()),
                                                               oracle::to_dense(sf.e)),
                                             oracle::to_dense(sf.b.inverse().rook()));
      REQUIRE(oracle::from_dense(product) == x);
      const auto& data = ctx.idempotent_of_rank(sf.e.rank());
      REQUIRE(std::binary_search(data.d_star.begin(), data.d_star.end(), sf.a));
      REQUIRE(std::binary_search(data.d.begin(), data.d.end(), sf.b));
      // No other (a, b) from the tables reproduces x.
      int hits = 0;
      for (const auto& a : data.d_star)
        for (const auto& b : data.d)
          if (a.rook() * data.e * b.inverse().rook() == x) ++hits;
      REQUIRE(hits == 1);
    }
  };
  for (int n = 1; n <= 4; ++n)
    check_monoid(family(n, Family::rook), RennerContext(GroupContext::symmetric(n)));
  for (int l = 1; l <= 2; ++l)
    check_monoid(family(2 * l, Family::renner_sp), RennerContext(GroupContext::symplectic(l)));
}

TEST_CASE("upper triangular iff a <= b") {
  for (int n = 1; n <= 4; ++n) {
    const RennerContext ctx(GroupContext::symmetric(n));
    for (const auto& x : family(n, Family::rook)) {
      const auto sf = standard_form(x, ctx);
      REQUIRE(x.is_upper_triangular() == ehresmann_le(sf.a, sf.b));
    }
  }
}

TEST_CASE("standard-form comparator examples") {
  const RennerContext wg(GroupContext::symplectic(2));
  CHECK(bcr_le_ppr(Rook({0, 0, 0, 1}), Rook({0, 0, 1, 0}), wg));
  CHECK_FALSE(bcr_le_ppr(Rook({0, 0, 1, 0}), Rook({0, 0, 0, 4}), wg));
  CHECK_FALSE(bcr_le_ppr(Rook({0, 0, 0, 4}), Rook({0, 0, 1, 0}), wg));
  for (const auto& x : family(4, Family::renner_sp)) REQUIRE(bcr_le_ppr(x, x, wg));
}

TEST_CASE("the two comparators agree on R_n, n <= 4, and on R_G, n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const RennerContext ctx(GroupContext::symmetric(n));
    const auto xs = family(n, Family::rook);
    std::vector<StandardForm> forms;
    for (const auto& x : xs) forms.push_back(standard_form(x, ctx));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        REQUIRE(bcr_le(xs[i], xs[j]) == bcr_le_ppr(forms[i], forms[j], ctx));
  }
  const RennerContext g(GroupContext::symplectic(2));
  const RennerContext s(GroupContext::symmetric(4));
  const auto xs = family(4, Family::renner_sp);
  REQUIRE(xs.size() == 57);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const bool in_g = bcr_le_ppr(x, y, g);
      REQUIRE(in_g == bcr_le(x, y));
      REQUIRE(in_g == bcr_le_ppr(x, y, s));
    }
}

TEST_CASE("Hasse diagram of B_G at n = 4") {
  const auto borel = family(4, Family::borel_sp);
  const auto h = build_poset(borel, Comparator::one_line);
  CHECK(h.size() == 25);
  CHECK(h.covers.size() == 49);
  REQUIRE(h.minimals.size() == 1);
  REQUIRE(h.maximals.size() == 1);
  CHECK(h.elements[static_cast<std::size_t>(h.minimals[0])] == Rook({0, 0, 0, 0}));
  CHECK(h.elements[static_cast<std::size_t>(h.maximals[0])] == Rook({1, 2, 3, 4}));

  const RennerContext g(GroupContext::symplectic(2));
  const auto hp = build_poset(borel, Comparator::ppr, &g);
  CHECK(hp.covers == h.covers);
  CHECK(build_poset(borel, Comparator::one_line, nullptr, 4).covers == h.covers);

  // (0,0,1,2) -> (0,0,2,1) is one of the covers.
  const auto idx = [&](const Rook& x) {
    return static_cast<int>(std::find(h.elements.begin(), h.elements.end(), x) - h.elements.begin());
  };
  CHECK(std::count(h.covers.begin(), h.covers.end(),
                   std::pair{idx(Rook({0, 0, 1, 2})), idx(Rook({0, 0, 2, 1}))}) == 1);
}

TEST_CASE("covers are the transitive reduction") {
  for (const auto& xs : {family(4, Family::borel_sp), family(3, Family::rook), family(4, Family::borel)}) {
    const auto h = build_poset(xs, Comparator::one_line);
    const std::size_t m = h.size();
    std::set<std::pair<int, int>> expected;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !bcr_le(h.elements[i], h.elements[j])) continue;
        bool direct = true;
        for (std::size_t k = 0; k < m && direct; ++k)
          if (k != i && k != j && bcr_le(h.elements[i], h.elements[k]) &&
              bcr_le(h.elements[k], h.elements[j]))
            direct = false;
        if (direct) expected.emplace(static_cast<int>(i), static_cast<int>(j));
      }
    CHECK(std::vector<std::pair<int, int>>(expected.begin(), expected.end()) == h.covers);
    bool graded = true;
    for (const auto& [lo, hi] : h.covers)
      if (h.rank_of[static_cast<std::size_t>(hi)] != h.rank_of[static_cast<std::size_t>(lo)] + 1)
        graded = false;
    CHECK(graded == h.graded);
  }
}

TEST_CASE("B_G(2) at n = 4") {
  const auto h = build_poset(family(4, Family::borel_sp, 2), Comparator::one_line);
  REQUIRE(h.minimals.size() == 1);
  CHECK(h.elements[static_cast<std::size_t>(h.minimals[0])] == Rook({0, 0, 1, 2}));
  std::set<Rook> maximals;
  for (int m : h.maximals) maximals.insert(h.elements[static_cast<std::size_t>(m)]);
  CHECK(maximals == std::set<Rook>{Rook({1, 2, 0, 0}), Rook({1, 0, 3, 0}), Rook({0, 2, 0, 4}),
                                   Rook({0, 0, 3, 4})});
  CHECK(h.graded);
}

TEST_CASE("degenerate posets") {
  const auto h = build_poset({Rook({1, 0})}, Comparator::one_line);
  CHECK(h.size() == 1);
  CHECK(h.covers.empty());
  CHECK(h.graded);
  CHECK(build_poset({}, Comparator::one_line).size() == 0);
  CHECK_THROWS_AS(build_poset({Rook({1, 0}), Rook({1, 0})}, Comparator::one_line), InvalidArgument);
  CHECK_THROWS_AS(build_poset({Rook({1, 0})}, Comparator::ppr), InvalidArgument);
}
