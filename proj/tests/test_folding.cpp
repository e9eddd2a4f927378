#include "doctest.h"
#include "oracles.hpp"
#include "renner/error.hpp"
#include "renner/folding.hpp"
#include "renner/symplectic.hpp"

#include <set>

using namespace renner;

namespace {

using Cells = std::set<PartialMatrix::Cell>;

// Folding on a dense rows x cols array, written out independently of the
// cell-set implementation.
oracle::Dense dense_fold_rows(const oracle::Dense& m) {
  const std::size_t h = m.size() / 2;
  oracle::Dense out(h, std::vector<int>(m[0].size(), 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[0].size(); ++c)
      if (m[r][c]) out[r >= h ? r - h : h - 1 - r][c] += 1;
  return out;
}

oracle::Dense transpose(const oracle::Dense& m) {
  oracle::Dense t(m[0].size(), std::vector<int>(m.size(), 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[0].size(); ++c) t[c][r] = m[r][c];
  return t;
}

Cells dense_cells(const oracle::Dense& m) {
  Cells out;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[0].size(); ++c)
      if (m[r][c]) out.emplace(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
  return out;
}

}  // namespace

TEST_CASE("the two displayed 8x8 folds") {
  const Rook x({1, 0, 5, 0, 2, 0, 6, 0});
  const auto m = PartialMatrix::from_rook(x);
  const auto tb = fold(m, FoldDirection::top_to_bottom);
  CHECK(tb.rows() == 4);
  CHECK(tb.cols() == 8);
  CHECK(tb.cells() == Cells{{4, 1}, {3, 5}, {1, 3}, {2, 7}});
  const auto lr = fold(m, FoldDirection::left_to_right);
  CHECK(lr.rows() == 8);
  CHECK(lr.cols() == 4);
  CHECK(lr.cells() == Cells{{1, 4}, {2, 1}, {5, 2}, {6, 3}});
  CHECK(fold(x) == Rook({3, 1, 2, 4}));
  CHECK(fold(m, FoldDirection::both).to_rook() == Rook({3, 1, 2, 4}));
  CHECK(tb.to_string() == "4 8; 1,3 2,7 3,5 4,1");
}

TEST_CASE("fold errors") {
  CHECK_THROWS_AS(fold(PartialMatrix(3, 2, {}), FoldDirection::top_to_bottom), InvalidArgument);
  CHECK_THROWS_AS(fold(PartialMatrix(2, 3, {}), FoldDirection::left_to_right), InvalidArgument);
  // Rows 1 and 4 of a 4-row matrix both fold onto row 2.
  CHECK_THROWS_AS(fold(Rook({1, 0, 0, 4})), InvalidArgument);
  CHECK_THROWS_AS(PartialMatrix(2, 2, {{1, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(PartialMatrix(2, 2, {{3, 1}}), InvalidArgument);
}

TEST_CASE("folds commute and match the dense oracle on singular R_G") {
  for (int n : {4, 6, 8}) {
    for (const auto& x : enum_family({n, Family::renner_sp, std::nullopt})) {
      if (x.is_permutation()) {
        CHECK_THROWS_AS(fold(x), InvalidArgument);
        continue;
      }
      const auto m = PartialMatrix::from_rook(x);
      const auto tb = fold(m, FoldDirection::top_to_bottom);
      const auto lr = fold(m, FoldDirection::left_to_right);
      const auto tb_lr = fold(tb, FoldDirection::left_to_right);
      const auto lr_tb = fold(lr, FoldDirection::top_to_bottom);
      REQUIRE(tb_lr == lr_tb);
      REQUIRE(tb_lr == fold(m, FoldDirection::both));
      REQUIRE(tb_lr.cells().size() == static_cast<std::size_t>(x.rank()));

      const auto d = oracle::to_dense(x);
      const auto dtb = dense_fold_rows(d);
      REQUIRE(dense_cells(dtb) == tb.cells());
      REQUIRE(dense_cells(transpose(dense_fold_rows(transpose(d)))) == lr.cells());
    }
  }
}

TEST_CASE("preimages of J_2") {
  const std::vector<Rook> expected{Rook({0, 0, 1, 2}), Rook({0, 0, 1, 3}), Rook({0, 1, 0, 2}),
                                   Rook({0, 1, 0, 3})};
  CHECK(unfold_preimages(Rook({2, 1})) == expected);
  CHECK(unfold_constructive(Rook({2, 1})) == expected);
  CHECK(preimage_count(Rook({2, 1})) == 4);
  CHECK(unfold_preimages(Rook::zero(2)) == std::vector<Rook>{Rook::zero(4)});
  CHECK(unfold_preimages(Rook::identity(2)).size() == 9);
  CHECK(preimage_count(Rook::identity(2)) == 9);
  CHECK(preimage_count(Rook::zero(2)) == 1);
}

TEST_CASE("preimages partition the singular part of B_G and follow the count law") {
  for (int l = 1; l <= 3; ++l) {
    const int n = 2 * l;
    std::set<Rook> singular;
    for (const auto& x : enum_family({n, Family::borel_sp, std::nullopt}))
      if (!x.is_permutation()) singular.insert(x);
    std::set<Rook> seen;
    std::size_t total = 0;
    for (const auto& a : enum_family({l, Family::rook, std::nullopt})) {
      const auto pre = unfold_preimages(a);
      REQUIRE(pre == unfold_constructive(a));
      REQUIRE(preimage_count(a) == pre.size());
      for (const auto& x : pre) {
        REQUIRE(x.is_upper_triangular());
        REQUIRE(is_symplectic_rook(x));
        REQUIRE(x.rank() == a.rank());
        REQUIRE(seen.insert(x).second);
      }
      total += pre.size();
    }
    CHECK(seen == singular);
    CHECK(total == singular.size());
  }
}
