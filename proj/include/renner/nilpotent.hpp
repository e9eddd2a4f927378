#pragma once

#include <vector>

#include "renner/rook.hpp"
#include "renner/symplectic.hpp"

namespace renner {

/// Nilpotent part of a Borel monoid, viewed inside the ambient rook poset.
struct NilpotentReport {
  FamilySpec family;
  int count = 0;
  /// Under the one-line order, lexicographic.
  std::vector<Rook> maximals;
  bool unique_max = false;
  bool closed_under_product = false;
  /// Longest chain from the zero rook to any maximal element.
  int longest_chain = 0;
  /// Longest chain from zero to each entry of maximals.
  std::vector<int> chain_to_maximal;
};

/// family.family must be borel-nil or borel-sp-nil; a rank restriction is
/// not allowed.
NilpotentReport nilpotent_analysis(const FamilySpec& family, int workers = 1);

}  // namespace renner
