#pragma once

// Folding operators on symplectic rooks and their inverse images.
//
// Top-to-bottom folding of a matrix with 2h rows sends row r > h to r - h and
// row r <= h to h + 1 - r; left-to-right folding treats columns the same way
// with half-width w.  Both preserve the number of nonzero cells on inputs
// with admissible range (resp. domain).

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "renner/counting.hpp"
#include "renner/rook.hpp"

namespace renner {

/// A rows x cols 0/1 matrix with at most one nonzero per row and column.
class PartialMatrix {
 public:
  using Cell = std::pair<int, int>;  // (row, col), 1-based

  PartialMatrix(int rows, int cols, std::set<Cell> cells);
  static PartialMatrix from_rook(const Rook& x);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::set<Cell>& cells() const { return cells_; }

  /// Throws unless square.
  Rook to_rook() const;

  /// "rows cols; r1,c1 r2,c2 ..." with cells in (row, col) order.
  std::string to_string() const;

  friend bool operator==(const PartialMatrix&, const PartialMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::set<Cell> cells_;
};

enum class FoldDirection { top_to_bottom, left_to_right, both };

/// Throws InvalidArgument on an odd folded dimension or when two cells land
/// on the same row or column.
PartialMatrix fold(const PartialMatrix& m, FoldDirection direction);
Rook fold(const Rook& x);

/// Every x in the symplectic Borel monoid of size 2l with fold(x) = a, by
/// filtering the enumerated monoid.  Sorted.
std::vector<Rook> unfold_preimages(const Rook& a);

/// The same set built cell by cell: each nonzero (i, j) of a unfolds to a
/// row in {l+1-i, l+i} and a column in {l+1-j, l+j}, keeping the choices on
/// or above the diagonal.  Sorted.
std::vector<Rook> unfold_constructive(const Rook& a);

/// 2^{a+c} 3^b for the triangular ranks of a.
BigInt preimage_count(const Rook& a);

}  // namespace renner
