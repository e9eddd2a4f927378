#pragma once

// Rooks: n x n 0/1 matrices with at most one nonzero entry per row and
// column, stored in column-indexed one-line notation.  Entry x_j (1-based)
// is the row hit by column j, or 0 when column j is empty.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace renner {

class Rook {
 public:
  Rook() = default;

  /// Validates length, range and injectivity of the nonzero entries.
  explicit Rook(std::vector<int> one_line);

  static Rook zero(int n);
  static Rook identity(int n);

  int size() const { return static_cast<int>(one_line_.size()); }

  /// x_j for 1 <= j <= n.
  int at(int j) const { return one_line_[static_cast<std::size_t>(j - 1)]; }

  std::span<const int> one_line() const { return one_line_; }

  int rank() const;

  /// D(x): columns with a nonzero entry, increasing.
  std::vector<int> domain() const;
  /// R(x): rows with a nonzero entry, increasing.
  std::vector<int> range() const;

  bool is_zero() const { return rank() == 0; }
  bool is_permutation() const { return rank() == size(); }
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;
  bool is_diagonal() const;

  /// Partial inverse (the transpose matrix).
  Rook inverse() const;

  /// "(x1,x2,...,xn)"
  std::string to_string() const;

  friend auto operator<=>(const Rook&, const Rook&) = default;
  friend bool operator==(const Rook&, const Rook&) = default;

 private:
  std::vector<int> one_line_;
};

struct RookHash {
  std::size_t operator()(const Rook& x) const noexcept;
};

/// Parses "(x1,...,xn)"; whitespace is tolerated anywhere.
Rook parse_one_line(std::string_view text, int n);
/// Same, with n taken from the number of entries.
Rook parse_one_line(std::string_view text);

/// Matrix product x * y: result_j = x_{y_j}.
Rook multiply(const Rook& x, const Rook& y);
Rook operator*(const Rook& x, const Rook& y);

/// True iff the partial map has no cycle, i.e. some power vanishes.
bool is_nilpotent_rook(const Rook& x);

struct TriangularParts {
  Rook lower;  // x_j > j
  Rook diag;   // x_j = j
  Rook upper;  // x_j < j

  int lower_rank() const { return lower.rank(); }
  int diag_rank() const { return diag.rank(); }
  int upper_rank() const { return upper.rank(); }
};

TriangularParts triangular_decompose(const Rook& x);

/// Diagonal idempotent with x_j = j exactly for j in support.
Rook diagonal_idempotent(int n, const std::set<int>& support);

/// e_k = E_11 + ... + E_kk of size n.
Rook leading_idempotent(int n, int k);

/// Calls fn on every rook of size n in lexicographic order of one-line
/// notation.  bound(j) caps the value allowed at column j (pass nullptr for
/// no cap); it is how Borel families prune the search.  When first_column is
/// given, only rooks with x_1 equal to it are visited.
void for_each_rook(int n, const std::function<int(int)>& bound,
                   const std::function<void(const Rook&)>& fn,
                   std::optional<int> first_column = std::nullopt);

using Rational = boost::multiprecision::cpp_rational;

/// Square matrix of exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);
  RationalMatrix(int n, std::vector<Rational> row_major);

  static RationalMatrix identity(int n);
  static RationalMatrix from_rook(const Rook& x);
  static RationalMatrix diagonal(std::span<const Rational> entries);
  /// The skew form [[0, J_l], [-J_l, 0]] of even size n = 2l.
  static RationalMatrix symplectic_form(int n);

  int size() const { return n_; }
  const Rational& operator()(int row, int col) const;
  Rational& operator()(int row, int col);

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& c) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> entries_;
};

/// Returns c when A^T J A = A J A^T = cJ, nothing otherwise.  Throws on odd
/// size.
std::optional<Rational> msp_membership(const RationalMatrix& a);

}  // namespace renner
