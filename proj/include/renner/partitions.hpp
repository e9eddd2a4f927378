#pragma once

// Set partitions and their arc diagrams.  A strictly upper-triangular rook x
// of size m is read as the arcs (x_j, j); the arcs join consecutive elements
// of each block, so x determines a partition of {1..m} and back.

#include <string>
#include <string_view>
#include <vector>

#include "renner/rook.hpp"

namespace renner {

class SetPartition {
 public:
  /// Normalizes to standard form: blocks sorted, ordered by minimum.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// "18|2569|37|4"; elements are comma-separated inside blocks when n > 9.
std::string partition_standard_string(const SetPartition& p);

/// Inverse of partition_standard_string.  n defaults to the largest element.
SetPartition parse_partition(std::string_view text, int n = 0);

/// Every partition of {1..n} in restricted-growth order.
std::vector<SetPartition> all_set_partitions(int n);

/// A in B_n to the strictly upper-triangular rook of size n+1 with a zero
/// first column and a zero last row.
Rook embed_nilpotent(const Rook& a);

/// Throws unless x is strictly upper triangular.
SetPartition rook_to_partition(const Rook& x);
Rook partition_to_rook(const SetPartition& p);

}  // namespace renner
