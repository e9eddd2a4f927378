#pragma once

// The Bruhat-Chevalley-Renner order, decided two independent ways:
//  - the one-line criterion on decreasing-sorted prefix multisets, and
//  - the Pennell-Putcha-Renner comparison of standard forms x = a e b^{-1}.
// Also builds Hasse diagrams for any list of rooks.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "renner/rook.hpp"
#include "renner/weyl.hpp"

namespace renner {

/// Bruhat order on permutations by prefix dominance.
bool ehresmann_le(const Permutation& u, const Permutation& v);

/// One-line criterion: for every i in 1..n the decreasing rearrangement of
/// (x_1..x_i) is componentwise <= that of (y_1..y_i).  Zeros are kept.
bool bcr_le(const Rook& x, const Rook& y);

/// Literal set reading: prefixes as sets (repeated zeros collapse), compared
/// only for i in 1..n-1, and only when the sets have equal size.  Kept for
/// auditing against bcr_le; it is not a partial order on singular rooks.
bool bcr_le_set_form(const Rook& x, const Rook& y);

struct StandardForm {
  Permutation a;
  Rook e;
  Permutation b;
};

/// The Renner monoid of a Weyl group (R_n for S_n, R_G for W_G) together with
/// its cross-section chain and, per idempotent, the parabolic subgroups and
/// minimal coset representatives the standard form needs.
class RennerContext {
 public:
  explicit RennerContext(GroupContext group);

  const GroupContext& group() const { return group_; }
  const std::vector<Rook>& lattice() const { return lattice_; }

  bool contains(const Rook& x) const;

  struct IdempotentData {
    Rook e;
    int position;  // index in the chain
    ParabolicData parabolic;
    std::vector<Permutation> d;       // D(e)
    std::vector<Permutation> d_star;  // D_*(e)
  };

  /// Lattice element of the given rank; throws if there is none.
  const IdempotentData& idempotent_of_rank(int rank) const;

  /// W(f) W(e) as a sorted set; e, f given by chain position.  Cached.
  const std::vector<Permutation>& witness_set(int e_pos, int f_pos) const;

 private:
  GroupContext group_;
  std::vector<Rook> lattice_;
  std::vector<IdempotentData> data_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Permutation>>>
      witness_cache_;
};

/// Unique a in D_*(e), b in D(e) with x = a e b^{-1}, by exhaustive search.
/// Throws InvalidArgument when x is outside the monoid and InternalError if
/// the pair is not unique.
StandardForm standard_form(const Rook& x, const RennerContext& ctx);

/// x <= y iff e <= f and a <= c w, w^{-1} d^{-1} <= b^{-1} for some w in
/// W(f) W(e).
bool bcr_le_ppr(const Rook& x, const Rook& y, const RennerContext& ctx);
bool bcr_le_ppr(const StandardForm& x, const StandardForm& y, const RennerContext& ctx);

enum class Comparator { one_line, ppr };

struct HasseDiagram {
  std::vector<Rook> elements;
  /// (lower, upper) index pairs, sorted.
  std::vector<std::pair<int, int>> covers;
  /// Longest-chain distance from a minimal element.
  std::vector<int> rank_of;
  std::vector<int> minimals;
  std::vector<int> maximals;
  bool graded = false;

  std::size_t size() const { return elements.size(); }
};

/// Computes all comparabilities, then the transitive reduction.  The ppr
/// comparator needs a context whose monoid contains every element.  Workers
/// split the comparability rows; the result does not depend on them.
HasseDiagram build_poset(std::vector<Rook> elements, Comparator comparator,
                         const RennerContext* ctx = nullptr, int workers = 1);

}  // namespace renner
