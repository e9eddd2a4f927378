#pragma once

// Admissible subsets, the symplectic Renner monoid R_G, Borel submonoids and
// their nilpotent parts, enumerated as sorted lists of rooks.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "renner/rook.hpp"

namespace renner {

/// Largest matrix size any full enumeration accepts.
inline constexpr int kMaxEnumerationSize = 8;

/// S subset of {1..n} with theta(S) disjoint from S, theta(i) = n+1-i.
class AdmissibleSet {
 public:
  AdmissibleSet(int n, std::vector<int> members);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  std::string to_string() const;

  friend auto operator<=>(const AdmissibleSet&, const AdmissibleSet&) = default;
  friend bool operator==(const AdmissibleSet&, const AdmissibleSet&) = default;

 private:
  int n_;
  std::vector<int> members_;
};

bool is_admissible(const std::set<int>& s, int n);
bool is_admissible(const std::vector<int>& s, int n);

/// All admissible k-subsets of {1..n}, lexicographic.
std::vector<AdmissibleSet> enum_admissible(int n, int k);

/// Singular with admissible domain and range, or a theta-fixed permutation.
bool is_symplectic_rook(const Rook& x);

enum class Family { rook, borel, borel_nil, renner_sp, borel_sp, borel_sp_nil };

std::string_view family_name(Family f);
/// Accepts the CLI names rook, borel, borel-nil, renner-sp, borel-sp, borel-sp-nil.
Family parse_family(std::string_view name);
bool is_symplectic_family(Family f);
bool is_nil_family(Family f);

struct FamilySpec {
  int n = 0;
  Family family = Family::rook;
  std::optional<int> rank;

  /// Throws InvalidArgument on bad combinations, ResourceLimit above the
  /// desk bound.
  void validate() const;
};

bool in_family(const Rook& x, Family family);

/// Members of the family in lexicographic one-line order.  With workers > 1
/// the search is split on the first column; the result is identical.
std::vector<Rook> enum_family(const FamilySpec& spec, int workers = 1);

/// e_0 < e_1 < ... < e_l < e_n for n = 2l.
std::vector<Rook> cross_section_lattice(int n);

}  // namespace renner
