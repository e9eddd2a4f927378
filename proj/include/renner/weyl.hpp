#pragma once

// Symmetric groups S_n and the symplectic Weyl group W_G (type C_l inside
// S_{2l}), materialized by breadth-first closure over Coxeter generators.

#include <map>
#include <string>
#include <vector>

#include "renner/rook.hpp"

namespace renner {

/// A rook with no zero entries.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Rook r);
  explicit Permutation(std::vector<int> one_line) : Permutation(Rook(std::move(one_line))) {}

  static Permutation identity(int n) { return Permutation(Rook::identity(n)); }
  /// The simple transposition r_j = (j, j+1).
  static Permutation simple_transposition(int n, int j);

  int size() const { return rook_.size(); }
  int at(int i) const { return rook_.at(i); }
  const Rook& rook() const { return rook_; }
  Permutation inverse() const { return Permutation(rook_.inverse()); }
  std::string to_string() const { return rook_.to_string(); }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    return Permutation(a.rook_ * b.rook_);
  }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Rook rook_;
};

/// theta(w) = (n+1-w_n, ..., n+1-w_1).  Requires even n.
Permutation theta_perm(const Permutation& w);

/// s_j = r_j r_{n-j} for j < l, s_l = r_l, acting on n = 2l points.
std::vector<Permutation> symplectic_generators(int l);

/// r_1, ..., r_{n-1}.
std::vector<Permutation> symmetric_generators(int n);

/// Sorted list of all products of the generators (identity included).
std::vector<Permutation> generate_group(int n, const std::vector<Permutation>& generators);

size_t inversion_count(const Permutation& w);

enum class GroupKind { symmetric, symplectic };

/// A Coxeter system (W, S) with all of W materialized.
class GroupContext {
 public:
  static GroupContext symmetric(int n);
  /// Acts on n = 2l points.
  static GroupContext symplectic(int l);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  /// Generator j is generators()[j - 1].
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Sorted lexicographically.
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& w) const { return lengths_.count(w) != 0; }

  /// Breadth-first distance from the identity in the Cayley graph.
  int cayley_length(const Permutation& w) const;

  /// The subgroup generated by the listed generator indices (1-based).
  std::vector<Permutation> parabolic_subgroup(const std::vector<int>& generator_indices) const;

 private:
  GroupContext(GroupKind kind, int n, std::vector<Permutation> generators);

  GroupKind kind_;
  int n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, int> lengths_;
};

/// Coxeter length: inversion number in S_n, Cayley distance in W_G.  Throws
/// when w is not in the group.
int coxeter_length(const Permutation& w, const GroupContext& ctx);

struct ParabolicData {
  /// lambda(e): indices j with s_j e = e s_j.
  std::vector<int> commuting_generators;
  /// W(e) = {a : ae = ea}, by exhaustive check.
  std::vector<Permutation> centralizer;
  /// lambda_*(e): intersection of lambda(f) over lattice elements f <= e.
  std::vector<int> stabilizer_generators;
  /// W_*(e) = {a : ae = ea = e}, by exhaustive check.
  std::vector<Permutation> stabilizer;
};

/// The chain of diagonal idempotents: e_0, ..., e_n for S_n and
/// e_0, ..., e_l, e_n for W_G.
std::vector<Rook> lattice_idempotents(const GroupContext& ctx);

/// e must be one of lattice_idempotents(ctx).
ParabolicData parabolic_data(const Rook& e, const GroupContext& ctx);

/// D_I: the minimum-length element of each left coset x W_I, sorted.
std::vector<Permutation> min_coset_reps(const std::vector<int>& generator_indices,
                                        const GroupContext& ctx);

}  // namespace renner
