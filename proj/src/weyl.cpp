#include "renner/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "renner/error.hpp"

namespace renner {

namespace {

constexpr int kMaxSymmetricDegree = 8;
constexpr int kMaxSymplecticRank = 4;

bool commutes(const Rook& a, const Rook& e) { return a * e == e * a; }

}  // namespace

Permutation::Permutation(Rook r) : rook_(std::move(r)) {
  if (!rook_.is_permutation())
    throw InvalidArgument("not a permutation: " + rook_.to_string());
}

Permutation Permutation::simple_transposition(int n, int j) {
  if (j < 1 || j >= n) throw InvalidArgument("simple transposition index out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = i;
  std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
  return Permutation(std::move(v));
}

Permutation theta_perm(const Permutation& w) {
  const int n = w.size();
  if (n % 2 != 0) throw InvalidArgument("theta needs even n");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - w.at(n + 1 - i);
  return Permutation(std::move(v));
}

std::vector<Permutation> symplectic_generators(int l) {
  if (l < 1) throw InvalidArgument("symplectic rank must be positive");
  const int n = 2 * l;
  std::vector<Permutation> gens;
  for (int j = 1; j < l; ++j)
    gens.push_back(Permutation::simple_transposition(n, j) *
                   Permutation::simple_transposition(n, n - j));
  gens.push_back(Permutation::simple_transposition(n, l));
  return gens;
}

std::vector<Permutation> symmetric_generators(int n) {
  std::vector<Permutation> gens;
  for (int j = 1; j < n; ++j) gens.push_back(Permutation::simple_transposition(n, j));
  return gens;
}

std::vector<Permutation> generate_group(int n, const std::vector<Permutation>& generators) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    Permutation w = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation u = w * g;
      if (seen.insert(u).second) frontier.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

size_t inversion_count(const Permutation& w) {
  size_t count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w.at(i) > w.at(j)) ++count;
  return count;
}

GroupContext::GroupContext(GroupKind kind, int n, std::vector<Permutation> generators)
    : kind_(kind), n_(n), generators_(std::move(generators)) {
  const Permutation id = Permutation::identity(n);
  lengths_.emplace(id, 0);
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation w = frontier.front();
    frontier.pop_front();
    const int next = lengths_.at(w) + 1;
    for (const auto& g : generators_) {
      Permutation u = w * g;
      if (lengths_.emplace(u, next).second) frontier.push_back(u);
    }
  }
  elements_.reserve(lengths_.size());
  for (const auto& [w, len] : lengths_) elements_.push_back(w);
}

GroupContext GroupContext::symmetric(int n) {
  if (n < 1) throw InvalidArgument("group degree must be positive");
  if (n > kMaxSymmetricDegree)
    throw ResourceLimit("S_n is materialized only for n <= " +
                        std::to_string(kMaxSymmetricDegree));
  return GroupContext(GroupKind::symmetric, n, symmetric_generators(n));
}

GroupContext GroupContext::symplectic(int l) {
  if (l < 1) throw InvalidArgument("symplectic rank must be positive");
  if (l > kMaxSymplecticRank)
    throw ResourceLimit("W_G is materialized only for l <= " +
                        std::to_string(kMaxSymplecticRank));
  return GroupContext(GroupKind::symplectic, 2 * l, symplectic_generators(l));
}

int GroupContext::cayley_length(const Permutation& w) const {
  auto it = lengths_.find(w);
  if (it == lengths_.end()) throw InvalidArgument(w.to_string() + " is not in the group");
  return it->second;
}

std::vector<Permutation> GroupContext::parabolic_subgroup(
    const std::vector<int>& generator_indices) const {
  std::vector<Permutation> gens;
  for (int j : generator_indices) {
    if (j < 1 || j > static_cast<int>(generators_.size()))
      throw InvalidArgument("generator index " + std::to_string(j) + " not in the group");
    gens.push_back(generators_[static_cast<std::size_t>(j - 1)]);
  }
  return generate_group(n_, gens);
}

int coxeter_length(const Permutation& w, const GroupContext& ctx) {
  if (w.size() != ctx.n() || !ctx.contains(w))
    throw InvalidArgument(w.to_string() + " is not in the group");
  if (ctx.kind() == GroupKind::symmetric) return static_cast<int>(inversion_count(w));
  return ctx.cayley_length(w);
}

std::vector<Rook> lattice_idempotents(const GroupContext& ctx) {
  const int n = ctx.n();
  std::vector<Rook> chain;
  const int top = ctx.kind() == GroupKind::symmetric ? n : n / 2;
  for (int k = 0; k <= top; ++k) chain.push_back(leading_idempotent(n, k));
  if (ctx.kind() == GroupKind::symplectic) chain.push_back(Rook::identity(n));
  return chain;
}

ParabolicData parabolic_data(const Rook& e, const GroupContext& ctx) {
  const auto chain = lattice_idempotents(ctx);
  const auto pos = std::find(chain.begin(), chain.end(), e);
  if (pos == chain.end())
    throw InvalidArgument(e.to_string() + " is not a cross-section idempotent of the group");

  auto commuting = [&](const Rook& f) {
    std::vector<int> idx;
    for (std::size_t j = 0; j < ctx.generators().size(); ++j)
      if (commutes(ctx.generators()[j].rook(), f)) idx.push_back(static_cast<int>(j) + 1);
    return idx;
  };

  ParabolicData data;
  data.commuting_generators = commuting(e);

  // lambda_*(e) = intersection of lambda(f) for f <= e along the chain.
  std::vector<int> stab = commuting(chain.front());
  for (auto it = chain.begin(); it != pos + 1; ++it) {
    const auto lam = commuting(*it);
    std::vector<int> keep;
    std::set_intersection(stab.begin(), stab.end(), lam.begin(), lam.end(),
                          std::back_inserter(keep));
    stab = std::move(keep);
  }
  data.stabilizer_generators = std::move(stab);

  for (const auto& a : ctx.elements()) {
    const Rook ae = a.rook() * e;
    if (ae == e * a.rook()) {
      data.centralizer.push_back(a);
      if (ae == e) data.stabilizer.push_back(a);
    }
  }
  return data;
}

std::vector<Permutation> min_coset_reps(const std::vector<int>& generator_indices,
                                        const GroupContext& ctx) {
  const auto subgroup = ctx.parabolic_subgroup(generator_indices);
  std::set<Permutation> assigned;
  std::vector<Permutation> reps;
  for (const auto& x : ctx.elements()) {
    if (assigned.count(x)) continue;
    const Permutation* best = nullptr;
    int best_len = 0;
    int ties = 0;
    std::vector<Permutation> coset;
    coset.reserve(subgroup.size());
    for (const auto& w : subgroup) coset.push_back(x * w);
    for (const auto& y : coset) {
      assigned.insert(y);
      const int len = coxeter_length(y, ctx);
      if (!best || len < best_len) {
        best = &y;
        best_len = len;
        ties = 1;
      } else if (len == best_len) {
        ++ties;
      }
    }
    if (ties != 1) throw InternalError("coset of " + x.to_string() + " has no unique minimum");
    reps.push_back(*best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace renner
