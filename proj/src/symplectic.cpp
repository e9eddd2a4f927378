#include "renner/symplectic.hpp"

#include <algorithm>
#include <future>

#include "renner/error.hpp"

namespace renner {

namespace {

void require_even(int n, const char* what) {
  if (n <= 0 || n % 2 != 0)
    throw InvalidArgument(std::string(what) + " needs a positive even size, got " +
                          std::to_string(n));
}

bool theta_fixed(const Rook& x) {
  const int n = x.size();
  for (int i = 1; i <= n; ++i)
    if (x.at(i) != n + 1 - x.at(n + 1 - i)) return false;
  return true;
}

}  // namespace

AdmissibleSet::AdmissibleSet(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw InvalidArgument("repeated member in admissible set");
  if (!is_admissible(members_, n)) throw InvalidArgument("set is not admissible");
}

std::string AdmissibleSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

bool is_admissible(const std::set<int>& s, int n) {
  require_even(n, "admissibility");
  for (int i : s) {
    if (i < 1 || i > n)
      throw InvalidArgument("member " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (s.count(n + 1 - i)) return false;
  }
  return true;
}

bool is_admissible(const std::vector<int>& s, int n) {
  return is_admissible(std::set<int>(s.begin(), s.end()), n);
}

std::vector<AdmissibleSet> enum_admissible(int n, int k) {
  require_even(n, "admissible enumeration");
  if (k < 0 || k > n) throw InvalidArgument("subset size out of range");
  std::vector<AdmissibleSet> out;
  // Walk k-combinations of {1..n} in lexicographic order.
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (is_admissible(comb, n)) out.emplace_back(n, comb);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool is_symplectic_rook(const Rook& x) {
  const int n = x.size();
  require_even(n, "symplectic rook test");
  if (x.is_permutation()) return theta_fixed(x);
  return is_admissible(x.domain(), n) && is_admissible(x.range(), n);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::rook: return "rook";
    case Family::borel: return "borel";
    case Family::borel_nil: return "borel-nil";
    case Family::renner_sp: return "renner-sp";
    case Family::borel_sp: return "borel-sp";
    case Family::borel_sp_nil: return "borel-sp-nil";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::rook, Family::borel, Family::borel_nil, Family::renner_sp,
                   Family::borel_sp, Family::borel_sp_nil})
    if (family_name(f) == name) return f;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

bool is_symplectic_family(Family f) {
  return f == Family::renner_sp || f == Family::borel_sp || f == Family::borel_sp_nil;
}

bool is_nil_family(Family f) { return f == Family::borel_nil || f == Family::borel_sp_nil; }

void FamilySpec::validate() const {
  if (n < 1) throw InvalidArgument("size must be positive");
  if (is_symplectic_family(family) && n % 2 != 0)
    throw InvalidArgument(std::string(family_name(family)) + " needs even n");
  if (rank && (*rank < 0 || *rank > n))
    throw InvalidArgument("rank " + std::to_string(*rank) + " outside 0.." + std::to_string(n));
  if (n > kMaxEnumerationSize)
    throw ResourceLimit("enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize) +
                        " (R_9 alone has over 17 million elements)");
}

bool in_family(const Rook& x, Family family) {
  switch (family) {
    case Family::rook: return true;
    case Family::borel: return x.is_upper_triangular();
    case Family::borel_nil: return x.is_strictly_upper_triangular();
    case Family::renner_sp: return is_symplectic_rook(x);
    case Family::borel_sp: return x.is_upper_triangular() && is_symplectic_rook(x);
    case Family::borel_sp_nil:
      return x.is_strictly_upper_triangular() && is_symplectic_rook(x);
  }
  return false;
}

std::vector<Rook> enum_family(const FamilySpec& spec, int workers) {
  spec.validate();
  const int n = spec.n;
  const Family family = spec.family;
  // Column j of an upper-triangular rook hits a row <= j (< j when strict).
  std::function<int(int)> bound;
  if (family == Family::borel || family == Family::borel_sp) bound = [](int j) { return j; };
  if (is_nil_family(family)) bound = [](int j) { return j - 1; };

  auto keep = [&](const Rook& x) {
    return (!spec.rank || x.rank() == *spec.rank) && in_family(x, family);
  };

  // Split on the value placed in column 1; each slice is itself lexicographic
  // and slices are concatenated in increasing first value.
  const int first_cap = bound ? std::min(n, bound(1)) : n;
  auto slice = [&](int first) {
    std::vector<Rook> out;
    for_each_rook(
        n, bound, [&](const Rook& x) {
          if (keep(x)) out.push_back(x);
        },
        first);
    return out;
  };

  std::vector<std::vector<Rook>> parts(static_cast<std::size_t>(first_cap) + 1);
  if (workers <= 1) {
    for (int v = 0; v <= first_cap; ++v) parts[static_cast<std::size_t>(v)] = slice(v);
  } else {
    // Cap in-flight tasks at the worker count.
    for (int base = 0; base <= first_cap; base += workers) {
      std::vector<std::future<std::vector<Rook>>> pending;
      for (int v = base; v <= first_cap && v < base + workers; ++v)
        pending.push_back(std::async(std::launch::async, slice, v));
      for (std::size_t i = 0; i < pending.size(); ++i)
        parts[static_cast<std::size_t>(base) + i] = pending[i].get();
    }
  }
  std::vector<Rook> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  return all;
}

std::vector<Rook> cross_section_lattice(int n) {
  require_even(n, "cross-section lattice");
  std::vector<Rook> chain;
  for (int k = 0; k <= n / 2; ++k) chain.push_back(leading_idempotent(n, k));
  chain.push_back(Rook::identity(n));
  return chain;
}

}  // namespace renner
