#include "renner/order.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <unordered_set>

#include "renner/error.hpp"
#include "renner/symplectic.hpp"

namespace renner {

namespace {

// Componentwise comparison of decreasing rearrangements of equal-length
// prefixes, for every prefix length up to `upto`.
bool prefix_dominated(std::span<const int> x, std::span<const int> y, std::size_t upto) {
  std::vector<int> px, py;
  px.reserve(upto);
  py.reserve(upto);
  for (std::size_t i = 0; i < upto; ++i) {
    // Insert keeping descending order.
    px.insert(std::upper_bound(px.begin(), px.end(), x[i], std::greater<>()), x[i]);
    py.insert(std::upper_bound(py.begin(), py.end(), y[i], std::greater<>()), y[i]);
    for (std::size_t t = 0; t <= i; ++t)
      if (px[t] > py[t]) return false;
  }
  return true;
}

}  // namespace

bool ehresmann_le(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw InvalidArgument("permutation size mismatch");
  return prefix_dominated(u.rook().one_line(), v.rook().one_line(),
                          static_cast<std::size_t>(u.size()));
}

bool bcr_le(const Rook& x, const Rook& y) {
  if (x.size() != y.size()) throw InvalidArgument("rook size mismatch");
  return prefix_dominated(x.one_line(), y.one_line(), static_cast<std::size_t>(x.size()));
}

bool bcr_le_set_form(const Rook& x, const Rook& y) {
  if (x.size() != y.size()) throw InvalidArgument("rook size mismatch");
  std::set<int> sx, sy;
  for (int i = 1; i < x.size(); ++i) {
    sx.insert(x.at(i));
    sy.insert(y.at(i));
    if (sx.size() != sy.size()) return false;
    // Both sets iterate increasingly, matching i_1 < ... < i_k.
    if (!std::equal(sx.begin(), sx.end(), sy.begin(), [](int a, int b) { return a <= b; }))
      return false;
  }
  return true;
}

// --- Renner monoid context --------------------------------------------------

RennerContext::RennerContext(GroupContext group)
    : group_(std::move(group)), lattice_(lattice_idempotents(group_)) {
  for (std::size_t pos = 0; pos < lattice_.size(); ++pos) {
    IdempotentData d{lattice_[pos], static_cast<int>(pos),
                     parabolic_data(lattice_[pos], group_), {}, {}};
    d.d = min_coset_reps(d.parabolic.commuting_generators, group_);
    d.d_star = min_coset_reps(d.parabolic.stabilizer_generators, group_);
    data_.push_back(std::move(d));
  }
}

bool RennerContext::contains(const Rook& x) const {
  if (x.size() != group_.n()) return false;
  if (group_.kind() == GroupKind::symmetric) return true;
  return is_symplectic_rook(x);
}

const RennerContext::IdempotentData& RennerContext::idempotent_of_rank(int rank) const {
  for (const auto& d : data_)
    if (d.e.rank() == rank) return d;
  throw InvalidArgument("no cross-section idempotent of rank " + std::to_string(rank));
}

const std::vector<Permutation>& RennerContext::witness_set(int e_pos, int f_pos) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = witness_cache_[{e_pos, f_pos}];
  if (!slot) {
    const auto& we = data_.at(static_cast<std::size_t>(e_pos)).parabolic.centralizer;
    const auto& wf = data_.at(static_cast<std::size_t>(f_pos)).parabolic.centralizer;
    std::set<Permutation> product;
    for (const auto& u : wf)
      for (const auto& v : we) product.insert(u * v);
    slot = std::make_shared<const std::vector<Permutation>>(product.begin(), product.end());
  }
  return *slot;
}

StandardForm standard_form(const Rook& x, const RennerContext& ctx) {
  if (!ctx.contains(x)) throw InvalidArgument(x.to_string() + " is not in the Renner monoid");
  const auto& data = ctx.idempotent_of_rank(x.rank());
  std::optional<StandardForm> found;
  for (const auto& a : data.d_star) {
    const Rook ae = a.rook() * data.e;
    for (const auto& b : data.d) {
      if (ae * b.rook().inverse() != x) continue;
      if (found)
        throw InternalError("standard form of " + x.to_string() + " is not unique");
      found = StandardForm{a, data.e, b};
    }
  }
  if (!found) throw InternalError("no standard form found for " + x.to_string());
  return *found;
}

bool bcr_le_ppr(const StandardForm& x, const StandardForm& y, const RennerContext& ctx) {
  const auto& ex = ctx.idempotent_of_rank(x.e.rank());
  const auto& fy = ctx.idempotent_of_rank(y.e.rank());
  if (ex.position > fy.position) return false;
  const Permutation b_inv = x.b.inverse();
  const Permutation d_inv = y.b.inverse();
  for (const auto& w : ctx.witness_set(ex.position, fy.position)) {
    if (ehresmann_le(x.a, y.a * w) && ehresmann_le(w.inverse() * d_inv, b_inv)) return true;
  }
  return false;
}

bool bcr_le_ppr(const Rook& x, const Rook& y, const RennerContext& ctx) {
  if (x.size() != y.size()) throw InvalidArgument("rook size mismatch");
  return bcr_le_ppr(standard_form(x, ctx), standard_form(y, ctx), ctx);
}

// --- Hasse diagrams ---------------------------------------------------------

namespace {

class BitRows {
 public:
  explicit BitRows(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= bit(c); }
  bool test(std::size_t r, std::size_t c) const { return bits_[r * words_ + c / 64] & bit(c); }
  bool rows_intersect(std::size_t r, const BitRows& other, std::size_t s) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (bits_[r * words_ + w] & other.bits_[s * other.words_ + w]) return true;
    return false;
  }
  std::size_t size() const { return n_; }

 private:
  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << (c % 64); }
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

HasseDiagram build_poset(std::vector<Rook> elements, Comparator comparator,
                         const RennerContext* ctx, int workers) {
  const std::size_t n = elements.size();
  {
    std::unordered_set<Rook, RookHash> distinct(elements.begin(), elements.end());
    if (distinct.size() != n) throw InvalidArgument("poset elements must be distinct");
  }
  for (const auto& x : elements)
    if (x.size() != elements.front().size())
      throw InvalidArgument("poset elements must have equal size");
  if (comparator == Comparator::ppr && !ctx)
    throw InvalidArgument("the standard-form comparator needs a Renner context");

  std::vector<StandardForm> forms;
  if (comparator == Comparator::ppr) {
    forms.reserve(n);
    for (const auto& x : elements) forms.push_back(standard_form(x, *ctx));
  }

  // le(i, j) for i != j, row by row.
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        le[i][j] = comparator == Comparator::one_line ? bcr_le(elements[i], elements[j])
                                                      : bcr_le_ppr(forms[i], forms[j], *ctx);
      }
  };
  if (workers <= 1 || n < 2) {
    fill_rows(0, n);
  } else {
    const std::size_t chunk = (n + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
    std::vector<std::future<void>> pending;
    for (std::size_t b = 0; b < n; b += chunk)
      pending.push_back(std::async(std::launch::async, fill_rows, b, std::min(n, b + chunk)));
    for (auto& f : pending) f.get();
  }

  BitRows above(n), below(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      if (le[j][i])
        throw InternalError("comparator is not antisymmetric on " + elements[i].to_string() +
                            " and " + elements[j].to_string());
      above.set(i, j);
      below.set(j, i);
    }

  HasseDiagram h;
  h.elements = std::move(elements);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (above.test(i, j) && !above.rows_intersect(i, below, j))
        h.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));

  // Longest chains: process in order of down-set size, which is a linear
  // extension.
  std::vector<std::size_t> down_size(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below.test(i, j)) ++down_size[i];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return down_size[static_cast<std::size_t>(a)] < down_size[static_cast<std::size_t>(b)];
  });
  std::vector<std::vector<int>> lower_covers(n);
  for (auto [lo, hi] : h.covers) lower_covers[static_cast<std::size_t>(hi)].push_back(lo);
  h.rank_of.assign(n, 0);
  for (int v : order)
    for (int lo : lower_covers[static_cast<std::size_t>(v)])
      h.rank_of[static_cast<std::size_t>(v)] =
          std::max(h.rank_of[static_cast<std::size_t>(v)], h.rank_of[static_cast<std::size_t>(lo)] + 1);

  std::vector<bool> has_lower(n, false), has_upper(n, false);
  for (auto [lo, hi] : h.covers) {
    has_upper[static_cast<std::size_t>(lo)] = true;
    has_lower[static_cast<std::size_t>(hi)] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_lower[i]) h.minimals.push_back(static_cast<int>(i));
    if (!has_upper[i]) h.maximals.push_back(static_cast<int>(i));
  }
  auto lex = [&](int a, int b) {
    return h.elements[static_cast<std::size_t>(a)] < h.elements[static_cast<std::size_t>(b)];
  };
  std::sort(h.minimals.begin(), h.minimals.end(), lex);
  std::sort(h.maximals.begin(), h.maximals.end(), lex);

  h.graded = std::all_of(h.covers.begin(), h.covers.end(), [&](const auto& c) {
    return h.rank_of[static_cast<std::size_t>(c.second)] ==
           h.rank_of[static_cast<std::size_t>(c.first)] + 1;
  });
  return h;
}

}  // namespace renner
