#include "renner/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <unordered_set>

#include "renner/error.hpp"
#include "renner/folding.hpp"
#include "renner/order.hpp"
#include "renner/partitions.hpp"
#include "renner/symplectic.hpp"
#include "renner/weyl.hpp"

namespace renner {

bool CheckOutcome::ok() const { return oracle_proof_mismatches() == 0 && failed_assertions() == 0; }

int CheckOutcome::oracle_proof_mismatches() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                                        [](const CountReport& r) { return !r.agree_oracle_proof; }));
}

int CheckOutcome::paper_deltas() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(),
                                        [](const CountReport& r) { return !r.agree_oracle_paper; }));
}

int CheckOutcome::failed_assertions() const {
  return static_cast<int>(std::count_if(assertions.begin(), assertions.end(),
                                        [](const Assertion& a) { return !a.ok; }));
}

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

// Sum of fn(i) over 0 <= i < count, split into contiguous slices.
std::int64_t parallel_sum(std::size_t count, int workers,
                          const std::function<std::int64_t(std::size_t)>& fn) {
  const std::size_t slices = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  std::vector<std::future<std::int64_t>> parts;
  for (std::size_t s = 0; s < slices; ++s) {
    const std::size_t lo = count * s / slices, hi = count * (s + 1) / slices;
    parts.push_back(std::async(slices == 1 ? std::launch::deferred : std::launch::async, [&, lo, hi] {
      std::int64_t total = 0;
      for (std::size_t i = lo; i < hi; ++i) total += fn(i);
      return total;
    }));
  }
  std::int64_t total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

std::vector<int> range_or(const std::optional<int>& given, int lo, int hi) {
  if (given) return {*given};
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void require_range(const std::optional<int>& v, int lo, int hi, const char* flag,
                   std::string_view check) {
  if (!v) return;
  if (*v < lo) throw InvalidArgument(std::string(flag) + " must be at least " + std::to_string(lo));
  if (*v > hi)
    throw ResourceLimit("verify " + std::string(check) + " accepts " + flag + " <= " +
                        std::to_string(hi));
}

std::vector<Rook> enum_all(int n, Family family, int workers, std::optional<int> rank = {}) {
  FamilySpec spec{n, family, rank};
  spec.validate();
  return enum_family(spec, workers);
}

std::string join_indices(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// ---------------------------------------------------------------------------

void check_admissible(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.l, 1, 6, "--l", "admissible");
  for (int l : range_or(o.l, 1, 6)) {
    const int n = 2 * l;
    BigInt oracle_total = 0, proof_total = 0;
    for (int k = 0; k <= n; ++k) {
      const BigInt oracle = enum_admissible(n, k).size();
      // r members from the lower half, then k - r upper members drawn from
      // the pairs {i, n+1-i} not already used.
      BigInt proof = 0;
      for (int r = 0; r <= k; ++r) proof += binomial(l, r) * binomial(l - r, k - r);
      out.reports.push_back(make_report("admissible k-subsets", {{"l", l}, {"k", k}}, oracle, proof,
                                        admissible_count(n, k)));
      oracle_total += oracle;
      proof_total += proof;
    }
    out.reports.push_back(make_report("admissible subsets (all k)", {{"l", l}}, oracle_total,
                                      proof_total, power(3, l)));
  }
}

void check_rank_counts(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 1, kMaxEnumerationSize, "--n", "rank-counts");
  for (int n : range_or(o.n, 1, 6)) {
    std::vector<std::int64_t> by_rank(static_cast<std::size_t>(n) + 1, 0);
    for_each_rook(n, nullptr, [&](const Rook& x) { ++by_rank[static_cast<std::size_t>(x.rank())]; });
    for (int k = 0; k <= n; ++k) {
      // Domain, range and a bijection between them.
      const BigInt proof = binomial(n, k) * binomial(n, k) * factorial(k);
      out.reports.push_back(make_report("rank-k rooks in R_n", {{"n", n}, {"k", k}},
                                        by_rank[static_cast<std::size_t>(k)], proof,
                                        rank_count_rook(n, k)));
    }
  }
}

void check_stirling_borel(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 1, 7, "--n", "stirling-borel");
  for (int n : range_or(o.n, 1, 6)) {
    const auto borel = enum_all(n, Family::borel, o.workers);
    const auto partitions = all_set_partitions(n + 1);
    std::vector<std::int64_t> by_blocks(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& p : partitions) ++by_blocks[static_cast<std::size_t>(p.block_count())];

    std::vector<std::int64_t> by_rank(static_cast<std::size_t>(n) + 1, 0);
    std::set<SetPartition> images;
    bool blocks_match = true;
    for (const auto& a : borel) {
      ++by_rank[static_cast<std::size_t>(a.rank())];
      const SetPartition p = rook_to_partition(embed_nilpotent(a));
      if (p.block_count() != n + 1 - a.rank()) blocks_match = false;
      images.insert(p);
    }
    for (int k = 1; k <= n + 1; ++k)
      out.reports.push_back(make_report(
          "B_n elements of rank n+1-k", {{"n", n}, {"k", k}},
          by_rank[static_cast<std::size_t>(n + 1 - k)], by_blocks[static_cast<std::size_t>(k)],
          stirling2(n + 1, k)));
    out.reports.push_back(make_report("distinct partitions hit by B_n", {{"n", n}},
                                      static_cast<std::int64_t>(borel.size()),
                                      static_cast<std::int64_t>(images.size()), bell(n + 1)));
    out.assertions.push_back({"n=" + std::to_string(n) +
                                  ": rank of A determines the block count of its partition",
                              blocks_match});

    const int m = n + 1;
    std::int64_t round_trips = 0;
    for (const auto& p : partitions)
      if (rook_to_partition(partition_to_rook(p)) == p &&
          parse_partition(partition_standard_string(p), m) == p)
        ++round_trips;
    out.reports.push_back(make_report("set partitions surviving both round trips", {{"m", m}},
                                      static_cast<std::int64_t>(partitions.size()), round_trips,
                                      bell(m)));
  }
}

// Counts ordered pairs (i, j) where the two comparators agree.
std::int64_t agreeing_pairs(std::size_t size, int workers,
                            const std::function<bool(std::size_t, std::size_t)>& lhs,
                            const std::function<bool(std::size_t, std::size_t)>& rhs) {
  return parallel_sum(size, workers, [&](std::size_t i) {
    std::int64_t agree = 0;
    for (std::size_t j = 0; j < size; ++j)
      if (lhs(i, j) == rhs(i, j)) ++agree;
    return agree;
  });
}

std::vector<StandardForm> standard_forms(const std::vector<Rook>& xs, const RennerContext& ctx) {
  std::vector<StandardForm> forms;
  forms.reserve(xs.size());
  for (const auto& x : xs) forms.push_back(standard_form(x, ctx));
  return forms;
}

void inrsn_symmetric(int n, int workers, CheckOutcome& out) {
  const auto xs = enum_all(n, Family::rook, workers);
  const RennerContext ctx(GroupContext::symmetric(n));
  const auto forms = standard_forms(xs, ctx);
  const auto pairs = static_cast<std::int64_t>(xs.size() * xs.size());
  const auto agree = agreeing_pairs(
      xs.size(), workers, [&](auto i, auto j) { return bcr_le(xs[i], xs[j]); },
      [&](auto i, auto j) { return bcr_le_ppr(forms[i], forms[j], ctx); });
  const auto literal = agreeing_pairs(
      xs.size(), workers, [&](auto i, auto j) { return bcr_le_set_form(xs[i], xs[j]); },
      [&](auto i, auto j) { return bcr_le_ppr(forms[i], forms[j], ctx); });
  out.reports.push_back(make_report("R_n pairs: one-line criterion agrees with standard form",
                                    {{"n", n}}, pairs, agree, literal));
}

void inrsn_symplectic(int l, int workers, CheckOutcome& out) {
  const int n = 2 * l;
  const auto xs = enum_all(n, Family::renner_sp, workers);
  const RennerContext g_ctx(GroupContext::symplectic(l));
  const auto g_forms = standard_forms(xs, g_ctx);
  const auto pairs = static_cast<std::int64_t>(xs.size() * xs.size());
  auto g_le = [&](std::size_t i, std::size_t j) { return bcr_le_ppr(g_forms[i], g_forms[j], g_ctx); };

  const auto one_line = agreeing_pairs(
      xs.size(), workers, [&](auto i, auto j) { return bcr_le(xs[i], xs[j]); }, g_le);
  const auto literal = agreeing_pairs(
      xs.size(), workers, [&](auto i, auto j) { return bcr_le_set_form(xs[i], xs[j]); }, g_le);
  out.reports.push_back(make_report("R_G pairs: one-line criterion agrees with R_G standard form",
                                    {{"n", n}}, pairs, one_line, literal));

  // Restriction of the R_n order; the S_n witness sets get large past n = 6.
  if (n <= 6) {
    const RennerContext n_ctx(GroupContext::symmetric(n));
    const auto n_forms = standard_forms(xs, n_ctx);
    const auto restricted = agreeing_pairs(
        xs.size(), workers, [&](auto i, auto j) { return bcr_le_ppr(n_forms[i], n_forms[j], n_ctx); },
        g_le);
    out.reports.push_back(make_report("R_G pairs: R_n standard form agrees with R_G standard form",
                                      {{"n", n}}, pairs, restricted, std::nullopt));
  }
}

void check_inrsn(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 1, 5, "--n", "inrsn");
  require_range(o.l, 1, 3, "--l", "inrsn");
  if (o.n || !o.l)
    for (int n : range_or(o.n, 1, 4)) inrsn_symmetric(n, o.workers, out);
  if (o.l || !o.n)
    for (int l : range_or(o.l, 1, 2)) inrsn_symplectic(l, o.workers, out);
}

void check_maxelements(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.l, 1, 4, "--l", "maxelements");
  for (int l : range_or(o.l, 2, 3)) {
    const int n = 2 * l;
    for (int k = 1; k <= l; ++k) {
      const auto slice = enum_all(n, Family::borel_sp, o.workers, k);
      const auto poset = build_poset(slice, Comparator::one_line, nullptr, o.workers);
      const auto admissible = enum_admissible(n, k);

      std::set<Rook> expected_max;
      for (const auto& s : admissible)
        expected_max.insert(diagonal_idempotent(n, {s.members().begin(), s.members().end()}));
      std::set<Rook> actual_max;
      for (int m : poset.maximals) actual_max.insert(poset.elements[static_cast<std::size_t>(m)]);

      std::vector<int> id_k(static_cast<std::size_t>(n), 0);
      for (int i = 1; i <= k; ++i) id_k[static_cast<std::size_t>(n - k + i - 1)] = i;
      const bool min_ok = poset.minimals.size() == 1 &&
                          poset.elements[static_cast<std::size_t>(poset.minimals[0])] == Rook(id_k);

      const Params p{{"l", l}, {"k", k}};
      out.reports.push_back(make_report("maximal elements of B_G(k)", p,
                                        static_cast<std::int64_t>(actual_max.size()),
                                        static_cast<std::int64_t>(admissible.size()),
                                        binomial(l, k) * power(2, k)));
      const std::string tag = "l=" + std::to_string(l) + " k=" + std::to_string(k) + ": ";
      out.assertions.push_back({tag + "B_G(k) is graded", poset.graded});
      out.assertions.push_back({tag + "unique minimum id(k)", min_ok});
      out.assertions.push_back(
          {tag + "maximals are the admissible diagonal idempotents", actual_max == expected_max});
    }
  }
}

void check_triangular(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 1, 7, "--n", "triangular");
  for (int n : range_or(o.n, 1, 5)) {
    auto census = triangular_census(n);
    for (auto& r : census.rank_sums) out.reports.push_back(std::move(r));
    for (auto& r : census.triples) out.reports.push_back(std::move(r));
  }
}

void check_formula(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.l, 1, 4, "--l", "formula");
  for (int l : range_or(o.l, 1, 4)) {
    BigInt ranked = 0;
    for (int k = 0; k <= l; ++k) {
      auto report = borel_sp_rank_count(l, k);
      ranked += report.oracle;
      out.reports.push_back(std::move(report));
    }
    // The identity is the only element of rank n; ranks l+1..n-1 are empty.
    const auto total = enum_all(2 * l, Family::borel_sp, o.workers).size();
    out.reports.push_back(make_report("B_G size against rank-sliced counts plus identity",
                                      {{"l", l}}, static_cast<std::int64_t>(total), ranked + 1,
                                      std::nullopt));
  }
}

void check_folding(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.l, 1, 4, "--l", "folding");
  for (int l : range_or(o.l, 2, 3)) {
    const int n = 2 * l;
    // Folding needs admissible domain and range, so only singular elements
    // take part; the identity is the one invertible member of B_G.
    std::set<Rook> borel_set;
    for (const auto& x : enum_all(n, Family::borel_sp, o.workers))
      if (!x.is_permutation()) borel_set.insert(x);
    const auto small = enum_all(l, Family::rook, o.workers);

    if (l == 2) {
      const Rook j2({2, 1});
      out.reports.push_back(make_report(
          "preimages of J_2", {{"l", 2}},
          static_cast<std::int64_t>(unfold_preimages(j2).size()),
          static_cast<std::int64_t>(unfold_constructive(j2).size()), BigInt(4)));
    }

    std::set<Rook> covered;
    std::int64_t total = 0;
    std::int64_t sets_equal = 0;
    for (const auto& a : small) {
      const auto filtered = unfold_preimages(a);
      const auto built = unfold_constructive(a);
      if (filtered == built) ++sets_equal;
      total += static_cast<std::int64_t>(filtered.size());
      covered.insert(filtered.begin(), filtered.end());
      Params p{{"l", l}};
      for (int j = 1; j <= l; ++j) p.emplace_back("a" + std::to_string(j), a.at(j));
      out.reports.push_back(make_report("preimages of A", std::move(p),
                                        static_cast<std::int64_t>(filtered.size()),
                                        static_cast<std::int64_t>(built.size()), preimage_count(a)));
    }
    const Params p{{"l", l}};
    out.reports.push_back(make_report("A in R_l whose filtered and constructed preimages coincide",
                                      p, static_cast<std::int64_t>(small.size()), sets_equal,
                                      std::nullopt));
    const auto singular = static_cast<std::int64_t>(borel_set.size());
    out.reports.push_back(make_report("singular B_G size against summed preimage counts", p,
                                      singular, total, std::nullopt));
    out.reports.push_back(make_report("singular B_G size against union of preimages", p,
                                      singular, static_cast<std::int64_t>(covered.size()),
                                      std::nullopt));
    out.assertions.push_back(
        {"l=" + std::to_string(l) + ": union of preimages is the singular part of B_G",
         covered == borel_set});

    std::vector<Rook> renner_g;
    for (const auto& x : enum_all(n, Family::renner_sp, o.workers))
      if (!x.is_permutation()) renner_g.push_back(x);
    const auto commuting = parallel_sum(renner_g.size(), o.workers, [&](std::size_t i) {
      const auto m = PartialMatrix::from_rook(renner_g[i]);
      const auto tb_lr = fold(fold(m, FoldDirection::top_to_bottom), FoldDirection::left_to_right);
      const auto lr_tb = fold(fold(m, FoldDirection::left_to_right), FoldDirection::top_to_bottom);
      const auto both = fold(m, FoldDirection::both);
      return std::int64_t{tb_lr == lr_tb && lr_tb == both &&
                          both.cells().size() == m.cells().size()};
    });
    out.reports.push_back(make_report("singular R_G elements where both fold orders agree and keep cells",
                                      {{"n", n}}, static_cast<std::int64_t>(renner_g.size()),
                                      commuting, std::nullopt));
  }
}

void add_nilpotent(const FamilySpec& spec, int workers, CheckOutcome& out) {
  auto report = nilpotent_analysis(spec, workers);
  const int n = spec.n;
  const std::string name(family_name(spec.family));
  const Params p{{"n", n}};
  out.assertions.push_back({name + " n=" + std::to_string(n) + ": closed under product",
                            report.closed_under_product});
  if (spec.family == Family::borel_nil) {
    // Strictly upper rooks of size n are the arc diagrams of partitions of n.
    out.reports.push_back(make_report("nilpotent upper-triangular rooks", p, report.count,
                                      static_cast<std::int64_t>(all_set_partitions(n).size()),
                                      bell(n)));
    out.reports.push_back(make_report("maximal elements of B_n^nil", p,
                                      static_cast<std::int64_t>(report.maximals.size()), 1,
                                      std::nullopt));
    std::vector<int> r0(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) r0[static_cast<std::size_t>(j)] = j;
    out.assertions.push_back({"borel-nil n=" + std::to_string(n) + ": maximum is r_0",
                              report.unique_max && report.maximals.front() == Rook(r0)});
    // Sum of the inversion lengths 1 + 2 + ... + (n-1) against C(n,2).
    out.reports.push_back(make_report("longest chain from zero to r_0", p, report.longest_chain,
                                      static_cast<std::int64_t>(n) * (n - 1) / 2,
                                      binomial(n, 2)));
  } else if (n == 4) {
    out.reports.push_back(make_report("maximal elements of B_G^nil", p,
                                      static_cast<std::int64_t>(report.maximals.size()),
                                      std::nullopt, BigInt(2)));
  }
  out.nilpotent.push_back(std::move(report));
}

void check_nilpotent(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 2, 7, "--n", "nilpotent");
  if (o.n) {
    add_nilpotent({*o.n, Family::borel_nil, std::nullopt}, o.workers, out);
    if (*o.n % 2 == 0) add_nilpotent({*o.n, Family::borel_sp_nil, std::nullopt}, o.workers, out);
    return;
  }
  for (int n = 2; n <= 5; ++n) add_nilpotent({n, Family::borel_nil, std::nullopt}, o.workers, out);
  for (int n : {2, 4, 6}) add_nilpotent({n, Family::borel_sp_nil, std::nullopt}, o.workers, out);
}

void parabolic_for(const GroupContext& ctx, int d, const std::string& label, CheckOutcome& out) {
  const int rank = static_cast<int>(ctx.generators().size());
  const auto data = parabolic_data(leading_idempotent(ctx.n(), d), ctx);
  std::vector<int> others, upper;
  for (int j = 1; j <= rank; ++j) {
    if (j != d) others.push_back(j);
    if (j > d) upper.push_back(j);
  }
  const auto expected_c = ctx.parabolic_subgroup(others);
  const auto expected_s = ctx.parabolic_subgroup(upper);
  const Params p{{"n", ctx.n()}, {"d", d}};
  out.reports.push_back(make_report("|W(e_d)| in " + label, p,
                                    static_cast<std::int64_t>(data.centralizer.size()),
                                    static_cast<std::int64_t>(expected_c.size()), std::nullopt));
  out.reports.push_back(make_report("|W_*(e_d)| in " + label, p,
                                    static_cast<std::int64_t>(data.stabilizer.size()),
                                    static_cast<std::int64_t>(expected_s.size()), std::nullopt));
  const std::string tag = label + " n=" + std::to_string(ctx.n()) + " d=" + std::to_string(d) + ": ";
  out.assertions.push_back({tag + "W(e_d) = <s_j : j in " + join_indices(others) + ">",
                            data.centralizer == expected_c});
  out.assertions.push_back({tag + "W_*(e_d) = <s_j : j in " + join_indices(upper) + ">",
                            data.stabilizer == expected_s});
  out.assertions.push_back({tag + "lambda(e_d) = " + join_indices(others),
                            data.commuting_generators == others});
  out.assertions.push_back({tag + "lambda_*(e_d) = " + join_indices(upper),
                            data.stabilizer_generators == upper});
}

void check_parabolic(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.l, 1, 4, "--l", "parabolic");
  for (int l : range_or(o.l, 2, 3)) {
    const auto wg = GroupContext::symplectic(l);
    for (int d = 1; d <= l; ++d) parabolic_for(wg, d, "W_G", out);
    const auto sn = GroupContext::symmetric(2 * l);
    for (int d = 1; d < 2 * l; ++d) parabolic_for(sn, d, "S_n", out);
  }
}

void standard_form_for(const std::vector<Rook>& xs, const RennerContext& ctx,
                       const std::string& label, std::optional<BigInt> upper_paper,
                       CheckOutcome& out) {
  std::int64_t solved = 0, upper = 0, a_le_b = 0;
  bool equivalence = true;
  for (const auto& x : xs) {
    const StandardForm sf = standard_form(x, ctx);
    if (sf.a.rook() * sf.e * sf.b.inverse().rook() == x) ++solved;
    const bool u = x.is_upper_triangular();
    const bool le = ehresmann_le(sf.a, sf.b);
    upper += u;
    a_le_b += le;
    if (u != le) equivalence = false;
  }
  const Params p{{"n", ctx.group().n()}};
  out.reports.push_back(make_report("elements of " + label + " with a unique standard form", p,
                                    static_cast<std::int64_t>(xs.size()), solved, std::nullopt));
  out.reports.push_back(make_report("upper-triangular elements of " + label + " against a <= b",
                                    p, upper, a_le_b, std::move(upper_paper)));
  out.assertions.push_back({label + " n=" + std::to_string(ctx.group().n()) +
                                ": upper triangular iff a <= b",
                            equivalence});
}

void check_standard_form(const VerifyOptions& o, CheckOutcome& out) {
  require_range(o.n, 1, 5, "--n", "standard-form");
  require_range(o.l, 1, 3, "--l", "standard-form");
  if (o.n || !o.l)
    for (int n : range_or(o.n, 1, 4))
      standard_form_for(enum_all(n, Family::rook, o.workers),
                        RennerContext(GroupContext::symmetric(n)), "R_n", bell(n + 1), out);
  if (o.l || !o.n)
    for (int l : range_or(o.l, 1, 2))
      standard_form_for(enum_all(2 * l, Family::renner_sp, o.workers),
                        RennerContext(GroupContext::symplectic(l)), "R_G", std::nullopt, out);
}

using CheckFn = void (*)(const VerifyOptions&, CheckOutcome&);

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> checks{
      {"admissible", check_admissible},   {"rank-counts", check_rank_counts},
      {"stirling-borel", check_stirling_borel}, {"inrsn", check_inrsn},
      {"maxelements", check_maxelements}, {"triangular", check_triangular},
      {"formula", check_formula},         {"folding", check_folding},
      {"nilpotent", check_nilpotent},     {"parabolic", check_parabolic},
      {"standard-form", check_standard_form},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{
      "admissible", "rank-counts", "stirling-borel", "inrsn",     "maxelements",  "triangular",
      "formula",    "folding",     "nilpotent",      "parabolic", "standard-form"};
  return names;
}

CheckOutcome run_check(std::string_view name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown check '" + std::string(name) + "'");
  if (options.workers < 1) throw InvalidArgument("workers must be positive");
  CheckOutcome out;
  out.check = std::string(name);
  it->second(options, out);
  return out;
}

}  // namespace renner
