#include "renner/counting.hpp"

#include <map>
#include <tuple>

#include "renner/error.hpp"
#include "renner/symplectic.hpp"

namespace renner {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  k = std::min(k, n - k);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt power(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  BigInt r = 1;
  for (std::int64_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt stirling2(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || m < k) return 0;
  if (m == 0) return 1;  // here k = 0
  if (k == 0) return 0;
  // Row-by-row recurrence; row[j] holds S(i, j).
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = std::min(k, i + 1); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + BigInt(j) * row[static_cast<std::size_t>(j)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt bell(std::int64_t m) {
  if (m < 0) throw InvalidArgument("Bell number of a negative index");
  BigInt total = 0;
  for (std::int64_t k = 0; k <= m; ++k) total += stirling2(m, k);
  return total;
}

BigInt admissible_count(int n, int k) {
  if (n <= 0 || n % 2 != 0) throw InvalidArgument("admissible count needs even n");
  if (k < 0) throw InvalidArgument("negative subset size");
  return binomial(n / 2, k) * power(2, k);
}

BigInt rank_count_rook(int n, int k) {
  if (n < 1) throw InvalidArgument("size must be positive");
  if (k < 0 || k > n) throw InvalidArgument("rank out of range");
  return binomial(n, k) * factorial(n) / factorial(n - k);
}

void CountReport::settle() {
  agree_oracle_proof = !proof_form || *proof_form == oracle;
  agree_oracle_paper = !paper_form || *paper_form == oracle;
}

std::string CountReport::parameter_string() const {
  std::string s;
  for (const auto& [name, value] : parameters) {
    if (!s.empty()) s += ' ';
    s += name + "=" + std::to_string(value);
  }
  return s;
}

CountReport make_report(std::string quantity,
                        std::vector<std::pair<std::string, std::int64_t>> parameters,
                        BigInt oracle, std::optional<BigInt> proof_form,
                        std::optional<BigInt> paper_form) {
  CountReport r{std::move(quantity), std::move(parameters), std::move(oracle),
                std::move(proof_form), std::move(paper_form)};
  r.settle();
  return r;
}

BigInt triangular_paper_form(int n, int a, int b, int c) {
  return binomial(n, b) * stirling2(n + 1, n + 1 - a) * stirling2(n + 1, n + 1 - c);
}

TriangularCensus triangular_census(int n) {
  if (n < 1) throw InvalidArgument("size must be positive");
  if (n > kMaxEnumerationSize)
    throw ResourceLimit("triangular census is limited to n <= " +
                        std::to_string(kMaxEnumerationSize));
  std::map<std::tuple<int, int, int>, std::int64_t> counts;
  for_each_rook(n, nullptr, [&](const Rook& x) {
    const auto parts = triangular_decompose(x);
    ++counts[{parts.lower_rank(), parts.diag_rank(), parts.upper_rank()}];
  });

  TriangularCensus census;
  std::vector<BigInt> oracle_sum(static_cast<std::size_t>(n) + 1, 0);
  std::vector<BigInt> paper_sum(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c) {
        auto it = counts.find({a, b, c});
        const BigInt oracle = it == counts.end() ? 0 : it->second;
        const BigInt paper = triangular_paper_form(n, a, b, c);
        census.triples.push_back(make_report("rooks with triangular ranks (a,b,c)",
                                             {{"n", n}, {"a", a}, {"b", b}, {"c", c}}, oracle,
                                             std::nullopt, paper));
        oracle_sum[static_cast<std::size_t>(a + b + c)] += oracle;
        paper_sum[static_cast<std::size_t>(a + b + c)] += paper;
      }
  for (int k = 0; k <= n; ++k)
    census.rank_sums.push_back(make_report("rank-k rooks summed over a+b+c=k",
                                           {{"n", n}, {"k", k}},
                                           oracle_sum[static_cast<std::size_t>(k)],
                                           rank_count_rook(n, k),
                                           paper_sum[static_cast<std::size_t>(k)]));
  return census;
}

BigInt preimage_weight(const Rook& a) {
  const auto parts = triangular_decompose(a);
  return power(2, parts.lower_rank() + parts.upper_rank()) * power(3, parts.diag_rank());
}

BigInt borel_sp_paper_form(int l, int k) {
  BigInt total = 0;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b) {
      const int c = k - a - b;
      total += power(2, a + c) * power(3, b) * binomial(l, b) * stirling2(l + 1, l + 1 - a) *
               stirling2(l + 1, l + 1 - c);
    }
  return total;
}

CountReport borel_sp_rank_count(int l, int k) {
  if (l < 1 || l > kMaxEnumerationSize / 2)
    throw ResourceLimit("symplectic counts are verified for 1 <= l <= " +
                        std::to_string(kMaxEnumerationSize / 2));
  if (k < 0 || k > l) throw InvalidArgument("rank must lie in 0..l");
  const BigInt oracle = enum_family({2 * l, Family::borel_sp, k}).size();
  BigInt proof = 0;
  for_each_rook(l, nullptr, [&](const Rook& a) {
    if (a.rank() == k) proof += preimage_weight(a);
  });
  return make_report("rank-k elements of the symplectic Borel monoid", {{"l", l}, {"k", k}},
                     oracle, proof, borel_sp_paper_form(l, k));
}

}  // namespace renner
