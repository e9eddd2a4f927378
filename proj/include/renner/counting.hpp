#pragma once

// Exact counts: Stirling and Bell numbers, admissible subsets, rook ranks,
// and the three-way reports (enumeration oracle / proof-derived sum /
// printed closed form) used to audit the counting formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "renner/rook.hpp"

namespace renner {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt power(std::int64_t base, std::int64_t exponent);

/// S(m, k) by S(m+1, k) = S(m, k-1) + k S(m, k); zero outside 0 <= k <= m
/// except S(0, 0) = 1.
BigInt stirling2(std::int64_t m, std::int64_t k);
BigInt bell(std::int64_t m);

/// C(l, k) 2^k with l = n/2.
BigInt admissible_count(int n, int k);

/// C(n, k) n! / (n-k)!.
BigInt rank_count_rook(int n, int k);

struct CountReport {
  std::string quantity;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  BigInt oracle;
  std::optional<BigInt> proof_form;
  std::optional<BigInt> paper_form;
  /// An absent form counts as agreeing.
  bool agree_oracle_proof = true;
  bool agree_oracle_paper = true;

  /// Recomputes both flags from the stored values.
  void settle();
  std::string parameter_string() const;
};

CountReport make_report(std::string quantity,
                        std::vector<std::pair<std::string, std::int64_t>> parameters,
                        BigInt oracle, std::optional<BigInt> proof_form,
                        std::optional<BigInt> paper_form);

/// The printed factored form C(n,b) S(n+1,n+1-a) S(n+1,n+1-c).
BigInt triangular_paper_form(int n, int a, int b, int c);

struct TriangularCensus {
  /// One report per (a,b,c) with a+b+c <= n: oracle is the exhaustive count
  /// of rooks with that triangular rank triple, paper_form the factored form.
  std::vector<CountReport> triples;
  /// One per k: oracle = census sum over a+b+c = k, proof_form =
  /// rank_count_rook(n, k), paper_form = sum of the factored forms.
  std::vector<CountReport> rank_sums;
};

TriangularCensus triangular_census(int n);

/// 2^{a+c} 3^b for the triangular ranks (a,b,c) of A.
BigInt preimage_weight(const Rook& a);

/// The printed closed form sum_{a+b+c=k} 2^{a+c} 3^b C(l,b) S(l+1,l+1-a) S(l+1,l+1-c).
BigInt borel_sp_paper_form(int l, int k);

/// Rank-k elements of the symplectic Borel monoid at n = 2l, three ways.
CountReport borel_sp_rank_count(int l, int k);

}  // namespace renner
