#pragma once

// Named verification checks.  Each one recomputes a family of counts by
// brute-force enumeration and compares them with derived and printed forms.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "renner/counting.hpp"
#include "renner/nilpotent.hpp"

namespace renner {

struct Assertion {
  std::string name;
  bool ok = false;
};

struct CheckOutcome {
  std::string check;
  std::vector<CountReport> reports;
  std::vector<NilpotentReport> nilpotent;
  std::vector<Assertion> assertions;

  /// No oracle/proof mismatch and no failed assertion.
  bool ok() const;
  int oracle_proof_mismatches() const;
  int paper_deltas() const;
  int failed_assertions() const;
};

struct VerifyOptions {
  std::optional<int> l;
  std::optional<int> n;
  int workers = 1;
};

/// admissible, rank-counts, stirling-borel, inrsn, maxelements, triangular,
/// formula, folding, nilpotent, parabolic, standard-form.
const std::vector<std::string>& verify_check_names();

/// Throws InvalidArgument for an unknown name or out-of-range options.
CheckOutcome run_check(std::string_view name, const VerifyOptions& options);

}  // namespace renner
