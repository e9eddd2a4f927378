#include "renner/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace renner {

nlohmann::json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

namespace {

nlohmann::json optional_json(const std::optional<BigInt>& v) {
  return v ? bigint_json(*v) : nlohmann::json(nullptr);
}

std::string optional_text(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

std::string flag_text(const std::optional<BigInt>& form, bool agree) {
  if (!form) return "-";
  return agree ? "yes" : "NO";
}

std::string rook_list(const std::vector<Rook>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i].to_string();
  return s;
}

// Left-aligned columns separated by two spaces; trailing blanks trimmed.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace

nlohmann::json report_json(const CountReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  return {{"quantity", r.quantity},
          {"parameters", params},
          {"oracle", bigint_json(r.oracle)},
          {"proof_form", optional_json(r.proof_form)},
          {"paper_form", optional_json(r.paper_form)},
          {"agree_oracle_proof", r.agree_oracle_proof},
          {"agree_oracle_paper", r.agree_oracle_paper}};
}

nlohmann::json nilpotent_json(const NilpotentReport& r) {
  nlohmann::json maximals = nlohmann::json::array();
  for (const auto& m : r.maximals) maximals.push_back(m.to_string());
  return {{"family", std::string(family_name(r.family.family))},
          {"n", r.family.n},
          {"count", r.count},
          {"maximals", maximals},
          {"unique_max", r.unique_max},
          {"closed_under_product", r.closed_under_product},
          {"longest_chain", r.longest_chain},
          {"chain_to_maximal", r.chain_to_maximal}};
}

nlohmann::json outcome_json(const CheckOutcome& outcome) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : outcome.reports) reports.push_back(report_json(r));
  nlohmann::json nil = nlohmann::json::array();
  for (const auto& r : outcome.nilpotent) nil.push_back(nilpotent_json(r));
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : outcome.assertions) assertions.push_back({{"name", a.name}, {"ok", a.ok}});
  return {{"check", outcome.check},
          {"reports", reports},
          {"nilpotent", nil},
          {"assertions", assertions},
          {"summary",
           {{"reports", outcome.reports.size()},
            {"oracle_proof_mismatches", outcome.oracle_proof_mismatches()},
            {"paper_deltas", outcome.paper_deltas()},
            {"failed_assertions", outcome.failed_assertions()},
            {"ok", outcome.ok()}}}};
}

std::string render_reports(const std::vector<CountReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"quantity", "parameters", "oracle", "proof_form",
                                              "paper_form", "oracle=proof", "oracle=paper",
                                              "paper-oracle"}};
  for (const auto& r : reports)
    rows.push_back({r.quantity, r.parameter_string(), r.oracle.str(), optional_text(r.proof_form),
                    optional_text(r.paper_form), flag_text(r.proof_form, r.agree_oracle_proof),
                    flag_text(r.paper_form, r.agree_oracle_paper),
                    r.paper_form ? BigInt(*r.paper_form - r.oracle).str() : "-"});
  return render_table(rows);
}

std::string render_nilpotent(const std::vector<NilpotentReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"family", "n", "count", "unique_max",
                                              "closed_under_product", "longest_chain",
                                              "maximals"}};
  for (const auto& r : reports)
    rows.push_back({std::string(family_name(r.family.family)), std::to_string(r.family.n),
                    std::to_string(r.count), r.unique_max ? "true" : "false",
                    r.closed_under_product ? "true" : "false", std::to_string(r.longest_chain),
                    rook_list(r.maximals)});
  return render_table(rows);
}

std::string render_outcome(const CheckOutcome& outcome) {
  std::string out = "check " + outcome.check + "\n";
  if (!outcome.reports.empty()) out += "\n" + render_reports(outcome.reports);
  if (!outcome.nilpotent.empty()) out += "\n" + render_nilpotent(outcome.nilpotent);
  if (!outcome.assertions.empty()) {
    out += '\n';
    for (const auto& a : outcome.assertions) out += (a.ok ? "ok    " : "FAIL  ") + a.name + '\n';
  }
  const int passed =
      static_cast<int>(outcome.assertions.size()) - outcome.failed_assertions();
  out += "\nsummary: " + std::to_string(outcome.reports.size()) + " reports, " +
         std::to_string(outcome.oracle_proof_mismatches()) + " oracle/proof mismatches, " +
         std::to_string(outcome.paper_deltas()) + " paper-form deltas, " +
         std::to_string(passed) + "/" + std::to_string(outcome.assertions.size()) +
         " assertions hold\n";
  return out;
}

std::string dot_export(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (const auto& x : h.elements) os << "  \"" << x.to_string() << "\";\n";
  for (const auto& [lo, hi] : h.covers)
    os << "  \"" << h.elements[static_cast<std::size_t>(lo)].to_string() << "\" -> \""
       << h.elements[static_cast<std::size_t>(hi)].to_string() << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json hasse_json(const HasseDiagram& h) {
  auto label = [&](int i) { return h.elements[static_cast<std::size_t>(i)].to_string(); };
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < h.elements.size(); ++i)
    nodes.push_back({{"rook", h.elements[i].to_string()}, {"rank", h.rank_of[i]}});
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : h.covers) covers.push_back({label(lo), label(hi)});
  nlohmann::json minimals = nlohmann::json::array(), maximals = nlohmann::json::array();
  for (int m : h.minimals) minimals.push_back(label(m));
  for (int m : h.maximals) maximals.push_back(label(m));
  return {{"nodes", nodes},
          {"covers", covers},
          {"minimals", minimals},
          {"maximals", maximals},
          {"graded", h.graded}};
}

}  // namespace renner
