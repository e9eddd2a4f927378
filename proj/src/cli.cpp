#include "renner/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "renner/counting.hpp"
#include "renner/error.hpp"
#include "renner/folding.hpp"
#include "renner/order.hpp"
#include "renner/partitions.hpp"
#include "renner/report.hpp"
#include "renner/symplectic.hpp"
#include "renner/verify.hpp"

namespace renner {
namespace {

// Witness sets W(f)W(e) over S_n reach all n! elements; past n = 6 the
// standard-form comparator stops being desk-sized.
constexpr int kMaxPprSize = 6;

struct Options {
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> rank;
  std::string family;
  std::string x;
  std::string y;
  std::string check;
  std::string format;
  std::string comparator = "one-line";
  std::string out_path;
  int workers = 1;
};

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) != allowed.end()) return;
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw InvalidArgument("--format " + o.format + " is not available here (use one of: " + list +
                        ")");
}

FamilySpec family_spec(const Options& o) {
  if (!o.n) throw InvalidArgument("--n is required");
  FamilySpec spec{*o.n, parse_family(o.family), o.rank};
  spec.validate();
  return spec;
}

nlohmann::json family_json(const FamilySpec& spec) {
  return {{"family", std::string(family_name(spec.family))},
          {"n", spec.n},
          {"rank", spec.rank ? nlohmann::json(*spec.rank) : nlohmann::json(nullptr)}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Comparator parse_comparator(const std::string& name) {
  if (name == "one-line") return Comparator::one_line;
  if (name == "ppr") return Comparator::ppr;
  throw InvalidArgument("unknown comparator '" + name + "' (use one-line or ppr)");
}

GroupContext ppr_group(int n, bool symplectic) {
  if (symplectic) return GroupContext::symplectic(n / 2);
  if (n > kMaxPprSize)
    throw ResourceLimit("the ppr comparator over R_n is limited to n <= " +
                        std::to_string(kMaxPprSize));
  return GroupContext::symmetric(n);
}

// ---------------------------------------------------------------------------

int cmd_enum(const Options& o, std::ostream& out) {
  require_format(o, {"oneline", "count", "json"});
  const auto spec = family_spec(o);
  const auto xs = enum_family(spec, o.workers);
  if (o.format == "count") {
    out << xs.size() << '\n';
  } else if (o.format == "json") {
    auto j = family_json(spec);
    j["count"] = xs.size();
    j["elements"] = nlohmann::json::array();
    for (const auto& x : xs) j["elements"].push_back(x.to_string());
    out << dump(j);
  } else {
    for (const auto& x : xs) out << x.to_string() << '\n';
  }
  return kExitOk;
}

std::int64_t partitions_with_blocks(int m, int blocks) {
  if (m < 1) return blocks == 0 ? 1 : 0;
  const auto all = all_set_partitions(m);
  return std::count_if(all.begin(), all.end(),
                       [&](const SetPartition& p) { return p.block_count() == blocks; });
}

CountReport family_rank_report(const FamilySpec& spec, int k, std::int64_t oracle) {
  const int n = spec.n, l = n / 2;
  std::optional<BigInt> proof, paper;
  switch (spec.family) {
    case Family::rook:
      proof = binomial(n, k) * binomial(n, k) * factorial(k);
      paper = rank_count_rook(n, k);
      break;
    case Family::borel:
      proof = partitions_with_blocks(n + 1, n + 1 - k);
      paper = stirling2(n + 1, n + 1 - k);
      break;
    case Family::borel_nil:
      proof = partitions_with_blocks(n, n - k);
      paper = stirling2(n, n - k);
      break;
    case Family::renner_sp:
      if (k == n)
        proof = power(2, l) * factorial(l);
      else
        proof = admissible_count(n, k) * admissible_count(n, k) * factorial(k);
      break;
    case Family::borel_sp:
      if (k <= l) {
        auto r = borel_sp_rank_count(l, k);
        proof = r.proof_form;
        paper = r.paper_form;
      } else {
        proof = k == n ? 1 : 0;
      }
      break;
    case Family::borel_sp_nil:
      break;
  }
  return make_report("rank-k elements of " + std::string(family_name(spec.family)),
                     {{"n", n}, {"k", k}}, oracle, proof, paper);
}

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o, {"report", "count", "json"});
  const auto spec = family_spec(o);
  const auto xs = enum_family(spec, o.workers);
  if (o.format == "count") {
    out << xs.size() << '\n';
    return kExitOk;
  }
  std::vector<std::int64_t> by_rank(static_cast<std::size_t>(spec.n) + 1, 0);
  for (const auto& x : xs) ++by_rank[static_cast<std::size_t>(x.rank())];
  std::vector<CountReport> reports;
  for (int k = 0; k <= spec.n; ++k)
    if (!spec.rank || *spec.rank == k)
      reports.push_back(family_rank_report(spec, k, by_rank[static_cast<std::size_t>(k)]));
  if (o.format == "json") {
    auto j = family_json(spec);
    j["total"] = xs.size();
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r));
    out << dump(j);
  } else {
    out << render_reports(reports) << "total " << xs.size() << '\n';
  }
  return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  require_format(o, {"oneline", "json"});
  const Rook x = o.n ? parse_one_line(o.x, *o.n) : parse_one_line(o.x);
  const Rook y = parse_one_line(o.y, x.size());
  const int n = x.size();
  const auto comparator = parse_comparator(o.comparator);

  const bool one_line = bcr_le(x, y);
  std::optional<bool> ppr, ppr_sp;
  if (comparator == Comparator::ppr || (o.format == "json" && n <= kMaxPprSize))
    ppr = bcr_le_ppr(x, y, RennerContext(ppr_group(n, false)));
  if (o.format == "json" && n % 2 == 0 && n <= kMaxEnumerationSize && is_symplectic_rook(x) &&
      is_symplectic_rook(y))
    ppr_sp = bcr_le_ppr(x, y, RennerContext(ppr_group(n, true)));

  if (o.format == "json") {
    auto opt = [](const std::optional<bool>& b) {
      return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
    };
    out << dump({{"x", x.to_string()},
                 {"y", y.to_string()},
                 {"one_line", one_line},
                 {"ppr_rn", opt(ppr)},
                 {"ppr_rg", opt(ppr_sp)}});
  } else {
    out << ((ppr ? *ppr : one_line) ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  require_format(o, {"dot", "json", "count"});
  const auto spec = family_spec(o);
  const auto comparator = parse_comparator(o.comparator);
  std::optional<RennerContext> ctx;
  if (comparator == Comparator::ppr) ctx.emplace(ppr_group(spec.n, is_symplectic_family(spec.family)));
  const auto h = build_poset(enum_family(spec, o.workers), comparator, ctx ? &*ctx : nullptr,
                             o.workers);
  if (o.format == "count") {
    out << "nodes " << h.size() << "\ncovers " << h.covers.size() << '\n';
  } else if (o.format == "json") {
    auto j = family_json(spec);
    j["comparator"] = o.comparator;
    j.update(hasse_json(h));
    out << dump(j);
  } else {
    out << dot_export(h);
  }
  return kExitOk;
}

int cmd_fold(const Options& o, std::ostream& out) {
  require_format(o, {"oneline", "json"});
  const Rook x = o.n ? parse_one_line(o.x, *o.n) : parse_one_line(o.x);
  const auto m = PartialMatrix::from_rook(x);
  const auto tb = fold(m, FoldDirection::top_to_bottom);
  const auto lr = fold(m, FoldDirection::left_to_right);
  const Rook both = fold(x);
  if (o.format == "json") {
    out << dump({{"x", x.to_string()},
                 {"top_to_bottom", tb.to_string()},
                 {"left_to_right", lr.to_string()},
                 {"both", both.to_string()}});
  } else {
    out << "top-to-bottom: " << tb.to_string() << "\nleft-to-right: " << lr.to_string()
        << "\nboth: " << both.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_unfold(const Options& o, std::ostream& out) {
  require_format(o, {"oneline", "count", "json"});
  const Rook a = o.l ? parse_one_line(o.x, *o.l) : parse_one_line(o.x);
  if (2 * a.size() > kMaxEnumerationSize)
    throw ResourceLimit("unfolding is limited to l <= " + std::to_string(kMaxEnumerationSize / 2));
  const auto pre = unfold_preimages(a);
  if (o.format == "count") {
    out << pre.size() << '\n';
  } else if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& x : pre) list.push_back(x.to_string());
    out << dump({{"a", a.to_string()},
                 {"count", pre.size()},
                 {"preimage_count", bigint_json(preimage_count(a))},
                 {"preimages", list}});
  } else {
    for (const auto& x : pre) out << x.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_partition(const Options& o, std::ostream& out) {
  require_format(o, {"oneline", "json"});
  const auto first = o.x.find_first_not_of(" \t");
  const bool from_rook = first != std::string::npos && o.x[first] == '(';
  std::optional<Rook> rook;
  std::optional<SetPartition> part;
  if (from_rook) {
    rook = o.n ? parse_one_line(o.x, *o.n) : parse_one_line(o.x);
    part = rook_to_partition(*rook);
  } else {
    part = parse_partition(o.x, o.n.value_or(0));
    rook = partition_to_rook(*part);
  }
  if (o.format == "json") {
    out << dump({{"rook", rook->to_string()},
                 {"partition", partition_standard_string(*part)},
                 {"blocks", part->block_count()}});
  } else {
    out << (from_rook ? partition_standard_string(*part) : rook->to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"report", "json"});
  std::vector<std::string> names;
  if (o.check == "all")
    names = verify_check_names();
  else
    names.push_back(o.check);
  const VerifyOptions vo{o.l, o.n, o.workers};
  std::vector<CheckOutcome> outcomes;
  bool ok = true;
  for (const auto& name : names) {
    outcomes.push_back(run_check(name, vo));
    ok = ok && outcomes.back().ok();
  }
  if (o.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : outcomes) checks.push_back(outcome_json(c));
    out << dump({{"checks", checks}, {"ok", ok}});
  } else {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
      out << (i ? "\n" : "") << render_outcome(outcomes[i]);
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct Command {
  const char* name;
  const char* help;
  const char* default_format;
  const char* formats;  // help text only; each command checks its own
  int (*fn)(const Options&, std::ostream&);
};

constexpr Command kCommands[] = {
    {"enum", "List the members of a rook family", "oneline", "oneline, count or json", cmd_enum},
    {"count", "Count a family by rank and compare with closed forms", "report", "report, count or json", cmd_count},
    {"order", "Decide x <= y in the Bruhat-Chevalley-Renner order", "oneline", "oneline or json", cmd_order},
    {"hasse", "Hasse diagram of a family", "dot", "dot, json or count", cmd_hasse},
    {"fold", "Fold a symplectic rook", "oneline", "oneline or json", cmd_fold},
    {"unfold", "Symplectic Borel preimages of a rook under folding", "oneline", "oneline, count or json", cmd_unfold},
    {"partition", "Convert between strictly upper rooks and set partitions", "oneline",
     "oneline or json", cmd_partition},
    {"verify", "Run a verification check", "report", "report or json", cmd_verify},
};

void add_common(CLI::App* sub, Options& o, const Command& c) {
  const std::string name = c.name;
  o.format = c.default_format;
  sub->add_option("--format", o.format,
                  std::string("Output format: ") + c.formats + " (default " + c.default_format + ")");
  sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  if (name == "enum" || name == "count" || name == "hasse" || name == "verify")
    sub->add_option("--workers", o.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);

  if (name == "enum" || name == "count" || name == "hasse") {
    sub->add_option("--n", o.n, "Matrix size")->required();
    sub->add_option("--family", o.family,
                    "rook, borel, borel-nil, renner-sp, borel-sp or borel-sp-nil")
        ->required();
    sub->add_option("--rank", o.rank, "Restrict to one rank");
  }
  if (name == "hasse" || name == "order")
    sub->add_option("--comparator", o.comparator, "one-line (default) or ppr");
  if (name == "order") {
    sub->add_option("--n", o.n, "Matrix size (checked against x and y)");
    sub->add_option("--x", o.x, "Rook in one-line notation")->required();
    sub->add_option("--y", o.y, "Rook in one-line notation")->required();
  }
  if (name == "fold" || name == "partition") {
    sub->add_option("--n", o.n, "Size of x");
    sub->add_option("--x", o.x, name == "fold" ? "Symplectic rook in one-line notation"
                                               : "Rook \"(x1,...,xn)\" or partition \"18|2569|37|4\"")
        ->required();
  }
  if (name == "unfold") {
    sub->add_option("--l", o.l, "Size of x");
    sub->add_option("--x", o.x, "Rook of size l in one-line notation")->required();
  }
  if (name == "verify") {
    std::string checks = "all";
    for (const auto& n : verify_check_names()) checks += ", " + n;
    sub->add_option("--check", o.check, "One of: " + checks)->required();
    sub->add_option("--l", o.l, "Restrict to one symplectic rank");
    sub->add_option("--n", o.n, "Restrict to one matrix size");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rook monoids, symplectic Renner monoids and their Bruhat-Chevalley-Renner order",
               "renner"};
  app.require_subcommand(1, 1);
  std::map<std::string, Options> options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, options[c.name], c);
    subs[c.name] = sub;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& c : kCommands) {
    if (!subs[c.name]->parsed()) continue;
    const Options& o = options[c.name];
    std::ostringstream buffer;
    int status;
    try {
      status = c.fn(o, buffer);
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const ResourceLimit& e) {
      err << "error: resource bound exceeded: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitMismatch;
    }
    if (o.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!(file << buffer.str())) {
        err << "error: cannot write " << o.out_path << '\n';
        return kExitUsage;
      }
    }
    return status;
  }
  return kExitUsage;
}

}  // namespace renner
