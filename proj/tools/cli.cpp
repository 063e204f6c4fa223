#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcg/criteria.hpp"
#include "pcg/group_spec.hpp"
#include "pcg/power_graph.hpp"

namespace pcg::cli {

namespace {

using json = nlohmann::ordered_json;
using criteria::Verdict;
using criteria::VerdictTag;
using numtheory::Nat;

constexpr const char* kSchema = "pcg-records/1";

struct Conflict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PCG_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("PCG_BUDGET", std::string("not a positive integer: ") + env);
  }
  return numtheory::kDefaultBudget;
}

json header(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

json number_json(const criteria::NumberEvidence& ne) {
  return json{{"label", ne.label}, {"value", numtheory::to_string(ne.value)}, {"class", ne.cls.describe()}};
}

// Witness fields, rendered with the group's own element notation.
json evidence_json(const Verdict& v, const groups::FiniteGroup* g) {
  auto name = [&](groups::ElementId x) { return g ? g->render(x) : std::to_string(x); };
  return std::visit(
      [&](const auto& ev) -> json {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, criteria::ElementP4>) {
          json path = json::array();
          for (auto x : ev.elements) path.push_back(name(x));
          return json{{"kind", "p4"}, {"path", path}};
        } else if constexpr (std::is_same_v<T, criteria::PairWitness>) {
          return json{{"kind", "pair"}, {"g", name(ev.g)}, {"h", name(ev.h)}, {"p", ev.p}, {"q", ev.q}, {"r", ev.r}};
        } else if constexpr (std::is_same_v<T, criteria::NumberEvidence>) {
          json j = number_json(ev);
          j["kind"] = "number";
          return j;
        } else if constexpr (std::is_same_v<T, criteria::CotreeEvidence>) {
          return json{{"kind", "cotree"}, {"leaves", ev.elements.size()}, {"nodes", ev.tree.nodes.size()}};
        } else if constexpr (std::is_same_v<T, std::string>) {
          return json{{"kind", "reason"}, {"text", ev}};
        } else {
          return json{{"kind", "none"}};
        }
      },
      v.evidence);
}

std::string evidence_text(const Verdict& v, const groups::FiniteGroup* g) {
  const json j = evidence_json(v, g);
  const std::string kind = j["kind"];
  if (kind == "p4") {
    std::string s = "P4";
    for (const auto& x : j["path"]) s += std::string(s == "P4" ? " " : " ~ ") + x.get<std::string>();
    return s;
  }
  if (kind == "pair") {
    std::ostringstream s;
    s << "pair g = " << j["g"].get<std::string>() << ", h = " << j["h"].get<std::string>() << ", (p,q,r) = ("
      << j["p"] << "," << j["q"] << "," << j["r"] << ")";
    return s.str();
  }
  if (kind == "number") return j["label"].get<std::string>() + " = " + j["value"].get<std::string>() + ": " +
                               j["class"].get<std::string>();
  if (kind == "cotree") return "cotree on " + std::to_string(j["leaves"].get<std::size_t>()) + " leaves";
  return "";
}

json verdict_json(const Verdict& v, const groups::FiniteGroup* g) {
  json j{{"route", std::string(criteria::to_string(v.route))},
         {"verdict", std::string(criteria::to_string(v.tag))},
         {"rule", v.rule}};
  j["evidence"] = evidence_json(v, g);
  if (!v.numbers.empty()) {
    json nums = json::array();
    for (const auto& ne : v.numbers) nums.push_back(number_json(ne));
    j["numbers"] = nums;
  }
  return j;
}

// ---- check ----

struct CheckOptions {
  std::string spec;
  std::string method = "both";
  std::size_t cap = groups::kDefaultCap;
  std::uint64_t budget = 0;
  std::string format = "table";
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const auto spec = groups::parse_spec(o.spec);
  const auto start = std::chrono::steady_clock::now();
  std::optional<groups::FiniteGroup> group;
  std::optional<Verdict> brute;
  std::optional<Verdict> crit;
  if (o.method != "criterion") {
    group = groups::build_group(spec, o.cap);
    brute = criteria::pcg_bruteforce(*group);
  }
  if (o.method != "brute") {
    crit = criteria::classify_spec(spec, o.budget, o.cap);
    if (!group && std::holds_alternative<criteria::PairWitness>(crit->evidence)) group = groups::build_group(spec, o.cap);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const bool conflict = brute && crit && crit->tag != VerdictTag::Unknown && crit->tag != brute->tag;
  const groups::FiniteGroup* gp = group ? &*group : nullptr;
  const std::string order = group ? std::to_string(group->order()) : numtheory::to_string(groups::expected_order(spec));

  if (o.format == "records") {
    out << header("check").dump() << '\n';
    json rec{{"type", "check"}, {"group", spec.to_string()}, {"order", order}, {"method", o.method}};
    json routes = json::array();
    if (crit) routes.push_back(verdict_json(*crit, gp));
    if (brute) routes.push_back(verdict_json(*brute, gp));
    rec["routes"] = routes;
    if (brute && crit) rec["agreement"] = !conflict;
    out << rec.dump() << '\n';
  } else {
    out << "group      " << spec.to_string() << '\n' << "order      " << order << '\n';
    for (const Verdict* v : {crit ? &*crit : nullptr, brute ? &*brute : nullptr}) {
      if (!v) continue;
      out << std::left << std::setw(11) << criteria::to_string(v->route) << criteria::to_string(v->tag) << "  ("
          << v->rule << ")\n";
      const std::string ev = evidence_text(*v, gp);
      if (!ev.empty()) out << "  evidence " << ev << '\n';
    }
    if (brute && crit) {
      out << "agreement  "
          << (conflict ? "CONFLICT" : crit->tag == VerdictTag::Unknown ? "criterion undecided" : "yes") << '\n';
    }
    out << "time       " << std::fixed << std::setprecision(3) << seconds << " s\n";
  }
  if (conflict) throw Conflict("routes disagree on " + spec.to_string());
  return kOk;
}

// ---- family ----

struct FamilyOptions {
  std::string family;
  std::uint64_t min = 0;
  std::optional<std::uint64_t> max;
  std::uint64_t budget = 0;
  std::string format = "table";
  unsigned workers = 0;
};

int cmd_family(const FamilyOptions& o, std::ostream& out) {
  if (!o.max) throw CLI::ValidationError("--max", "an upper bound is required");
  const auto rows = criteria::family_sweep(o.family, o.min, *o.max, o.budget, o.workers);
  std::vector<std::string> yes;
  std::vector<std::string> unknown;
  for (const auto& row : rows) {
    if (row.verdict.tag == VerdictTag::IsCograph) yes.push_back(numtheory::to_string(row.param));
    if (row.verdict.tag == VerdictTag::Unknown) unknown.push_back(numtheory::to_string(row.param));
  }
  if (o.format == "records") {
    out << header("family").dump() << '\n';
    for (const auto& row : rows) {
      json rec{{"type", "row"}, {"family", o.family}, {"param", numtheory::to_string(row.param)}};
      json nums = json::array();
      for (const auto& ne : row.verdict.numbers) nums.push_back(number_json(ne));
      rec["numbers"] = nums;
      rec["verdict"] = std::string(criteria::to_string(row.verdict.tag));
      rec["rule"] = row.verdict.rule;
      if (!row.note.empty()) rec["note"] = row.note;
      out << rec.dump() << '\n';
    }
    out << json{{"type", "summary"}, {"family", o.family}, {"rows", rows.size()}, {"is_cograph", yes},
                {"unknown", unknown}}
               .dump()
        << '\n';
    return kOk;
  }
  for (const auto& row : rows) {
    out << std::left << std::setw(6) << numtheory::to_string(row.param) << std::setw(12)
        << criteria::to_string(row.verdict.tag);
    std::string sep;
    for (const auto& ne : row.verdict.numbers) {
      out << sep << ne.label << '=' << numtheory::to_string(ne.value) << ' ' << ne.cls.describe();
      sep = "; ";
    }
    if (row.verdict.numbers.empty()) out << row.verdict.rule;
    if (!row.note.empty()) out << "  [" << row.note << ']';
    out << '\n';
  }
  out << "IsCograph:";
  for (const auto& s : yes) out << ' ' << s;
  out << "\nUnknown:" << (unknown.empty() ? " none" : "");
  for (const auto& s : unknown) out << ' ' << s;
  out << '\n';
  return kOk;
}

// ---- graph ----

struct GraphOptions {
  std::string spec;
  std::string kind = "power";
  std::string format = "dot";
  std::string output;
  bool cotree = false;
  std::size_t cap = groups::kDefaultCap;
};

int cmd_graph(const GraphOptions& o, std::ostream& out) {
  const auto spec = groups::parse_spec(o.spec);
  const auto group = groups::build_group(spec, o.cap);
  std::ostringstream text;
  if (o.kind == "directed") {
    if (o.cotree) throw CLI::ValidationError("--cotree", "needs an undirected graph kind");
    const auto d = powergraph::directed_power_graph(group);
    text << (o.format == "hex" ? graphs::to_hex_rows(d) : graphs::to_dot(d, "directed_power_graph"));
  } else {
    graphs::Graph g;
    if (o.kind == "power") g = powergraph::power_graph(group);
    else if (o.kind == "reduced") g = powergraph::derived_graph(group, powergraph::DerivedKind::Reduced);
    else if (o.kind == "enhanced") g = powergraph::derived_graph(group, powergraph::DerivedKind::Enhanced);
    else if (o.kind == "gk") g = powergraph::derived_graph(group, powergraph::DerivedKind::GruenbergKegel);
    else g = powergraph::p2_restriction(group);
    if (o.cotree) {
      if (g.vertex_count() == 0) {
        text << "empty graph\n";
      } else {
        const auto d = cograph::decompose(g);
        if (const auto* t = std::get_if<cograph::Cotree>(&d)) {
          text << t->to_text() << '\n';
        } else {
          const auto& p = std::get<cograph::P4Witness>(d).path;
          text << "not a cograph: P4 " << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << '\n';
        }
      }
    } else {
      text << (o.format == "hex" ? graphs::to_hex_rows(g) : graphs::to_dot(g, o.kind + "_graph"));
    }
  }
  if (o.output.empty() || o.output == "-") {
    out << text.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw CLI::ValidationError("-o", "cannot write " + o.output);
    f << text.str();
  }
  return kOk;
}

// ---- nice ----

int cmd_nice(const std::string& n_text, std::uint64_t budget, const std::string& format, std::ostream& out) {
  if (n_text.empty() || n_text.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError("N", "not a decimal integer: " + n_text);
  }
  const Nat n = numtheory::nat_from_string(n_text);
  if (n < 1) throw CLI::ValidationError("N", "must be positive");
  const auto c = numtheory::classify_nice(n, budget);
  if (format == "records") {
    out << header("nice").dump() << '\n';
    json rec{{"type", "nice"}, {"n", numtheory::to_string(n)}, {"class", std::string(numtheory::to_string(c.tag))}};
    if (c.tag == numtheory::Niceness::PrimePower) {
      rec["prime"] = numtheory::to_string(c.first);
      rec["exponent"] = c.exponent;
    } else if (c.tag == numtheory::Niceness::TwoDistinctPrimes) {
      rec["primes"] = {numtheory::to_string(c.first), numtheory::to_string(c.second)};
    } else if (c.split) {
      rec["split"] = {numtheory::to_string(c.split->first), numtheory::to_string(c.split->second)};
    }
    out << rec.dump() << '\n';
  } else {
    out << numtheory::to_string(n) << ": " << c.describe() << '\n';
  }
  return kOk;
}

void add_budget(CLI::App* cmd, std::uint64_t& budget) {
  cmd->add_option("--budget", budget, "Pollard-Brent iterations per composite (default 1e7, or PCG_BUDGET)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-cograph groups: brute-force and criterion checks"};
  app.name("pcg");
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Decide whether a group's power graph is a cograph");
  c->add_option("spec", check.spec, "Group spec, e.g. sym:5 or dp(cyclic:4,cyclic:6)")->required();
  c->add_option("--method", check.method)->check(CLI::IsMember({"brute", "criterion", "both"}));
  c->add_option("--cap", check.cap, "Largest group to enumerate")->check(CLI::PositiveNumber);
  add_budget(c, check.budget);
  c->add_option("--format", check.format)->check(CLI::IsMember({"table", "records"}));

  FamilyOptions fam;
  auto* f = app.add_subcommand("family", "Sweep a family parameter with the criterion route");
  f->add_option("family", fam.family, "cyclic, dihedral, sym, alt, psl2, psl2-char2, suzuki, psl3, ...")->required();
  f->add_option("--min", fam.min, "Smallest parameter");
  for (const char* flag : {"--max", "--max-d", "--max-e", "--max-m", "--max-n", "--max-q"}) {
    f->add_option_function<std::uint64_t>(flag, [&fam](const std::uint64_t& v) { fam.max = v; }, "Largest parameter");
  }
  add_budget(f, fam.budget);
  f->add_option("--format", fam.format)->check(CLI::IsMember({"table", "records"}));
  f->add_option("--workers", fam.workers, "Worker threads (0 = all cores)");

  GraphOptions gr;
  auto* g = app.add_subcommand("graph", "Export a graph attached to a group");
  g->add_option("spec", gr.spec, "Group spec")->required();
  g->add_option("--kind", gr.kind)->check(CLI::IsMember({"power", "directed", "reduced", "enhanced", "gk", "p2"}));
  g->add_option("--format", gr.format)->check(CLI::IsMember({"dot", "hex"}));
  g->add_option("-o,--output", gr.output, "Output file (default stdout)");
  g->add_flag("--cotree", gr.cotree, "Print the cotree, or a P4, instead of the graph");
  g->add_option("--cap", gr.cap, "Largest group to enumerate")->check(CLI::PositiveNumber);

  std::string nice_n;
  std::uint64_t nice_budget = 0;
  std::string nice_format = "table";
  auto* n = app.add_subcommand("nice", "Classify n as prime power, product of two distinct primes, or neither");
  n->add_option("n", nice_n, "Decimal integer")->required();
  add_budget(n, nice_budget);
  n->add_option("--format", nice_format)->check(CLI::IsMember({"table", "records"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    const std::uint64_t fallback = default_budget();
    for (auto* b : {&check.budget, &fam.budget, &nice_budget}) {
      if (*b == 0) *b = fallback;
    }
    if (c->parsed()) return cmd_check(check, out);
    if (f->parsed()) return cmd_family(fam, out);
    if (g->parsed()) return cmd_graph(gr, out);
    return cmd_nice(nice_n, nice_budget, nice_format, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pcg: " << e.what() << '\n';
    return kUsage;
  } catch (const groups::CapExceeded& e) {
    err << "pcg: " << e.what() << '\n';
    return kCap;
  } catch (const Conflict& e) {
    err << "pcg: " << e.what() << '\n';
    return kConflict;
  } catch (const std::invalid_argument& e) {
    err << "pcg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "pcg: internal check failed: " << e.what() << '\n';
    return kConflict;
  }
}

}  // namespace pcg::cli
