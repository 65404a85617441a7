#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "redforge/cvector.hpp"
#include "redforge/embed.hpp"
#include "redforge/errors.hpp"
#include "redforge/families.hpp"
#include "redforge/geom.hpp"
#include "redforge/io.hpp"
#include "redforge/search.hpp"

namespace redforge::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

namespace {

constexpr const char* kVersion = "0.1.0";
const std::vector<std::string> kAllChecks = {"triangulation", "shelling", "leafsum",  "embeddability",
                                             "qh",            "qht",      "theorem7", "cvector"};

struct Options {
  std::string input;
  std::string order = "auto";
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
  std::string format = "json";
  std::string out;
};

struct Loaded {
  enum class Kind { Graph, Replay, Sweep };
  Kind kind = Kind::Graph;
  std::string source;
  std::string digest;
  std::vector<MultiGraph> graphs;
  std::optional<ReplayScript> script;
};

Loaded load(const std::string& path) {
  Loaded in;
  const std::string text = read_file(path);
  in.source = path;
  in.digest = sha256_hex(text);
  const Json j = parse_json(text);
  if (j.is_array() || (j.is_object() && j.contains("graphs"))) {
    in.kind = Loaded::Kind::Sweep;
    const Json& list = j.is_array() ? j : j["graphs"];
    if (!list.is_array()) throw ParseError("\"graphs\" must be an array");
    for (const auto& g : list) in.graphs.push_back(graph_from_json(g));
  } else if (j.is_object() && j.contains("steps")) {
    in.kind = Loaded::Kind::Replay;
    auto [root, script] = replay_from_json(j);
    in.graphs.push_back(std::move(root));
    in.script = std::move(script);
  } else {
    in.graphs.push_back(graph_from_json(j));
  }
  return in;
}

std::size_t resolve_budget(const std::optional<std::size_t>& flag, std::size_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("REDFORGE_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("REDFORGE_BUDGET is not a number: '") + env + "'");
  }
  return fallback;
}

ReductionTree make_tree(const MultiGraph& g, const std::optional<ReplayScript>& script, const Options& o) {
  const std::size_t budget = resolve_budget(o.budget, kDefaultNodeBudget);
  std::string order = o.order;
  if (order == "auto") order = script ? "file" : "O";
  if (order == "O") return build_tree(g, order_O_strategy(), budget);
  if (order == "random") return build_tree(g, random_strategy(o.seed), budget);
  if (order == "file") {
    if (!script) throw ParseError("--order file needs a replay input with \"steps\"");
    return build_tree(g, replay_strategy(*script), budget);
  }
  throw ParseError("--order " + order + " does not name a single tree (use O, file or random)");
}

Json input_json(const Loaded& in) {
  static const char* kinds[] = {"graph", "replay", "sweep"};
  return Json{{"source", in.source}, {"kind", kinds[static_cast<int>(in.kind)]}, {"digest", in.digest}};
}

Json c7_to_json(const C7Verdict& v) {
  Json viol = Json::array();
  for (const auto& x : v.violations) {
    viol.push_back(Json{{"multiset", x.multiset}, {"t_degree", x.t_degree}, {"coefficient", x.coefficient.str()}});
  }
  return Json{{"holds", v.holds}, {"violations", std::move(viol)}};
}

Json poly_json(const Polynomial& p) { return Json{{"text", to_string(p)}, {"terms", polynomial_to_json(p)}}; }

std::string census_text(const std::map<std::size_t, std::size_t>& census) {
  std::string s;
  for (auto it = census.rbegin(); it != census.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += std::to_string(it->first) + " edges: " + std::to_string(it->second);
  }
  return s;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : opts_(o), out_(out), start_(std::chrono::steady_clock::now()) {}

  void emit(Json report, const std::string& text) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::string body;
    if (opts_.format == "json") {
      report["timing"] = Json{{"elapsed_ms", ms}};
      body = report.dump(2) + "\n";
    } else {
      body = text;
    }
    if (opts_.out.empty()) {
      out_ << body;
      return;
    }
    std::ofstream f(opts_.out, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + opts_.out + "'");
    f << body;
  }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

Json header(const std::string& command, const Loaded& in) {
  return Json{{"command", command}, {"version", kVersion}, {"input", input_json(in)}};
}

int cmd_tree(const Options& o, std::ostream& out) {
  Emitter em(o, out);
  const Loaded in = load(o.input);
  if (in.kind == Loaded::Kind::Sweep) throw ParseError("tree takes a single graph or replay");
  const auto t = make_tree(in.graphs.front(), in.script, o);
  const auto census = leaf_census(t);
  Json r = header("tree", in);
  r["strategy"] = t.strategy_name();
  r["census"] = census_to_json(census);
  r["replay"] = replay_to_json(t);
  r["leaves"] = leaves_to_json(t);
  r["tree"] = tree_to_json(t);
  std::ostringstream text;
  text << "strategy " << t.strategy_name() << "\nnodes " << t.size() << ", depth " << depth(t)
       << ", full-dimensional leaves " << full_dim_leaves_dfs(t).size() << "\ncensus " << census_text(census) << "\n"
       << replay_lines(t);
  em.emit(std::move(r), text.str());
  return kOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
  Emitter em(o, out);
  const Loaded in = load(o.input);
  if (in.kind == Loaded::Kind::Sweep) throw ParseError("poly takes a single graph or replay");
  const auto t = make_tree(in.graphs.front(), in.script, o);
  const int n = t.root_graph().n();
  const Polynomial q = reduced_form(t);
  const Polynomial q1 = specialize(q, Specialization::XToOne);
  const Polynomial qt = specialize(q, Specialization::XToOneCornerT, n);
  const Polynomial shifted = specialize(q1, Specialization::BetaShiftDown);
  const Polynomial shifted_t = specialize(qt, Specialization::BetaShiftDown);
  const Polynomial merged_t = merged_shifted_q(t);
  const C7Verdict c7 = check_c7(qt);
  Json r = header("poly", in);
  r["strategy"] = t.strategy_name();
  r["reduced_form"] = poly_json(q);
  r["q"] = poly_json(q1);
  r["q_shifted"] = poly_json(shifted);
  r["q_shifted_t"] = poly_json(shifted_t);
  r["q_merged_shifted_t"] = poly_json(merged_t);
  r["c7"] = c7_to_json(c7);
  std::ostringstream text;
  text << "Q(x)         = " << to_string(q) << "\nQ(b)         = " << to_string(q1)
       << "\nQ(b-1)       = " << to_string(shifted) << "\nQ(b-1,t)     = " << to_string(shifted_t)
       << "\nQ(beta-1,t)  = " << to_string(merged_t) << "\nc7 " << (c7.holds ? "holds" : "violated") << "\n";
  em.emit(std::move(r), text.str());
  return kOk;
}

struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  Json extra = Json::object();
};

CheckStatus theorem_status(bool holds, bool in_scope) {
  if (holds) return CheckStatus::Pass;
  return in_scope ? CheckStatus::Fail : CheckStatus::Scope;
}

CheckResult run_check(const std::string& name, const ReductionTree& t, bool detailed) {
  CheckResult c;
  const bool order_O = t.is_order_O();
  const std::string off_scope = order_O ? "" : " (tree is not order O)";
  if (name == "triangulation") {
    const auto r = verify_triangulation(t);
    c.status = theorem_status(r.holds, r.scope_verified);
    c.detail = r.holds ? std::to_string(r.pairs_checked) + " leaf pairs certified" : r.witness + off_scope;
    c.extra["pairs_checked"] = r.pairs_checked;
    c.extra["simplices"] = r.simplices;
    c.extra["reduction_lemma"] = r.reduction_lemma;
    c.extra["subsets"] = r.subsets;
    if (detailed) {
      Json certs = Json::array();
      for (const auto& fc : r.certificates) certs.push_back(certificate_to_json(t, fc));
      c.extra["certificates"] = std::move(certs);
    }
  } else if (name == "shelling") {
    const auto r = verify_shelling(t);
    const Polynomial h = h_from_shelling(r);
    const Polynomial q = specialize(
        specialize(specialize(reduced_form(t), Specialization::XToOne), Specialization::BetaMerge),
        Specialization::BetaShiftDown);
    const bool matches = h == q;
    c.status = theorem_status(r.holds && matches, order_O);
    c.detail = !r.holds ? r.witness + off_scope
                        : (matches ? "h = " + to_string(h) : "h = " + to_string(h) + " but Q(b-1) = " + to_string(q) + off_scope);
    c.extra["h_vector"] = r.h_vector;
    c.extra["attachment_facets"] = r.attachment_facets;
    c.extra["h_matches_q"] = matches;
  } else if (name == "leafsum") {
    const auto plain = check_leaf_sum_identity(t);
    const auto weighted = check_weighted_leaf_sum(t);
    c.status = theorem_status(plain.holds && weighted.holds, order_O);
    if (!plain.holds) {
      c.detail = "unweighted expansion differs at " + (plain.witness ? to_string(*plain.witness) : std::string("?")) + off_scope;
    } else if (!weighted.holds) {
      c.detail = "weighted expansion differs at " + (weighted.witness ? to_string(*weighted.witness) : std::string("?")) + off_scope;
    } else {
      c.detail = std::to_string(plain.leaf_count) + " leaves";
    }
    c.extra["leaves"] = plain.leaf_count;
    c.extra["weight_is_balance"] = weighted.leaves_where_weight_is_balance;
  } else if (name == "embeddability") {
    const auto v = check_embeddability(t, true);
    c.extra["verdict"] = verdict_to_json(t, v);
    if (order_O) {
      c.status = v.at_least(EmbedLevel::Strong) ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
      c.status = CheckStatus::Scope;
    }
    c.detail = "level " + to_string(v.level) + off_scope;
  } else if (name == "qh" || name == "qht") {
    const auto r = name == "qh" ? check_qh_identity(t) : check_qht_identity(t);
    c.status = r.status;
    c.detail = r.status == CheckStatus::Pass ? "h = " + to_string(r.rhs) : r.detail;
    c.extra["lhs"] = to_string(r.lhs);
    if (r.status != CheckStatus::Scope) c.extra["rhs"] = to_string(r.rhs);
  } else if (name == "theorem7") {
    const auto r = check_theorem7(t);
    c.status = r.status;
    c.detail = r.status == CheckStatus::Pass ? "every c_I(t) is nonnegative" : r.detail;
    c.extra["c7"] = c7_to_json(r.verdict);
  } else if (name == "cvector") {
    const auto r = check_cvectors(t);
    c.status = theorem_status(r.holds, r.scope_verified);
    c.detail = r.holds ? std::to_string(r.leaves_checked) + " leaves, " + std::to_string(r.pairs_checked) + " pairs"
                       : r.witness + off_scope;
  } else {
    throw ParseError("unknown check '" + name + "'");
  }
  return c;
}

std::vector<std::string> split_checks(const std::string& list) {
  if (list.empty() || list == "all") return kAllChecks;
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (std::find(kAllChecks.begin(), kAllChecks.end(), item) == kAllChecks.end()) {
      throw ParseError("unknown check '" + item + "'");
    }
    out.push_back(item);
  }
  return out;
}

int cmd_verify(const Options& o, const std::string& checks_flag, bool allow_scope, std::ostream& out) {
  Emitter em(o, out);
  const Loaded in = load(o.input);
  const auto checks = split_checks(checks_flag);
  const bool detailed = in.kind != Loaded::Kind::Sweep;
  std::map<std::string, std::array<std::size_t, 3>> totals;
  for (const auto& name : checks) totals[name] = {0, 0, 0};
  Json results = Json::array();
  std::ostringstream text;
  bool failed = false, unallowed_scope = false;
  for (std::size_t gi = 0; gi < in.graphs.size(); ++gi) {
    const auto t = make_tree(in.graphs[gi], in.script, o);
    Json per = Json::array();
    for (const auto& name : checks) {
      const auto c = run_check(name, t, detailed);
      ++totals[name][static_cast<std::size_t>(c.status)];
      failed |= c.status == CheckStatus::Fail;
      unallowed_scope |= c.status == CheckStatus::Scope && !allow_scope;
      if (detailed || c.status != CheckStatus::Pass) {
        Json entry{{"check", name}, {"status", to_string(c.status)}, {"detail", c.detail}};
        if (detailed) entry.update(c.extra);
        per.push_back(std::move(entry));
        text << (detailed ? "" : to_string(in.graphs[gi]) + " ") << name << ": " << to_string(c.status) << " - "
             << c.detail << "\n";
      }
    }
    if (!per.empty()) {
      results.push_back(Json{{"index", gi}, {"graph", graph_to_json(in.graphs[gi])}, {"strategy", t.strategy_name()},
                             {"checks", std::move(per)}});
    }
  }
  Json summary = Json::object();
  for (const auto& name : checks) {
    const auto& c = totals[name];
    summary[name] = Json{{"pass", c[0]}, {"fail", c[1]}, {"scope", c[2]}};
    if (!detailed) text << name << ": " << c[0] << " pass, " << c[1] << " fail, " << c[2] << " scope\n";
  }
  Json r = header("verify", in);
  r["config"] = Json{{"order", o.order}, {"seed", o.seed}, {"checks", checks}, {"allow_scope", allow_scope}};
  r["trees"] = in.graphs.size();
  r["summary"] = std::move(summary);
  r["results"] = std::move(results);
  const int code = failed ? kViolation : (unallowed_scope ? kInconclusive : kOk);
  r["exit_code"] = code;
  em.emit(std::move(r), text.str());
  return code;
}

struct SearchFlags {
  int kn = 4;
  std::string target = "c7-violation";
  std::string target_poly;
  std::size_t samples = 100;
  unsigned jobs = 1;
  bool no_cache = false;
};

SearchTarget parse_target(const std::string& s) {
  for (auto t : {SearchTarget::C7Violation, SearchTarget::Polynomial, SearchTarget::NotExtraStrong,
                 SearchTarget::NotStrong, SearchTarget::NotWeak}) {
    if (to_string(t) == s) return t;
  }
  throw ParseError("unknown search target '" + s + "'");
}

int cmd_search(const Options& o, const SearchFlags& f, std::ostream& out) {
  Emitter em(o, out);
  Loaded in;
  if (o.input.empty()) {
    if (f.kn < 1) throw InvalidGraph("--kn needs n >= 1");
    const auto g = complete_graph(f.kn);
    in.source = "K" + std::to_string(f.kn);
    in.digest = sha256_hex(graph_to_json(g).dump());
    in.graphs.push_back(g);
  } else {
    in = load(o.input);
    if (in.kind == Loaded::Kind::Sweep) throw ParseError("search-c7 takes a single root graph");
  }
  SearchConfig cfg;
  cfg.root = in.graphs.front();
  if (o.order == "all" || o.order == "auto") {
    cfg.space = SearchSpace::AllComplete;
  } else if (o.order == "O") {
    cfg.space = SearchSpace::OrderO;
  } else if (o.order == "random") {
    cfg.space = SearchSpace::Random;
  } else {
    throw ParseError("search-c7 explores --order all, O or random");
  }
  cfg.target = parse_target(f.target);
  if (!f.target_poly.empty()) {
    cfg.target = SearchTarget::Polynomial;
    cfg.target_polynomial = parse_polynomial(f.target_poly);
  } else if (cfg.target == SearchTarget::Polynomial) {
    throw ParseError("--target polynomial needs --target-poly");
  }
  cfg.seed = o.seed;
  cfg.samples = f.samples;
  cfg.budget = resolve_budget(o.budget, cfg.budget);
  cfg.jobs = f.jobs;
  cfg.use_cache = !f.no_cache;

  const auto result = search_c7(cfg);
  Json r = header("search-c7", in);
  r["config"] = Json{{"space", to_string(cfg.space)}, {"target", to_string(cfg.target)},
                     {"seed", cfg.seed},          {"samples", cfg.samples},
                     {"budget", cfg.budget},      {"cache", cfg.use_cache}};
  if (cfg.target_polynomial) r["config"]["target_polynomial"] = to_string(*cfg.target_polynomial);
  r["outcome"] = to_string(result.outcome);
  r["trees_examined"] = result.trees_examined;
  r["memo_entries"] = result.memo_entries;
  r["work"] = result.work;
  std::ostringstream text;
  text << "outcome " << to_string(result.outcome) << " (" << result.trees_examined << " examined, work "
       << result.work << ")\n";
  if (result.witness) {
    const auto t = build_tree(cfg.root, replay_strategy(*result.witness));
    Json lines = Json::array();
    std::istringstream ls(replay_lines(t));
    for (std::string line; std::getline(ls, line);) lines.push_back(line);
    r["witness"] = Json{{"q_shifted_t", poly_json(result.witness_q)},
                        {"c7", c7_to_json(check_c7(specialize(specialize(reduced_form(t), Specialization::XToOneCornerT,
                                                                         cfg.root.n()),
                                                              Specialization::BetaMerge)))},
                        {"level", result.witness_level ? to_string(*result.witness_level) : "unchecked"},
                        {"replay", replay_to_json(t)},
                        {"lines", std::move(lines)}};
    text << "Q(beta-1,t) = " << to_string(result.witness_q) << "\n" << replay_lines(t);
  }
  em.emit(std::move(r), text.str());
  return result.outcome == SearchOutcome::BudgetExhausted ? kInconclusive : kOk;
}

int cmd_sweep(const Options& o, int max_vertices, int max_edges, std::ostream& out) {
  Emitter em(o, out);
  const auto graphs = connected_sweep(max_vertices, max_edges);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& g : graphs) {
    list.push_back(graph_to_json(g));
    text << graph_to_json(g).dump() << "\n";
  }
  Json r{{"command", "sweep"}, {"version", kVersion}, {"max_vertices", max_vertices}, {"max_edges", max_edges},
         {"count", graphs.size()}, {"graphs", std::move(list)}};
  em.emit(std::move(r), text.str());
  return kOk;
}

int cmd_vertices(const Options& o, const std::string& node_path, std::ostream& out) {
  const Loaded in = load(o.input);
  if (in.kind == Loaded::Kind::Sweep) throw ParseError("vertices takes a single graph or replay");
  const auto t = make_tree(in.graphs.front(), in.script, o);
  const auto node = t.find(node_path);
  if (!node) throw ParseError("no node at path '" + node_path + "'");
  const auto layout = AugmentedLayout::of(t.root_graph());
  std::ostringstream csv;
  csv << "route";
  for (const auto& [a, b] : layout.root_edges) csv << ",(" << a << ":" << b << ")";
  for (int i = 1; i <= layout.n; ++i) csv << ",(s:" << i << ")";
  for (int i = 1; i <= layout.n; ++i) csv << ",(" << i << ":t)";
  csv << "\n";
  for (const auto& v : leaf_vertices(t, *node)) {
    csv << vertex_label(layout, v);
    for (auto x : v) csv << ',' << static_cast<int>(x);
    csv << "\n";
  }
  if (o.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.out + "'");
    f << csv.str();
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool input_required) {
  auto* in = sub->add_option("input", o.input, "Graph, replay or sweep JSON file");
  if (input_required) in->required();
  sub->add_option("--order", o.order, "Reduction order: O, file, random or all")
      ->check(CLI::IsMember({"auto", "O", "file", "random", "all"}));
  sub->add_option("--seed", o.seed, "Seed for random strategies");
  sub->add_option("--budget", o.budget, "Node or work budget (default from REDFORGE_BUDGET)");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "Write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction trees, flow-polytope triangulations and subdivision-algebra reduced forms", "redforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opts;
  std::string checks = "all";
  bool allow_scope = false;
  SearchFlags sf;
  int max_vertices = 4, max_edges = 4;
  std::string node_path;

  auto* tree = app.add_subcommand("tree", "Build a reduction tree and print it with its leaf census");
  add_common(tree, opts, true);
  auto* poly = app.add_subcommand("poly", "Reduced form and its specializations");
  add_common(poly, opts, true);
  auto* verify = app.add_subcommand("verify", "Run theorem checks on one tree or a sweep file");
  add_common(verify, opts, true);
  verify->add_option("--checks", checks, "Comma-separated subset of " + [] {
    std::string s;
    for (const auto& c : kAllChecks) s += (s.empty() ? "" : ",") + c;
    return s;
  }());
  verify->add_flag("--allow-scope", allow_scope, "Exit 0 when checks are out of scope");
  auto* search = app.add_subcommand("search-c7", "Search reduction trees for a negative coefficient of Q(beta-1, t)");
  add_common(search, opts, false);
  search->add_option("--kn", sf.kn, "Root K_n when no input file is given");
  search->add_option("--target", sf.target, "c7-violation, polynomial, extra-strong, strong or weak");
  search->add_option("--target-poly", sf.target_poly, "Q(beta-1, t) to look for, e.g. \"t^4 + b*(4t^3 - t^2)\"");
  search->add_option("--samples", sf.samples, "Trees drawn in random mode");
  search->add_option("--jobs", sf.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--no-cache", sf.no_cache, "Disable memoization");
  auto* sweep = app.add_subcommand("sweep", "Write every connected multigraph up to the given size");
  sweep->add_option("--max-vertices", max_vertices, "Largest vertex count");
  sweep->add_option("--max-edges", max_edges, "Largest edge count");
  sweep->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sweep->add_option("--out", opts.out, "Write the sweep to this file");
  auto* vertices = app.add_subcommand("vertices", "CSV of the flow vertices of a node");
  add_common(vertices, opts, true);
  vertices->add_option("--node", node_path, "Node path such as LMR (root by default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*tree) return cmd_tree(opts, out);
    if (*poly) return cmd_poly(opts, out);
    if (*verify) return cmd_verify(opts, checks, allow_scope, out);
    if (*search) return cmd_search(opts, sf, out);
    if (*sweep) return cmd_sweep(opts, max_vertices, max_edges, out);
    if (*vertices) return cmd_vertices(opts, node_path, out);
  } catch (const BudgetExceeded& e) {
    err << "redforge: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "redforge: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace redforge::cli
