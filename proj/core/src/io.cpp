#include "redforge/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "redforge/errors.hpp"

namespace redforge {

MultiGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph JSON needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > 0x3fff) throw InvalidGraph("vertex count " + std::to_string(n) + " out of range");
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers");
    }
    auto a = e[0].get<long long>();
    auto b = e[1].get<long long>();
    if (a < 1 || b > n || a >= b) {
      throw InvalidGraph("edge [" + std::to_string(a) + "," + std::to_string(b) + "] needs 1 <= i < j <= n");
    }
    ends.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return MultiGraph::root(static_cast<int>(n), ends);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

MultiGraph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

Json graph_to_json(const MultiGraph& g, bool with_provenance) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    if (with_provenance) {
      edges.push_back(Json{{"edge", {e.src, e.dst}}, {"provenance", e.provenance}});
    } else {
      edges.push_back({e.src, e.dst});
    }
  }
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

namespace {

Json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

BigInt coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw ParseError("bad coefficient " + j.dump());
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json term{{"coeff", coefficient_json(coeff)}};
    Json beta = Json::object(), x = Json::object();
    unsigned t = 0;
    for (const auto& [v, e] : mono.factors()) {
      switch (v.kind()) {
        case Var::Kind::Beta:
          beta[std::to_string(v.index())] = e;
          break;
        case Var::Kind::T:
          t = e;
          break;
        case Var::Kind::X:
          x[std::to_string(v.index()) + "," + std::to_string(v.second())] = e;
          break;
      }
    }
    term["beta"] = std::move(beta);
    term["t"] = t;
    term["x"] = std::move(x);
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  Polynomial p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff")) throw ParseError("polynomial term needs \"coeff\"");
    Monomial m;
    try {
      if (term.contains("beta")) {
        for (const auto& [k, e] : term["beta"].items()) m = m * Monomial::of(Var::beta(std::stoi(k)), e.get<unsigned>());
      }
      if (term.contains("t") && term["t"].get<unsigned>() > 0) m = m * Monomial::of(Var::t(), term["t"].get<unsigned>());
      if (term.contains("x")) {
        for (const auto& [k, e] : term["x"].items()) {
          const auto comma = k.find(',');
          if (comma == std::string::npos) throw ParseError("bad x key '" + k + "'");
          m = m * Monomial::of(Var::x(std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))), e.get<unsigned>());
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad polynomial term: ") + e.what());
    } catch (const std::logic_error&) {
      throw ParseError("bad polynomial term " + term.dump());
    }
    p += Polynomial::term(m, coefficient_from_json(term["coeff"]));
  }
  return p;
}

namespace {

Json node_json(const ReductionTree& t, NodeId v) {
  Json j{{"path", t.path(v)}};
  if (v != t.root()) j["branch"] = std::string(1, branch_char(t.node(v).branch));
  j["graph"] = graph_to_json(t.graph(v), true);
  if (t.is_leaf(v)) return j;
  const auto& step = *t.node(v).step;
  j["step"] = Json{{"i", step.i()}, {"j", step.j()}, {"k", step.k()}, {"label", format_label(label_of(t.graph(v), step))}};
  Json kids = Json::array();
  for (Branch b : {Branch::L, Branch::M, Branch::R}) kids.push_back(node_json(t, t.child(v, b)));
  j["children"] = std::move(kids);
  return j;
}

}  // namespace

Json tree_to_json(const ReductionTree& t) {
  return Json{{"strategy", t.strategy_name()}, {"nodes", t.size()}, {"depth", depth(t)}, {"root", node_json(t, t.root())}};
}

Json leaves_to_json(const ReductionTree& t) {
  Json out = Json::array();
  std::size_t index = 0;
  const auto full = t.root_graph().edge_count();
  for (NodeId l : leaves_dfs(t)) {
    out.push_back(Json{{"index", index++},
                       {"path", t.path(l)},
                       {"edges", t.graph(l).edge_count()},
                       {"full_dimensional", t.graph(l).edge_count() == full},
                       {"balance", to_string(balance(t, l))},
                       {"graph", graph_to_json(t.graph(l))}});
  }
  return out;
}

Json census_to_json(const std::map<std::size_t, std::size_t>& census) {
  Json j = Json::object();
  for (auto it = census.rbegin(); it != census.rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

Json verdict_to_json(const ReductionTree& t, const EmbedVerdict& v) {
  Json failures = Json::array();
  for (const auto& f : v.failures) {
    Json leaves = Json::array();
    for (NodeId l : f.witness_leaves) leaves.push_back(t.path(l));
    failures.push_back(Json{{"node_path", f.node_path}, {"clause", f.clause}, {"witness_leaves", std::move(leaves)}});
  }
  Json j{{"level", to_string(v.level)}, {"failures", std::move(failures)}};
  if (v.left_weak) j["left_weak"] = *v.left_weak;
  if (v.two_sided_weak) j["two_sided_weak"] = *v.two_sided_weak;
  return j;
}

Json certificate_to_json(const ReductionTree& t, const FaceCertificate& c) {
  return Json{{"pair", {t.path(c.first), t.path(c.second)}},
              {"shared_vertices", c.shared_vertices},
              {"lp_optimum", c.lp.status == LpStatus::Optimal ? c.lp.value.str() : to_string(c.lp.status)},
              {"coordinates_match", c.coordinates_match},
              {"certificate_verified", c.certificate_verified},
              {"verdict", c.ok() ? "face" : "not a face"}};
}

ReplayScript script_of(const ReductionTree& t) {
  ReplayScript s;
  for (NodeId v = 0; v < t.size(); ++v) {
    if (!t.is_leaf(v)) s.emplace(t.path(v), label_of(t.graph(v), *t.node(v).step));
  }
  return s;
}

Json replay_to_json(const ReductionTree& t) {
  Json steps = Json::object();
  for (const auto& [path, label] : script_of(t)) steps[path] = format_label(label);
  return Json{{"root", graph_to_json(t.root_graph())}, {"steps", std::move(steps)}};
}

std::pair<MultiGraph, ReplayScript> replay_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("steps") || !j["steps"].is_object()) {
    throw ParseError("replay JSON needs \"root\" and an object \"steps\"");
  }
  ReplayScript s;
  for (const auto& [path, label] : j["steps"].items()) {
    if (path.find_first_not_of("LMR") != std::string::npos) throw ParseError("bad node path '" + path + "'");
    if (!label.is_string()) throw ParseError("step labels must be strings");
    s.emplace(path, parse_label(label.get<std::string>()));
  }
  return {graph_from_json(j["root"]), std::move(s)};
}

std::string replay_lines(const ReductionTree& t) {
  std::ostringstream os;
  for (NodeId v = 1; v < t.size(); ++v) {
    const auto& parent = *t.node(v).parent;
    os << t.path(v) << ' ' << format_label(label_of(t.graph(parent), *t.node(parent).step))
       << branch_char(t.node(v).branch);
    if (t.is_leaf(v) && is_alternating_graph(t.graph(v))) os << '*';
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace redforge
