#include "redforge/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "redforge/errors.hpp"
#include "redforge/io.hpp"

namespace redforge {

std::string to_string(SearchSpace s) {
  switch (s) {
    case SearchSpace::OrderO: return "O";
    case SearchSpace::AllComplete: return "all";
    case SearchSpace::Random: return "random";
  }
  return "?";
}

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::C7Violation: return "c7-violation";
    case SearchTarget::Polynomial: return "polynomial";
    case SearchTarget::NotExtraStrong: return "extra-strong";
    case SearchTarget::NotStrong: return "strong";
    case SearchTarget::NotWeak: return "weak";
  }
  return "?";
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NotFound: return "not-found";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

Polynomial merged_shifted_q(const ReductionTree& t) {
  auto q = specialize(specialized_reduced_form(t, true), Specialization::BetaMerge);
  return specialize(q, Specialization::BetaShiftDown);
}

bool violates_c7(const Polynomial& merged_shifted_q) {
  for (const auto& [m, c] : merged_shifted_q.terms()) {
    if (c < 0) return true;
  }
  return false;
}

namespace {

using Key = std::vector<std::pair<Vertex, Vertex>>;

// Dense Q(β, t) with β-degree < rows and t-degree < cols.
struct Dense {
  std::vector<std::int64_t> c;
  bool operator==(const Dense&) const = default;
};

struct DenseHash {
  std::size_t operator()(const Dense& d) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : d.c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Back {
  Triple triple;
  std::uint32_t l = 0, m = 0, r = 0;
};

struct Entry {
  std::vector<Dense> values;
  std::vector<Back> back;  // empty for alternating graphs
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("coefficient overflow in the memoized search");
  return out;
}

// Endpoint triples of the composable pairs, each once.
std::vector<Triple> triples_of(const MultiGraph& g) {
  std::vector<Triple> out;
  for (const auto& p : reducible_pairs(g)) out.push_back(Triple{p.i(), p.j(), p.k()});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiGraph reduce_triple(const MultiGraph& g, const Triple& tr, Branch b) {
  return reduce_branch(g, resolve_label(g, StepLabel{tr, 0, 0}), b);
}

class QMemo {
 public:
  QMemo(int n, std::size_t edges, bool use_cache, std::size_t budget)
      : n_(n), rows_(edges + 1), cols_(edges + 1), use_cache_(use_cache), budget_(budget) {}

  const Entry& entry(const MultiGraph& g) {
    Key key = g.endpoints();
    if (use_cache_) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Entry e = compute(g, std::nullopt);
    if (!use_cache_) {
      scratch_.push_back(std::move(e));
      return scratch_.back();
    }
    return memo_.emplace(std::move(key), std::move(e)).first->second;
  }

  // Values from the listed root triples only, in serial discovery order, stopping
  // at the first value accepted by `hit` (when given).
  Entry compute(const MultiGraph& g, std::optional<std::vector<Triple>> only,
                const std::function<bool(const Dense&)>& hit = {}) {
    Entry out;
    if (is_alternating_graph(g)) {
      Dense d{std::vector<std::int64_t>(rows_ * cols_, 0)};
      d.c[g.count_endpoints(1, n_)] = 1;
      out.values.push_back(std::move(d));
      return out;
    }
    std::unordered_set<Dense, DenseHash> seen;
    for (const Triple& tr : only ? *only : triples_of(g)) {
      MultiGraph gl = reduce_triple(g, tr, Branch::L);
      MultiGraph gm = reduce_triple(g, tr, Branch::M);
      MultiGraph gr = reduce_triple(g, tr, Branch::R);
      // copy the value lists: later lookups may grow the memo
      const std::vector<Dense> L = entry(gl).values;
      const std::vector<Dense> M = entry(gm).values;
      const std::vector<Dense> R = entry(gr).values;
      for (std::uint32_t a = 0; a < L.size(); ++a) {
        for (std::uint32_t b = 0; b < M.size(); ++b) {
          for (std::uint32_t c = 0; c < R.size(); ++c) {
            if (++work_ > budget_) throw BudgetExceeded("search budget of " + std::to_string(budget_) + " exhausted");
            Dense d{std::vector<std::int64_t>(rows_ * cols_, 0)};
            for (std::size_t k = 0; k < d.c.size(); ++k) d.c[k] = checked_add(L[a].c[k], R[c].c[k]);
            // multiply the middle value by β: shift one row
            for (std::size_t k = 0; k + cols_ < d.c.size(); ++k) {
              d.c[k + cols_] = checked_add(d.c[k + cols_], M[b].c[k]);
            }
            if (!seen.insert(d).second) continue;
            bool stop = hit && hit(d);
            out.values.push_back(std::move(d));
            out.back.push_back(Back{tr, a, b, c});
            if (stop) return out;
          }
        }
      }
    }
    return out;
  }

  Polynomial to_polynomial(const Dense& d) const {
    Polynomial p;
    for (std::size_t b = 0; b < rows_; ++b) {
      for (std::size_t t = 0; t < cols_; ++t) {
        auto v = d.c[b * cols_ + t];
        if (v == 0) continue;
        p += Polynomial::term(Monomial::of(Var::beta_merged(), static_cast<unsigned>(b)) *
                                  Monomial::of(Var::t(), static_cast<unsigned>(t)),
                              BigInt(v));
      }
    }
    return p;
  }

  // Writes the reductions realizing value `index` of `e` (the entry of g) into `script`.
  void reconstruct(const MultiGraph& g, const Entry& e, std::size_t index, const std::string& path,
                   ReplayScript& script) {
    if (e.back.empty()) return;
    const Back& bk = e.back.at(index);
    script.emplace(path, StepLabel{bk.triple, 0, 0});
    const std::uint32_t idx[3] = {bk.l, bk.m, bk.r};
    for (Branch b : {Branch::L, Branch::M, Branch::R}) {
      MultiGraph child = reduce_triple(g, bk.triple, b);
      const Entry& ce = entry(child);
      reconstruct(child, ce, idx[static_cast<std::size_t>(b)], path + branch_char(b), script);
    }
  }

  std::size_t size() const { return memo_.size(); }
  std::size_t work() const { return work_; }

 private:
  int n_;
  std::size_t rows_, cols_;
  bool use_cache_;
  std::size_t budget_;
  std::size_t work_ = 0;
  std::map<Key, Entry> memo_;
  std::deque<Entry> scratch_;
};

Polynomial shift_merged(const Polynomial& q) { return specialize(q, Specialization::BetaShiftDown); }

bool tree_hits(const SearchConfig& cfg, const ReductionTree& t, Polynomial& q, std::optional<EmbedLevel>& level) {
  q = merged_shifted_q(t);
  switch (cfg.target) {
    case SearchTarget::C7Violation: return violates_c7(q);
    case SearchTarget::Polynomial: return q == *cfg.target_polynomial;
    default: break;
  }
  level = check_embeddability(t).level;
  switch (cfg.target) {
    case SearchTarget::NotExtraStrong: return *level != EmbedLevel::ExtraStrong;
    case SearchTarget::NotStrong: return !(*level >= EmbedLevel::Strong);
    case SearchTarget::NotWeak: return *level == EmbedLevel::None;
    default: return false;
  }
}

SearchResult finish_with_tree(const ReductionTree& t, SearchResult r) {
  r.outcome = SearchOutcome::Found;
  r.witness = script_of(t);
  r.witness_q = merged_shifted_q(t);
  r.witness_level = check_embeddability(t).level;
  return r;
}

}  // namespace

std::vector<Polynomial> achievable_q(const MultiGraph& g, bool use_cache, std::size_t budget) {
  QMemo memo(g.n(), g.edge_count(), use_cache, budget);
  std::vector<Polynomial> out;
  for (const auto& d : memo.entry(g).values) out.push_back(memo.to_polynomial(d));
  return out;
}

std::size_t enumerate_complete_trees(const MultiGraph& g, const std::function<bool(const ReductionTree&)>& visit,
                                     std::size_t max_trees) {
  std::vector<std::size_t> choice, options;
  std::size_t visited = 0;
  for (;;) {
    std::size_t call = 0;
    options.clear();
    Strategy s{"enumerate", [&](const MultiGraph& h, std::string_view) -> std::optional<EdgePair> {
                 auto pairs = reducible_pairs(h);
                 if (pairs.empty()) return std::nullopt;
                 if (call >= choice.size()) choice.push_back(0);
                 options.push_back(pairs.size());
                 return pairs[choice[call++]];
               }};
    ReductionTree t = build_tree(g, s);
    choice.resize(call);
    if (++visited > max_trees) throw BudgetExceeded("tree enumeration budget of " + std::to_string(max_trees) + " exhausted");
    if (visit(t)) return visited;
    // odometer: bump the last position that has another option
    std::size_t pos = choice.size();
    while (pos > 0 && choice[pos - 1] + 1 >= options[pos - 1]) --pos;
    if (pos == 0) return visited;
    ++choice[pos - 1];
    choice.resize(pos);
  }
}

SearchResult search_c7(const SearchConfig& cfg) {
  if (cfg.target == SearchTarget::Polynomial && !cfg.target_polynomial) {
    throw Error("polynomial target needs a target polynomial");
  }
  SearchResult res;
  Polynomial q;
  std::optional<EmbedLevel> level;

  if (cfg.space == SearchSpace::OrderO) {
    ReductionTree t = build_tree(cfg.root, order_O_strategy(), cfg.budget);
    res.trees_examined = 1;
    res.work = t.size();
    if (tree_hits(cfg, t, q, level)) return finish_with_tree(t, res);
    return res;
  }

  if (cfg.space == SearchSpace::Random) {
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      ReductionTree t = build_tree(cfg.root, random_strategy(cfg.seed + k), cfg.budget);
      ++res.trees_examined;
      res.work += t.size();
      if (tree_hits(cfg, t, q, level)) return finish_with_tree(t, res);
    }
    return res;
  }

  if (cfg.target != SearchTarget::C7Violation && cfg.target != SearchTarget::Polynomial) {
    try {
      std::optional<ReductionTree> found;
      res.trees_examined = enumerate_complete_trees(
          cfg.root,
          [&](const ReductionTree& t) {
            res.work += t.size();
            if (!tree_hits(cfg, t, q, level)) return false;
            found = t;
            return true;
          },
          cfg.budget);
      if (found) return finish_with_tree(*found, res);
    } catch (const BudgetExceeded&) {
      res.outcome = SearchOutcome::BudgetExhausted;
    }
    return res;
  }

  // memoized search over Q(β, t) values
  std::function<bool(const Polynomial&)> accept = [&](const Polynomial& shifted) {
    return cfg.target == SearchTarget::C7Violation ? violates_c7(shifted) : shifted == *cfg.target_polynomial;
  };
  const auto root_triples = triples_of(cfg.root);
  const unsigned jobs = std::max(1U, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(root_triples.size(), 1))));

  struct Part {
    std::shared_ptr<QMemo> memo;
    Entry entry;
    std::optional<std::size_t> hit;
    bool exhausted = false;
  };
  std::vector<Part> parts(root_triples.empty() ? 1 : root_triples.size());
  auto run_part = [&](std::size_t p, std::shared_ptr<QMemo> shared) {
    Part& part = parts[p];
    part.memo = shared ? std::move(shared)
                       : std::make_shared<QMemo>(cfg.root.n(), cfg.root.edge_count(), cfg.use_cache, cfg.budget);
    QMemo& memo = *part.memo;
    try {
      std::optional<std::vector<Triple>> only;
      if (!root_triples.empty()) only = std::vector<Triple>{root_triples[p]};
      part.entry = memo.compute(cfg.root, only, [&](const Dense& d) { return accept(shift_merged(memo.to_polynomial(d))); });
      if (!part.entry.values.empty() && accept(shift_merged(memo.to_polynomial(part.entry.values.back())))) {
        part.hit = part.entry.values.size() - 1;
      }
    } catch (const BudgetExceeded&) {
      part.exhausted = true;
    }
  };
  if (jobs <= 1) {
    auto shared = std::make_shared<QMemo>(cfg.root.n(), cfg.root.edge_count(), cfg.use_cache, cfg.budget);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      run_part(p, shared);
      if (parts[p].hit || parts[p].exhausted) {
        parts.resize(p + 1);
        break;
      }
    }
  } else {
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t p;
          {
            std::lock_guard lock(mu);
            if (next >= parts.size()) return;
            p = next++;
          }
          run_part(p, nullptr);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // merge in root-triple order: the first part with a hit wins, as in a serial run
  std::unordered_set<Dense, DenseHash> distinct;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Part& part = parts[p];
    if (p == 0 || part.memo != parts[p - 1].memo) {
      res.memo_entries += part.memo->size();
      res.work += part.memo->work();
    }
    if (part.exhausted) {
      res.outcome = SearchOutcome::BudgetExhausted;
      res.trees_examined = distinct.size();
      return res;
    }
    for (const auto& d : part.entry.values) distinct.insert(d);
    if (part.hit) {
      ReplayScript script;
      part.memo->reconstruct(cfg.root, part.entry, *part.hit, "", script);
      ReductionTree t = build_tree(cfg.root, replay_strategy(script), cfg.budget);
      Polynomial expected = shift_merged(part.memo->to_polynomial(part.entry.values[*part.hit]));
      Polynomial replayed = merged_shifted_q(t);
      if (replayed != expected || !t.is_complete()) {
        throw Error("memoized witness does not replay to its polynomial: " + to_string(replayed) + " vs " +
                    to_string(expected));
      }
      res.trees_examined = distinct.size();
      return finish_with_tree(t, res);
    }
  }
  res.trees_examined = distinct.size();
  return res;
}

}  // namespace redforge
