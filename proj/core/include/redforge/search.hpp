#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "redforge/embed.hpp"
#include "redforge/redtree.hpp"

namespace redforge {

enum class SearchSpace { OrderO, AllComplete, Random };
/// What counts as a witness: a negative coefficient in Q(β-1, t), an exact
/// Q(β-1, t), or a complete tree below the named embeddability level.
enum class SearchTarget { C7Violation, Polynomial, NotExtraStrong, NotStrong, NotWeak };

std::string to_string(SearchSpace s);
std::string to_string(SearchTarget t);

struct SearchConfig {
  MultiGraph root;
  SearchSpace space = SearchSpace::AllComplete;
  SearchTarget target = SearchTarget::C7Violation;
  std::optional<Polynomial> target_polynomial;  // Q(β-1, t) in the merged β
  std::uint64_t seed = 0;
  std::size_t samples = 100;                     // random space
  std::size_t budget = 50'000'000;               // combination / node budget
  unsigned jobs = 1;
  bool use_cache = true;
};

enum class SearchOutcome { Found, NotFound, BudgetExhausted };
std::string to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<ReplayScript> witness;
  Polynomial witness_q;            // Q(β-1, t), merged β
  std::optional<EmbedLevel> witness_level;
  std::size_t trees_examined = 0;  // trees built, or distinct root polynomials in the memoized space
  std::size_t memo_entries = 0;
  std::size_t work = 0;            // combinations or nodes spent
};

/// Q(β-1, t) of a complete tree with every β_i identified.
Polynomial merged_shifted_q(const ReductionTree& t);

/// True when the merged expansion has a negative coefficient.
bool violates_c7(const Polynomial& merged_shifted_q);

SearchResult search_c7(const SearchConfig& config);

/**
 * Every distinct Q(β, t) (merged β, unshifted) realized by some complete
 * reduction tree of g, in discovery order. Throws BudgetExceeded.
 */
std::vector<Polynomial> achievable_q(const MultiGraph& g, bool use_cache = true, std::size_t budget = 50'000'000);

/// Calls `visit` on every complete reduction tree of g in lexicographic order of
/// preorder choice strings until it returns true. Returns the number visited;
/// throws BudgetExceeded past `max_trees`.
std::size_t enumerate_complete_trees(const MultiGraph& g, const std::function<bool(const ReductionTree&)>& visit,
                                     std::size_t max_trees);

}  // namespace redforge
