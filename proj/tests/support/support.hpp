// Test-side helpers: independent reference implementations and random
// generators.  Nothing here is used by the library.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "btl/checker.hpp"
#include "btl/formula.hpp"
#include "btl/tiling.hpp"
#include "btl/tree.hpp"

namespace btltest {

using Rng = std::mt19937_64;

// "{p q}({q},{}({p}))": braces hold the labels, parentheses the children.
btl::Tree tree_of(const std::string& s);

// Every unordered labeled tree with at most max_nodes nodes over the
// propositions, one per isomorphism class.
void for_each_tree(int max_nodes, const std::vector<std::string>& props,
                   const std::function<void(const btl::Tree&)>& f);

// Direct recursive evaluation in leaf-loop mode; paths are enumerated
// explicitly and nothing is cached.
bool ref_state(const btl::Tree& t, int v, const btl::Assignment& u, const btl::Formula& f);
bool ref_path(const btl::Tree& t, const std::vector<int>& path, std::size_t i, const btl::Assignment& u,
              const btl::Formula& f);

btl::Formula random_propositional(Rng& rng, const std::vector<std::string>& props, int depth);

// One-variable hybrid formula whose quantifiers carry Boolean combinations
// of X/F/G/U with state operands.  Atoms p, q, x1, root, true.
btl::Formula random_h1plus(Rng& rng, std::size_t max_size);
// As above but every quantifier carries a single X/F/G/U.
btl::Formula random_h1(Rng& rng, std::size_t max_size);

btl::LassoWord random_lasso(Rng& rng, const std::vector<std::string>& props, std::size_t max_prefix,
                            std::size_t max_period);

// Value of the corridor game computed by backward induction over explicit
// layers of board positions.  The unbounded value uses the horizon
// |T|^width + 1 rows, beyond which no winning play needs to go.
btl::TilingVerdict oracle_tiling(const btl::TilingInstance& I, int width, int max_rows);

// EF game on strings played move by move without decomposition.
bool naive_string_ef(const std::string& s, const std::string& t, int k);

}  // namespace btltest
