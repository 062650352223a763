// Bounded model search over finite labeled trees.
//
// Trees are enumerated up to isomorphism of unordered labeled trees: child
// order changes no formula's truth value (quantifiers range over all
// children, and the root, variables and histories are preserved by any
// child permutation), so one representative per class suffices.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btl/checker.hpp"
#include "btl/formula.hpp"
#include "btl/tree.hpp"

namespace btl {

struct SearchBounds {
    int max_depth = 3;      // edges on the longest root-to-leaf path
    int max_branching = 2;  // children per node
    std::vector<std::string> props;
    int max_nodes = 0;  // 0: only depth and branching limit the size
    std::size_t budget = 1000000;  // candidate trees
};

class SatBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calls visit on one representative per isomorphism class, ordered by node
// count, then shape code, then labeling.  Stops when visit returns false.
// Returns the number of trees visited.  Throws SatBudgetExceeded past the
// budget.
std::size_t enumerate_trees(const SearchBounds& b, const std::function<bool(const Tree&)>& visit);

// Order-insensitive code of a labeled tree; equal codes iff isomorphic.
std::string canonical_code(const Tree& t);

struct SatResult {
    std::optional<Tree> model;  // empty: unsatisfiable within the bounds
    std::size_t candidates = 0;
};

// First model in enumeration order, re-checked with models().  Propositions
// of f outside b.props are treated as false everywhere.
SatResult bounded_sat(const Formula& f, const SearchBounds& b, PathMode mode = PathMode::LeafLoop);

enum class EquisatVerdict { Agree, Disagree, Inconclusive };
const char* equisat_name(EquisatVerdict v);

struct EquisatResult {
    EquisatVerdict verdict = EquisatVerdict::Inconclusive;
    bool f_sat = false;
    bool g_sat = false;
    bool within_bounds_only = false;  // both unsatisfiable within the bounds
    std::optional<Tree> witness;      // model of the satisfiable side on disagreement
    std::string note;
};

// Inconclusive when a search runs out of budget without a model.
EquisatResult equisat_check(const Formula& f, const Formula& g, const SearchBounds& b,
                            PathMode mode = PathMode::LeafLoop);

}  // namespace btl
