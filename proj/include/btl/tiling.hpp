// Corridor tiling game: instances, the formula encoder, a family of
// counter instances and a bounded game solver.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "btl/formula.hpp"
#include "btl/tree.hpp"

namespace btl {

class TilingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TilingInstance {
    std::vector<std::string> tiles;
    std::vector<std::pair<std::string, std::string>> H, V;
    std::vector<std::string> F, L;
    int n = 1;

    // Throws TilingError on unknown tiles, duplicates or an empty tile set.
    void validate() const;
    int index(const std::string& tile) const;  // -1 if absent
};

// Proposition carrying tile t in the encoding.
std::string tile_prop(const std::string& tile);

// Names of the parts in output order.  The conjunction starts with chi2 so
// that the first conjunct is row_e.
const std::vector<std::string>& tiling_part_names();

struct TilingEncoding {
    std::vector<std::pair<std::string, Formula>> parts;
    Formula formula;  // conjunction of all parts

    // Accepts part names (chi4a, psi7, ...), the groups chi4/chi6/chi8/chi9
    // and the Greek spellings.  Throws TilingError on unknown names.
    Formula part(const std::string& name) const;
};

// Requires n >= 1.  Throws TilingError when a tile name clashes with a
// reserved proposition or does not yield a valid proposition name.
TilingEncoding encode_tiling_parts(const TilingInstance& I);
Formula encode_tiling(const TilingInstance& I);

// Tiles b^x written as "0l", "1f", ... ; the rows count upward in binary.
TilingInstance corollary_instance(int n);

enum class TilingVerdict { EWins, AWins, Inconclusive };
const char* verdict_name(TilingVerdict v);

struct TilingResult {
    TilingVerdict verdict = TilingVerdict::Inconclusive;
    std::size_t bounded_states = 0;    // memo entries of the bounded search
    std::size_t unbounded_states = 0;  // positions of the unbounded game graph
};

class TilingBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// E places the tiles in even columns, A in odd columns, row by row.  A player
// without a legal move loses; a completed row of L tiles wins for E.
// EWins: E forces a win within max_rows rows.  AWins: E cannot force a win
// in the unbounded game.  Inconclusive otherwise.
TilingResult solve_tiling(const TilingInstance& I, int width, int max_rows, std::size_t state_budget = 2000000);

// models(t, encode_tiling(I)) in leaf-loop mode.
bool strategy_tree_check(const Tree& t, const TilingInstance& I);

}  // namespace btl
