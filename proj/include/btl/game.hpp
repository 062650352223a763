// Ehrenfeucht-style game for hybrid CTL on pairs of finite trees.
//
// Each round selects one node a_i in the left tree and one node a'_i in the
// right tree, by a node move or a path move.  Paths from an anchor are
// identified with the leaves below it (leaf-loop reading: positions past the
// leaf are the leaf itself).
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btl/tree.hpp"

namespace btl {

enum class Side { Left, Right };
enum class Player { Spoiler, Duplicator };
const char* player_name(Player p);

// Per-clause outcome of the duplicator's winning condition.
struct WinCheck {
    bool root = true;      // a_i is the root iff a'_i is
    bool equality = true;  // a_i = a_j iff a'_i = a'_j
    bool props = true;     // same propositions at a_i and a'_i
    bool path = true;      // a_j reachable downward from a_i iff likewise on the right
    bool child = true;     // a_j child of a_i iff likewise on the right
    bool duplicator_wins() const { return root && equality && props && path && child; }
};

// Selections are internal node indices of the respective trees.
WinCheck check_win(const Tree& left, const Tree& right, const std::vector<int>& a, const std::vector<int>& b);
Player winner(const Tree& left, const Tree& right, const std::vector<int>& a, const std::vector<int>& b);

struct GameState {
    const Tree* left = nullptr;
    const Tree* right = nullptr;
    std::vector<int> a, b;  // equal length
    int rounds_left = 0;
};

struct Move {
    enum class Kind { Node, Path };
    Kind kind = Kind::Node;
    Side side = Side::Left;
    int node = -1;    // Node: selected node
    int anchor = -1;  // Path: index into the selection list
    int leaf = -1;    // Path: leaf fixing the path from the anchor
};

// A selected node may anchor a path move only if no other selected node of
// the same tree lies strictly below it.
bool legal_anchor(const Tree& t, const std::vector<int>& sel, int j);

// The spoiler's opening moves of the next round.
std::vector<Move> legal_moves(const GameState& s);

class GameError : public std::runtime_error {
public:
    enum class Code { IllegalMove, Incomplete, Syntax, BudgetExceeded };
    GameError(Code c, int line, const std::string& msg);
    Code code() const { return code_; }
    int line() const { return line_; }

private:
    Code code_;
    int line_;
};

struct SolveStats {
    std::size_t states = 0;
};

// Value of the k-round core game, optionally after preselected pairs.
// Throws GameError(BudgetExceeded) past state_budget memo entries.
Player solve_game(const Tree& left, const Tree& right, int k, const std::vector<int>& pre_a = {},
                  const std::vector<int>& pre_b = {}, std::size_t state_budget = 5000000,
                  SolveStats* stats = nullptr);

struct ReplayResult {
    std::vector<std::string> transcript;
    std::vector<int> a, b;  // external ids
    int rounds = 0;
    WinCheck check;
    Player winner = Player::Duplicator;
};

// Script lines:
//   S node <L|R> <id>            D node <L|R> <id>
//   S path <L|R> <anchor> <leaf-id>
//   D path <leaf-id>
//   S pick <position>            D pick <position>
// '#' starts a comment.  Ids are external node ids, <anchor> indexes the
// selection list (preselected pairs first), <position> counts from the
// anchor (0) along the path.  If rounds is given the script must play
// exactly that many rounds.
ReplayResult replay(const std::string& script, const Tree& left, const Tree& right,
                    std::optional<int> rounds = std::nullopt, const std::vector<int>& pre_a = {},
                    const std::vector<int>& pre_b = {});

}  // namespace btl
