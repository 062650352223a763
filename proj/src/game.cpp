#include "btl/game.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace btl {

const char* player_name(Player p) { return p == Player::Spoiler ? "spoiler" : "duplicator"; }

GameError::GameError(Code c, int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), code_(c), line_(line) {}

namespace {

bool child_of(const Tree& t, int u, int w) { return t.parent(w) == u; }

// Clauses between one pair and another (or itself).
void compare(const Tree& L, const Tree& R, int x, int y, int u, int w, WinCheck& c) {
    if ((x == u) != (y == w)) c.equality = false;
    if (L.is_ancestor(x, u) != R.is_ancestor(y, w)) c.path = false;
    if (L.is_ancestor(u, x) != R.is_ancestor(w, y)) c.path = false;
    if (child_of(L, x, u) != child_of(R, y, w)) c.child = false;
    if (child_of(L, u, x) != child_of(R, w, y)) c.child = false;
}

void single(const Tree& L, const Tree& R, int x, int y, WinCheck& c) {
    if ((x == L.root()) != (y == R.root())) c.root = false;
    if (L.props(x) != R.props(y)) c.props = false;
}

// Whether adding (x, y) keeps a consistent selection consistent.
bool extends(const Tree& L, const Tree& R, const std::vector<int>& a, const std::vector<int>& b, int x, int y) {
    WinCheck c;
    single(L, R, x, y, c);
    if (!c.duplicator_wins()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        compare(L, R, a[i], b[i], x, y, c);
        if (!c.duplicator_wins()) return false;
    }
    return true;
}

std::vector<int> path_nodes(const Tree& t, int anchor, int leaf) {
    std::vector<int> p;
    for (int v = leaf; v != anchor; v = t.parent(v)) p.push_back(v);
    p.push_back(anchor);
    std::reverse(p.begin(), p.end());
    return p;
}

class Solver {
public:
    Solver(const Tree& l, const Tree& r, std::size_t budget) : L_(l), R_(r), budget_(budget) {}

    // Spoiler wins the remaining k rounds from a consistent selection.
    bool spoiler_wins(std::vector<int>& a, std::vector<int>& b, int k) {
        if (k == 0) return false;
        std::string key = make_key(a, b, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (memo_.size() >= budget_)
            throw GameError(GameError::Code::BudgetExceeded, 0, "game search exceeds the state budget");
        bool r = node_moves(a, b, k, Side::Left) || node_moves(a, b, k, Side::Right) ||
                 path_moves(a, b, k, Side::Left) || path_moves(a, b, k, Side::Right);
        memo_.emplace(std::move(key), r);
        return r;
    }

    std::size_t states() const { return memo_.size(); }

private:
    // After adding (x, y): spoiler wins at once or in the remaining rounds.
    bool after(std::vector<int>& a, std::vector<int>& b, int x, int y, int k) {
        if (!extends(L_, R_, a, b, x, y)) return true;
        a.push_back(x);
        b.push_back(y);
        bool r = spoiler_wins(a, b, k - 1);
        a.pop_back();
        b.pop_back();
        return r;
    }

    // Pair (x on the spoiler's side, y on the duplicator's side) as (left, right).
    bool after_sided(std::vector<int>& a, std::vector<int>& b, Side s, int mine, int theirs, int k) {
        return s == Side::Left ? after(a, b, mine, theirs, k) : after(a, b, theirs, mine, k);
    }

    bool node_moves(std::vector<int>& a, std::vector<int>& b, int k, Side s) {
        const Tree& T = s == Side::Left ? L_ : R_;
        const Tree& U = s == Side::Left ? R_ : L_;
        for (int v = 0; v < static_cast<int>(T.size()); ++v) {
            bool answered = false;
            for (int w = 0; w < static_cast<int>(U.size()) && !answered; ++w)
                answered = !after_sided(a, b, s, v, w, k);
            if (!answered) return true;
        }
        return false;
    }

    bool path_moves(std::vector<int>& a, std::vector<int>& b, int k, Side s) {
        const Tree& T = s == Side::Left ? L_ : R_;
        const Tree& U = s == Side::Left ? R_ : L_;
        const std::vector<int>& mine = s == Side::Left ? a : b;
        const std::vector<int>& theirs = s == Side::Left ? b : a;
        for (std::size_t j = 0; j < mine.size(); ++j) {
            if (!legal_anchor(T, mine, static_cast<int>(j))) continue;
            for (int leaf : T.leaves_below(mine[j])) {
                auto pi = path_nodes(T, mine[j], leaf);
                bool refuted = false;
                for (int leaf2 : U.leaves_below(theirs[j])) {
                    auto pi2 = path_nodes(U, theirs[j], leaf2);
                    // Spoiler picks y on pi2, duplicator answers on pi.
                    bool spoiler_ok = false;
                    for (int y : pi2) {
                        bool answered = false;
                        for (int x : pi) {
                            if (!after_sided(a, b, s, x, y, k)) {
                                answered = true;
                                break;
                            }
                        }
                        if (!answered) {
                            spoiler_ok = true;
                            break;
                        }
                    }
                    if (!spoiler_ok) {
                        refuted = true;
                        break;
                    }
                }
                if (!refuted) return true;
            }
        }
        return false;
    }

    static std::string make_key(const std::vector<int>& a, const std::vector<int>& b, int k) {
        std::vector<std::pair<int, int>> ps;
        for (std::size_t i = 0; i < a.size(); ++i) ps.emplace_back(a[i], b[i]);
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        std::string key = std::to_string(k);
        for (const auto& [x, y] : ps) key += ":" + std::to_string(x) + "," + std::to_string(y);
        return key;
    }

    const Tree& L_;
    const Tree& R_;
    std::size_t budget_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace

WinCheck check_win(const Tree& left, const Tree& right, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("selection lists differ in length");
    WinCheck c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        single(left, right, a[i], b[i], c);
        for (std::size_t j = 0; j < a.size(); ++j) compare(left, right, a[i], b[i], a[j], b[j], c);
    }
    return c;
}

Player winner(const Tree& left, const Tree& right, const std::vector<int>& a, const std::vector<int>& b) {
    return check_win(left, right, a, b).duplicator_wins() ? Player::Duplicator : Player::Spoiler;
}

bool legal_anchor(const Tree& t, const std::vector<int>& sel, int j) {
    if (j < 0 || j >= static_cast<int>(sel.size())) return false;
    int v = sel[j];
    for (int u : sel)
        if (u != v && t.is_ancestor(v, u)) return false;
    return true;
}

std::vector<Move> legal_moves(const GameState& s) {
    std::vector<Move> out;
    if (s.rounds_left <= 0) return out;
    for (Side side : {Side::Left, Side::Right}) {
        const Tree& T = side == Side::Left ? *s.left : *s.right;
        for (int v = 0; v < static_cast<int>(T.size()); ++v) out.push_back({Move::Kind::Node, side, v, -1, -1});
    }
    for (Side side : {Side::Left, Side::Right}) {
        const Tree& T = side == Side::Left ? *s.left : *s.right;
        const auto& sel = side == Side::Left ? s.a : s.b;
        for (int j = 0; j < static_cast<int>(sel.size()); ++j) {
            if (!legal_anchor(T, sel, j)) continue;
            for (int leaf : T.leaves_below(sel[j])) out.push_back({Move::Kind::Path, side, -1, j, leaf});
        }
    }
    return out;
}

Player solve_game(const Tree& left, const Tree& right, int k, const std::vector<int>& pre_a,
                  const std::vector<int>& pre_b, std::size_t state_budget, SolveStats* stats) {
    if (k < 0) throw std::invalid_argument("round count must be nonnegative");
    if (pre_a.size() != pre_b.size()) throw std::invalid_argument("preselections differ in length");
    for (int v : pre_a)
        if (v < 0 || v >= static_cast<int>(left.size())) throw std::invalid_argument("preselected node out of range");
    for (int v : pre_b)
        if (v < 0 || v >= static_cast<int>(right.size())) throw std::invalid_argument("preselected node out of range");
    if (!check_win(left, right, pre_a, pre_b).duplicator_wins()) return Player::Spoiler;
    Solver s(left, right, state_budget);
    std::vector<int> a = pre_a, b = pre_b;
    bool sw = s.spoiler_wins(a, b, k);
    if (stats) stats->states = s.states();
    return sw ? Player::Spoiler : Player::Duplicator;
}

namespace {

struct ReplayState {
    const Tree& L;
    const Tree& R;
    std::vector<int> a, b;
    enum class Expect { SpoilerMove, DupNode, DupPath, SpoilerPick, DupPick } expect = Expect::SpoilerMove;
    Side side = Side::Left;
    int pending_node = -1;
    int anchor = -1;
    std::vector<int> spoiler_path, dup_path;
    int spoiler_pick = -1;
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw GameError(GameError::Code::Syntax, line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Side parse_side(const std::string& tok, int line) {
    if (tok == "L") return Side::Left;
    if (tok == "R") return Side::Right;
    throw GameError(GameError::Code::Syntax, line, "expected L or R, got '" + tok + "'");
}

int lookup(const Tree& t, int ext, int line) {
    int v = t.find(ext);
    if (v < 0) throw GameError(GameError::Code::IllegalMove, line, "unknown node id " + std::to_string(ext));
    return v;
}

}  // namespace

ReplayResult replay(const std::string& script, const Tree& left, const Tree& right, std::optional<int> rounds,
                    const std::vector<int>& pre_a, const std::vector<int>& pre_b) {
    if (pre_a.size() != pre_b.size()) throw std::invalid_argument("preselections differ in length");
    ReplayState st{left, right, pre_a, pre_b, ReplayState::Expect::SpoilerMove, Side::Left, -1, -1, {}, {}, -1};
    ReplayResult res;
    using Expect = ReplayState::Expect;
    auto illegal = [](int line, const std::string& m) { return GameError(GameError::Code::IllegalMove, line, m); };
    auto tree_of = [&](Side s) -> const Tree& { return s == Side::Left ? left : right; };
    auto side_name = [](Side s) { return s == Side::Left ? "L" : "R"; };
    auto finish_round = [&](int x_left, int y_right, const std::string& how) {
        st.a.push_back(x_left);
        st.b.push_back(y_right);
        ++res.rounds;
        std::ostringstream os;
        os << "round " << res.rounds << ": " << how << ", a=" << left.ext_id(x_left)
           << " a'=" << right.ext_id(y_right);
        res.transcript.push_back(os.str());
        st.expect = Expect::SpoilerMove;
    };

    std::istringstream in(script);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok.size() < 2 || (tok[0] != "S" && tok[0] != "D"))
            throw GameError(GameError::Code::Syntax, line, "expected 'S <move>' or 'D <move>'");
        bool spoiler = tok[0] == "S";
        const std::string& what = tok[1];
        auto arity = [&](std::size_t n) {
            if (tok.size() != n) throw GameError(GameError::Code::Syntax, line, "wrong number of fields");
        };
        switch (st.expect) {
            case Expect::SpoilerMove: {
                if (!spoiler) throw illegal(line, "it is the spoiler's turn");
                if (rounds && res.rounds >= *rounds) throw illegal(line, "all rounds have been played");
                if (what == "node") {
                    arity(4);
                    st.side = parse_side(tok[2], line);
                    st.pending_node = lookup(tree_of(st.side), parse_int(tok[3], line, "node id"), line);
                    st.expect = Expect::DupNode;
                } else if (what == "path") {
                    arity(5);
                    st.side = parse_side(tok[2], line);
                    const Tree& T = tree_of(st.side);
                    const auto& sel = st.side == Side::Left ? st.a : st.b;
                    int j = parse_int(tok[3], line, "anchor index");
                    if (j < 0 || j >= static_cast<int>(sel.size()))
                        throw illegal(line, "bad anchor: no selected pair " + std::to_string(j));
                    if (!legal_anchor(T, sel, j))
                        throw illegal(line, "bad anchor: a selected node lies below anchor " + std::to_string(j));
                    int leaf = lookup(T, parse_int(tok[4], line, "leaf id"), line);
                    if (!T.is_leaf(leaf) || !T.is_ancestor(sel[j], leaf))
                        throw illegal(line, "node not on a path: " + tok[4] + " is not a leaf below the anchor");
                    st.anchor = j;
                    st.spoiler_path = path_nodes(T, sel[j], leaf);
                    st.expect = Expect::DupPath;
                } else {
                    throw GameError(GameError::Code::Syntax, line, "spoiler move must be 'node' or 'path'");
                }
                break;
            }
            case Expect::DupNode: {
                if (spoiler || what != "node") throw illegal(line, "the duplicator must answer the node move");
                arity(4);
                Side s = parse_side(tok[2], line);
                if (s == st.side) throw illegal(line, "the duplicator must answer in the other tree");
                int w = lookup(tree_of(s), parse_int(tok[3], line, "node id"), line);
                std::string how = std::string("node move in ") + side_name(st.side);
                if (st.side == Side::Left)
                    finish_round(st.pending_node, w, how);
                else
                    finish_round(w, st.pending_node, how);
                break;
            }
            case Expect::DupPath: {
                if (spoiler || what != "path") throw illegal(line, "the duplicator must answer the path move");
                arity(3);
                Side other = st.side == Side::Left ? Side::Right : Side::Left;
                const Tree& U = tree_of(other);
                int anchor = (other == Side::Left ? st.a : st.b)[st.anchor];
                int leaf = lookup(U, parse_int(tok[2], line, "leaf id"), line);
                if (!U.is_leaf(leaf) || !U.is_ancestor(anchor, leaf))
                    throw illegal(line, "node not on a path: " + tok[2] + " is not a leaf below the paired anchor");
                st.dup_path = path_nodes(U, anchor, leaf);
                st.expect = Expect::SpoilerPick;
                break;
            }
            case Expect::SpoilerPick:
            case Expect::DupPick: {
                bool want_spoiler = st.expect == Expect::SpoilerPick;
                if (spoiler != want_spoiler || what != "pick")
                    throw illegal(line, want_spoiler ? "the spoiler must pick on the duplicator's path"
                                                     : "the duplicator must pick on the spoiler's path");
                arity(3);
                int pos = parse_int(tok[2], line, "position");
                if (pos < 0) throw illegal(line, "node not on path: negative position");
                const auto& p = want_spoiler ? st.dup_path : st.spoiler_path;
                int v = p[std::min<std::size_t>(static_cast<std::size_t>(pos), p.size() - 1)];
                if (want_spoiler) {
                    st.spoiler_pick = v;
                    st.expect = Expect::DupPick;
                } else {
                    std::string how = std::string("path move in ") + side_name(st.side) + " from anchor " +
                                      std::to_string(st.anchor);
                    if (st.side == Side::Left)
                        finish_round(v, st.spoiler_pick, how);
                    else
                        finish_round(st.spoiler_pick, v, how);
                }
                break;
            }
        }
    }
    if (st.expect != Expect::SpoilerMove)
        throw GameError(GameError::Code::Incomplete, 0, "script ends in the middle of a round");
    if (rounds && res.rounds < *rounds)
        throw GameError(GameError::Code::Incomplete, 0,
                        "script plays " + std::to_string(res.rounds) + " of " + std::to_string(*rounds) + " rounds");
    for (int v : st.a) res.a.push_back(left.ext_id(v));
    for (int v : st.b) res.b.push_back(right.ext_id(v));
    res.check = check_win(left, right, st.a, st.b);
    res.winner = res.check.duplicator_wins() ? Player::Duplicator : Player::Spoiler;
    return res;
}

}  // namespace btl
