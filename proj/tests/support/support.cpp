#include "support/support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "btl/sat.hpp"

using namespace btl;

namespace btltest {

// ---------------------------------------------------------------------------
// Tree literals.

namespace {

struct TreeParser {
    const std::string& s;
    std::size_t i = 0;
    std::vector<int> parent;
    std::vector<std::vector<std::string>> labels;

    void skip() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    void expect(char c) {
        skip();
        if (i >= s.size() || s[i] != c) throw std::invalid_argument("tree literal: expected '" + std::string(1, c) + "'");
        ++i;
    }
    void node(int par) {
        expect('{');
        std::vector<std::string> props;
        std::string cur;
        while (i < s.size() && s[i] != '}') {
            if (s[i] == ' ') {
                if (!cur.empty()) props.push_back(cur);
                cur.clear();
            } else {
                cur += s[i];
            }
            ++i;
        }
        if (!cur.empty()) props.push_back(cur);
        expect('}');
        parent.push_back(par);
        labels.push_back(props);
        int me = static_cast<int>(parent.size()) - 1;
        skip();
        if (i < s.size() && s[i] == '(') {
            ++i;
            node(me);
            skip();
            while (i < s.size() && s[i] == ',') {
                ++i;
                node(me);
                skip();
            }
            expect(')');
        }
    }
};

}  // namespace

Tree tree_of(const std::string& s) {
    TreeParser p{s};
    p.node(-1);
    p.skip();
    if (p.i != s.size()) throw std::invalid_argument("tree literal: trailing input");
    return Tree::from_parents(p.parent, p.labels);
}

void for_each_tree(int max_nodes, const std::vector<std::string>& props, const std::function<void(const Tree&)>& f) {
    SearchBounds b;
    b.max_depth = std::max(0, max_nodes - 1);
    b.max_branching = std::max(0, max_nodes - 1);
    b.max_nodes = max_nodes;
    b.props = props;
    b.budget = static_cast<std::size_t>(-1);
    enumerate_trees(b, [&](const Tree& t) {
        f(t);
        return true;
    });
}

// ---------------------------------------------------------------------------
// Reference evaluator.

namespace {

std::vector<int> path_to(const Tree& t, int v, int leaf) {
    std::vector<int> p;
    for (int w = leaf; w != v; w = t.parent(w)) p.push_back(w);
    p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

bool ref_state(const Tree& t, int v, const Assignment& u, const Formula& f) {
    switch (f.kind()) {
        case Kind::True: return true;
        case Kind::False: return false;
        case Kind::Prop: return t.has(v, f.name());
        case Kind::Not: return !ref_state(t, v, u, f.lhs());
        case Kind::And: return ref_state(t, v, u, f.lhs()) && ref_state(t, v, u, f.rhs());
        case Kind::Or: return ref_state(t, v, u, f.lhs()) || ref_state(t, v, u, f.rhs());
        case Kind::Implies: return !ref_state(t, v, u, f.lhs()) || ref_state(t, v, u, f.rhs());
        case Kind::Iff: return ref_state(t, v, u, f.lhs()) == ref_state(t, v, u, f.rhs());
        case Kind::Exists:
            for (int leaf : t.leaves_below(v))
                if (ref_path(t, path_to(t, v, leaf), 0, u, f.lhs())) return true;
            return false;
        case Kind::Forall:
            for (int leaf : t.leaves_below(v))
                if (!ref_path(t, path_to(t, v, leaf), 0, u, f.lhs())) return false;
            return true;
        case Kind::Bind: {
            Assignment w = u;
            if (static_cast<int>(w.size()) < f.var()) w.resize(f.var(), 0);
            w[f.var() - 1] = v;
            return ref_state(t, v, w, f.lhs());
        }
        case Kind::Var: return u.at(f.var() - 1) == v;
        case Kind::AtVar: return ref_state(t, u.at(f.var() - 1), u, f.lhs());
        case Kind::Root: return v == 0;
        case Kind::AtRoot: return ref_state(t, 0, u, f.lhs());
        case Kind::Prev: return t.parent(v) >= 0 && ref_state(t, t.parent(v), u, f.lhs());
        case Kind::WeakPrev: return t.parent(v) < 0 || ref_state(t, t.parent(v), u, f.lhs());
        case Kind::Since:
            for (int w = v; w >= 0; w = t.parent(w)) {
                if (ref_state(t, w, u, f.rhs())) return true;
                if (!ref_state(t, w, u, f.lhs())) return false;
            }
            return false;
        default:
            throw std::invalid_argument("ref_state: path operator at state level");
    }
}

bool ref_path(const Tree& t, const std::vector<int>& path, std::size_t i, const Assignment& u, const Formula& f) {
    std::size_t last = path.size() - 1;
    std::size_t p = std::min(i, last);
    if (is_state_formula(f)) return ref_state(t, path[p], u, f);
    switch (f.kind()) {
        case Kind::Not: return !ref_path(t, path, p, u, f.lhs());
        case Kind::And: return ref_path(t, path, p, u, f.lhs()) && ref_path(t, path, p, u, f.rhs());
        case Kind::Or: return ref_path(t, path, p, u, f.lhs()) || ref_path(t, path, p, u, f.rhs());
        case Kind::Implies: return !ref_path(t, path, p, u, f.lhs()) || ref_path(t, path, p, u, f.rhs());
        case Kind::Iff: return ref_path(t, path, p, u, f.lhs()) == ref_path(t, path, p, u, f.rhs());
        case Kind::Next: return ref_path(t, path, std::min(p + 1, last), u, f.lhs());
        case Kind::Until:
            for (std::size_t j = p; j <= last; ++j) {
                if (ref_path(t, path, j, u, f.rhs())) return true;
                if (!ref_path(t, path, j, u, f.lhs())) return false;
            }
            return false;
        case Kind::Eventually:
            for (std::size_t j = p; j <= last; ++j)
                if (ref_path(t, path, j, u, f.lhs())) return true;
            return false;
        case Kind::Always:
            for (std::size_t j = p; j <= last; ++j)
                if (!ref_path(t, path, j, u, f.lhs())) return false;
            return true;
        case Kind::InfOften:
        case Kind::AlmostAlways:
            return ref_path(t, path, last, u, f.lhs());
        default:
            throw std::invalid_argument("ref_path: unsupported operator");
    }
}

// ---------------------------------------------------------------------------
// Random formulas.

Formula random_propositional(Rng& rng, const std::vector<std::string>& props, int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    int c = depth <= 0 ? 5 : pick(rng);
    switch (c) {
        case 0: return neg(random_propositional(rng, props, depth - 1));
        case 1:
        case 2: return conj(random_propositional(rng, props, depth - 1), random_propositional(rng, props, depth - 1));
        case 3: return disj(random_propositional(rng, props, depth - 1), random_propositional(rng, props, depth - 1));
        default: {
            std::uniform_int_distribution<std::size_t> ip(0, props.size() - 1);
            Formula a = prop(props[ip(rng)]);
            return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? neg(a) : a;
        }
    }
}

namespace {

Formula gen_state(Rng& rng, int d, bool plus);

Formula gen_atom(Rng& rng) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: case 1: return prop("p");
        case 2: case 3: return prop("q");
        case 4: return var(1);
        default: return std::uniform_int_distribution<int>(0, 1)(rng) ? root() : top();
    }
}

Formula gen_basic(Rng& rng, int d, bool plus) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return next(gen_state(rng, d, plus));
        case 1: return eventually(gen_state(rng, d, plus));
        case 2: return always(gen_state(rng, d, plus));
        default: return until(gen_state(rng, d, plus), gen_state(rng, d, plus));
    }
}

Formula gen_plus_path(Rng& rng, int d) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: return conj(gen_basic(rng, d, true), gen_basic(rng, d, true));
        case 1: return disj(gen_basic(rng, d, true), gen_basic(rng, d, true));
        case 2: return neg(gen_basic(rng, d, true));
        case 3: return conj(gen_state(rng, d, true), gen_basic(rng, d, true));
        default: return gen_basic(rng, d, true);
    }
}

Formula gen_state(Rng& rng, int d, bool plus) {
    if (d <= 0 || std::uniform_int_distribution<int>(0, 4)(rng) == 0) return gen_atom(rng);
    switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
        case 0: return neg(gen_state(rng, d - 1, plus));
        case 1: return conj(gen_state(rng, d - 1, plus), gen_state(rng, d - 1, plus));
        case 2: return disj(gen_state(rng, d - 1, plus), gen_state(rng, d - 1, plus));
        case 3: return bind(1, gen_state(rng, d - 1, plus));
        case 4: return at_var(1, gen_state(rng, d - 1, plus));
        case 5: return at_root(gen_state(rng, d - 1, plus));
        case 6: case 7:
            return exists(plus ? gen_plus_path(rng, d - 1) : gen_basic(rng, d - 1, plus));
        default:
            return forall(plus ? gen_plus_path(rng, d - 1) : gen_basic(rng, d - 1, plus));
    }
}

Formula gen_sized(Rng& rng, std::size_t max_size, bool plus) {
    for (;;) {
        Formula f = gen_state(rng, 4, plus);
        if (depth(f) >= 1 && size(f) <= max_size) return f;
    }
}

}  // namespace

Formula random_h1plus(Rng& rng, std::size_t max_size) { return gen_sized(rng, max_size, true); }
Formula random_h1(Rng& rng, std::size_t max_size) { return gen_sized(rng, max_size, false); }

LassoWord random_lasso(Rng& rng, const std::vector<std::string>& props, std::size_t max_prefix,
                       std::size_t max_period) {
    LassoWord w;
    auto letter = [&] {
        std::set<std::string> s;
        for (const auto& p : props)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) s.insert(p);
        return s;
    };
    std::size_t np = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
    std::size_t nq = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_period))(rng);
    for (std::size_t i = 0; i < np; ++i) w.prefix.push_back(letter());
    for (std::size_t i = 0; i < nq; ++i) w.period.push_back(letter());
    return w;
}

// ---------------------------------------------------------------------------
// Tiling game by layers.

namespace {

struct Layered {
    int m, W;
    std::vector<char> H, V, F, L;
    std::size_t rows;  // m^W

    bool legal(int j, int prev, int above, int t) const {
        if (j > 0 && !H[prev * m + t]) return false;
        return above < 0 ? F[t] != 0 : V[above * m + t] != 0;
    }
    int digit(std::size_t code, int j) const {
        for (int i = 0; i < j; ++i) code /= m;
        return static_cast<int>(code % m);
    }

    // Value at the start of a row with the given row above (-1: none), where
    // next[c] is the value at the start of the following row below row c.
    bool row_value(long above, const std::vector<char>* next) const {
        // vals[j][c]: c encodes a prefix of length j, column 0 in the lowest digit.
        std::vector<char> cur(rows);
        for (std::size_t c = 0; c < rows; ++c) {
            bool fin = true;
            for (int j = 0; j < W; ++j) fin = fin && L[digit(c, j)];
            cur[c] = fin || (next && (*next)[c]);
        }
        std::size_t width = rows;
        for (int j = W - 1; j >= 0; --j) {
            width /= m;
            std::vector<char> prev(width);
            bool e_turn = j % 2 == 0;
            std::size_t shift = width;
            for (std::size_t c = 0; c < width; ++c) {
                bool val = !e_turn;
                for (int t = 0; t < m; ++t) {
                    int up = above < 0 ? -1 : digit(static_cast<std::size_t>(above), j);
                    if (!legal(j, j > 0 ? digit(c, j - 1) : -1, up, t)) continue;
                    bool w = cur[c + static_cast<std::size_t>(t) * shift] != 0;
                    if (e_turn && w) val = true;
                    if (!e_turn && !w) val = false;
                }
                prev[c] = val;
            }
            cur = std::move(prev);
        }
        return cur[0] != 0;
    }

    bool wins_within(int R) const {
        if (R <= 0) return false;
        std::vector<char> next;
        bool have = false;
        for (int r = R - 1; r >= 1; --r) {
            std::vector<char> here(rows);
            for (std::size_t a = 0; a < rows; ++a) here[a] = row_value(static_cast<long>(a), have ? &next : nullptr);
            next = std::move(here);
            have = true;
        }
        return row_value(-1, have ? &next : nullptr);
    }
};

}  // namespace

TilingVerdict oracle_tiling(const TilingInstance& I, int width, int max_rows) {
    Layered g;
    g.m = static_cast<int>(I.tiles.size());
    g.W = width;
    g.H.assign(g.m * g.m, 0);
    g.V.assign(g.m * g.m, 0);
    g.F.assign(g.m, 0);
    g.L.assign(g.m, 0);
    for (const auto& [a, b] : I.H) g.H[I.index(a) * g.m + I.index(b)] = 1;
    for (const auto& [a, b] : I.V) g.V[I.index(a) * g.m + I.index(b)] = 1;
    for (const auto& t : I.F) g.F[I.index(t)] = 1;
    for (const auto& t : I.L) g.L[I.index(t)] = 1;
    g.rows = 1;
    for (int j = 0; j < width; ++j) g.rows *= g.m;
    if (g.wins_within(max_rows)) return TilingVerdict::EWins;
    int horizon = static_cast<int>(g.rows) + 1;
    if (horizon > max_rows && g.wins_within(horizon)) return TilingVerdict::Inconclusive;
    return TilingVerdict::AWins;
}

// ---------------------------------------------------------------------------
// String EF game.

namespace {

bool ef_iso(const std::string& s, const std::string& t, const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (s[a[i]] != t[b[i]]) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
    }
    return true;
}

bool ef_dup(const std::string& s, const std::string& t, std::vector<int>& a, std::vector<int>& b, int k) {
    if (!ef_iso(s, t, a, b)) return false;
    if (k == 0) return true;
    for (int side = 0; side < 2; ++side) {
        const std::string& here = side == 0 ? s : t;
        const std::string& there = side == 0 ? t : s;
        for (int x = 0; x < static_cast<int>(here.size()); ++x) {
            bool answered = false;
            for (int y = 0; y < static_cast<int>(there.size()) && !answered; ++y) {
                a.push_back(side == 0 ? x : y);
                b.push_back(side == 0 ? y : x);
                answered = ef_dup(s, t, a, b, k - 1);
                a.pop_back();
                b.pop_back();
            }
            if (!answered) return false;
        }
    }
    return true;
}

}  // namespace

bool naive_string_ef(const std::string& s, const std::string& t, int k) {
    std::vector<int> a, b;
    return ef_dup(s, t, a, b, k);
}

}  // namespace btltest
