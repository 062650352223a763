#include "btl/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace btl {

Tree unravel(const TransitionSystem& ts, int depth, std::size_t max_nodes) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    ts.validate();
    auto succ = ts.successors();
    std::vector<int> parent{-1};
    std::vector<int> state{ts.index_of(ts.initial)};
    std::vector<int> level{0};
    // Breadth-first would also do; preorder keeps sibling order stable.
    std::vector<TreeNodeSpec> specs;
    specs.push_back({0, ts.states[state[0]].props, {}});
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (level[x] == depth) continue;
        for (int s : succ[state[x]]) {
            if (specs.size() >= max_nodes)
                throw std::length_error("unraveling exceeds " + std::to_string(max_nodes) + " nodes");
            int id = static_cast<int>(specs.size());
            specs.push_back({id, ts.states[s].props, {}});
            specs[x].children.push_back(id);
            parent.push_back(static_cast<int>(x));
            state.push_back(s);
            level.push_back(level[x] + 1);
        }
        for (auto it = specs[x].children.rbegin(); it != specs[x].children.rend(); ++it)
            stack.push_back(static_cast<std::size_t>(*it));
    }
    return Tree::from_specs(0, specs);
}

TransitionSystem build_A(int i) {
    if (i < 0) throw std::invalid_argument("index must be nonnegative");
    TransitionSystem ts;
    for (int j = 0; j <= i; ++j) {
        ts.states.push_back({2 * j, {"p"}});
        ts.states.push_back({2 * j + 1, {}});
    }
    ts.initial = 2 * i;
    for (int j = 0; j <= i; ++j) {
        ts.edges.push_back({2 * j, 2 * j + 1});
        ts.edges.push_back({2 * j + 1, 2 * j + 1});
        for (int l = 0; l < j; ++l) ts.edges.push_back({2 * j + 1, 2 * l});
    }
    return ts;
}

TransitionSystem build_B(int k, int S, int N) {
    (void)k;
    if (S < 1) throw std::invalid_argument("B needs a white path of length at least 1");
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    TransitionSystem ts = build_A(N);
    int base = 2 * (N + 1);
    int r = base;
    ts.states.push_back({r, {"p"}});
    for (int j = 1; j <= S; ++j) ts.states.push_back({base + j, {}});
    ts.initial = r;
    ts.edges.push_back({r, base + 1});
    for (int j = 1; j < S; ++j) ts.edges.push_back({base + j, base + j + 1});
    ts.edges.push_back({base + S, base + S});
    ts.edges.push_back({base + S, r});
    for (int j = 1; j <= S; ++j)
        for (int l = 0; l <= N; ++l) ts.edges.push_back({base + j, 2 * l});
    return ts;
}

int max_black_on_path(const Tree& t, const std::string& p) {
    std::vector<int> count(t.size(), 0);
    int best = 0;
    for (std::size_t v = 0; v < t.size(); ++v) {
        int par = t.parent(static_cast<int>(v));
        count[v] = (par >= 0 ? count[par] : 0) + (t.has(static_cast<int>(v), p) ? 1 : 0);
        best = std::max(best, count[v]);
    }
    return best;
}

namespace {

// Picking position i in s and j in t splits both strings; on linear orders
// the remaining game decomposes into the left parts and the right parts.
class StringGame {
public:
    bool equiv(const std::string& s, const std::string& t, int k) {
        if (k == 0) return true;
        if (s == t) return true;
        if (s.empty() != t.empty()) return false;
        std::string key = s < t ? s + "|" + t : t + "|" + s;
        key += "|" + std::to_string(k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = forth(s, t, k) && forth(t, s, k);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    bool forth(const std::string& s, const std::string& t, int k) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            bool answered = false;
            for (std::size_t j = 0; j < t.size() && !answered; ++j) {
                if (s[i] != t[j]) continue;
                answered = equiv(s.substr(0, i), t.substr(0, j), k - 1) &&
                           equiv(s.substr(i + 1), t.substr(j + 1), k - 1);
            }
            if (!answered) return false;
        }
        return true;
    }

    std::unordered_map<std::string, bool> memo_;
};

void check_alphabet(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1') throw std::invalid_argument("strings must be over {0,1}");
}

}  // namespace

bool string_ef_equiv(const std::string& s, const std::string& t, int k) {
    if (k < 0) throw std::invalid_argument("round count must be nonnegative");
    check_alphabet(s);
    check_alphabet(t);
    StringGame g;
    return g.equiv(s, t, k);
}

SResult compute_S(int k, int search_bound) {
    if (k < 0 || search_bound < 0) throw std::invalid_argument("k and search_bound must be nonnegative");
    StringGame g;
    SResult res;
    res.search_bound = search_bound;
    std::vector<std::string> reps;  // class representatives, shortest first
    for (int len = 0; len <= search_bound; ++len) {
        for (long code = 0; code < (1L << len); ++code) {
            std::string s(static_cast<std::size_t>(len), '0');
            for (int b = 0; b < len; ++b)
                if (code & (1L << (len - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
            const std::string* rep = nullptr;
            for (const auto& r : reps)
                if (g.equiv(r, s, k)) {
                    rep = &r;
                    break;
                }
            if (!rep) {
                reps.push_back(s);
                rep = &reps.back();
                res.S = std::max(res.S, len);
            }
            res.representative.emplace(s, *rep);
        }
    }
    res.stabilized = res.S < search_bound;
    return res;
}

int compute_N(int k, const std::map<int, int>& S) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    int N = 0;
    for (int j = 1; j <= k; ++j) {
        auto s3 = S.find(3), sj = S.find(j);
        if (s3 == S.end() || sj == S.end()) throw std::invalid_argument("S table lacks S_3 or S_" + std::to_string(j));
        N = N + std::max(s3->second, sj->second) + 1;
    }
    return N;
}

}  // namespace btl
