#include "btl/checker.hpp"

#include <algorithm>

namespace btl {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 18;

struct CNode {
    Kind kind = Kind::True;
    int a = -1;
    int b = -1;
    int prop = -1;
    int var = 0;
    bool state = false;
    std::vector<int> fv;  // free variables, ascending
};

std::vector<int> merge_fv(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

struct TreeChecker::Impl {
    const Tree& t;
    PathMode mode;
    int n;
    std::vector<CNode> nodes;
    std::unordered_map<Formula, int, FormulaHash> ids;
    std::unordered_map<std::string, int> prop_ids;
    std::vector<std::vector<char>> prop_cols;
    std::vector<std::vector<std::int8_t>> dense;
    std::vector<std::unordered_map<std::uint64_t, std::int8_t>> sparse;
    std::vector<std::vector<int>> leaf_paths;  // root path per node, filled for leaves

    Impl(const Tree& tree, PathMode m) : t(tree), mode(m), n(static_cast<int>(tree.size())) {
        leaf_paths.resize(tree.size());
        for (int v = 0; v < n; ++v)
            if (tree.is_leaf(v)) leaf_paths[v] = tree.path_from_root(v);
    }

    int prop_column(const std::string& name) {
        auto it = prop_ids.find(name);
        if (it != prop_ids.end()) return it->second;
        std::vector<char> col(n, 0);
        for (int v = 0; v < n; ++v) col[v] = t.has(v, name) ? 1 : 0;
        int id = static_cast<int>(prop_cols.size());
        prop_cols.push_back(std::move(col));
        prop_ids.emplace(name, id);
        return id;
    }

    int compile(const Formula& f) {
        auto it = ids.find(f);
        if (it != ids.end()) return it->second;
        CNode c;
        c.kind = f.kind();
        c.var = f.var();
        if (!f.lhs().empty()) c.a = compile(f.lhs());
        if (!f.rhs().empty()) c.b = compile(f.rhs());
        switch (c.kind) {
            case Kind::Prop: c.prop = prop_column(f.name()); break;
            case Kind::Var: c.fv = {c.var}; break;
            case Kind::AtVar: c.fv = merge_fv({c.var}, nodes[c.a].fv); break;
            case Kind::Bind:
                c.fv = nodes[c.a].fv;
                c.fv.erase(std::remove(c.fv.begin(), c.fv.end(), c.var), c.fv.end());
                break;
            default:
                if (c.a >= 0) c.fv = nodes[c.a].fv;
                if (c.b >= 0) c.fv = merge_fv(c.fv, nodes[c.b].fv);
                break;
        }
        c.state = is_state_formula(f);
        if ((c.kind == Kind::Prev || c.kind == Kind::WeakPrev || c.kind == Kind::Since) && !c.state)
            throw CheckError("past operators over path formulas are only supported on lasso words");
        int id = static_cast<int>(nodes.size());
        nodes.push_back(std::move(c));
        std::size_t cap = static_cast<std::size_t>(n);
        bool fits = true;
        for (std::size_t j = 0; j < nodes.back().fv.size(); ++j) {
            if (cap > kDenseLimit / static_cast<std::size_t>(n)) { fits = false; break; }
            cap *= static_cast<std::size_t>(n);
        }
        dense.emplace_back();
        sparse.emplace_back();
        if (nodes.back().state && fits) dense.back().assign(cap, -1);
        ids.emplace(f, id);
        return id;
    }

    std::uint64_t key(const CNode& c, int v, const Assignment& u) const {
        std::uint64_t k = static_cast<std::uint64_t>(v);
        std::uint64_t mult = static_cast<std::uint64_t>(n);
        for (int x : c.fv) {
            k += static_cast<std::uint64_t>(u[x - 1]) * mult;
            mult *= static_cast<std::uint64_t>(n);
        }
        return k;
    }

    bool eval(int id, int v, Assignment& u) {
        const CNode& c = nodes[id];
        switch (c.kind) {
            case Kind::True: return true;
            case Kind::False: return false;
            case Kind::Prop: return prop_cols[c.prop][v] != 0;
            case Kind::Var: return u[c.var - 1] == v;
            case Kind::Root: return v == 0;
            case Kind::Not: return !eval(c.a, v, u);
            case Kind::And: return eval(c.a, v, u) && eval(c.b, v, u);
            case Kind::Or: return eval(c.a, v, u) || eval(c.b, v, u);
            case Kind::Implies: return !eval(c.a, v, u) || eval(c.b, v, u);
            case Kind::Iff: return eval(c.a, v, u) == eval(c.b, v, u);
            default: break;
        }
        std::uint64_t k = key(c, v, u);
        if (!dense[id].empty()) {
            auto& slot = dense[id][k];
            if (slot >= 0) return slot != 0;
            bool r = compute(id, v, u);
            dense[id][k] = r ? 1 : 0;
            return r;
        }
        auto it = sparse[id].find(k);
        if (it != sparse[id].end()) return it->second != 0;
        bool r = compute(id, v, u);
        sparse[id].emplace(k, r ? 1 : 0);
        return r;
    }

    bool compute(int id, int v, Assignment& u) {
        const CNode c = nodes[id];
        switch (c.kind) {
            case Kind::Bind: {
                int saved = u[c.var - 1];
                u[c.var - 1] = v;
                bool r = eval(c.a, v, u);
                u[c.var - 1] = saved;
                return r;
            }
            case Kind::AtVar: return eval(c.a, u[c.var - 1], u);
            case Kind::AtRoot: return eval(c.a, 0, u);
            case Kind::Prev: return v != 0 && eval(c.a, t.parent(v), u);
            case Kind::WeakPrev: return v == 0 || eval(c.a, t.parent(v), u);
            case Kind::Since:
                if (eval(c.b, v, u)) return true;
                return v != 0 && eval(c.a, v, u) && eval(id, t.parent(v), u);
            case Kind::Exists:
            case Kind::Forall: {
                bool want = c.kind == Kind::Exists;
                std::vector<char> vals;
                int dv = t.depth(v);
                for (int w = v; w < v + t.subtree_size(v); ++w) {
                    if (!t.is_leaf(w)) continue;
                    const auto& rp = leaf_paths[w];
                    path_vals(c.a, rp.data() + dv, static_cast<int>(rp.size()) - dv, u, vals);
                    if ((vals[0] != 0) == want) return want;
                }
                return !want;
            }
            default:
                throw CheckError("unexpected path operator at state level");
        }
    }

    // Values of a path formula at positions 0..L-1 of the path p[0..L-1].
    void path_vals(int id, const int* p, int L, Assignment& u, std::vector<char>& out) {
        const CNode& c = nodes[id];
        out.assign(L, 0);
        if (c.state) {
            for (int j = 0; j < L; ++j) out[j] = eval(id, p[j], u) ? 1 : 0;
            return;
        }
        std::vector<char> a, b;
        int ca = c.a, cb = c.b;
        Kind k = c.kind;
        path_vals(ca, p, L, u, a);
        if (cb >= 0) path_vals(cb, p, L, u, b);
        bool strict = mode == PathMode::Strict;
        switch (k) {
            case Kind::Not:
                for (int j = 0; j < L; ++j) out[j] = !a[j];
                break;
            case Kind::And:
                for (int j = 0; j < L; ++j) out[j] = a[j] && b[j];
                break;
            case Kind::Or:
                for (int j = 0; j < L; ++j) out[j] = a[j] || b[j];
                break;
            case Kind::Implies:
                for (int j = 0; j < L; ++j) out[j] = !a[j] || b[j];
                break;
            case Kind::Iff:
                for (int j = 0; j < L; ++j) out[j] = a[j] == b[j];
                break;
            case Kind::Next:
                for (int j = 0; j + 1 < L; ++j) out[j] = a[j + 1];
                out[L - 1] = strict ? 0 : a[L - 1];
                break;
            case Kind::Until:
                out[L - 1] = b[L - 1];
                for (int j = L - 2; j >= 0; --j) out[j] = b[j] || (a[j] && out[j + 1]);
                break;
            case Kind::Eventually:
                out[L - 1] = a[L - 1];
                for (int j = L - 2; j >= 0; --j) out[j] = a[j] || out[j + 1];
                break;
            case Kind::Always:
                out[L - 1] = a[L - 1];
                for (int j = L - 2; j >= 0; --j) out[j] = a[j] && out[j + 1];
                break;
            case Kind::InfOften:
                for (int j = 0; j < L; ++j) out[j] = strict ? 0 : a[L - 1];
                break;
            case Kind::AlmostAlways:
                for (int j = 0; j < L; ++j) out[j] = strict ? 1 : a[L - 1];
                break;
            default:
                throw CheckError("unsupported operator in path formula");
        }
    }
};

TreeChecker::TreeChecker(const Tree& t, PathMode mode) : t_(t), impl_(std::make_unique<Impl>(t, mode)) {}
TreeChecker::~TreeChecker() = default;

namespace {

void validate_assignment(const Tree& t, const Assignment& u, const Formula& f) {
    int k = max_var(f);
    if (static_cast<int>(u.size()) < k)
        throw CheckError("assignment has " + std::to_string(u.size()) + " entries but the formula uses x" +
                         std::to_string(k));
    for (int x : u)
        if (x < 0 || x >= static_cast<int>(t.size()))
            throw CheckError("assignment entry " + std::to_string(x) + " is not a node");
}

}  // namespace

bool TreeChecker::check(const Formula& f, int v, const Assignment& u) {
    if (!is_state_formula(f)) throw CheckError("check expects a state formula");
    if (v < 0 || v >= static_cast<int>(t_.size())) throw CheckError("node " + std::to_string(v) + " out of range");
    validate_assignment(t_, u, f);
    int id = impl_->compile(f);
    Assignment w = u;
    return impl_->eval(id, v, w);
}

bool TreeChecker::check_path(const TreePath& pi, std::size_t i, const Assignment& u, const Formula& psi) {
    const auto& p = pi.nodes;
    if (p.empty()) throw CheckError("empty path");
    for (int x : p)
        if (x < 0 || x >= static_cast<int>(t_.size())) throw CheckError("path node out of range");
    for (std::size_t j = 1; j < p.size(); ++j)
        if (t_.parent(p[j]) != p[j - 1]) throw CheckError("path does not follow child edges");
    if (!t_.is_leaf(p.back())) throw CheckError("path does not end at a leaf");
    if (impl_->mode == PathMode::Strict && i >= p.size()) throw CheckError("position beyond the end of the path");
    validate_assignment(t_, u, psi);
    int id = impl_->compile(psi);
    Assignment w = u;
    std::vector<char> vals;
    impl_->path_vals(id, p.data(), static_cast<int>(p.size()), w, vals);
    return vals[std::min(i, p.size() - 1)] != 0;
}

bool TreeChecker::models(const Formula& f) {
    Assignment u(static_cast<std::size_t>(max_var(f)), 0);
    return check(f, 0, u);
}

bool check_state(const Tree& t, int v, const Assignment& u, const Formula& f, PathMode mode) {
    TreeChecker c(t, mode);
    return c.check(f, v, u);
}

bool check_path(const Tree& t, const TreePath& pi, std::size_t i, const Assignment& u, const Formula& psi,
                PathMode mode) {
    TreeChecker c(t, mode);
    return c.check_path(pi, i, u, psi);
}

bool models(const Tree& t, const Formula& f, PathMode mode) {
    TreeChecker c(t, mode);
    return c.models(f);
}

// ---------------------------------------------------------------------------
// Lasso words.  Every subformula's truth sequence is ultimately periodic with
// the word's period q; a sequence is stored as its prefix followed by one
// period.

namespace {

struct Seq {
    std::size_t pre = 0;
    std::vector<char> val;  // pre + q entries
};

class LassoEval {
public:
    explicit LassoEval(const LassoWord& w) : w_(w), m_(w.prefix.size()), q_(w.period.size()) {
        if (q_ == 0) throw CheckError("lasso period must be nonempty");
    }

    char at(const Seq& s, std::size_t i) const {
        return i < s.pre ? s.val[i] : s.val[s.pre + (i - s.pre) % q_];
    }

    Seq extend(const Seq& s, std::size_t pre) const {
        if (pre <= s.pre) return s;
        Seq r;
        r.pre = pre;
        r.val.resize(pre + q_);
        for (std::size_t i = 0; i < pre + q_; ++i) r.val[i] = at(s, i);
        return r;
    }

    Seq constant(char c) const {
        Seq s;
        s.val.assign(q_, c);
        return s;
    }

    Seq eval(const Formula& f) {
        auto it = memo_.find(f);
        if (it != memo_.end()) return it->second;
        Seq r = compute(f);
        memo_.emplace(f, r);
        return r;
    }

private:
    const std::set<std::string>& letter(std::size_t i) const {
        return i < m_ ? w_.prefix[i] : w_.period[(i - m_) % q_];
    }

    Seq until_seq(const Seq& a0, const Seq& b0) const {
        std::size_t P = std::max(a0.pre, b0.pre);
        Seq a = extend(a0, P), b = extend(b0, P);
        Seq r;
        r.pre = P;
        r.val.assign(P + q_, 0);
        // Loop part: least fixpoint, two backward sweeps around the cycle.
        char carry = 0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = q_; j-- > 0;) {
                std::size_t i = P + j;
                char nxt = (j + 1 == q_) ? carry : r.val[i + 1];
                r.val[i] = b.val[i] || (a.val[i] && nxt);
            }
            carry = r.val[P];
        }
        for (std::size_t i = P; i-- > 0;) r.val[i] = b.val[i] || (a.val[i] && r.val[i + 1]);
        return r;
    }

    Seq since_seq(const Seq& a0, const Seq& b0) const {
        std::size_t P = std::max(a0.pre, b0.pre);
        std::vector<char> out;
        char carry = 0;
        for (std::size_t i = 0; i < P; ++i) {
            carry = at(b0, i) || (at(a0, i) && carry);
            out.push_back(carry);
        }
        // Carry into each period pass is a monotone function of the previous
        // one, so it repeats after at most two passes.
        std::vector<char> carries{carry};
        std::vector<std::vector<char>> passes;
        while (true) {
            std::vector<char> pass(q_);
            char c = carries.back();
            for (std::size_t j = 0; j < q_; ++j) {
                std::size_t i = P + j;
                c = at(b0, i) || (at(a0, i) && c);
                pass[j] = c;
            }
            passes.push_back(std::move(pass));
            if (c == carries.back()) break;
            carries.push_back(c);
        }
        Seq r;
        r.pre = P + (passes.size() - 1) * q_;
        r.val = out;
        for (const auto& p : passes) r.val.insert(r.val.end(), p.begin(), p.end());
        return r;
    }

    Seq compute(const Formula& f) {
        switch (f.kind()) {
            case Kind::True: return constant(1);
            case Kind::False: return constant(0);
            case Kind::Prop: {
                Seq s;
                s.pre = m_;
                s.val.resize(m_ + q_);
                for (std::size_t i = 0; i < m_ + q_; ++i) s.val[i] = letter(i).count(f.name()) ? 1 : 0;
                return s;
            }
            case Kind::Not: {
                Seq s = eval(f.lhs());
                for (auto& c : s.val) c = !c;
                return s;
            }
            case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff: {
                Seq a = eval(f.lhs()), b = eval(f.rhs());
                std::size_t P = std::max(a.pre, b.pre);
                a = extend(a, P);
                b = extend(b, P);
                for (std::size_t i = 0; i < a.val.size(); ++i) {
                    switch (f.kind()) {
                        case Kind::And: a.val[i] = a.val[i] && b.val[i]; break;
                        case Kind::Or: a.val[i] = a.val[i] || b.val[i]; break;
                        case Kind::Implies: a.val[i] = !a.val[i] || b.val[i]; break;
                        default: a.val[i] = a.val[i] == b.val[i]; break;
                    }
                }
                return a;
            }
            case Kind::Next: {
                Seq a = eval(f.lhs());
                Seq r;
                r.pre = a.pre > 0 ? a.pre - 1 : 0;
                r.val.resize(r.pre + q_);
                for (std::size_t i = 0; i < r.val.size(); ++i) r.val[i] = at(a, i + 1);
                return r;
            }
            case Kind::Prev: case Kind::WeakPrev: {
                Seq a = eval(f.lhs());
                Seq r;
                r.pre = a.pre + 1;
                r.val.resize(r.pre + q_);
                r.val[0] = f.kind() == Kind::WeakPrev ? 1 : 0;
                for (std::size_t i = 1; i < r.val.size(); ++i) r.val[i] = at(a, i - 1);
                return r;
            }
            case Kind::Until: return until_seq(eval(f.lhs()), eval(f.rhs()));
            case Kind::Eventually: return until_seq(constant(1), eval(f.lhs()));
            case Kind::Always: {
                Seq na = eval(f.lhs());
                for (auto& c : na.val) c = !c;
                Seq r = until_seq(constant(1), na);
                for (auto& c : r.val) c = !c;
                return r;
            }
            case Kind::Since: return since_seq(eval(f.lhs()), eval(f.rhs()));
            // A word has one path from each position, its own suffix.
            case Kind::Exists: case Kind::Forall: return eval(f.lhs());
            case Kind::InfOften: case Kind::AlmostAlways: {
                Seq a = eval(f.lhs());
                bool any = false, all = true;
                for (std::size_t j = 0; j < q_; ++j) {
                    char c = a.val[a.pre + j];
                    any = any || c;
                    all = all && c;
                }
                return constant(f.kind() == Kind::InfOften ? any : all);
            }
            default:
                throw CheckError("unsupported operator in lasso formula (hybrid operators have no meaning on words)");
        }
    }

    const LassoWord& w_;
    std::size_t m_, q_;
    std::unordered_map<Formula, Seq, FormulaHash> memo_;
};

}  // namespace

bool lasso_eval_at(const LassoWord& w, const Formula& psi, std::size_t position) {
    LassoEval ev(w);
    Seq s = ev.eval(psi);
    return ev.at(s, position) != 0;
}

bool lasso_eval(const LassoWord& w, const Formula& psi) { return lasso_eval_at(w, psi, 0); }

}  // namespace btl
