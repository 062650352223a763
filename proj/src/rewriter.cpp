#include "btl/rewriter.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "btl/parser.hpp"

namespace btl {

namespace {

Formula negate(const Formula& f) { return f.kind() == Kind::Not ? f.lhs() : neg(f); }

Formula and2(const Formula& a, const Formula& b) { return conj_all({a, b}); }

// E(a U b), written E F b when a is true.
Formula e_until(const Formula& a, const Formula& b) {
    return a.kind() == Kind::True ? exists(eventually(b)) : exists(until(a, b));
}

Formula rebuild1(const Formula& f, const Formula& a) {
    switch (f.kind()) {
        case Kind::Not: return neg(a);
        case Kind::Bind: return bind(f.var(), a);
        case Kind::AtVar: return at_var(f.var(), a);
        case Kind::AtRoot: return at_root(a);
        case Kind::Prev: return prev(a);
        case Kind::WeakPrev: return weak_prev(a);
        default: throw RewriteError("internal: rebuild1 on unexpected operator");
    }
}

Formula rebuild2(const Formula& f, const Formula& a, const Formula& b) {
    switch (f.kind()) {
        case Kind::And: return conj(a, b);
        case Kind::Or: return disj(a, b);
        case Kind::Implies: return implies(a, b);
        case Kind::Iff: return iff(a, b);
        case Kind::Since: return since(a, b);
        case Kind::Until: return until(a, b);
        default: throw RewriteError("internal: rebuild2 on unexpected operator");
    }
}

// ---------------------------------------------------------------------------
// Negation normal form.

Formula nnf(const Formula& f, bool n) {
    switch (f.kind()) {
        case Kind::True: return n ? bot() : top();
        case Kind::False: return n ? top() : bot();
        case Kind::Prop: case Kind::Var: case Kind::Root: return n ? neg(f) : f;
        case Kind::Not: return nnf(f.lhs(), !n);
        case Kind::And: {
            Formula a = nnf(f.lhs(), n), b = nnf(f.rhs(), n);
            return n ? disj(a, b) : conj(a, b);
        }
        case Kind::Or: {
            Formula a = nnf(f.lhs(), n), b = nnf(f.rhs(), n);
            return n ? conj(a, b) : disj(a, b);
        }
        case Kind::Implies: return nnf(disj(neg(f.lhs()), f.rhs()), n);
        case Kind::Iff: return nnf(disj(conj(f.lhs(), f.rhs()), conj(neg(f.lhs()), neg(f.rhs()))), n);
        case Kind::Exists: return n ? forall(nnf(f.lhs(), true)) : exists(nnf(f.lhs(), false));
        case Kind::Forall: return n ? exists(nnf(f.lhs(), true)) : forall(nnf(f.lhs(), false));
        case Kind::Bind: return bind(f.var(), nnf(f.lhs(), n));
        case Kind::AtVar: return at_var(f.var(), nnf(f.lhs(), n));
        case Kind::AtRoot: return at_root(nnf(f.lhs(), n));
        case Kind::Next: return next(nnf(f.lhs(), n));
        case Kind::Eventually: return n ? always(nnf(f.lhs(), true)) : eventually(nnf(f.lhs(), false));
        case Kind::Always: return n ? eventually(nnf(f.lhs(), true)) : always(nnf(f.lhs(), false));
        case Kind::Until: {
            if (!n) return until(nnf(f.lhs(), false), nnf(f.rhs(), false));
            Formula a = nnf(f.lhs(), false), na = nnf(f.lhs(), true), nb = nnf(f.rhs(), true);
            return disj(until(conj(a, nb), conj(na, nb)), always(nb));
        }
        case Kind::Prev: return n ? weak_prev(nnf(f.lhs(), true)) : prev(nnf(f.lhs(), false));
        case Kind::WeakPrev: return n ? prev(nnf(f.lhs(), true)) : weak_prev(nnf(f.lhs(), false));
        case Kind::Since: {
            if (!n) return since(nnf(f.lhs(), false), nnf(f.rhs(), false));
            Formula a = nnf(f.lhs(), false), na = nnf(f.lhs(), true), nb = nnf(f.rhs(), true);
            return disj(since(conj(a, nb), conj(na, nb)), since(nb, conj(nb, weak_prev(bot()))));
        }
        case Kind::InfOften: return n ? almost_always(nnf(f.lhs(), true)) : inf_often(nnf(f.lhs(), false));
        case Kind::AlmostAlways: return n ? inf_often(nnf(f.lhs(), true)) : almost_always(nnf(f.lhs(), false));
    }
    return f;
}

// ---------------------------------------------------------------------------
// U-normal and E-normal forms.

void require_ctl_path(const Formula& p) {
    switch (p.kind()) {
        case Kind::Next: case Kind::Eventually: case Kind::Always: case Kind::Until:
            if (is_basic_path(p)) return;
            break;
        default:
            break;
    }
    throw RewriteError("input not CTL-shaped: quantifier over '" + print_formula(p) + "'");
}

Formula normal_form(const Formula& f, bool u_form) {
    auto rec = [&](const Formula& g) { return normal_form(g, u_form); };
    switch (f.kind()) {
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
            return f;
        case Kind::Not: case Kind::Bind: case Kind::AtVar: case Kind::AtRoot:
            return rebuild1(f, rec(f.lhs()));
        case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff:
            return rebuild2(f, rec(f.lhs()), rec(f.rhs()));
        case Kind::Exists: case Kind::Forall:
            break;
        default:
            throw RewriteError("input not CTL-shaped: '" + print_formula(f) + "' outside the H_k fragment");
    }
    const Formula& p = f.lhs();
    require_ctl_path(p);
    bool ex = f.kind() == Kind::Exists;
    Formula a = rec(p.lhs());
    switch (p.kind()) {
        case Kind::Next:
            return ex ? exists(next(a)) : neg(exists(next(neg(a))));
        case Kind::Until: {
            Formula b = rec(p.rhs());
            if (ex || u_form) return ex ? exists(until(a, b)) : forall(until(a, b));
            // A(a U b) == !E(!b U (!b & !a)) & !EG !b
            return conj(neg(exists(until(neg(b), conj(neg(b), neg(a))))), neg(exists(always(neg(b)))));
        }
        case Kind::Eventually:
            if (u_form) return ex ? exists(until(top(), a)) : forall(until(top(), a));
            return ex ? exists(eventually(a)) : neg(exists(always(neg(a))));
        case Kind::Always:
            if (u_form) return ex ? neg(forall(until(top(), neg(a)))) : neg(exists(until(top(), neg(a))));
            return ex ? exists(always(a)) : neg(exists(eventually(neg(a))));
        default:
            break;
    }
    throw RewriteError("internal: unexpected CTL operator");
}

// ---------------------------------------------------------------------------
// Path formulas under one quantifier as a disjunction of conjunctions of
// literals (negations pushed, E distributed over disjunction).

enum class Lit { State, Next, Globally, Until, Prev, WeakPrev, Since, InfOften, NotInfOften, AlmostAlways };

struct Literal {
    Lit k;
    Formula a, b;
};

using Conjunct = std::vector<Literal>;
using Dnf = std::vector<Conjunct>;

struct DnfBuilder {
    bool past_literals;  // treat top-level Y/wY/S as literals
    std::set<int>* steps;

    void note(int s) {
        if (steps) steps->insert(s);
    }

    static Dnf single(Lit k, Formula a, Formula b = {}) { return {{Literal{k, std::move(a), std::move(b)}}}; }

    static Dnf product(const Dnf& x, const Dnf& y) {
        Dnf out;
        for (const auto& c : x)
            for (const auto& d : y) {
                Conjunct e = c;
                e.insert(e.end(), d.begin(), d.end());
                out.push_back(std::move(e));
            }
        return out;
    }

    static Dnf sum(Dnf x, const Dnf& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    }

    Dnf build(const Formula& f, bool n) {
        Kind k = f.kind();
        bool past = k == Kind::Prev || k == Kind::WeakPrev || k == Kind::Since;
        if (is_state_formula(f) && !(past_literals && past)) return single(Lit::State, n ? negate(f) : f);
        switch (k) {
            case Kind::Not: return build(f.lhs(), !n);
            case Kind::And: return n ? sum(build(f.lhs(), true), build(f.rhs(), true))
                                     : product(build(f.lhs(), false), build(f.rhs(), false));
            case Kind::Or: return n ? product(build(f.lhs(), true), build(f.rhs(), true))
                                    : sum(build(f.lhs(), false), build(f.rhs(), false));
            case Kind::Implies: return build(disj(neg(f.lhs()), f.rhs()), n);
            case Kind::Iff:
                return build(disj(conj(f.lhs(), f.rhs()), conj(neg(f.lhs()), neg(f.rhs()))), n);
            case Kind::Next:
                if (n) note(1);
                return single(Lit::Next, n ? negate(f.lhs()) : f.lhs());
            case Kind::Eventually:
                return n ? single(Lit::Globally, negate(f.lhs())) : single(Lit::Until, top(), f.lhs());
            case Kind::Always:
                return n ? single(Lit::Until, top(), negate(f.lhs())) : single(Lit::Globally, f.lhs());
            case Kind::Until: {
                if (!n) return single(Lit::Until, f.lhs(), f.rhs());
                note(3);
                const Formula &a = f.lhs(), &b = f.rhs();
                return sum(single(Lit::Until, and2(a, negate(b)), and2(negate(a), negate(b))),
                           single(Lit::Globally, negate(b)));
            }
            case Kind::Prev:
                if (n) note(2);
                return n ? single(Lit::WeakPrev, negate(f.lhs())) : single(Lit::Prev, f.lhs());
            case Kind::WeakPrev:
                if (n) note(2);
                return n ? single(Lit::Prev, negate(f.lhs())) : single(Lit::WeakPrev, f.lhs());
            case Kind::Since: {
                if (!n) return single(Lit::Since, f.lhs(), f.rhs());
                note(4);
                const Formula &a = f.lhs(), &b = f.rhs();
                return sum(single(Lit::Since, and2(a, negate(b)), and2(negate(a), negate(b))),
                           single(Lit::Since, negate(b), and2(negate(b), weak_prev(bot()))));
            }
            case Kind::InfOften:
                return single(n ? Lit::NotInfOften : Lit::InfOften, f.lhs());
            case Kind::AlmostAlways:
                if (n) note(5);
                return n ? single(Lit::InfOften, negate(f.lhs())) : single(Lit::AlmostAlways, f.lhs());
            default:
                throw RewriteError("unsupported path operator in '" + print_formula(f) + "'");
        }
    }
};

struct Untl {
    Formula a, b;
};

// Components of one conjunct after the merges.
struct Parts {
    std::vector<Formula> state;  // state formulas and extracted past literals
    bool has_next = false;
    Formula next_arg;
    bool has_g = false;
    Formula g_arg;
    bool has_ginf = false;
    Formula ginf_arg;
    std::vector<Untl> untils;
    std::vector<Formula> finf, nfinf;
};

Parts split(const Conjunct& c, std::set<int>* steps) {
    Parts p;
    std::vector<Formula> xs, gs, gis, ys, wys;
    for (const auto& l : c) {
        switch (l.k) {
            case Lit::State: p.state.push_back(l.a); break;
            case Lit::Next: xs.push_back(l.a); break;
            case Lit::Globally: gs.push_back(l.a); break;
            case Lit::Until: p.untils.push_back({l.a, l.b}); break;
            case Lit::Prev: ys.push_back(l.a); break;
            case Lit::WeakPrev: wys.push_back(l.a); break;
            case Lit::Since: p.state.push_back(since(l.a, l.b)); break;
            case Lit::InfOften: p.finf.push_back(l.a); break;
            case Lit::NotInfOften: p.nfinf.push_back(l.a); break;
            case Lit::AlmostAlways: gis.push_back(l.a); break;
        }
    }
    auto note = [&](int s) {
        if (steps) steps->insert(s);
    };
    if (xs.size() > 1) note(7);
    if (ys.size() > 1 || wys.size() > 1) note(8);
    if (gs.size() > 1) note(9);
    if (gis.size() > 1) note(10);
    if (!ys.empty()) p.state.push_back(prev(conj_all(ys)));
    if (!wys.empty()) p.state.push_back(weak_prev(conj_all(wys)));
    if (!xs.empty()) { p.has_next = true; p.next_arg = conj_all(xs); }
    if (!gs.empty()) { p.has_g = true; p.g_arg = conj_all(gs); }
    if (!gis.empty()) { p.has_ginf = true; p.ginf_arg = conj_all(gis); }
    return p;
}

// Translation of E over one conjunct (no state parts) into nested basic
// quantifiers.  Fairness tails end in a residue E(G phi & Finf k ...) that
// the caller resolves.
struct Core {
    std::set<int>* steps;

    void note(int s) {
        if (steps) steps->insert(s);
    }

    Formula tail(Formula g, bool has_g, const Formula& ginf, bool has_ginf, const std::vector<Formula>& finf,
                 const std::vector<Formula>& nfinf) {
        Formula psi = has_g ? g : top();
        if (has_ginf) {
            note(14);
            return e_until(psi, tail(and2(psi, ginf), true, {}, false, finf, nfinf));
        }
        if (!nfinf.empty()) {
            note(15);
            std::vector<Formula> parts{psi};
            for (const auto& l : nfinf) parts.push_back(negate(l));
            return e_until(psi, tail(conj_all(parts), true, {}, false, finf, {}));
        }
        if (!finf.empty()) {
            std::vector<Formula> parts;
            if (has_g) parts.push_back(always(g));
            for (const auto& k : finf) parts.push_back(inf_often(k));
            Formula body = parts[0];
            for (std::size_t i = 1; i < parts.size(); ++i) body = conj(body, parts[i]);
            return exists(body);
        }
        if (has_g) return exists(always(g));
        return top();
    }

    Formula chain(const std::vector<Untl>& us, const std::vector<std::size_t>& perm, std::size_t k, const Parts& p) {
        if (k == perm.size()) return tail(p.g_arg, p.has_g, p.ginf_arg, p.has_ginf, p.finf, p.nfinf);
        std::vector<Formula> left;
        for (std::size_t j = k; j < perm.size(); ++j) left.push_back(us[perm[j]].a);
        if (p.has_g) left.push_back(p.g_arg);
        return e_until(conj_all(left), and2(us[perm[k]].b, chain(us, perm, k + 1, p)));
    }

    Formula without_next(const Parts& p) {
        if (p.untils.empty()) return tail(p.g_arg, p.has_g, p.ginf_arg, p.has_ginf, p.finf, p.nfinf);
        note(13);
        std::vector<std::size_t> perm(p.untils.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Formula> alts;
        do {
            alts.push_back(chain(p.untils, perm, 0, p));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return disj_all(alts);
    }

    Formula run(const Parts& p) {
        if (!p.has_next) return without_next(p);
        note(12);
        std::size_t n = p.untils.size();
        if (n > 20) throw RewriteError("too many until conjuncts for subset expansion");
        std::vector<Formula> alts;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<Formula> now;
            Parts rest = p;
            rest.has_next = false;
            rest.untils.clear();
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) now.push_back(p.untils[i].b);
            }
            if (p.has_g) now.push_back(p.g_arg);
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) continue;
                now.push_back(p.untils[i].a);
                rest.untils.push_back(p.untils[i]);
            }
            now.push_back(exists(next(and2(p.next_arg, without_next(rest)))));
            alts.push_back(conj_all(now));
        }
        return disj_all(alts);
    }
};

Formula translate_e(const Formula& path, bool past_literals, std::set<int>* steps) {
    DnfBuilder db{past_literals, steps};
    Dnf d = db.build(path, false);
    if (d.size() > 1 && steps) steps->insert(6);
    Core core{steps};
    std::vector<Formula> alts;
    for (const auto& c : d) {
        Parts p = split(c, steps);
        std::vector<Formula> parts = p.state;
        bool has_past = false;
        for (const auto& l : c)
            if (l.k == Lit::Prev || l.k == Lit::WeakPrev || l.k == Lit::Since) has_past = true;
        if (has_past && steps) steps->insert(11);
        parts.push_back(core.run(p));
        alts.push_back(conj_all(parts));
    }
    return disj_all(alts);
}

// ---------------------------------------------------------------------------

Formula ctlplus_rec(const Formula& f) {
    switch (f.kind()) {
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
            return f;
        case Kind::Not: case Kind::Bind: case Kind::AtVar: case Kind::AtRoot:
            return rebuild1(f, ctlplus_rec(f.lhs()));
        case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff:
            return rebuild2(f, ctlplus_rec(f.lhs()), ctlplus_rec(f.rhs()));
        case Kind::Exists: case Kind::Forall:
            break;
        default:
            throw RewriteError("operator outside the CTL+ fragment in '" + print_formula(f) + "'");
    }
    const Formula& p = f.lhs();
    if (!is_plus_path(p)) throw RewriteError("beyond CTL+: '" + print_formula(f) + "'");
    // Translate the state operands first.
    std::function<Formula(const Formula&)> inner = [&](const Formula& g) -> Formula {
        if (is_state_formula(g)) return ctlplus_rec(g);
        switch (g.kind()) {
            case Kind::Prev: case Kind::WeakPrev: case Kind::Since: case Kind::InfOften:
            case Kind::AlmostAlways:
                throw RewriteError("past and fairness operators are outside the CTL+ fragment");
            case Kind::Not: return neg(inner(g.lhs()));
            case Kind::Next: return next(inner(g.lhs()));
            case Kind::Eventually: return eventually(inner(g.lhs()));
            case Kind::Always: return always(inner(g.lhs()));
            default: return rebuild2(g, inner(g.lhs()), inner(g.rhs()));
        }
    };
    Formula q = inner(p);
    if (is_basic_path(q)) return f.kind() == Kind::Exists ? exists(q) : forall(q);
    if (f.kind() == Kind::Exists) return translate_e(q, false, nullptr);
    return neg(translate_e(neg(q), false, nullptr));
}

// ---------------------------------------------------------------------------
// Past and fairness elimination.

struct PastFair {
    std::set<int> steps;

    Formula run(const Formula& f) {
        switch (f.kind()) {
            case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
                return f;
            case Kind::Not: case Kind::Bind: case Kind::AtVar: case Kind::AtRoot: case Kind::Prev:
            case Kind::WeakPrev:
                return rebuild1(f, run(f.lhs()));
            case Kind::And: case Kind::Or: case Kind::Since:
                return rebuild2(f, run(f.lhs()), run(f.rhs()));
            case Kind::Forall:
                return neg(run(exists(neg(f.lhs()))));
            case Kind::Exists:
                break;
            default:
                throw RewriteError("unsupported operator '" + print_formula(f) + "' at state level");
        }
        const Formula& p = f.lhs();
        if (!is_plus_path(p)) throw RewriteError("outside the supported fragment: '" + print_formula(f) + "'");
        std::function<Formula(const Formula&)> inner = [&](const Formula& g) -> Formula {
            if (is_state_formula(g) && g.kind() != Kind::Prev && g.kind() != Kind::WeakPrev &&
                g.kind() != Kind::Since)
                return run(g);
            if (is_unary(g.kind())) {
                Formula a = inner(g.lhs());
                switch (g.kind()) {
                    case Kind::Not: return neg(a);
                    case Kind::Next: return next(a);
                    case Kind::Eventually: return eventually(a);
                    case Kind::Always: return always(a);
                    case Kind::Prev: return prev(a);
                    case Kind::WeakPrev: return weak_prev(a);
                    case Kind::InfOften: return inf_often(a);
                    case Kind::AlmostAlways: return almost_always(a);
                    default: break;
                }
            }
            return rebuild2(g, inner(g.lhs()), inner(g.rhs()));
        };
        return translate_e(inner(p), true, &steps);
    }
};

bool is_residue(const Formula& f) {
    if (f.kind() != Kind::Exists) return false;
    std::function<bool(const Formula&)> has_finf = [&](const Formula& g) {
        if (g.kind() == Kind::InfOften) return true;
        if (g.kind() == Kind::And) return has_finf(g.lhs()) || has_finf(g.rhs());
        return false;
    };
    return has_finf(f.lhs());
}

struct FairnessStep {
    std::string prefix;
    int counter = 0;
    std::vector<std::string> fresh;
    std::vector<Formula> constraints;

    Formula run(const Formula& f, bool positive) {
        switch (f.kind()) {
            case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
                return f;
            case Kind::Not:
                return neg(run(f.lhs(), !positive));
            case Kind::Bind: case Kind::AtVar: case Kind::AtRoot: case Kind::Prev: case Kind::WeakPrev:
                return rebuild1(f, run(f.lhs(), positive));
            case Kind::And: case Kind::Or: case Kind::Since:
                return rebuild2(f, run(f.lhs(), positive), run(f.rhs(), positive));
            case Kind::Exists:
                break;
            default:
                throw RewriteError("internal: unexpected operator in fairness step");
        }
        if (!is_residue(f)) {
            const Formula& p = f.lhs();
            Formula a = run(p.lhs(), positive);
            switch (p.kind()) {
                case Kind::Next: return exists(next(a));
                case Kind::Always: return exists(always(a));
                case Kind::Eventually: return exists(eventually(a));
                case Kind::Until: return exists(until(a, run(p.rhs(), positive)));
                default: throw RewriteError("internal: unexpected quantifier body in fairness step");
            }
        }
        if (!positive)
            throw RewriteError("Finf under negation cannot be replaced by fresh propositions: '" +
                               print_formula(f) + "'");
        Formula g = top();
        std::vector<Formula> kappas;
        std::function<void(const Formula&)> collect = [&](const Formula& x) {
            if (x.kind() == Kind::And) {
                collect(x.lhs());
                collect(x.rhs());
            } else if (x.kind() == Kind::Always) {
                g = x.lhs();
            } else {
                kappas.push_back(x.lhs());
            }
        };
        collect(f.lhs());
        std::vector<Formula> body{run(g, true)};
        for (const auto& k : kappas) {
            if (has_free_var(k))
                throw RewriteError("Finf argument with a free variable: '" + print_formula(k) + "'");
            std::string name = prefix + std::to_string(++counter);
            fresh.push_back(name);
            Formula pi = prop(name);
            Formula kk = run(k, true);
            constraints.push_back(forall(always(neg(exists(always(conj(pi, negate(kk))))))));
            body.push_back(pi);
        }
        return exists(always(conj_all(body)));
    }
};

bool has_fairness(const Formula& f) {
    if (f.kind() == Kind::InfOften || f.kind() == Kind::AlmostAlways) return true;
    return (!f.lhs().empty() && has_fairness(f.lhs())) || (!f.rhs().empty() && has_fairness(f.rhs()));
}

}  // namespace

Formula push_negations(const Formula& f) { return nnf(f, false); }

Formula to_u_normal(const Formula& f) { return normal_form(f, true); }
Formula to_e_normal(const Formula& f) { return normal_form(f, false); }

Formula ctlplus_to_ctl(const Formula& f) {
    if (!is_state_formula(f)) throw RewriteError("expected a state formula");
    return ctlplus_rec(f);
}

RewriteReport eliminate_past_fairness(const Formula& f, const std::string& fresh_prefix) {
    if (!is_state_formula(f)) throw RewriteError("expected a state formula");
    if (fresh_prefix.empty()) throw RewriteError("fresh proposition prefix must be nonempty");
    for (const auto& p : props_of(f))
        if (p.rfind(fresh_prefix, 0) == 0)
            throw RewriteError("input proposition '" + p + "' uses the reserved prefix '" + fresh_prefix + "'");
    RewriteReport rep;
    rep.input = f;
    rep.input_size = size(f);
    PastFair pf;
    Formula g = pf.run(expand_sugar(f));
    rep.steps = pf.steps;
    if (has_fairness(g)) {
        FairnessStep fs;
        fs.prefix = fresh_prefix;
        Formula h = fs.run(g, true);
        std::vector<Formula> parts = fs.constraints;
        parts.push_back(h);
        g = conj_all(parts);
        rep.fresh_props = fs.fresh;
        rep.satisfiability_only = !fs.fresh.empty();
        if (rep.satisfiability_only) rep.steps.insert(16);
    }
    rep.output = g;
    rep.output_size = size(g);
    return rep;
}

bool is_h1_past(const Formula& f) {
    switch (f.kind()) {
        case Kind::InfOften: case Kind::AlmostAlways:
            return false;
        case Kind::Exists: case Kind::Forall: {
            const Formula& p = f.lhs();
            switch (p.kind()) {
                case Kind::Next: case Kind::Eventually: case Kind::Always: case Kind::Until:
                    break;
                default:
                    return false;
            }
            if (!is_basic_path(p)) return false;
            return is_h1_past(p.lhs()) && (p.rhs().empty() || is_h1_past(p.rhs()));
        }
        default:
            break;
    }
    if (!f.lhs().empty() && !is_h1_past(f.lhs())) return false;
    if (!f.rhs().empty() && !is_h1_past(f.rhs())) return false;
    return true;
}

bool is_ctl_shaped(const Formula& f) {
    switch (f.kind()) {
        case Kind::Prev: case Kind::WeakPrev: case Kind::Since: case Kind::InfOften: case Kind::AlmostAlways:
            return false;
        case Kind::Exists: case Kind::Forall: {
            const Formula& p = f.lhs();
            switch (p.kind()) {
                case Kind::Next: case Kind::Eventually: case Kind::Always: case Kind::Until:
                    break;
                default:
                    return false;
            }
            if (!is_basic_path(p)) return false;
            return is_ctl_shaped(p.lhs()) && (p.rhs().empty() || is_ctl_shaped(p.rhs()));
        }
        default:
            break;
    }
    if (!f.lhs().empty() && !is_ctl_shaped(f.lhs())) return false;
    if (!f.rhs().empty() && !is_ctl_shaped(f.rhs())) return false;
    return true;
}

}  // namespace btl
