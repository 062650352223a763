#include "btl/formula.hpp"

#include <algorithm>
#include <functional>

namespace btl {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Formula make(Kind k, Formula a = {}, Formula b = {}, std::string name = {}, int v = 0) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(name);
    n->var = v;
    n->a = std::move(a);
    n->b = std::move(b);
    std::size_t h = std::hash<int>{}(static_cast<int>(k));
    if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
    h = mix(h, static_cast<std::size_t>(v));
    if (!n->a.empty()) h = mix(h, n->a.hash());
    if (!n->b.empty()) h = mix(h, n->b.hash());
    n->hash = h;
    return Formula(std::move(n));
}

void require(const Formula& f, const char* what) {
    if (f.empty()) throw std::invalid_argument(std::string("empty operand for ") + what);
}

void require_var(int v) {
    if (v < 1) throw std::invalid_argument("variable index must be at least 1");
}

}  // namespace

Kind Formula::kind() const { return n_->kind; }
const Formula& Formula::lhs() const { return n_->a; }
const Formula& Formula::rhs() const { return n_->b; }
const std::string& Formula::name() const { return n_->name; }
int Formula::var() const { return n_->var; }
std::size_t Formula::hash() const { return n_ ? n_->hash : 0; }

bool Formula::operator==(const Formula& o) const {
    if (n_ == o.n_) return true;
    if (!n_ || !o.n_) return false;
    if (n_->hash != o.n_->hash || n_->kind != o.n_->kind || n_->var != o.n_->var ||
        n_->name != o.n_->name)
        return false;
    return n_->a == o.n_->a && n_->b == o.n_->b;
}

Formula top() {
    static const Formula t = make(Kind::True);
    return t;
}
Formula bot() {
    static const Formula f = make(Kind::False);
    return f;
}
Formula prop(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty proposition name");
    return make(Kind::Prop, {}, {}, name);
}
Formula neg(Formula f) { require(f, "!"); return make(Kind::Not, std::move(f)); }
Formula conj(Formula a, Formula b) {
    require(a, "&"); require(b, "&");
    return make(Kind::And, std::move(a), std::move(b));
}
Formula disj(Formula a, Formula b) {
    require(a, "|"); require(b, "|");
    return make(Kind::Or, std::move(a), std::move(b));
}
Formula implies(Formula a, Formula b) {
    require(a, "->"); require(b, "->");
    return make(Kind::Implies, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) {
    require(a, "<->"); require(b, "<->");
    return make(Kind::Iff, std::move(a), std::move(b));
}
Formula exists(Formula p) { require(p, "E"); return make(Kind::Exists, std::move(p)); }
Formula forall(Formula p) { require(p, "A"); return make(Kind::Forall, std::move(p)); }
Formula bind(int v, Formula f) {
    require_var(v); require(f, "down");
    return make(Kind::Bind, std::move(f), {}, {}, v);
}
Formula var(int i) { require_var(i); return make(Kind::Var, {}, {}, {}, i); }
Formula at_var(int v, Formula f) {
    require_var(v); require(f, "@x");
    return make(Kind::AtVar, std::move(f), {}, {}, v);
}
Formula root() {
    static const Formula r = make(Kind::Root);
    return r;
}
Formula at_root(Formula f) { require(f, "@root"); return make(Kind::AtRoot, std::move(f)); }
Formula next(Formula f) { require(f, "X"); return make(Kind::Next, std::move(f)); }
Formula until(Formula a, Formula b) {
    require(a, "U"); require(b, "U");
    return make(Kind::Until, std::move(a), std::move(b));
}
Formula eventually(Formula f) { require(f, "F"); return make(Kind::Eventually, std::move(f)); }
Formula always(Formula f) { require(f, "G"); return make(Kind::Always, std::move(f)); }
Formula prev(Formula f) { require(f, "Y"); return make(Kind::Prev, std::move(f)); }
Formula weak_prev(Formula f) { require(f, "wY"); return make(Kind::WeakPrev, std::move(f)); }
Formula since(Formula a, Formula b) {
    require(a, "S"); require(b, "S");
    return make(Kind::Since, std::move(a), std::move(b));
}
Formula inf_often(Formula f) { require(f, "Finf"); return make(Kind::InfOften, std::move(f)); }
Formula almost_always(Formula f) {
    require(f, "Ginf");
    return make(Kind::AlmostAlways, std::move(f));
}

Formula conj_all(const std::vector<Formula>& fs) {
    Formula acc;
    for (const auto& f : fs) {
        if (f.kind() == Kind::True) continue;
        acc = acc.empty() ? f : conj(acc, f);
    }
    return acc.empty() ? top() : acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
    Formula acc;
    for (const auto& f : fs) {
        if (f.kind() == Kind::False) continue;
        acc = acc.empty() ? f : disj(acc, f);
    }
    return acc.empty() ? bot() : acc;
}

bool is_binary(Kind k) {
    switch (k) {
        case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff:
        case Kind::Until: case Kind::Since:
            return true;
        default:
            return false;
    }
}

bool is_unary(Kind k) {
    switch (k) {
        case Kind::Not: case Kind::Exists: case Kind::Forall: case Kind::Bind:
        case Kind::AtVar: case Kind::AtRoot: case Kind::Next: case Kind::Eventually:
        case Kind::Always: case Kind::Prev: case Kind::WeakPrev: case Kind::InfOften:
        case Kind::AlmostAlways:
            return true;
        default:
            return false;
    }
}

bool is_temporal(Kind k) {
    switch (k) {
        case Kind::Next: case Kind::Until: case Kind::Eventually: case Kind::Always:
        case Kind::Prev: case Kind::WeakPrev: case Kind::Since: case Kind::InfOften:
        case Kind::AlmostAlways:
            return true;
        default:
            return false;
    }
}

bool is_state_formula(const Formula& f) {
    switch (f.kind()) {
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
        case Kind::Exists: case Kind::Forall:
            return true;
        case Kind::Not: case Kind::Bind: case Kind::AtVar: case Kind::AtRoot:
        case Kind::Prev: case Kind::WeakPrev:
            return is_state_formula(f.lhs());
        case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff: case Kind::Since:
            return is_state_formula(f.lhs()) && is_state_formula(f.rhs());
        default:
            return false;
    }
}

std::size_t size(const Formula& f) {
    switch (f.kind()) {
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
            return 1;
        case Kind::Eventually:  // T U f
            return 2 + size(f.lhs());
        case Kind::Always:  // !(T U !f)
            return 4 + size(f.lhs());
        case Kind::Implies:  // !a | b
            return 2 + size(f.lhs()) + size(f.rhs());
        case Kind::Iff:  // (a & b) | (!a & !b)
            return 5 + 2 * size(f.lhs()) + 2 * size(f.rhs());
        default:
            break;
    }
    std::size_t s = 1 + size(f.lhs());
    if (is_binary(f.kind())) s += size(f.rhs());
    return s;
}

std::size_t depth(const Formula& f) {
    switch (f.kind()) {
        case Kind::True: case Kind::False: case Kind::Prop: case Kind::Var: case Kind::Root:
            return 0;
        default:
            break;
    }
    std::size_t d = depth(f.lhs());
    if (is_binary(f.kind())) d = std::max(d, depth(f.rhs()));
    if (f.kind() == Kind::Exists || f.kind() == Kind::Forall) ++d;
    return d;
}

const char* level_name(Level l) {
    switch (l) {
        case Level::CTL: return "CTL";
        case Level::CTLPlus: return "CTL+";
        case Level::CTLStar: return "CTL*";
    }
    return "?";
}

bool is_basic_path(const Formula& f) {
    switch (f.kind()) {
        case Kind::Next: case Kind::Eventually: case Kind::Always: case Kind::Prev:
        case Kind::WeakPrev: case Kind::InfOften: case Kind::AlmostAlways:
            return is_state_formula(f.lhs());
        case Kind::Until: case Kind::Since:
            return is_state_formula(f.lhs()) && is_state_formula(f.rhs());
        default:
            return false;
    }
}

bool is_plus_path(const Formula& f) {
    if (is_state_formula(f) || is_basic_path(f)) return true;
    switch (f.kind()) {
        case Kind::Not:
            return is_plus_path(f.lhs());
        case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff:
            return is_plus_path(f.lhs()) && is_plus_path(f.rhs());
        default:
            return false;
    }
}

namespace {

void classify_rec(const Formula& f, Classification& c) {
    switch (f.kind()) {
        case Kind::Prev: case Kind::WeakPrev: case Kind::Since:
            c.uses_past = true;
            break;
        case Kind::InfOften: case Kind::AlmostAlways:
            c.uses_fairness = true;
            break;
        case Kind::Bind: case Kind::Var: case Kind::AtVar:
            c.k = std::max(c.k, f.var());
            break;
        case Kind::Exists: case Kind::Forall: {
            const Formula& p = f.lhs();
            Level l = Level::CTLStar;
            if (is_basic_path(p)) l = Level::CTL;
            else if (is_plus_path(p)) l = Level::CTLPlus;
            c.level = std::max(c.level, l);
            break;
        }
        default:
            break;
    }
    if (!f.lhs().empty()) classify_rec(f.lhs(), c);
    if (!f.rhs().empty()) classify_rec(f.rhs(), c);
}

}  // namespace

Classification classify(const Formula& f) {
    Classification c;
    classify_rec(f, c);
    // A temporal operator outside every quantifier is a path formula on its
    // own; only past operators over state formulas are allowed there.
    if (!is_state_formula(f)) c.level = Level::CTLStar;
    return c;
}

namespace {

Formula rebuild(const Formula& f, const Formula& a, const Formula& b) {
    if (a == f.lhs() && b == f.rhs()) return f;
    switch (f.kind()) {
        case Kind::Not: return neg(a);
        case Kind::And: return conj(a, b);
        case Kind::Or: return disj(a, b);
        case Kind::Implies: return implies(a, b);
        case Kind::Iff: return iff(a, b);
        case Kind::Exists: return exists(a);
        case Kind::Forall: return forall(a);
        case Kind::Bind: return bind(f.var(), a);
        case Kind::AtVar: return at_var(f.var(), a);
        case Kind::AtRoot: return at_root(a);
        case Kind::Next: return next(a);
        case Kind::Until: return until(a, b);
        case Kind::Eventually: return eventually(a);
        case Kind::Always: return always(a);
        case Kind::Prev: return prev(a);
        case Kind::WeakPrev: return weak_prev(a);
        case Kind::Since: return since(a, b);
        case Kind::InfOften: return inf_often(a);
        case Kind::AlmostAlways: return almost_always(a);
        default: return f;
    }
}

Formula transform(const Formula& f, bool temporal) {
    if (f.lhs().empty()) return f;
    Formula a = transform(f.lhs(), temporal);
    Formula b = f.rhs().empty() ? Formula() : transform(f.rhs(), temporal);
    switch (f.kind()) {
        case Kind::Implies: return disj(neg(a), b);
        case Kind::Iff: return disj(conj(a, b), conj(neg(a), neg(b)));
        case Kind::Eventually:
            if (temporal) return until(top(), a);
            break;
        case Kind::Always:
            if (temporal) return neg(until(top(), neg(a)));
            break;
        default:
            break;
    }
    return rebuild(f, a, b);
}

void props_rec(const Formula& f, std::set<std::string>& out) {
    if (f.kind() == Kind::Prop) out.insert(f.name());
    if (!f.lhs().empty()) props_rec(f.lhs(), out);
    if (!f.rhs().empty()) props_rec(f.rhs(), out);
}

void free_rec(const Formula& f, std::set<int>& bound, std::set<int>& out) {
    switch (f.kind()) {
        case Kind::Var:
            if (!bound.count(f.var())) out.insert(f.var());
            return;
        case Kind::AtVar:
            if (!bound.count(f.var())) out.insert(f.var());
            break;
        case Kind::Bind: {
            bool fresh = bound.insert(f.var()).second;
            free_rec(f.lhs(), bound, out);
            if (fresh) bound.erase(f.var());
            return;
        }
        default:
            break;
    }
    if (!f.lhs().empty()) free_rec(f.lhs(), bound, out);
    if (!f.rhs().empty()) free_rec(f.rhs(), bound, out);
}

}  // namespace

Formula normalize(const Formula& f) { return transform(f, true); }
Formula expand_sugar(const Formula& f) { return transform(f, false); }

std::set<std::string> props_of(const Formula& f) {
    std::set<std::string> out;
    props_rec(f, out);
    return out;
}

int max_var(const Formula& f) { return classify(f).k; }

std::set<int> free_vars(const Formula& f) {
    std::set<int> bound, out;
    free_rec(f, bound, out);
    return out;
}

bool has_free_var(const Formula& f) { return !free_vars(f).empty(); }

}  // namespace btl
