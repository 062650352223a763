#include "btl/sat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace btl {

namespace {

// A canonical tree: root label and a nondecreasing multiset of children,
// each an index into the pool one height level below.
struct CTree {
    unsigned label = 0;
    std::vector<std::pair<int, int>> kids;  // (size, index)
};

class Enumerator {
public:
    Enumerator(const SearchBounds& b) : b_(b) {
        if (b.max_depth < 0 || b.max_branching < 0) throw std::invalid_argument("bounds must be nonnegative");
        if (b.props.size() > 16) throw std::invalid_argument("at most 16 propositions are supported");
        labels_ = 1u << b.props.size();
        // Sized once so that references into the pools stay valid.
        pools_.assign(static_cast<std::size_t>(b.max_depth) + 1, std::vector<Slot>(size_cap() + 1));
    }

    // Trees with exactly s nodes, height <= h.
    const std::vector<CTree>& pool(int h, int s) {
        auto& slot = pools_.at(h).at(s);
        if (slot.built) return slot.trees;
        slot.built = true;
        if (s == 1) {
            for (unsigned l = 0; l < labels_; ++l) slot.trees.push_back({l, {}});
            return slot.trees;
        }
        if (h == 0 || b_.max_branching == 0) return slot.trees;
        std::vector<std::pair<int, int>> kids;
        std::vector<std::vector<std::pair<int, int>>> shapes;
        collect(h - 1, s - 1, {1, 0}, kids, shapes);
        for (const auto& ks : shapes)
            for (unsigned l = 0; l < labels_; ++l) {
                slot.trees.push_back({l, ks});
                if (slot.trees.size() > kMemoryGuard)
                    throw SatBudgetExceeded("tree stratum too large to enumerate");
            }
        return slot.trees;
    }

    // Builds the parent array and labels of t (pool level h) in preorder.
    void expand(int h, const CTree& t, int parent, std::vector<int>& par, std::vector<std::vector<std::string>>& lab) {
        par.push_back(parent);
        std::vector<std::string> props;
        for (std::size_t i = 0; i < b_.props.size(); ++i)
            if (t.label & (1u << i)) props.push_back(b_.props[i]);
        lab.push_back(std::move(props));
        int me = static_cast<int>(par.size()) - 1;
        for (const auto& [sz, idx] : t.kids) expand(h - 1, pool(h - 1, sz)[idx], me, par, lab);
    }

    int size_cap() const {
        long long cap = 0, layer = 1;
        for (int d = 0; d <= b_.max_depth; ++d) {
            cap += layer;
            layer *= std::max(b_.max_branching, 0);
            if (cap > kSizeLimit) break;
        }
        cap = std::min<long long>(cap, kSizeLimit);
        if (b_.max_nodes > 0) cap = std::min<long long>(cap, b_.max_nodes);
        return static_cast<int>(cap);
    }

private:
    static constexpr std::size_t kMemoryGuard = 20000000;
    static constexpr long long kSizeLimit = 64;

    struct Slot {
        bool built = false;
        std::vector<CTree> trees;
    };

    // Multisets of children from level h with sizes summing to rest, each
    // element >= lo in (size, index) order.
    void collect(int h, int rest, std::pair<int, int> lo, std::vector<std::pair<int, int>>& cur,
                 std::vector<std::vector<std::pair<int, int>>>& out) {
        if (rest == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= b_.max_branching) return;
        for (int sz = lo.first; sz <= rest; ++sz) {
            const auto& p = pool(h, sz);
            for (int i = (sz == lo.first ? lo.second : 0); i < static_cast<int>(p.size()); ++i) {
                cur.emplace_back(sz, i);
                collect(h, rest - sz, {sz, i}, cur, out);
                cur.pop_back();
            }
        }
    }

    const SearchBounds& b_;
    unsigned labels_;
    std::vector<std::vector<Slot>> pools_;
};

struct Codes {
    std::string shape, full;
};

Codes codes(const Tree& t, int v) {
    std::vector<Codes> cs;
    for (int c : t.children(v)) cs.push_back(codes(t, c));
    std::sort(cs.begin(), cs.end(), [](const Codes& x, const Codes& y) {
        return std::tie(x.shape, x.full) < std::tie(y.shape, y.full);
    });
    Codes out;
    out.shape = "(";
    out.full = "(";
    for (const auto& p : t.props(v)) out.full += p + ",";
    for (const auto& c : cs) {
        out.shape += c.shape;
        out.full += c.full;
    }
    out.shape += ")";
    out.full += ")";
    return out;
}

// Labeling of a tree in the preorder induced by the shape-first child order.
void label_sequence(const Tree& t, int v, const std::vector<std::string>& props, std::string& out) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < props.size(); ++i)
        if (t.has(v, props[i])) mask |= 1u << i;
    out += std::to_string(mask) + ",";
    std::vector<std::pair<Codes, int>> cs;
    for (int c : t.children(v)) cs.emplace_back(codes(t, c), c);
    std::sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.shape, x.first.full) < std::tie(y.first.shape, y.first.full);
    });
    for (const auto& [c, w] : cs) label_sequence(t, w, props, out);
}

}  // namespace

std::string canonical_code(const Tree& t) { return codes(t, t.root()).full; }

std::size_t enumerate_trees(const SearchBounds& b, const std::function<bool(const Tree&)>& visit) {
    Enumerator en(b);
    std::size_t visited = 0;
    int cap = en.size_cap();
    for (int n = 1; n <= cap; ++n) {
        const auto& stratum = en.pool(b.max_depth, n);
        // Order by shape code, then labeling.
        std::vector<std::pair<std::pair<std::string, std::string>, Tree>> keyed;
        keyed.reserve(stratum.size());
        for (const auto& ct : stratum) {
            std::vector<int> par;
            std::vector<std::vector<std::string>> lab;
            en.expand(b.max_depth, ct, -1, par, lab);
            Tree t = Tree::from_parents(par, lab);
            std::string seq;
            label_sequence(t, 0, b.props, seq);
            keyed.push_back({{codes(t, 0).shape, seq}, std::move(t)});
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [key, t] : keyed) {
            if (visited >= b.budget)
                throw SatBudgetExceeded("more than " + std::to_string(b.budget) + " candidate trees");
            ++visited;
            if (!visit(t)) return visited;
        }
    }
    return visited;
}

SatResult bounded_sat(const Formula& f, const SearchBounds& b, PathMode mode) {
    if (!is_state_formula(f)) throw std::invalid_argument("bounded_sat needs a state formula");
    SatResult res;
    res.candidates = enumerate_trees(b, [&](const Tree& t) {
        TreeChecker c(t, mode);
        if (!c.models(f)) return true;
        res.model = t;
        return false;
    });
    if (res.model && !models(*res.model, f, mode))
        throw std::logic_error("bounded_sat: returned model fails the re-check");
    return res;
}

const char* equisat_name(EquisatVerdict v) {
    switch (v) {
        case EquisatVerdict::Agree: return "agree";
        case EquisatVerdict::Disagree: return "disagree";
        case EquisatVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

EquisatResult equisat_check(const Formula& f, const Formula& g, const SearchBounds& b, PathMode mode) {
    EquisatResult r;
    std::optional<SatResult> rf, rg;
    try {
        rf = bounded_sat(f, b, mode);
    } catch (const SatBudgetExceeded&) {
    }
    try {
        rg = bounded_sat(g, b, mode);
    } catch (const SatBudgetExceeded&) {
    }
    r.f_sat = rf && rf->model;
    r.g_sat = rg && rg->model;
    if (!rf || !rg) {
        r.verdict = EquisatVerdict::Inconclusive;
        r.note = std::string("budget exhausted for ") + (!rf ? (!rg ? "both formulas" : "the first formula")
                                                            : "the second formula");
        return r;
    }
    if (r.f_sat == r.g_sat) {
        r.verdict = EquisatVerdict::Agree;
        r.within_bounds_only = !r.f_sat;
        r.note = r.f_sat ? "both satisfiable" : "both unsatisfiable within the bounds only";
        return r;
    }
    r.verdict = EquisatVerdict::Disagree;
    r.witness = r.f_sat ? rf->model : rg->model;
    r.note = r.f_sat ? "only the first formula has a model" : "only the second formula has a model";
    return r;
}

}  // namespace btl
