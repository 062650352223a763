#include "doctest.h"

#include <functional>
#include <set>

#include "btl/parser.hpp"
#include "btl/sat.hpp"
#include "support/support.hpp"

using namespace btl;

namespace {
SearchBounds bounds(int depth, int branching, std::vector<std::string> props) {
    SearchBounds b;
    b.max_depth = depth;
    b.max_branching = branching;
    b.props = std::move(props);
    return b;
}
}  // namespace

TEST_SUITE("sat") {
    TEST_CASE("enumeration yields one tree per isomorphism class") {
        // Four labels.  Three nodes: chain 4^3 plus cherry 4 * C(5,2).  Four nodes: chain 256,
        // fork below a child 4 * 4 * 10, path and leaf 4 * 16 * 4, three leaves 4 * C(6,3).
        SearchBounds b = bounds(3, 3, {"p", "q"});
        b.max_nodes = 4;
        std::set<std::string> seen;
        std::vector<int> by_size(5, 0);
        std::size_t n = enumerate_trees(b, [&](const Tree& t) {
            CHECK(seen.insert(canonical_code(t)).second);
            ++by_size[t.size()];
            return true;
        });
        CHECK(n == seen.size());
        CHECK(by_size[1] == 4);
        CHECK(by_size[2] == 16);
        CHECK(by_size[3] == 64 + 40);
        CHECK(by_size[4] == 256 + 160 + 256 + 80);
    }

    TEST_CASE("pruned enumeration matches naive enumeration") {
        // Every parent array with parent[i] < i and every labeling, up to 4 nodes.
        const std::vector<std::string> props{"p", "q"};
        std::set<std::string> naive;
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> parent(n, -1);
            std::function<void(int)> shapes = [&](int i) {
                if (i == n) {
                    int combos = 1 << (2 * n);
                    for (int mask = 0; mask < combos; ++mask) {
                        std::vector<std::vector<std::string>> labels(n);
                        for (int v = 0; v < n; ++v)
                            for (int j = 0; j < 2; ++j)
                                if (mask & (1 << (2 * v + j))) labels[v].push_back(props[j]);
                        naive.insert(canonical_code(Tree::from_parents(parent, labels)));
                    }
                    return;
                }
                for (int p = 0; p < i; ++p) {
                    parent[i] = p;
                    shapes(i + 1);
                }
            };
            shapes(1);
        }
        SearchBounds b = bounds(3, 3, props);
        b.max_nodes = 4;
        std::set<std::string> pruned;
        enumerate_trees(b, [&](const Tree& t) {
            pruned.insert(canonical_code(t));
            return true;
        });
        CHECK(pruned == naive);
    }

    TEST_CASE("witnesses are deterministic") {
        Formula f = parse_formula("E(F p & F q) & A X !p");
        auto a = bounded_sat(f, bounds(2, 2, {"p", "q"}));
        auto b = bounded_sat(f, bounds(2, 2, {"p", "q"}));
        REQUIRE(a.model);
        REQUIRE(b.model);
        CHECK(canonical_code(*a.model) == canonical_code(*b.model));
        CHECK(a.candidates == b.candidates);
        CHECK(models(*a.model, f));
    }

    TEST_CASE("enumeration respects depth and branching") {
        enumerate_trees(bounds(2, 2, {"p"}), [&](const Tree& t) {
            CHECK(t.height() <= 2);
            for (int v = 0; v < static_cast<int>(t.size()); ++v) CHECK(t.children(v).size() <= 2);
            return true;
        });
        std::size_t none = enumerate_trees(bounds(0, 2, {}), [](const Tree&) { return true; });
        CHECK(none == 1);
    }

    TEST_CASE("canonical codes ignore child order") {
        using btltest::tree_of;
        CHECK(canonical_code(tree_of("{p}({q},{}({p}))")) == canonical_code(tree_of("{p}({}({p}),{q})")));
        CHECK(canonical_code(tree_of("{p}({q},{})")) != canonical_code(tree_of("{p}({q}({}))")));
    }

    TEST_CASE("minimal models") {
        auto leafloop = bounded_sat(parse_formula("E X p"), bounds(1, 1, {"p"}));
        REQUIRE(leafloop.model);
        CHECK(leafloop.model->size() == 1);  // the leaf repeats, so X p holds at a p-leaf
        auto strict = bounded_sat(parse_formula("E X p"), bounds(1, 1, {"p"}), PathMode::Strict);
        REQUIRE(strict.model);
        CHECK(strict.model->size() == 2);
        CHECK_FALSE(strict.model->has(0, "p"));
        CHECK(strict.model->has(1, "p"));
    }

    TEST_CASE("unsatisfiable within bounds") {
        for (int d = 0; d <= 2; ++d) {
            CHECK_FALSE(bounded_sat(parse_formula("p & !p"), bounds(d, 2, {"p"})).model);
            CHECK_FALSE(
                bounded_sat(parse_formula("down x1 . E X x1"), bounds(d, 2, {"p"}), PathMode::Strict).model);
            // In leaf-loop mode a single leaf is its own successor.
            auto loop = bounded_sat(parse_formula("down x1 . E X x1"), bounds(d, 2, {"p"}));
            REQUIRE(loop.model);
            CHECK(loop.model->size() == 1);
        }
    }

    TEST_CASE("budget") {
        SearchBounds b = bounds(3, 2, {"p", "q"});
        b.budget = 10;
        CHECK_THROWS_AS(bounded_sat(parse_formula("p & !p"), b), SatBudgetExceeded);
        auto e = equisat_check(parse_formula("p & !p"), parse_formula("q & !q"), b);
        CHECK(e.verdict == EquisatVerdict::Inconclusive);
    }

    TEST_CASE("equisatisfiability") {
        SearchBounds b = bounds(2, 2, {"p", "q"});
        Formula f = parse_formula("E(F p & F q)");
        auto same = equisat_check(f, f, b);
        CHECK(same.verdict == EquisatVerdict::Agree);
        CHECK_FALSE(same.within_bounds_only);
        auto both_unsat = equisat_check(parse_formula("p & !p"), parse_formula("q & !q"), b);
        CHECK(both_unsat.verdict == EquisatVerdict::Agree);
        CHECK(both_unsat.within_bounds_only);
        auto diff = equisat_check(parse_formula("p"), parse_formula("p & !p"), b);
        CHECK(diff.verdict == EquisatVerdict::Disagree);
        REQUIRE(diff.witness);
        CHECK(diff.witness->size() == 1);
        CHECK(diff.witness->has(0, "p"));
    }
}
