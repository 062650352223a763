#include "doctest.h"

#include "btl/formula.hpp"
#include "btl/parser.hpp"

using namespace btl;

TEST_SUITE("formula") {
    TEST_CASE("size counts nodes after expanding F and G") {
        CHECK(size(parse_formula("p")) == 1);
        CHECK(size(parse_formula("E X p")) == 3);
        // down, @root, E, U, true, &, p, E, U, true, x1
        CHECK(size(parse_formula("down x1 . @root E F (p & E F x1)")) == 11);
        CHECK(size(parse_formula("E G p")) == size(parse_formula("E !(true U !p)")));
    }

    TEST_CASE("quantifier depth") {
        CHECK(depth(parse_formula("p")) == 0);
        CHECK(depth(parse_formula("E F p")) == 1);
        CHECK(depth(parse_formula("E F (p & E F q)")) == 2);
    }

    TEST_CASE("classification") {
        auto c = classify(parse_formula("E(p U q)"));
        CHECK(c.level == Level::CTL);
        CHECK(c.k == 0);
        CHECK_FALSE(c.uses_past);
        CHECK_FALSE(c.uses_fairness);
        CHECK(classify(parse_formula("E(F p & F q)")).level == Level::CTLPlus);
        CHECK(classify(parse_formula("E F G p")).level == Level::CTLStar);
        auto h = classify(parse_formula("down x2 . E(Y p S q) & E Finf x2"));
        CHECK(h.k == 2);
        CHECK(h.uses_past);
        CHECK(h.uses_fairness);
        CHECK(std::string(level_name(Level::CTLPlus)) == "CTL+");
    }

    TEST_CASE("structural equality and hashing") {
        Formula a = parse_formula("E(p U (q & x1))");
        Formula b = parse_formula("E (p U (q & x1))");
        CHECK(a == b);
        CHECK(a.hash() == b.hash());
        CHECK(a != parse_formula("E(p U (x1 & q))"));
    }

    TEST_CASE("n-ary helpers skip units") {
        CHECK(conj_all({}) == top());
        CHECK(disj_all({}) == bot());
        CHECK(conj_all({top(), prop("p")}) == prop("p"));
        CHECK(disj_all({bot(), prop("p"), prop("q")}) == disj(prop("p"), prop("q")));
    }

    TEST_CASE("free variables") {
        CHECK(free_vars(parse_formula("down x1 . E F x1")).empty());
        CHECK(free_vars(parse_formula("@x2 p & down x1 . x1")) == std::set<int>{2});
        CHECK(has_free_var(parse_formula("E F x1")));
        CHECK(max_var(parse_formula("down x3 . x1")) == 3);
        CHECK(props_of(parse_formula("E(p U q) & r")) == std::set<std::string>{"p", "q", "r"});
    }

    TEST_CASE("state and path formulas") {
        CHECK(is_state_formula(parse_formula("E X p")));
        CHECK(is_state_formula(parse_formula("Y p")));
        CHECK_FALSE(is_state_formula(parse_path_formula("X p")));
        CHECK(is_basic_path(parse_path_formula("p U q")));
        CHECK_FALSE(is_basic_path(parse_path_formula("F p & F q")));
        CHECK(is_plus_path(parse_path_formula("F p & !G q")));
        CHECK_FALSE(is_plus_path(parse_path_formula("F G p")));
    }

    TEST_CASE("normalize expands sugar") {
        CHECK(normalize(parse_formula("E F p")) == parse_formula("E(true U p)"));
        CHECK(expand_sugar(parse_formula("p -> q")) == parse_formula("!p | q"));
    }
}
