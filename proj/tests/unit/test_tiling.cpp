#include "doctest.h"

#include <algorithm>

#include "btl/checker.hpp"
#include "btl/parser.hpp"
#include "btl/tiling.hpp"
#include "support/support.hpp"

using namespace btl;
using btltest::tree_of;

namespace {
bool in(const std::vector<std::pair<std::string, std::string>>& rel, const std::string& a, const std::string& b) {
    return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
}
}  // namespace

TEST_SUITE("tiling") {
    TEST_CASE("counter instance") {
        TilingInstance I = corollary_instance(1);
        CHECK(I.tiles.size() == 6);
        CHECK(I.F == std::vector<std::string>{"0l", "0s"});
        CHECK(I.L == std::vector<std::string>{"1l", "1f"});
        CHECK_FALSE(in(I.V, "1s", "0f"));
        CHECK(in(I.V, "1s", "1f"));
        CHECK(in(I.V, "0f", "1s"));
        CHECK(in(I.H, "1l", "0f"));
        CHECK_FALSE(in(I.H, "0l", "0f"));
        CHECK_NOTHROW(I.validate());
    }

    TEST_CASE("instance validation") {
        TilingInstance I;
        CHECK_THROWS_AS(I.validate(), TilingError);
        I.tiles = {"a", "a"};
        CHECK_THROWS_AS(I.validate(), TilingError);
        I.tiles = {"a"};
        I.H = {{"a", "b"}};
        CHECK_THROWS_AS(I.validate(), TilingError);
    }

    TEST_CASE("encoder layout") {
        auto enc = encode_tiling_parts(corollary_instance(1));
        CHECK(enc.parts.size() == tiling_part_names().size());
        CHECK(enc.parts.front().first == "chi2");
        // Leftmost conjunct of the whole formula is row_e.
        Formula f = enc.formula;
        while (f.kind() == Kind::And) f = f.lhs();
        CHECK(f == prop("row_e"));
        CHECK(enc.part("chi4") == conj(enc.part("chi4a"), enc.part("chi4b")));
        CHECK(enc.part("χ2") == enc.part("chi2"));
        CHECK(enc.part("ψ7") == enc.part("psi7"));
        CHECK_THROWS_AS(enc.part("chi11"), TilingError);
        CHECK(is_state_formula(enc.formula));
        CHECK(classify(enc.formula).k == 1);
    }

    TEST_CASE("encoder is deterministic") {
        CHECK(print_formula(encode_tiling(corollary_instance(2))) ==
              print_formula(encode_tiling(corollary_instance(2))));
    }

    TEST_CASE("encoder rejects reserved names") {
        TilingInstance I = corollary_instance(1);
        I.tiles[0] = "row_e";
        for (auto& [a, b] : I.H) {
            if (a == "0l") a = "row_e";
            if (b == "0l") b = "row_e";
        }
        for (auto& [a, b] : I.V) {
            if (a == "0l") a = "row_e";
            if (b == "0l") b = "row_e";
        }
        I.F[0] = "row_e";
        CHECK_THROWS_AS(encode_tiling(I), TilingError);
        TilingInstance J = corollary_instance(1);
        J.n = 0;
        CHECK_THROWS_AS(encode_tiling(J), TilingError);
    }

    TEST_CASE("encoding grows with n") {
        std::size_t prev = 0;
        for (int n = 1; n <= 4; ++n) {
            std::size_t s = size(encode_tiling(corollary_instance(n)));
            CHECK(s > prev);
            prev = s;
        }
    }

    TEST_CASE("gadget trees") {
        TilingInstance I = corollary_instance(1);
        auto enc = encode_tiling_parts(I);
        CHECK_FALSE(models(tree_of("{}"), enc.formula));
        CHECK_FALSE(models(tree_of("{pos_e}({row_e},{o})"), enc.part("chi2")));
        CHECK_FALSE(models(tree_of("{row_e}({pos_e}({o c}))"), enc.part("chi1")));
        CHECK(models(tree_of("{row_e}({pos_e}({o}))"), enc.part("chi1")));
        CHECK_FALSE(models(tree_of("{row_e}({pos_e}({}))"), enc.part("chi1")));
        CHECK_FALSE(strategy_tree_check(tree_of("{}({}({}))"), I));
    }

    TEST_CASE("solver on the counter instance") {
        for (int n = 0; n <= 3; ++n) {
            TilingInstance I = corollary_instance(n);
            CHECK(solve_tiling(I, 2, 4).verdict == TilingVerdict::EWins);
            CHECK(solve_tiling(I, 2, 3).verdict == TilingVerdict::Inconclusive);
            TilingInstance noL = I;
            noL.L.clear();
            CHECK(solve_tiling(noL, 2, 4).verdict == TilingVerdict::AWins);
            TilingInstance noF = I;
            noF.F.clear();
            auto r = solve_tiling(noF, 2, 4);
            CHECK(r.verdict == TilingVerdict::AWins);
            CHECK(r.bounded_states == 1);
        }
    }

    TEST_CASE("solver matches the layered oracle") {
        btltest::Rng rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            TilingInstance I;
            int m = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int i = 0; i < m; ++i) I.tiles.push_back(std::string(1, static_cast<char>('a' + i)));
            for (const auto& a : I.tiles)
                for (const auto& b : I.tiles) {
                    if (std::uniform_int_distribution<int>(0, 2)(rng)) I.H.push_back({a, b});
                    if (std::uniform_int_distribution<int>(0, 2)(rng)) I.V.push_back({a, b});
                }
            for (const auto& a : I.tiles) {
                if (std::uniform_int_distribution<int>(0, 1)(rng)) I.F.push_back(a);
                if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) I.L.push_back(a);
            }
            int width = std::uniform_int_distribution<int>(1, 3)(rng);
            int rows = std::uniform_int_distribution<int>(1, 4)(rng);
            CHECK(solve_tiling(I, width, rows).verdict == btltest::oracle_tiling(I, width, rows));
        }
    }

    TEST_CASE("solver budget") {
        TilingInstance noL = corollary_instance(1);
        noL.L.clear();
        CHECK_THROWS_AS(solve_tiling(noL, 2, 10, 3), TilingBudgetExceeded);
        CHECK_THROWS_AS(solve_tiling(corollary_instance(1), 0, 4), TilingError);
    }
}
