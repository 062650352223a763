#include "doctest.h"

#include <map>
#include <set>

#include "btl/models.hpp"
#include "support/support.hpp"

using namespace btl;

namespace {

std::vector<std::string> strings_up_to(int n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (static_cast<int>(out[i].size()) < n)
            for (char c : {'0', '1'}) out.push_back(out[i] + c);
    return out;
}

std::set<std::string> labels_along(const Tree& t, int leaf) {
    std::set<std::string> out;
    for (int v : t.path_from_root(leaf))
        for (const auto& p : t.props(v)) out.insert(p);
    return out;
}

}  // namespace

TEST_SUITE("models") {
    TEST_CASE("unravel small systems") {
        TransitionSystem ts;
        ts.initial = 0;
        ts.states = {{0, {}}, {1, {"q"}}};
        ts.edges = {{0, 1}};
        Tree t = unravel(ts, 1);
        CHECK(t.size() == 2);
        CHECK(t.has(1, "q"));
        CHECK(unravel(ts, 0).size() == 1);
        CHECK(unravel(ts, 5).size() == 2);
    }

    TEST_CASE("unravel A_0 to depth 3") {
        Tree t = unravel(build_A(0), 3);
        REQUIRE(t.size() == 4);
        CHECK(t.height() == 3);
        CHECK(t.has(0, "p"));
        for (int v = 1; v < 4; ++v) {
            CHECK(t.parent(v) == v - 1);
            CHECK(t.props(v).empty());
        }
    }

    TEST_CASE("unravel guards its size") {
        CHECK_THROWS_AS(unravel(build_A(3), 30, 1000), std::length_error);
        TransitionSystem bad;
        bad.initial = 0;
        bad.states = {{0, {}}};
        bad.edges = {{0, 4}};
        CHECK_THROWS_AS(unravel(bad, 1), std::invalid_argument);
    }

    TEST_CASE("A family shape") {
        TransitionSystem a0 = build_A(0);
        CHECK(a0.states.size() == 2);
        CHECK(a0.edges.size() == 2);
        TransitionSystem a1 = build_A(1);
        CHECK(a1.states.size() == 4);
        // 2 for the copy of A_0, root to white, white loop, white to the one black state of the copy.
        CHECK(a1.edges.size() == 5);
        for (int i = 0; i <= 6; ++i) {
            TransitionSystem a = build_A(i);
            int black = 0;
            for (const auto& s : a.states) black += !s.props.empty();
            CHECK(black == i + 1);
            CHECK(a.initial == 2 * i);
            CHECK(a.states[a.index_of(a.initial)].props == std::vector<std::string>{"p"});
        }
    }

    TEST_CASE("black count along paths of A_i") {
        for (int i = 0; i <= 3; ++i)
            for (int d = 0; d <= 7; ++d) CHECK(max_black_on_path(unravel(build_A(i), d)) <= i + 1);
        CHECK(max_black_on_path(unravel(build_A(2), 8)) == 3);
    }

    TEST_CASE("B family") {
        TransitionSystem b = build_B(1, 1, 0);
        CHECK(b.states.size() == 4);
        CHECK(b.states[b.index_of(b.initial)].props == std::vector<std::string>{"p"});
        std::set<std::pair<int, int>> edges(b.edges.begin(), b.edges.end());
        int r = b.initial, w = r + 1;
        CHECK(edges.count({r, w}));
        CHECK(edges.count({w, w}));
        CHECK(edges.count({w, r}));
        CHECK(edges.count({w, 0}));
        CHECK(edges.size() == 6);
        for (int S = 1; S <= 3; ++S) {
            TransitionSystem bs = build_B(2, S, 1);
            CHECK(max_black_on_path(unravel(bs, S + 1)) >= 2);  // reaches the copy
            Tree t = unravel(bs, S + 2);
            bool two_roots = false;
            for (int leaf : t.leaves_below(0)) {
                int count = 0;
                for (int v : t.path_from_root(leaf)) count += t.has(v, "p");
                two_roots = two_roots || count >= 2;
            }
            CHECK(two_roots);
            CHECK(labels_along(t, t.leaves_below(0).front()).count("p"));
        }
    }

    TEST_CASE("string games") {
        CHECK(string_ef_equiv("0101", "1", 0));
        CHECK(string_ef_equiv("0", "00", 1));
        CHECK_FALSE(string_ef_equiv("01", "10", 2));
        CHECK_FALSE(string_ef_equiv("0", "00", 2));
        for (const auto& s : strings_up_to(4))
            for (const auto& t : strings_up_to(4))
                for (int k = 0; k <= 2; ++k) REQUIRE(string_ef_equiv(s, t, k) == btltest::naive_string_ef(s, t, k));
    }

    TEST_CASE("representative lengths") {
        CHECK(compute_S(0, 8).S == 0);
        // With one round the class of a string is the set of letters it uses.
        std::map<std::string, std::size_t> best;
        std::vector<std::string> reps;
        for (const auto& s : strings_up_to(8)) {
            bool found = false;
            for (const auto& r : reps)
                if (btltest::naive_string_ef(s, r, 1)) found = true;
            if (!found) reps.push_back(s);
        }
        std::size_t longest = 0;
        for (const auto& r : reps) longest = std::max(longest, r.size());
        SResult s1 = compute_S(1, 8);
        CHECK(s1.S == static_cast<int>(longest));
        CHECK(s1.stabilized);
        SResult s3 = compute_S(3, 8);
        for (const auto& [s, rep] : s3.representative)
            if (s.find('1') == std::string::npos) CHECK(rep.find('1') == std::string::npos);
    }

    TEST_CASE("height recurrence") {
        std::map<int, int> S{{1, 2}, {2, 4}, {3, 7}};
        CHECK(compute_N(0, S) == 0);
        CHECK(compute_N(1, S) == std::max(7, 2) + 1);
        CHECK(compute_N(2, S) == compute_N(1, S) + std::max(7, 4) + 1);
        CHECK(compute_N(3, S) == compute_N(2, S) + 7 + 1);
    }
}
