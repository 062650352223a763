#include "doctest.h"

#include "btl/game.hpp"
#include "btl/json_io.hpp"
#include "support/support.hpp"

using namespace btl;
using btltest::tree_of;

namespace {

Tree fixture(const std::string& name) { return load_tree(read_file(std::string(BTL_FIXTURES) + "/" + name)); }

int count(const std::vector<Move>& ms, Move::Kind k, Side s) {
    int n = 0;
    for (const auto& m : ms) n += m.kind == k && m.side == s;
    return n;
}

}  // namespace

TEST_SUITE("game") {
    TEST_CASE("opening moves") {
        Tree a = tree_of("{p}"), b = tree_of("{}");
        GameState s{&a, &b, {}, {}, 1};
        auto ms = legal_moves(s);
        CHECK(count(ms, Move::Kind::Node, Side::Left) == 1);
        CHECK(count(ms, Move::Kind::Node, Side::Right) == 1);
        CHECK(count(ms, Move::Kind::Path, Side::Left) + count(ms, Move::Kind::Path, Side::Right) == 0);
    }

    TEST_CASE("path moves follow the leaves") {
        Tree l = tree_of("{}({},{}({},{}))"), r = tree_of("{}({})");
        GameState s{&l, &r, {0}, {0}, 1};
        auto ms = legal_moves(s);
        CHECK(count(ms, Move::Kind::Path, Side::Left) == 3);
        CHECK(count(ms, Move::Kind::Path, Side::Right) == 1);
    }

    TEST_CASE("anchors with a selected descendant are excluded") {
        Tree l = tree_of("{}({},{}({},{}))");
        CHECK(legal_anchor(l, {0}, 0));
        CHECK_FALSE(legal_anchor(l, {0, 2}, 0));
        CHECK(legal_anchor(l, {0, 2}, 1));
        CHECK(legal_anchor(l, {0, 0}, 0));
        Tree r = tree_of("{}({},{}({},{}))");
        GameState s{&l, &r, {0, 2}, {0, 2}, 1};
        for (const auto& m : legal_moves(s))
            if (m.kind == Move::Kind::Path) CHECK(m.anchor == 1);
    }

    TEST_CASE("winning condition clauses") {
        Tree p = tree_of("{p}"), none = tree_of("{}");
        CHECK(winner(p, none, {}, {}) == Player::Duplicator);
        WinCheck w = check_win(p, none, {0}, {0});
        CHECK_FALSE(w.props);
        CHECK(winner(p, none, {0}, {0}) == Player::Spoiler);
        Tree three = tree_of("{}({}({}))"), four = tree_of("{}({}({}({})))");
        WinCheck c = check_win(three, four, {0, 1}, {0, 2});
        CHECK(c.path);
        CHECK(c.root);
        CHECK(c.props);
        CHECK_FALSE(c.child);
        CHECK(winner(three, four, {0, 1}, {0, 2}) == Player::Spoiler);
        CHECK_FALSE(check_win(three, four, {0, 1}, {1, 2}).root);
        CHECK_FALSE(check_win(three, four, {1, 1}, {1, 2}).equality);
    }

    TEST_CASE("isomorphic trees") {
        Tree a = fixture("iso1.json"), b = fixture("iso2.json");
        for (int k = 0; k <= 3; ++k) CHECK(solve_game(a, b, k) == Player::Duplicator);
    }

    TEST_CASE("distinguishable pairs") {
        CHECK(solve_game(tree_of("{p}"), tree_of("{}"), 1) == Player::Spoiler);
        CHECK(solve_game(tree_of("{p}"), tree_of("{}"), 0) == Player::Duplicator);
        Tree deep = fixture("chain2_p.json"), shallow = fixture("chain1.json");
        bool found = false;
        for (int k = 0; k <= 2 && !found; ++k) found = solve_game(deep, shallow, k) == Player::Spoiler;
        CHECK(found);
        CHECK(solve_game(shallow, deep, 2) == solve_game(deep, shallow, 2));
    }

    TEST_CASE("preselected pairs") {
        Tree a = tree_of("{}({p},{})"), b = tree_of("{}({},{p})");
        CHECK(solve_game(a, b, 1, {1}, {2}) == Player::Duplicator);
        CHECK(solve_game(a, b, 0, {1}, {1}) == Player::Spoiler);
    }

    TEST_CASE("solver budget") {
        Tree a = fixture("iso1.json"), b = fixture("iso2.json");
        CHECK_THROWS_AS(solve_game(a, b, 3, {}, {}, 5), GameError);
    }

    TEST_CASE("replay") {
        Tree p = fixture("single_p.json"), none = fixture("single_empty.json");
        auto r = replay("S node L 0\nD node R 0\n", p, none);
        CHECK(r.winner == Player::Spoiler);
        CHECK(r.rounds == 1);
        CHECK(replay("", p, none, 0).winner == Player::Duplicator);
        CHECK_THROWS_AS(replay("S node L 0\n", p, none), GameError);
        CHECK_THROWS_AS(replay("S node L 0\nD node R 0\n", p, none, 2), GameError);
        CHECK_THROWS_AS(replay("S jump L 0\n", p, none), GameError);
        Tree a = fixture("iso1.json"), b = fixture("iso2.json");
        std::string script = read_file(std::string(BTL_FIXTURES) + "/bad_anchor.script");
        try {
            replay(script, a, b);
            FAIL("no error");
        } catch (const GameError& e) {
            CHECK(e.code() == GameError::Code::IllegalMove);
            CHECK(e.line() == 5);
        }
    }

    TEST_CASE("replay of a path move") {
        Tree a = fixture("iso1.json"), b = fixture("iso2.json");
        auto r = replay("S node L 0\nD node R 10\nS path L 0 3\nD path 40\nS pick 2\nD pick 2\n", a, b);
        CHECK(r.rounds == 2);
        CHECK(r.a == std::vector<int>{0, 3});
        CHECK(r.b == std::vector<int>{10, 40});
        CHECK(r.winner == Player::Duplicator);
    }
}
