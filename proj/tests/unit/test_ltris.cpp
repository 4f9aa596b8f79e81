#include <doctest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "wavegraph/ltris.hpp"
#include "wavegraph/partition.hpp"
#include "wavegraph/words.hpp"

using namespace wavegraph;

namespace {

LatticeWord W(const std::string& digits) { return parse_word(digits); }

}  // namespace

TEST_CASE("drop examples") {
    GameState s(3);
    s = drop(s, 1);
    CHECK(s.heights() == std::vector<int>{1, 0, 0});
    CHECK(s.cleared() == 0);

    GameState t(3);
    t = drop(drop(t, 1), 2);  // (1,1,0)
    CHECK(t.heights() == std::vector<int>{1, 1, 0});
    t = drop(t, 3);
    CHECK(t.heights() == std::vector<int>{0, 0, 0});
    CHECK(t.cleared() == 1);

    GameState u(3);
    u = drop(u, 1);
    CHECK_THROWS_AS(drop(u, 3), IllegalMove);
}

TEST_CASE("drop records absolute levels") {
    GameState s(3);
    for (int col : {1, 2, 1, 3, 2, 3}) s = drop(s, col);
    REQUIRE(s.log().size() == 6);
    CHECK(s.log()[0] == MoveRecord{1, 1, 1});
    CHECK(s.log()[1] == MoveRecord{2, 2, 1});
    CHECK(s.log()[2] == MoveRecord{3, 1, 2});
    CHECK(s.log()[3] == MoveRecord{4, 3, 1});
    CHECK(s.log()[4] == MoveRecord{5, 2, 2});
    CHECK(s.log()[5] == MoveRecord{6, 3, 2});
    CHECK(s.cleared() == 2);
}

TEST_CASE("play examples") {
    const GameState a = play(W("121323"));
    CHECK(a.heights() == std::vector<int>{0, 0, 0});
    CHECK(a.cleared() == 2);

    const GameState b = play(W("123"));
    CHECK(b.heights() == std::vector<int>{0, 0, 0});
    CHECK(b.cleared() == 1);

    try {
        play(W("22"));
        FAIL("expected IllegalMove");
    } catch (const IllegalMove& e) {
        CHECK(e.position == 1);
        CHECK(e.column == 2);
    }
}

TEST_CASE("game state bookkeeping invariant") {
    const GameState s = play(W("1121223"));
    long long sum = 0;
    for (int h : s.heights()) sum += h;
    CHECK(sum + 3 * s.cleared() == s.moves_played());
    for (std::size_t i = 1; i < s.heights().size(); ++i)
        CHECK(s.heights()[i - 1] >= s.heights()[i]);
    CHECK(s.heights().back() == 0);
}

TEST_CASE("word_to_tableau examples") {
    CHECK(word_to_tableau(W("112233")).rows ==
          std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}});
    CHECK(word_to_tableau(W("123")).rows == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(word_to_tableau(W("1122")).rows ==
          std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(word_to_tableau(W("121323")).rows ==
          std::vector<std::vector<int>>{{1, 2, 4}, {3, 5, 6}});
    CHECK_THROWS_AS(word_to_tableau(W("112")), InvalidInput);
    CHECK_THROWS_AS(word_to_tableau(W("2211")), InvalidInput);
}

TEST_CASE("tableau_to_word examples") {
    CHECK(to_string(tableau_to_word({{{1, 3, 5}, {2, 4, 6}}})) == "112233");
    CHECK(to_string(tableau_to_word({{{1, 2, 3}}})) == "123");
    CHECK(to_string(tableau_to_word({{{1, 2}, {3, 4}}})) == "1212");
    CHECK_THROWS_AS(tableau_to_word({{{1, 2, 5}, {3, 4}}}), InvalidInput);
    CHECK_THROWS_AS(tableau_to_word({{{1, 3}, {2, 2}}}), InvalidInput);
}

TEST_CASE("round trips over full enumerations") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            for (const LatticeWord& w : enumerate_balanced(n, k)) {
                const StandardTableau t = word_to_tableau(w);
                CHECK(is_standard(t));
                CHECK(tableau_to_word(t).letters == w.letters);
                CHECK(word_to_tableau(tableau_to_word(t)) == t);
            }
        }
    }
}

TEST_CASE("every balanced lattice word plays to the empty field") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            for (const LatticeWord& w : enumerate_balanced(n, k)) {
                const GameState s = play(w);
                CHECK(s.cleared() == k);
                for (int h : s.heights()) CHECK(h == 0);
            }
        }
    }
}

TEST_CASE("playable exactly when lattice") {
    for (int n = 2; n <= 3; ++n) {
        for (int len = 1; len <= 8; ++len) {
            std::vector<int> word(len, 1);
            while (true) {
                Letters letters(word.begin(), word.end());
                bool playable = true;
                try {
                    play(LatticeWord{letters, n});
                } catch (const IllegalMove&) {
                    playable = false;
                }
                CHECK(playable == is_lattice(letters, n));

                int p = len - 1;
                while (p >= 0 && word[p] == n) word[p--] = 1;
                if (p < 0) break;
                ++word[p];
            }
        }
    }
}

TEST_CASE("distinct tableaux count matches the rectangle hook count") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 0; k <= 3; ++k) {
            std::set<std::vector<std::vector<int>>> seen;
            for (const LatticeWord& w : enumerate_balanced(n, k))
                seen.insert(word_to_tableau(w).rows);
            std::vector<int> rect(k, n);
            CHECK(mpz_class(seen.size()) == hook_count(Partition(rect)));
        }
    }
}
