#include <doctest.h>

#include <algorithm>
#include <string>

#include "oracles.hpp"
#include "wavegraph/graphs.hpp"
#include "wavegraph/partition.hpp"
#include "wavegraph/render.hpp"
#include "wavegraph/words.hpp"

using namespace wavegraph;

namespace {

LatticeWord W(const std::string& digits) { return parse_word(digits); }

const WaveGraph kGraphA{3, 6, {{1, 2, 4}, {3, 5, 6}}};  // word 121323
const WaveGraph kGraphB{3, 6, {{1, 4, 5}, {2, 3, 6}}};  // word 112233

}  // namespace

TEST_CASE("validate accepts known 3-wave graphs") {
    CHECK(validate(kGraphA).ok);
    CHECK(validate(kGraphB).ok);
}

TEST_CASE("validate diagnoses crossings and bad partitions") {
    const Validation crossing = validate(WaveGraph{3, 6, {{1, 3, 5}, {2, 4, 6}}});
    CHECK_FALSE(crossing.ok);
    CHECK(crossing.message.find("cross") != std::string::npos);
    CHECK(crossing.message.find("page 1") != std::string::npos);

    CHECK_FALSE(validate(WaveGraph{3, 6, {{1, 2, 4}, {3, 5, 5}}}).ok);
    CHECK_FALSE(validate(WaveGraph{3, 6, {{1, 4, 2}, {3, 5, 6}}}).ok);
    CHECK_FALSE(validate(WaveGraph{3, 7, {{1, 2, 4}, {3, 5, 6}}}).ok);
    CHECK(validate(WaveGraph{2, 0, {}}).ok);
}

TEST_CASE("word_to_graph on the 6-vertex examples") {
    CHECK(word_to_graph(W("121323")) == kGraphA);
    CHECK(word_to_graph(W("112233")) == kGraphB);
    CHECK(word_to_graph(W("1234")) == WaveGraph{4, 4, {{1, 2, 3, 4}}});
    CHECK_THROWS_AS(word_to_graph(W("121")), InvalidInput);
}

TEST_CASE("graph_to_word inverts the 6-vertex examples") {
    CHECK(to_string(graph_to_word(kGraphA)) == "121323");
    CHECK(to_string(graph_to_word(kGraphB)) == "112233");
    CHECK(to_string(graph_to_word(WaveGraph{4, 4, {{1, 2, 3, 4}}})) == "1234");
    CHECK_THROWS_AS(graph_to_word(WaveGraph{3, 6, {{1, 3, 5}, {2, 4, 6}}}),
                    InvalidInput);
}

TEST_CASE("enumerate_graphs counts and small cases") {
    CHECK(enumerate_graphs(3, 6).size() == 5);
    CHECK(enumerate_graphs(3, 4).empty());

    const auto two = enumerate_graphs(2, 4);
    REQUIRE(two.size() == 2);
    // word order: 1122 then 1212
    CHECK(two[0] == WaveGraph{2, 4, {{1, 4}, {2, 3}}});
    CHECK(two[1] == WaveGraph{2, 4, {{1, 2}, {3, 4}}});
}

TEST_CASE("enumerate_graphs matches the dimension formula") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= 8; ++m)
            CHECK(mpz_class(enumerate_graphs(n, m).size()) ==
                  invariant_dimension(n, m));
}

TEST_CASE("round trips over full enumerations") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m <= 8; m += n) {
            for (const LatticeWord& w : enumerate_balanced(n, m / n)) {
                const WaveGraph g = word_to_graph(w);
                CHECK(validate(g).ok);
                CHECK(graph_to_word(g) == w);
                CHECK(word_to_graph(graph_to_word(g)) == g);
            }
        }
    }
}

TEST_CASE("stack matching equals the recursive construction up to length 12") {
    for (int k = 0; k <= 6; ++k) {
        for (const LatticeWord& w : enumerate_balanced(2, k)) {
            auto stacked = stack_matching(w.letters, 1);
            std::sort(stacked.begin(), stacked.end());

            std::vector<int> letters(w.letters.begin(), w.letters.end());
            std::vector<int> positions(letters.size());
            for (std::size_t i = 0; i < positions.size(); ++i)
                positions[i] = static_cast<int>(i) + 1;
            std::vector<std::pair<int, int>> recursive;
            test_oracles::recursive_matching(letters, positions, recursive);
            std::sort(recursive.begin(), recursive.end());

            CHECK(stacked == recursive);
        }
    }
}

TEST_CASE("render splits pages above and below for n=3") {
    const std::string svg = render_svg(kGraphA);
    // page 1 arcs above the line (sweep 1), page 2 below (sweep 0)
    CHECK(svg.find("data-page=\"1\" data-edge=\"1-2\"") != std::string::npos);
    CHECK(svg.find("data-page=\"1\" data-edge=\"3-5\"") != std::string::npos);
    CHECK(svg.find("data-page=\"2\" data-edge=\"2-4\"") != std::string::npos);
    CHECK(svg.find("data-page=\"2\" data-edge=\"5-6\"") != std::string::npos);
    // vertex 1 at x=40, vertex 2 at x=80: semicircle of radius 20 above
    CHECK(svg.find("M 40,140 A 20,20.00 0 0,1 80,140") != std::string::npos);
    // page 2 edge 2-4: x 80 -> 160, below
    CHECK(svg.find("M 80,140 A 40,40.00 0 0,0 160,140") != std::string::npos);
    CHECK(render_svg(kGraphA) == svg);  // deterministic
}

TEST_CASE("render nested-arcs graph and edge cases") {
    const std::string svg = render_svg(kGraphB);
    for (const char* edge : {"1-4", "2-3", "3-6", "4-5"})
        CHECK(svg.find("data-edge=\"" + std::string(edge) + "\"") != std::string::npos);
    // {1,4},{2,3} above the line, {3,6},{4,5} below
    CHECK(svg.find("M 40,140 A 60,60.00 0 0,1 160,140") != std::string::npos);
    CHECK(svg.find("M 80,140 A 20,20.00 0 0,1 120,140") != std::string::npos);
    CHECK(svg.find("M 120,140 A 60,60.00 0 0,0 240,140") != std::string::npos);
    CHECK(svg.find("M 160,140 A 20,20.00 0 0,0 200,140") != std::string::npos);

    const std::string empty = render_svg(WaveGraph{2, 0, {}});
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("circle") == std::string::npos);

    CHECK_THROWS_AS(render_svg(WaveGraph{3, 6, {{1, 3, 5}, {2, 4, 6}}}), InvalidInput);
}

TEST_CASE("render stacks all pages above for n = 2 and n = 4") {
    const std::string two = render_svg(word_to_graph(W("1122")));
    CHECK(two.find("0 0,1") != std::string::npos);
    CHECK(two.find("0 0,0") == std::string::npos);

    const std::string four = render_svg(word_to_graph(W("12341234")));
    CHECK(four.find("0 0,0") == std::string::npos);
    CHECK(four.find("data-page=\"3\"") != std::string::npos);
}
