#include "wavegraph/graphs.hpp"

#include <algorithm>
#include <sstream>

namespace wavegraph {

namespace {

std::string edge_str(std::pair<int, int> e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Validation validate(const WaveGraph& g) {
    if (g.n < 2) return {false, "wave length n must be at least 2"};
    if (g.m < 0) return {false, "vertex count must be nonnegative"};
    if (static_cast<long long>(g.components.size()) * g.n != g.m)
        return {false, "components do not cover " + std::to_string(g.m) +
                           " vertices in waves of " + std::to_string(g.n)};

    std::vector<bool> seen(static_cast<std::size_t>(g.m) + 1, false);
    for (const auto& comp : g.components) {
        if (static_cast<int>(comp.size()) != g.n)
            return {false, "component size differs from n"};
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const int v = comp[i];
            if (v < 1 || v > g.m)
                return {false, "vertex " + std::to_string(v) + " outside 1.." +
                                   std::to_string(g.m)};
            if (seen[v])
                return {false, "vertex " + std::to_string(v) + " appears twice"};
            seen[v] = true;
            if (i > 0 && comp[i - 1] >= v)
                return {false, "component not strictly increasing at vertex " +
                                   std::to_string(v)};
        }
    }

    for (int page = 1; page < g.n; ++page) {
        auto edges = page_edges(g, page);
        std::sort(edges.begin(), edges.end());
        for (std::size_t a = 0; a < edges.size(); ++a) {
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                // crossing: a < c < b < d
                if (edges[a].first < edges[b].first &&
                    edges[b].first < edges[a].second &&
                    edges[a].second < edges[b].second)
                    return {false, "edges " + edge_str(edges[a]) + " and " +
                                       edge_str(edges[b]) + " cross on page " +
                                       std::to_string(page)};
            }
        }
    }
    return {true, ""};
}

std::vector<std::pair<int, int>> page_edges(const WaveGraph& g, int page) {
    if (page < 1 || page >= g.n) throw InvalidInput("page outside 1..n-1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.components.size());
    for (const auto& comp : g.components)
        edges.emplace_back(comp[page - 1], comp[page]);
    return edges;
}

std::vector<std::pair<int, int>> stack_matching(const Letters& letters, Letter low) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> open;
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p] == low) {
            open.push_back(static_cast<int>(p) + 1);
        } else if (letters[p] == low + 1) {
            if (open.empty())
                throw InvalidInput("unmatched letter " + std::to_string(low + 1) +
                                   " at position " + std::to_string(p + 1));
            edges.emplace_back(open.back(), static_cast<int>(p) + 1);
            open.pop_back();
        }
    }
    if (!open.empty())
        throw InvalidInput("unmatched letter " + std::to_string(int(low)));
    return edges;
}

WaveGraph word_to_graph(const LatticeWord& word) {
    if (!is_balanced_lattice(word.letters, word.n))
        throw InvalidInput("word is not a balanced lattice word");
    const int n = word.n;
    const int m = word.length();

    // successor[v] = page-(letter of v) partner of v, for letters < n
    std::vector<int> successor(static_cast<std::size_t>(m) + 1, 0);
    for (Letter low = 1; low < n; ++low)
        for (auto [a, b] : stack_matching(word.letters, low)) successor[a] = b;

    WaveGraph g{n, m, {}};
    for (int v = 1; v <= m; ++v) {
        if (word.letters[v - 1] != 1) continue;
        std::vector<int> comp;
        comp.reserve(n);
        for (int u = v; u != 0; u = successor[u]) comp.push_back(u);
        g.components.push_back(std::move(comp));
    }
    return g;
}

LatticeWord graph_to_word(const WaveGraph& g) {
    const Validation v = validate(g);
    if (!v.ok) throw InvalidInput("invalid wave graph: " + v.message);
    Letters letters(static_cast<std::size_t>(g.m), 0);
    for (const auto& comp : g.components)
        for (std::size_t i = 0; i < comp.size(); ++i)
            letters[comp[i] - 1] = static_cast<Letter>(i + 1);
    return LatticeWord{std::move(letters), g.n};
}

std::vector<WaveGraph> enumerate_graphs(int n, int m) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    if (m < 0) throw InvalidInput("m must be nonnegative");
    std::vector<WaveGraph> out;
    if (m % n != 0) return out;
    for (const LatticeWord& w : enumerate_balanced(n, m / n))
        out.push_back(word_to_graph(w));
    return out;
}

}  // namespace wavegraph
