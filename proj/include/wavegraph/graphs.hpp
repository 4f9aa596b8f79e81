#ifndef WAVEGRAPH_GRAPHS_HPP
#define WAVEGRAPH_GRAPHS_HPP

#include <string>
#include <utility>
#include <vector>

#include "wavegraph/errors.hpp"
#include "wavegraph/words.hpp"

namespace wavegraph {

/// A graph on vertices 1..m whose components are increasing n-vertex
/// paths; edge N of each path lives on page N of an (n-1)-page book and
/// no two edges on one page may cross. Components are kept sorted by
/// first vertex.
struct WaveGraph {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> components;

    friend bool operator==(const WaveGraph&, const WaveGraph&) = default;
};

struct Validation {
    bool ok;
    std::string message;  // names the first violated condition when !ok
};

Validation validate(const WaveGraph& g);

/// Edges {i_N, i_{N+1}} of every component, for page N in 1..n-1.
std::vector<std::pair<int, int>> page_edges(const WaveGraph& g, int page);

/// Noncrossing matching of the letters {low, low+1} inside `letters`:
/// each occurrence of low+1 is matched to the nearest preceding unmatched
/// low. Returns (position of low, position of low+1) pairs, 1-based, in
/// order of the right endpoint.
std::vector<std::pair<int, int>> stack_matching(const Letters& letters, Letter low);

/// The wave graph of a balanced lattice word: page N carries the stack
/// matching of letters {N, N+1}; components are the resulting chains.
WaveGraph word_to_graph(const LatticeWord& word);

/// Inverse: letter at vertex v is the position of v within its component.
LatticeWord graph_to_word(const WaveGraph& g);

/// All n-wave graphs with m vertices (empty unless n | m), as the image
/// of the balanced-word enumeration, in word order.
std::vector<WaveGraph> enumerate_graphs(int n, int m);

}  // namespace wavegraph

#endif
