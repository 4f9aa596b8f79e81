#include "wavegraph/ltris.hpp"

#include <algorithm>
#include <string>

namespace wavegraph {

GameState::GameState(int width) : width_(width) {
    if (width < 1) throw InvalidInput("field width must be positive");
    heights_.assign(static_cast<std::size_t>(width), 0);
}

GameState drop(const GameState& state, int column) {
    const int n = state.width();
    if (column < 1 || column > n)
        throw IllegalMove(column, 0,
                          "column " + std::to_string(column) + " outside field 1.." +
                              std::to_string(n));
    GameState next = state;
    auto& h = next.heights_;
    if (column > 1 && h[column - 1] >= h[column - 2])
        throw IllegalMove(column, 0,
                          "drop into column " + std::to_string(column) +
                              " would break the staircase");
    const int level = h[column - 1] + static_cast<int>(next.cleared_) + 1;
    ++h[column - 1];
    if (h[n - 1] == 1) {
        for (int& x : h) --x;
        ++next.cleared_;
    }
    next.log_.push_back(MoveRecord{state.moves_played() + 1, column, level});
    return next;
}

GameState play(const LatticeWord& word) {
    GameState state(word.n);
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        try {
            state = drop(state, word.letters[i]);
        } catch (const IllegalMove& e) {
            throw IllegalMove(e.column, static_cast<int>(i) + 1,
                              std::string(e.what()) + " at position " +
                                  std::to_string(i + 1));
        }
    }
    return state;
}

bool is_standard(const StandardTableau& t) {
    long long total = 0;
    for (const auto& row : t.rows) total += static_cast<long long>(row.size());
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const int v = t.rows[r][c];
            if (v < 1 || v > total || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && t.rows[r][c - 1] >= v) return false;
            if (r > 0 && t.rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

StandardTableau word_to_tableau(const LatticeWord& word) {
    if (word.letters.empty()) return StandardTableau{};
    if (!is_balanced_lattice(word.letters, word.n))
        throw InvalidInput("word is not a balanced lattice word");
    const long long k = static_cast<long long>(word.letters.size()) / word.n;
    StandardTableau t;
    t.rows.assign(static_cast<std::size_t>(k),
                  std::vector<int>(static_cast<std::size_t>(word.n), 0));
    const GameState finished = play(word);
    for (const MoveRecord& mv : finished.log())
        t.rows[mv.level - 1][mv.column - 1] = mv.index;
    return t;
}

LatticeWord tableau_to_word(const StandardTableau& t) {
    if (t.rows.empty()) return LatticeWord{{}, 0};
    const std::size_t n = t.rows[0].size();
    for (const auto& row : t.rows)
        if (row.size() != n)
            throw InvalidInput("tableau is not rectangular");
    if (!is_standard(t)) throw InvalidInput("tableau is not standard");

    Letters letters(t.rows.size() * n, 0);
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < n; ++c)
            letters[row[c] - 1] = static_cast<Letter>(c + 1);
    return LatticeWord{std::move(letters), static_cast<int>(n)};
}

}  // namespace wavegraph
