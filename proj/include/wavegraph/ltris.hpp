#ifndef WAVEGRAPH_LTRIS_HPP
#define WAVEGRAPH_LTRIS_HPP

#include <vector>

#include "wavegraph/errors.hpp"
#include "wavegraph/words.hpp"

namespace wavegraph {

/// One completed drop: move index t (1-based), column, and the absolute
/// level where the block landed (1-based, cleared rows counted back in).
struct MoveRecord {
    int index;
    int column;
    int level;
    friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// Immutable position of the game: a width-n field onto which single
/// blocks are dropped, the full bottom row clearing immediately. Column
/// heights stay weakly decreasing, so the field is always a staircase.
class GameState {
  public:
    explicit GameState(int width);

    int width() const { return width_; }
    const std::vector<int>& heights() const { return heights_; }
    long long cleared() const { return cleared_; }
    const std::vector<MoveRecord>& log() const { return log_; }
    int moves_played() const { return static_cast<int>(log_.size()); }

  private:
    int width_;
    std::vector<int> heights_;
    long long cleared_ = 0;
    std::vector<MoveRecord> log_;

    friend GameState drop(const GameState& state, int column);
};

/// Drops one block into `column` (1-based). Legal only when the heights
/// stay weakly decreasing; a filled bottom row is cleared immediately.
GameState drop(const GameState& state, int column);

/// Replays a whole word, one drop per letter. Throws IllegalMove with the
/// failing 1-based position on the first bad drop.
GameState play(const LatticeWord& word);

/// A filling of a Young diagram by 1..weight, increasing along rows and
/// down columns. Row lengths give the shape.
struct StandardTableau {
    std::vector<std::vector<int>> rows;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

bool is_standard(const StandardTableau& t);

/// Replays a balanced lattice word with k of each of n letters and reads
/// off the k x n record: cell (level, column) holds the move index of the
/// block that landed there (cleared rows restored).
StandardTableau word_to_tableau(const LatticeWord& word);

/// Inverse reading: letter at position i is the column of entry i.
/// Requires a standard tableau of rectangular k x n shape.
LatticeWord tableau_to_word(const StandardTableau& t);

}  // namespace wavegraph

#endif
