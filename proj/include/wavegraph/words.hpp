#ifndef WAVEGRAPH_WORDS_HPP
#define WAVEGRAPH_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wavegraph/errors.hpp"

namespace wavegraph {

using Letter = std::uint8_t;
using Letters = std::vector<Letter>;

/// A word over the alphabet {1..n}.
struct LatticeWord {
    Letters letters;
    int n = 0;

    int length() const { return static_cast<int>(letters.size()); }
    friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
};

/// True iff every prefix contains at least as many j's as (j+1)'s for all
/// 1 <= j < n. Letters outside 1..n are rejected with InvalidInput.
bool is_lattice(const Letters& letters, int n);

/// True iff the word is lattice and each of 1..n occurs exactly k times
/// for some k >= 0 (so the length is nk).
bool is_balanced_lattice(const Letters& letters, int n);

/// All lattice words over {1..n} with exactly k copies of each letter, in
/// lexicographic order (1 < 2 < ... < n).
std::vector<LatticeWord> enumerate_balanced(int n, long long k);

/// Digit-string form for n <= 9 ("121323"); comma-separated otherwise.
std::string to_string(const LatticeWord& w);

/// Parses a digit string into a word; n is taken as the largest letter
/// unless a larger n is given.
LatticeWord parse_word(const std::string& text, int n = 0);

}  // namespace wavegraph

#endif
