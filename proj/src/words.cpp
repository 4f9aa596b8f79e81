#include "wavegraph/words.hpp"

#include <algorithm>
#include <sstream>

namespace wavegraph {

bool is_lattice(const Letters& letters, int n) {
    if (n < 1) throw InvalidInput("alphabet size must be positive");
    std::vector<long long> count(static_cast<std::size_t>(n) + 1, 0);
    for (Letter a : letters) {
        if (a < 1 || a > n)
            throw InvalidInput("letter " + std::to_string(int(a)) +
                               " outside alphabet 1.." + std::to_string(n));
        ++count[a];
        if (a > 1 && count[a] > count[a - 1]) return false;
    }
    return true;
}

bool is_balanced_lattice(const Letters& letters, int n) {
    if (!is_lattice(letters, n)) return false;
    if (letters.size() % static_cast<std::size_t>(n) != 0) return false;
    std::vector<long long> count(static_cast<std::size_t>(n) + 1, 0);
    for (Letter a : letters) ++count[a];
    const long long k = static_cast<long long>(letters.size()) / n;
    for (int a = 1; a <= n; ++a)
        if (count[a] != k) return false;
    return true;
}

namespace {

void extend(int n, long long k, Letters& prefix, std::vector<long long>& count,
            std::vector<LatticeWord>& out) {
    if (prefix.size() == static_cast<std::size_t>(n) * k) {
        out.push_back(LatticeWord{prefix, n});
        return;
    }
    for (int a = 1; a <= n; ++a) {
        if (count[a] >= k) continue;
        if (a > 1 && count[a] + 1 > count[a - 1]) continue;
        prefix.push_back(static_cast<Letter>(a));
        ++count[a];
        extend(n, k, prefix, count, out);
        --count[a];
        prefix.pop_back();
    }
}

}  // namespace

std::vector<LatticeWord> enumerate_balanced(int n, long long k) {
    if (n < 1) throw InvalidInput("alphabet size must be positive");
    if (n > 255) throw InvalidInput("alphabet size exceeds letter range");
    if (k < 0) throw InvalidInput("letter multiplicity must be nonnegative");
    std::vector<LatticeWord> out;
    Letters prefix;
    std::vector<long long> count(static_cast<std::size_t>(n) + 1, 0);
    extend(n, k, prefix, count, out);
    return out;
}

std::string to_string(const LatticeWord& w) {
    std::ostringstream os;
    if (w.n <= 9) {
        for (Letter a : w.letters) os << int(a);
    } else {
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i) os << ',';
            os << int(w.letters[i]);
        }
    }
    return os.str();
}

LatticeWord parse_word(const std::string& text, int n) {
    Letters letters;
    int seen = 0;
    for (char c : text) {
        if (c == ',' || c == ' ') continue;
        if (c < '1' || c > '9')
            throw InvalidInput(std::string("bad letter '") + c + "' in word");
        letters.push_back(static_cast<Letter>(c - '0'));
        seen = std::max(seen, c - '0');
    }
    return LatticeWord{std::move(letters), std::max(n, seen)};
}

}  // namespace wavegraph
