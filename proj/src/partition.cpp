#include "wavegraph/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wavegraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int row) const {
    if (row < 1 || row > length()) return 0;
    return parts_[row - 1];
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition conjugate(const Partition& shape) {
    std::vector<int> cols;
    if (!shape.empty()) {
        cols.assign(shape.parts()[0], 0);
        for (int p : shape.parts())
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

mpz_class hook_count(const Partition& shape) {
    const Partition conj = conjugate(shape);
    mpz_class numer = 1;
    for (long t = 2; t <= shape.weight(); ++t) numer *= t;
    mpz_class hooks = 1;
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            long arm = shape.part(i) - j;
            long leg = conj.part(j) - i;
            hooks *= arm + leg + 1;
        }
    }
    mpz_class count;
    mpz_divexact(count.get_mpz_t(), numer.get_mpz_t(), hooks.get_mpz_t());
    return count;
}

std::vector<Partition> tensor_step(const Partition& mu, int n) {
    if (n < 1) throw InvalidInput("field width must be positive");
    if (mu.length() >= n)
        throw InvalidInput("partition length must be < " + std::to_string(n));

    std::vector<Partition> out;
    for (int row = 1; row <= std::min(n, mu.length() + 1); ++row) {
        // Addable iff the result is still weakly decreasing.
        if (row > 1 && mu.part(row) >= mu.part(row - 1)) continue;
        std::vector<int> parts = mu.parts();
        if (row > mu.length())
            parts.push_back(1);
        else
            ++parts[row - 1];
        if (static_cast<int>(parts.size()) == n) {
            for (int& p : parts) --p;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition pad_with_full_rows(const Partition& lambda, long long m, int n) {
    if (n < 1) throw InvalidInput("row length must be positive");
    if (lambda.length() >= n)
        throw InvalidInput("partition length must be < " + std::to_string(n));
    const long long w = lambda.weight();
    if (w > m) throw InvalidInput("partition weight exceeds target weight");
    if ((m - w) % n != 0)
        throw InvalidInput("target weight not congruent to partition weight mod n");

    // The game record restores each cleared full row underneath the final
    // position. With positions stored as column heights, the record shape
    // read in row coordinates is conjugate(lambda) plus the cleared rows.
    std::vector<int> parts = conjugate(lambda).parts();
    const long long rows = (m - w) / n;
    for (long long r = 0; r < rows; ++r) parts.push_back(n);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace {

// All partitions of weight w with at most max_len parts, any part size.
void partitions_of(long long w, int max_len, int max_part,
                   std::vector<int>& stack, std::vector<Partition>& out) {
    if (w == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_len == 0) return;
    const int top = static_cast<int>(std::min<long long>(w, max_part));
    for (int p = top; p >= 1; --p) {
        stack.push_back(p);
        partitions_of(w - p, max_len - 1, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<std::pair<Partition, mpz_class>> decompose(int n, long long m) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (m < 0) throw InvalidInput("m must be nonnegative");

    std::vector<Partition> shapes;
    for (long long w = m % n; w <= m; w += n) {
        std::vector<int> stack;
        partitions_of(w, n - 1, w > 0 ? static_cast<int>(w) : 1, stack, shapes);
    }
    std::sort(shapes.begin(), shapes.end(), std::greater<>());

    std::vector<std::pair<Partition, mpz_class>> out;
    out.reserve(shapes.size());
    for (auto& lambda : shapes) {
        mpz_class mult = hook_count(pad_with_full_rows(lambda, m, n));
        out.emplace_back(std::move(lambda), std::move(mult));
    }
    return out;
}

mpz_class dim_irrep(const Partition& lambda, int n) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (lambda.length() >= n)
        throw InvalidInput("partition length must be < " + std::to_string(n));
    const Partition conj = conjugate(lambda);
    mpz_class numer = 1, denom = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            numer *= n + (j - i);
            long arm = lambda.part(i) - j;
            long leg = conj.part(j) - i;
            denom *= arm + leg + 1;
        }
    }
    mpz_class dim;
    mpz_divexact(dim.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return dim;
}

mpz_class invariant_dimension(int n, long long m) {
    if (n < 2) throw InvalidInput("n must be at least 2");
    if (m < 0) throw InvalidInput("m must be nonnegative");
    if (m % n != 0) return 0;
    const long long k = m / n;
    mpz_class numer = 1;
    for (long t = 2; t <= m; ++t) numer *= t;
    for (long i = 1; i < n; ++i)
        for (long t = 2; t <= i; ++t) numer *= t;
    mpz_class denom = 1;
    for (long i = 0; i < n; ++i)
        for (long t = 2; t <= k + i; ++t) denom *= t;
    mpz_class dim;
    mpz_divexact(dim.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    return dim;
}

}  // namespace wavegraph
