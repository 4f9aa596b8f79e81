#ifndef WAVEGRAPH_PARTITION_HPP
#define WAVEGRAPH_PARTITION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wavegraph/errors.hpp"

namespace wavegraph {

/// A partition: weakly decreasing sequence of positive integer parts.
/// The empty sequence is the zero partition (weight 0, length 0).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    /// Part at 1-based row index; 0 beyond the last row.
    int part(int row) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& shape);

/// Number of standard tableaux of the given shape (hook length formula,
/// exact big-integer arithmetic).
mpz_class hook_count(const Partition& shape);

/// All partitions reachable from `mu` by adding one box at an addable row
/// among rows 1..n, clearing a full column of length n when one forms
/// (every part drops by 1). Results are distinct, each of length < n,
/// returned in decreasing lexicographic order.
std::vector<Partition> tensor_step(const Partition& mu, int n);

/// The shape of a game record ending at position `lambda` after m drops
/// on a width-n field: conjugate(lambda) together with (m - |lambda|)/n
/// restored rows of length n. Its tableau count is the multiplicity of
/// `lambda` in the m-fold tensor power of the standard representation.
Partition pad_with_full_rows(const Partition& lambda, long long m, int n);

/// Full decomposition of the m-fold tensor power of the standard
/// representation of SL(n): every lambda of length < n with
/// |lambda| <= m and |lambda| == m (mod n), paired with its multiplicity
/// hook_count(pad_with_full_rows(lambda, m, n)). Decreasing lex order.
std::vector<std::pair<Partition, mpz_class>> decompose(int n, long long m);

/// Dimension of the irreducible SL(n) representation labeled by `lambda`
/// (hook content formula).
mpz_class dim_irrep(const Partition& lambda, int n);

/// Dimension of the subspace of SL(n)-invariants of the m-fold tensor
/// power: 0 unless n | m, else m! (1! 2! ... (n-1)!) / (k! ... (k+n-1)!)
/// with k = m/n. Equals hook_count of the k x n rectangle.
mpz_class invariant_dimension(int n, long long m);

}  // namespace wavegraph

#endif
