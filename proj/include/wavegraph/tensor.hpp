#ifndef WAVEGRAPH_TENSOR_HPP
#define WAVEGRAPH_TENSOR_HPP

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wavegraph/errors.hpp"
#include "wavegraph/graphs.hpp"
#include "wavegraph/words.hpp"

namespace wavegraph {

/// A basis index of V^tensor-m: a length-m sequence over {1..n}, ordered
/// lexicographically with 1 < 2 < ... < n.
using IndexWord = Letters;

/// Element of V^tensor-m stored sparsely: index word -> exact nonzero
/// coefficient, terms kept in lex order. Immutable by convention once
/// built by the free functions below.
template <typename Coeff>
class SparseTensorT {
  public:
    SparseTensorT(int n, int m) : n_(n), m_(m) {
        if (n < 0 || m < 0) throw InvalidInput("tensor ranks must be nonnegative");
    }

    /// The rank-0 tensor with coefficient 1 (unit of the tensor product).
    static SparseTensorT unit(int n) {
        SparseTensorT t(n, 0);
        t.terms_.emplace(IndexWord{}, Coeff(1));
        return t;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<IndexWord, Coeff>& terms() const { return terms_; }

    void add_term(const IndexWord& word, const Coeff& coeff) {
        if (static_cast<int>(word.size()) != m_)
            throw InvalidInput("index word length differs from tensor rank");
        auto it = terms_.find(word);
        if (it == terms_.end()) {
            if (sgn(coeff) != 0) terms_.emplace(word, coeff);
        } else {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const SparseTensorT& a, const SparseTensorT& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    int m_;
    std::map<IndexWord, Coeff> terms_;
};

using SparseTensor = SparseTensorT<mpz_class>;
using RationalTensor = SparseTensorT<mpq_class>;

RationalTensor to_rational(const SparseTensor& t);

/// The full antisymmetrizer of n tensor positions: n! terms, one per
/// permutation p with index word p(1)..p(n) and coefficient sign(p).
/// The unique (up to scale) SL(n)-invariant of V^tensor-n.
SparseTensor wedge_form(int n);

/// A wave graph together with a total order on each component, i.e. a
/// directed n-hyperedge per wave. `orders[c]` is a permutation of
/// `graph.components[c]`.
struct Orientation {
    WaveGraph graph;
    std::vector<std::vector<int>> orders;
};

/// Validates the per-component orders against the graph.
void check_orientation(const Orientation& o);

/// Total number of pairs i < j listed in the opposite order within some
/// component order.
long long inversions(const Orientation& o);

/// Index word whose position v holds the ordinal number of vertex v in
/// its component's order.
IndexWord basis_term(const Orientation& o);

/// The signed sum over all (n!)^k orientations of the graph: coefficient
/// (-1)^inversions on each orientation's basis term.
SparseTensor invariant_tensor(const WaveGraph& g);

/// Same tensor built the other way: the k-fold product of wedge forms,
/// permuted so block c lands on the vertices of component c. Used to
/// cross-check invariant_tensor.
SparseTensor invariant_tensor_wedge_route(const WaveGraph& g);

/// The permutation sending position (c-1)n + r to the r-th vertex of the
/// c-th component (components sorted by first vertex), 1-based.
std::vector<int> block_permutation(const WaveGraph& g);

/// Moves the tensor factor at position p to position sigma[p]; index
/// words map w -> w o sigma^-1. `sigma` is 1-based, size m.
template <typename Coeff>
SparseTensorT<Coeff> permute_tensor(const SparseTensorT<Coeff>& t,
                                    const std::vector<int>& sigma);

/// Composition (sigma o tau)(p) = sigma[tau[p]], both 1-based.
std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau);

/// Tensor product: index words concatenate, coefficients multiply.
template <typename Coeff>
SparseTensorT<Coeff> product(const SparseTensorT<Coeff>& a,
                             const SparseTensorT<Coeff>& b);

/// Lex-minimal index word with nonzero coefficient.
template <typename Coeff>
std::pair<IndexWord, Coeff> leading_term(const SparseTensorT<Coeff>& t);

extern template class SparseTensorT<mpz_class>;
extern template class SparseTensorT<mpq_class>;

}  // namespace wavegraph

#endif
