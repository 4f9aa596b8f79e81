#include "wavegraph/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wavegraph {

RationalTensor to_rational(const SparseTensor& t) {
    RationalTensor out(t.n(), t.m());
    for (const auto& [word, coeff] : t.terms()) out.add_term(word, mpq_class(coeff));
    return out;
}

SparseTensor wedge_form(int n) {
    if (n < 1) throw InvalidInput("wedge form needs n >= 1");
    if (n > 255) throw InvalidInput("alphabet size exceeds letter range");
    SparseTensor t(n, n);
    IndexWord word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), Letter(1));
    do {
        long long inv = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
            for (std::size_t j = i + 1; j < word.size(); ++j)
                if (word[i] > word[j]) ++inv;
        t.add_term(word, (inv % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(word.begin(), word.end()));
    return t;
}

void check_orientation(const Orientation& o) {
    const Validation v = validate(o.graph);
    if (!v.ok) throw InvalidInput("invalid wave graph: " + v.message);
    if (o.orders.size() != o.graph.components.size())
        throw InvalidInput("one order per component required");
    for (std::size_t c = 0; c < o.orders.size(); ++c) {
        auto sorted = o.orders[c];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != o.graph.components[c])
            throw InvalidInput("order of component " + std::to_string(c + 1) +
                               " is not a permutation of its vertices");
    }
}

namespace {

long long sequence_inversions(const std::vector<int>& seq) {
    long long inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv;
}

IndexWord term_of_orders(int m, const std::vector<std::vector<int>>& orders) {
    IndexWord word(static_cast<std::size_t>(m), 0);
    for (const auto& order : orders)
        for (std::size_t r = 0; r < order.size(); ++r)
            word[order[r] - 1] = static_cast<Letter>(r + 1);
    return word;
}

}  // namespace

long long inversions(const Orientation& o) {
    check_orientation(o);
    long long inv = 0;
    for (const auto& order : o.orders) inv += sequence_inversions(order);
    return inv;
}

IndexWord basis_term(const Orientation& o) {
    check_orientation(o);
    return term_of_orders(o.graph.m, o.orders);
}

SparseTensor invariant_tensor(const WaveGraph& g) {
    const Validation v = validate(g);
    if (!v.ok) throw InvalidInput("invalid wave graph: " + v.message);

    SparseTensor t(g.n, g.m);
    std::vector<std::vector<int>> orders = g.components;
    const std::size_t k = orders.size();

    // odometer over the k component orders, each running through all n!
    // permutations in std::next_permutation order
    while (true) {
        long long inv = 0;
        for (const auto& order : orders) inv += sequence_inversions(order);
        t.add_term(term_of_orders(g.m, orders), (inv % 2 == 0) ? 1 : -1);

        std::size_t c = 0;
        while (c < k && !std::next_permutation(orders[c].begin(), orders[c].end()))
            ++c;  // component c wrapped around to sorted order; carry on
        if (c == k) break;
    }
    return t;
}

std::vector<int> block_permutation(const WaveGraph& g) {
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(g.m));
    for (const auto& comp : g.components)
        sigma.insert(sigma.end(), comp.begin(), comp.end());
    return sigma;
}

SparseTensor invariant_tensor_wedge_route(const WaveGraph& g) {
    const Validation v = validate(g);
    if (!v.ok) throw InvalidInput("invalid wave graph: " + v.message);
    SparseTensor t = SparseTensor::unit(g.n);
    const SparseTensor omega = wedge_form(g.n);
    for (std::size_t c = 0; c < g.components.size(); ++c) t = product(t, omega);
    return permute_tensor(t, block_permutation(g));
}

template <typename Coeff>
SparseTensorT<Coeff> permute_tensor(const SparseTensorT<Coeff>& t,
                                    const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != t.m())
        throw InvalidInput("permutation size differs from tensor rank");
    std::vector<bool> hit(sigma.size() + 1, false);
    for (int s : sigma) {
        if (s < 1 || s > t.m() || hit[s])
            throw InvalidInput("not a permutation of 1.." + std::to_string(t.m()));
        hit[s] = true;
    }
    SparseTensorT<Coeff> out(t.n(), t.m());
    for (const auto& [word, coeff] : t.terms()) {
        IndexWord moved(word.size());
        for (std::size_t p = 0; p < word.size(); ++p) moved[sigma[p] - 1] = word[p];
        out.add_term(moved, coeff);
    }
    return out;
}

std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau) {
    if (sigma.size() != tau.size())
        throw InvalidInput("permutation sizes differ");
    std::vector<int> out(sigma.size());
    for (std::size_t p = 0; p < tau.size(); ++p) out[p] = sigma[tau[p] - 1];
    return out;
}

template <typename Coeff>
SparseTensorT<Coeff> product(const SparseTensorT<Coeff>& a,
                             const SparseTensorT<Coeff>& b) {
    if (a.n() != b.n()) throw InvalidInput("tensor factors have different n");
    SparseTensorT<Coeff> out(a.n(), a.m() + b.m());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            IndexWord word = wa;
            word.insert(word.end(), wb.begin(), wb.end());
            out.add_term(word, ca * cb);
        }
    }
    return out;
}

template <typename Coeff>
std::pair<IndexWord, Coeff> leading_term(const SparseTensorT<Coeff>& t) {
    if (t.zero()) throw EmptyTensor("leading term of the zero tensor");
    const auto& front = *t.terms().begin();
    return {front.first, front.second};
}

template class SparseTensorT<mpz_class>;
template class SparseTensorT<mpq_class>;

template SparseTensorT<mpz_class> permute_tensor(const SparseTensorT<mpz_class>&,
                                                 const std::vector<int>&);
template SparseTensorT<mpq_class> permute_tensor(const SparseTensorT<mpq_class>&,
                                                 const std::vector<int>&);
template SparseTensorT<mpz_class> product(const SparseTensorT<mpz_class>&,
                                          const SparseTensorT<mpz_class>&);
template SparseTensorT<mpq_class> product(const SparseTensorT<mpq_class>&,
                                          const SparseTensorT<mpq_class>&);
template std::pair<IndexWord, mpz_class> leading_term(const SparseTensorT<mpz_class>&);
template std::pair<IndexWord, mpq_class> leading_term(const SparseTensorT<mpq_class>&);

}  // namespace wavegraph
