#ifndef WAVEGRAPH_VERIFY_HPP
#define WAVEGRAPH_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wavegraph/exact_matrix.hpp"
#include "wavegraph/tensor.hpp"

namespace wavegraph {

/// Default cap on the number of basis states the brute-force oracle may
/// touch (3^8).
inline constexpr long long kDefaultOracleBudget = 6561;

/// Applies a group element to every tensor position (one position at a
/// time); identity acts as identity, and a*omega = det(a)*omega.
RationalTensor apply_group(const ExactMatrix& a, const RationalTensor& t);
RationalTensor apply_group(const ExactMatrix& a, const SparseTensor& t);

/// Derivation action of the elementary matrix unit E_ij across all
/// positions: sum over positions of "replace letter j by i there".
/// Annihilation by all i != j is exactly SL(n)-invariance.
template <typename Coeff>
SparseTensorT<Coeff> lie_act(int i, int j, const SparseTensorT<Coeff>& t);

struct GraphCheck {
    std::string word;
    bool lie_annihilated;
    bool transvections_fixed;
};

struct InvarianceSection {
    std::vector<GraphCheck> per_graph;
    bool pass;
};

/// For every enumerated graph: lie_act(i,j, t_G) = 0 for all i != j, and
/// t_G is fixed by the transvections I + c*E_ij for c in {1, -1, 2}.
InvarianceSection check_invariance(int n, int m);

struct IndependenceSection {
    std::vector<std::string> words;          // row/column labels, lex order
    std::vector<std::vector<int>> matrix;    // leading-term coefficients
    bool triangular;
    bool unit_diagonal;
    mpz_class determinant;
    bool pass;
};

/// The leading-term minor of the theorem: rows are graphs in word order,
/// columns their leading index words; must be unipotent with det 1.
IndependenceSection independence_certificate(int n, int m);

/// Dimension of the joint kernel of all lie_act(i,j,.) on the full
/// n^m-dimensional space, by exact rational elimination. Knows nothing of
/// graphs, words, or the dimension formula. Throws BudgetExceeded when
/// n^m > budget.
long oracle_invariant_dimension(int n, int m, long long budget = kDefaultOracleBudget);

struct SpanningSection {
    long oracle_dim;
    mpz_class formula_dim;
    long graph_count;
    long rank;
    bool pass;
};

/// oracle dimension = formula dimension = number of graphs = exact rank
/// of the full coefficient matrix of the t_G.
SpanningSection spanning_check(int n, int m, long long budget = kDefaultOracleBudget);

/// Machine-checkable record of the theorem's proof obligations at (n,m).
struct Certificate {
    int n;
    int m;
    mpz_class dimension;
    std::vector<std::string> words;
    InvarianceSection invariance;
    IndependenceSection independence;
    std::optional<SpanningSection> spanning;
    bool pass;
};

Certificate certify(int n, int m, bool with_oracle,
                    long long budget = kDefaultOracleBudget);

}  // namespace wavegraph

#endif
