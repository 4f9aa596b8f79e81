#include "wavegraph/verify.hpp"

#include <algorithm>
#include <map>

#include "wavegraph/graphs.hpp"
#include "wavegraph/partition.hpp"

namespace wavegraph {

RationalTensor apply_group(const ExactMatrix& a, const RationalTensor& t) {
    if (a.n() != t.n()) throw InvalidInput("matrix size differs from tensor alphabet");
    RationalTensor current = t;
    for (int p = 0; p < t.m(); ++p) {
        RationalTensor next(t.n(), t.m());
        for (const auto& [word, coeff] : current.terms()) {
            const int j = word[p];
            for (int i = 1; i <= a.n(); ++i) {
                const mpq_class& entry = a.at(i, j);
                if (sgn(entry) == 0) continue;
                IndexWord moved = word;
                moved[p] = static_cast<Letter>(i);
                next.add_term(moved, coeff * entry);
            }
        }
        current = std::move(next);
    }
    return current;
}

RationalTensor apply_group(const ExactMatrix& a, const SparseTensor& t) {
    return apply_group(a, to_rational(t));
}

template <typename Coeff>
SparseTensorT<Coeff> lie_act(int i, int j, const SparseTensorT<Coeff>& t) {
    if (i == j) throw InvalidInput("lie_act needs i != j");
    if (i < 1 || i > t.n() || j < 1 || j > t.n())
        throw InvalidInput("matrix unit indices outside 1..n");
    SparseTensorT<Coeff> out(t.n(), t.m());
    for (const auto& [word, coeff] : t.terms()) {
        for (int p = 0; p < t.m(); ++p) {
            if (word[p] != j) continue;
            IndexWord moved = word;
            moved[p] = static_cast<Letter>(i);
            out.add_term(moved, coeff);
        }
    }
    return out;
}

template SparseTensorT<mpz_class> lie_act(int, int, const SparseTensorT<mpz_class>&);
template SparseTensorT<mpq_class> lie_act(int, int, const SparseTensorT<mpq_class>&);

InvarianceSection check_invariance(int n, int m) {
    InvarianceSection section{{}, true};
    static const int kTransvectionScalars[] = {1, -1, 2};
    for (const WaveGraph& g : enumerate_graphs(n, m)) {
        const SparseTensor t = invariant_tensor(g);
        GraphCheck check{to_string(graph_to_word(g)), true, true};

        for (int i = 1; i <= n && check.lie_annihilated; ++i)
            for (int j = 1; j <= n && check.lie_annihilated; ++j)
                if (i != j && !lie_act(i, j, t).zero()) check.lie_annihilated = false;

        const RationalTensor rt = to_rational(t);
        for (int i = 1; i <= n && check.transvections_fixed; ++i)
            for (int j = 1; j <= n && check.transvections_fixed; ++j) {
                if (i == j) continue;
                for (int c : kTransvectionScalars) {
                    const ExactMatrix a = ExactMatrix::transvection(n, i, j, c);
                    if (!(apply_group(a, rt) == rt)) {
                        check.transvections_fixed = false;
                        break;
                    }
                }
            }

        section.pass = section.pass && check.lie_annihilated && check.transvections_fixed;
        section.per_graph.push_back(std::move(check));
    }
    return section;
}

namespace {

mpz_class unipotent_determinant(const std::vector<std::vector<int>>& matrix) {
    std::vector<std::vector<mpq_class>> rows(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r)
        rows[r].assign(matrix[r].begin(), matrix[r].end());
    // exact rational elimination on the integer minor
    mpq_class det = 1;
    const std::size_t d = rows.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == d) return 0;
        if (pivot != col) {
            std::swap(rows[pivot], rows[col]);
            det = -det;
        }
        det *= rows[col][col];
        const mpq_class inv = 1 / rows[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            if (sgn(rows[r][col]) == 0) continue;
            const mpq_class factor = rows[r][col] * inv;
            for (std::size_t c = col; c < d; ++c) rows[r][c] -= factor * rows[col][c];
        }
    }
    return det.get_num() / det.get_den();
}

}  // namespace

IndependenceSection independence_certificate(int n, int m) {
    const std::vector<WaveGraph> graphs = enumerate_graphs(n, m);
    const std::size_t d = graphs.size();

    std::vector<IndexWord> leading;
    IndependenceSection section;
    section.words.reserve(d);
    leading.reserve(d);
    for (const WaveGraph& g : graphs) {
        const LatticeWord w = graph_to_word(g);
        section.words.push_back(to_string(w));
        leading.push_back(w.letters);
    }

    section.matrix.assign(d, std::vector<int>(d, 0));
    for (std::size_t r = 0; r < d; ++r) {
        const SparseTensor t = invariant_tensor(graphs[r]);
        for (std::size_t c = 0; c < d; ++c) {
            auto it = t.terms().find(leading[c]);
            if (it != t.terms().end())
                section.matrix[r][c] = static_cast<int>(it->second.get_si());
        }
    }

    section.triangular = true;
    section.unit_diagonal = true;
    for (std::size_t r = 0; r < d; ++r) {
        if (section.matrix[r][r] != 1) section.unit_diagonal = false;
        for (std::size_t c = 0; c < r; ++c)
            if (section.matrix[r][c] != 0) section.triangular = false;
    }
    section.determinant = unipotent_determinant(section.matrix);
    section.pass = section.triangular && section.unit_diagonal &&
                   section.determinant == 1;
    return section;
}

long oracle_invariant_dimension(int n, int m, long long budget) {
    if (n < 2) throw InvalidInput("oracle needs n >= 2");
    if (m < 0) throw InvalidInput("m must be nonnegative");
    if (budget < 1) throw InvalidInput("budget must be positive");

    mpz_class states;
    mpz_ui_pow_ui(states.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(m));
    if (states > mpz_class(static_cast<long>(budget)))
        throw BudgetExceeded(budget, "state space " + std::to_string(n) + "^" +
                                         std::to_string(m) + " = " + states.get_str() +
                                         " exceeds budget " + std::to_string(budget));

    // group the n^m basis words by letter content; the operators map each
    // content class into neighboring classes, so the kernel splits as a
    // direct sum over classes
    std::map<std::vector<int>, std::vector<IndexWord>> classes;
    IndexWord word(static_cast<std::size_t>(m), 1);
    while (true) {
        std::vector<int> content(static_cast<std::size_t>(n) + 1, 0);
        for (Letter a : word) ++content[a];
        classes[content].push_back(word);

        int p = m - 1;
        while (p >= 0 && word[p] == n) word[p--] = 1;
        if (p < 0) break;
        ++word[p];
    }

    long nullity = 0;
    for (const auto& [content, members] : classes) {
        std::map<IndexWord, int> column;
        for (std::size_t q = 0; q < members.size(); ++q)
            column.emplace(members[q], static_cast<int>(q));

        SparseEchelon echelon(static_cast<int>(members.size()));
        for (int i = 1; i <= n && !echelon.saturated(); ++i) {
            for (int j = 1; j <= n && !echelon.saturated(); ++j) {
                if (i == j) continue;
                // rows of the operator E_ij restricted to this class,
                // keyed by target word
                std::map<IndexWord, SparseRow> rows;
                for (std::size_t q = 0; q < members.size(); ++q) {
                    for (int p = 0; p < m; ++p) {
                        if (members[q][p] != j) continue;
                        IndexWord target = members[q];
                        target[p] = static_cast<Letter>(i);
                        rows[target].emplace_back(static_cast<int>(q), mpq_class(1));
                    }
                }
                for (auto& [target, row] : rows) {
                    echelon.add_row(std::move(row));
                    if (echelon.saturated()) break;
                }
            }
        }
        nullity += static_cast<long>(members.size()) - echelon.rank();
    }
    return nullity;
}

SpanningSection spanning_check(int n, int m, long long budget) {
    SpanningSection section;
    section.oracle_dim = oracle_invariant_dimension(n, m, budget);
    section.formula_dim = invariant_dimension(n, m);
    const std::vector<WaveGraph> graphs = enumerate_graphs(n, m);
    section.graph_count = static_cast<long>(graphs.size());

    // exact rank of the full coefficient matrix of the t_G
    std::map<IndexWord, int> column;
    std::vector<SparseTensor> tensors;
    tensors.reserve(graphs.size());
    for (const WaveGraph& g : graphs) {
        tensors.push_back(invariant_tensor(g));
        for (const auto& [w, c] : tensors.back().terms()) column.emplace(w, 0);
    }
    int next = 0;
    for (auto& [w, idx] : column) idx = next++;

    SparseEchelon echelon(next);
    long rank = 0;
    for (const SparseTensor& t : tensors) {
        SparseRow row;
        row.reserve(t.term_count());
        for (const auto& [w, c] : t.terms())
            row.emplace_back(column.at(w), mpq_class(c));
        if (echelon.add_row(std::move(row))) ++rank;
    }
    section.rank = rank;

    section.pass = section.oracle_dim == section.formula_dim &&
                   section.formula_dim == section.graph_count &&
                   section.graph_count == section.rank;
    return section;
}

Certificate certify(int n, int m, bool with_oracle, long long budget) {
    Certificate cert;
    cert.n = n;
    cert.m = m;
    cert.dimension = invariant_dimension(n, m);
    // the oracle enforces the state budget; run it first so an
    // over-budget request fails before any heavy construction
    if (with_oracle) cert.spanning = spanning_check(n, m, budget);
    for (const WaveGraph& g : enumerate_graphs(n, m))
        cert.words.push_back(to_string(graph_to_word(g)));
    cert.invariance = check_invariance(n, m);
    cert.independence = independence_certificate(n, m);
    cert.pass = cert.invariance.pass && cert.independence.pass &&
                (!cert.spanning || cert.spanning->pass);
    return cert;
}

}  // namespace wavegraph
