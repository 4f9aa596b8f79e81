#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "wavegraph/partition.hpp"

using namespace wavegraph;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// all partitions of weight <= max_weight (any length)
std::vector<Partition> small_partitions(int max_weight) {
    std::vector<Partition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        out.emplace_back(stack);
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    return out;
}

}  // namespace

TEST_CASE("partition construction and invariants") {
    CHECK(P({}).weight() == 0);
    CHECK(P({}).length() == 0);
    CHECK(P({3, 3}).weight() == 6);
    CHECK(P({3, 1}).part(1) == 3);
    CHECK(P({3, 1}).part(5) == 0);
    CHECK_THROWS_AS(P({1, 2}), InvalidInput);
    CHECK_THROWS_AS(P({2, 0}), InvalidInput);
    CHECK_THROWS_AS(P({-1}), InvalidInput);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(conjugate(P({4, 2, 1}))) == P({4, 2, 1}));
}

TEST_CASE("hook_count examples") {
    CHECK(hook_count(P({3, 3})) == 5);
    CHECK(hook_count(P({})) == 1);
    // brute-force oracle for (2,1): the two fillings 12/3 and 13/2
    CHECK(test_oracles::count_standard_tableaux({2, 1}) == 2);
    CHECK(hook_count(P({2, 1})) == 2);
}

TEST_CASE("hook_count agrees with brute-force enumeration up to weight 8") {
    for (const Partition& shape : small_partitions(8)) {
        CAPTURE(shape.to_string());
        CHECK(hook_count(shape) ==
              test_oracles::count_standard_tableaux(shape.parts()));
    }
}

TEST_CASE("hook_count is conjugation invariant up to weight 12") {
    for (const Partition& shape : small_partitions(12))
        CHECK(hook_count(shape) == hook_count(conjugate(shape)));
}

TEST_CASE("tensor_step examples") {
    CHECK(tensor_step(P({}), 3) == std::vector<Partition>{P({1})});
    CHECK(tensor_step(P({1, 1}), 3) == std::vector<Partition>{P({2, 1}), P({})});
    CHECK(tensor_step(P({2, 1}), 3) ==
          std::vector<Partition>{P({3, 1}), P({2, 2}), P({1})});
    CHECK_THROWS_AS(tensor_step(P({1, 1, 1}), 3), InvalidInput);
}

TEST_CASE("tensor_step yields one distinct result per addable position") {
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& mu : small_partitions(6)) {
            if (mu.length() >= n) continue;
            int addable = 0;
            for (int row = 1; row <= std::min(n, mu.length() + 1); ++row)
                if (row == 1 || mu.part(row) < mu.part(row - 1)) ++addable;
            const auto results = tensor_step(mu, n);
            CHECK(static_cast<int>(results.size()) == addable);
            for (std::size_t i = 0; i < results.size(); ++i) {
                CHECK(results[i].length() < n);
                for (std::size_t j = i + 1; j < results.size(); ++j)
                    CHECK(!(results[i] == results[j]));
            }
        }
    }
}

TEST_CASE("pad_with_full_rows examples") {
    CHECK(pad_with_full_rows(P({}), 6, 3) == P({3, 3}));
    // zero rows added: the record shape is the conjugate position
    CHECK(pad_with_full_rows(P({2}), 2, 2) == P({1, 1}));
    CHECK(hook_count(pad_with_full_rows(P({2}), 2, 2)) == hook_count(P({2})));
    CHECK(pad_with_full_rows(P({2, 1}), 9, 3) == P({3, 3, 2, 1}));
    CHECK_THROWS_AS(pad_with_full_rows(P({2, 1}), 8, 3), InvalidInput);
    CHECK_THROWS_AS(pad_with_full_rows(P({2, 1}), 2, 3), InvalidInput);
    CHECK_THROWS_AS(pad_with_full_rows(P({1, 1, 1}), 6, 3), InvalidInput);
}

TEST_CASE("multiplicities are the game-record tableau counts") {
    // V^tensor-4 for n=2 decomposes as (4) + 3*(2) + 2*(); the record
    // shape for lambda=(2) is (2,1,1) with 3 tableaux, not (2,2) with 2
    using Row = std::pair<Partition, mpz_class>;
    CHECK(decompose(2, 4) ==
          std::vector<Row>{{P({4}), 1}, {P({2}), 3}, {P({}), 2}});
    CHECK(pad_with_full_rows(P({2}), 4, 2) == P({2, 1, 1}));
}

TEST_CASE("decompose examples") {
    using Row = std::pair<Partition, mpz_class>;
    CHECK(decompose(2, 2) == std::vector<Row>{{P({2}), 1}, {P({}), 1}});
    CHECK(decompose(3, 3) ==
          std::vector<Row>{{P({3}), 1}, {P({2, 1}), 2}, {P({}), 1}});
    CHECK(decompose(5, 1) == std::vector<Row>{{P({1}), 1}});
}

TEST_CASE("dim_irrep examples") {
    CHECK(dim_irrep(P({}), 2) == 1);
    CHECK(dim_irrep(P({}), 7) == 1);
    CHECK(dim_irrep(P({1}), 3) == 3);
    CHECK(dim_irrep(P({2, 1}), 3) == 8);
    CHECK_THROWS_AS(dim_irrep(P({1, 1, 1}), 3), InvalidInput);
}

TEST_CASE("decompose total dimension equals n^m") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m <= 8; ++m) {
            mpz_class total = 0;
            for (const auto& [lambda, mult] : decompose(n, m))
                total += mult * dim_irrep(lambda, n);
            mpz_class expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), n, m);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(total == expect);
        }
    }
}

TEST_CASE("invariant_dimension examples") {
    CHECK(invariant_dimension(3, 6) == 5);
    CHECK(invariant_dimension(3, 5) == 0);
    CHECK(invariant_dimension(2, 6) == 5);
    CHECK(invariant_dimension(2, 8) == 14);
    CHECK(invariant_dimension(4, 0) == 1);
}

TEST_CASE("invariant_dimension equals the rectangle tableau count") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m <= 8; ++m) {
            if (m % n == 0) {
                CHECK(invariant_dimension(n, m) ==
                      hook_count(pad_with_full_rows(P({}), m, n)));
            } else {
                CHECK(invariant_dimension(n, m) == 0);
            }
        }
    }
}
