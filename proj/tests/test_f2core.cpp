#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/f2matrix.hpp"
#include "oddcover/graph.hpp"
#include "oddcover/rng.hpp"
#include "oracles.hpp"

using namespace oddcover;

TEST_CASE("rank of small adjacency matrices") {
    CHECK(Graph::complete(2).adjacency().rank() == 2);
    CHECK(Graph::complete(5).adjacency().rank() == 4);
    CHECK(Graph::cycle(6).adjacency().rank() == 4);
    CHECK(F2Matrix(3, 3).rank() == 0);
}

TEST_CASE("rank equals transpose rank and the naive oracle on random matrices") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng.below(24);
        const std::size_t cols = 1 + rng.below(24);
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.coin()) m.set(r, c);
        const std::size_t rank = m.rank();
        CHECK(rank == oracles::naive_rank_mod2(oracles::to_int_matrix(m)));
        CHECK(rank == m.transposed().rank());
        CHECK(rank <= std::min(rows, cols));
    }
}

TEST_CASE("kernel basis on named graphs") {
    SUBCASE("K_3 kernel is the all-ones vector") {
        const auto basis = Graph::complete(3).adjacency().kernel_basis();
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == BitVec::from_indices(3, {0, 1, 2}));
    }
    SUBCASE("K_4 has full rank") {
        CHECK(Graph::complete(4).adjacency().kernel_basis().empty());
    }
    SUBCASE("C_4 kernel holds the opposite-vertex pairs") {
        const auto basis = Graph::cycle(4).adjacency().kernel_basis();
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == BitVec::from_indices(4, {0, 2}));
        CHECK(basis[1] == BitVec::from_indices(4, {1, 3}));
    }
    SUBCASE("zero matrix kernel is the identity basis") {
        const auto basis = F2Matrix(3, 3).kernel_basis();
        REQUIRE(basis.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(basis[i] == BitVec::from_indices(3, {i}));
    }
}

TEST_CASE("kernel vectors annihilate the rows and match the rank identity") {
    SplitMix64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng.below(16);
        const std::size_t cols = 1 + rng.below(16);
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.coin()) m.set(r, c);
        const auto basis = m.kernel_basis();
        CHECK(basis.size() + m.rank() == rows);
        for (const auto& x : basis) {
            BitVec combo(cols);
            for (std::size_t r : x.to_indices()) combo ^= m.row(r);
            CHECK(combo.none());
        }
    }
}

TEST_CASE("row independence") {
    const F2Matrix k3 = Graph::complete(3).adjacency();
    CHECK(k3.rows_independent({0, 1}));
    CHECK_FALSE(k3.rows_independent({0, 1, 2})); // K_3 rows sum to zero
    CHECK(k3.rows_independent({}));
    CHECK_THROWS_AS((void)k3.rows_independent({0, 5}), std::out_of_range);
}

TEST_CASE("rows_independent matches submatrix rank on random selections") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 2 + rng.below(12);
        F2Matrix m(rows, 1 + rng.below(12));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (rng.coin()) m.set(r, c);
        std::vector<std::size_t> sel;
        for (std::size_t r = 0; r < rows; ++r)
            if (rng.coin()) sel.push_back(r);
        CHECK(m.rows_independent(sel) == (m.submatrix_rows(sel).rank() == sel.size()));
    }
}

TEST_CASE("column cap is enforced") {
    CHECK_THROWS_AS(BitVec(4097), std::length_error);
    CHECK_NOTHROW(BitVec(4096));
}
