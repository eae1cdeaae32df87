#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quadres/linalg.hpp"

using namespace quadres;

TEST_CASE("rank on small pinned matrices") {
    const FieldChoice q = FieldChoice::rationals();
    CHECK(rank(SparseIntMatrix::from_dense({{1, 0}, {0, 1}}), q) == 2);
    CHECK(rank(SparseIntMatrix::from_dense({{0, 0}, {0, 0}}), q) == 0);
    CHECK(rank(SparseIntMatrix::from_dense({{1, 1}, {1, 1}}), FieldChoice::prime(3)) == 1);
    CHECK(rank(SparseIntMatrix{0, 0, {}}, q) == 0);

    // characteristic matters: 2x2 with determinant 2
    const auto m = SparseIntMatrix::from_dense({{1, 1}, {1, -1}});
    CHECK(rank(m, q) == 2);
    CHECK(rank(m, FieldChoice::prime(2)) == 1);
}

TEST_CASE("sparse rank agrees with the dense oracle on random matrices") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 10)(rng);
        const int cols = std::uniform_int_distribution<int>(1, 10)(rng);
        std::vector<std::vector<int>> dense(static_cast<std::size_t>(rows),
                                            std::vector<int>(static_cast<std::size_t>(cols), 0));
        // biased toward sparse +-1 with occasional larger entries
        for (auto& row : dense)
            for (auto& v : row) {
                const int r = std::uniform_int_distribution<int>(0, 9)(rng);
                if (r < 4) v = 0;
                else if (r < 7) v = 1;
                else if (r < 9) v = -1;
                else v = std::uniform_int_distribution<int>(-5, 5)(rng);
            }
        std::vector<std::vector<mpq_class>> dq(static_cast<std::size_t>(rows),
                                               std::vector<mpq_class>(static_cast<std::size_t>(cols)));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                dq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

        const SparseIntMatrix m = SparseIntMatrix::from_dense(dense);
        CHECK(rank(m, FieldChoice::rationals()) == helpers::dense_rank_oracle(dq));
        for (unsigned p : {2u, 3u, 32003u})
            CHECK(rank(m, FieldChoice::prime(p)) == helpers::dense_rank_oracle_mod_p(dq, p));
    }
}

TEST_CASE("duplicate coordinate entries accumulate before elimination") {
    SparseIntMatrix m{1, 1, {{0, 0, 1}, {0, 0, -1}}};
    CHECK(rank(m, FieldChoice::rationals()) == 0);
    CHECK(rank(m, FieldChoice::prime(5)) == 0);
}
