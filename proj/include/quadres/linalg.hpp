#pragma once

#include <vector>

#include "quadres/field.hpp"

namespace quadres {

/// Sparse integer matrix in coordinate form. Graded pieces of the linear
/// differentials only ever produce entries in {-1, 0, +1}, but the rank
/// routines accept arbitrary integer entries.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row, col, coef;
    };
    std::vector<Entry> entries;

    static SparseIntMatrix from_dense(const std::vector<std::vector<int>>& dense);
};

/// Exact rank over the chosen field. Prime fields use sparse Gaussian column
/// elimination with the first nonzero row of each column as pivot; rationals
/// use the fraction-free variant on arbitrary-precision integers (cross-
/// multiplied updates, gcd content stripped after each step).
int rank(const SparseIntMatrix& m, const FieldChoice& field);

}  // namespace quadres
