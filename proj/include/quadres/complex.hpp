#pragma once

#include <string>
#include <vector>

#include "quadres/diagram.hpp"
#include "quadres/ring.hpp"

namespace quadres {

enum class Orientation { Primal, Dual };

/// One nonzero entry sign * x_label of a differential, connecting the
/// column-side generator `col` to the row-side generator `row`.
struct MatrixEntry {
    int row = 0;
    int col = 0;
    int sign = +1;
    int label = 0;
    bool operator==(const MatrixEntry&) const = default;
};

/// Chain complex of free modules with linear differentials. Matrix n (for
/// n = 1..L) connects levels n and n-1:
///   primal: map level n -> level n-1, rows at level n-1, columns at level n;
///   dual:   map level n-1 -> level n, rows at level n, columns at level n-1.
/// Level-l generators sit in internal degree l (primal) or -l (dual).
struct FreeComplex {
    RingSpec spec;
    Orientation orientation = Orientation::Primal;
    int initial_label = 1;
    std::vector<int> ranks;                                // r_0..r_L
    std::vector<std::vector<MatrixEntry>> differentials;   // [n] for n = 1..L; [0] unused

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    int gen_degree(int level) const {
        return orientation == Orientation::Primal ? level : -level;
    }
    int matrix_domain_level(int n) const {
        return orientation == Orientation::Primal ? n : n - 1;
    }
    int matrix_codomain_level(int n) const {
        return orientation == Orientation::Primal ? n - 1 : n;
    }
    int matrix_rows(int n) const { return ranks[static_cast<std::size_t>(matrix_codomain_level(n))]; }
    int matrix_cols(int n) const { return ranks[static_cast<std::size_t>(matrix_domain_level(n))]; }
};

/// Rows of d_n are indexed by level-(n-1) vertices, columns by level-n
/// vertices, one entry sign * x_label per diagram edge.
FreeComplex from_diagram(const Diagram& d);

/// Outcome of a d∘d check; on failure carries the (row, col) of the first
/// surviving entry and its value in R.
struct DDWitness {
    bool zero = true;
    int level = 0;  // the n of d_{n-1} ∘ d_n
    int row = 0;
    int col = 0;
    std::string element;
};

/// True iff every entry of the symbolic product of matrices n-1 and n reduces
/// to 0 in R. Requires 2 <= n <= L.
DDWitness verify_dd_zero(const FreeComplex& c, int n);
DDWitness verify_dd_zero_all(const FreeComplex& c);

/// Transposed matrices, negated generator degrees, same entry signs.
FreeComplex dualize(const FreeComplex& c);

std::string complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const std::string& text, const RingSpec& spec);

}  // namespace quadres
