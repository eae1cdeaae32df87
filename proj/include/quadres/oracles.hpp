#pragma once

#include <optional>
#include <string>

#include "quadres/complex.hpp"
#include "quadres/ring.hpp"

namespace quadres {

/// Closed-form reference complexes.
///   Fibonacci: k[x1,x2,x3]/(x1x2, x1x3), ranks follow the Fibonacci numbers;
///   Binary:    k[x1,x2]/(x1^2, x1x2, x2^2), ranks double;
///   OFamily(n): k[x1..xn]/(x1^2, all mixed products), n >= 2.
struct OracleKind {
    enum class Tag { Fibonacci, Binary, OFamily };
    Tag tag = Tag::Fibonacci;
    int n = 0;  // OFamily only

    static OracleKind fibonacci() { return {Tag::Fibonacci, 0}; }
    static OracleKind binary() { return {Tag::Binary, 0}; }
    static OracleKind o_family(int n);
    std::string to_string() const;
};

RingSpec oracle_ring(const OracleKind& kind);

/// The reference complex with L levels above degree 0, built from the block
/// recursions directly (no diagram machinery):
///   Fibonacci: d1=[x1], d2=[x2 x3], d3=[[x1,x3,0],[0,-x2,x1]],
///              d_n = blockdiag(d_{n-2}, d_{n-3}, d_{n-2}) for n >= 4;
///   Binary:    d1=[x1], d2=[x1 x2], d_n = blockdiag(d_{n-1}, d_{n-1});
///   OFamily:   the generator tree: above a generator reached by x1 a row of
///              all n variables, above one reached by x_i the row omitting x_i.
FreeComplex oracle_complex(const OracleKind& kind, int levels);

/// The oracle whose ring equals the given spec, if any.
std::optional<OracleKind> detect_oracle(const RingSpec& spec);

struct CompareVerdict {
    bool equal = false;
    std::string detail;  // first mismatch, empty when equal
};

/// Equal rank sequences and equal graded homology tables H_n(t) for
/// n = 0..L-1, t = 0..T. Matrix-level identity is deliberately not required.
CompareVerdict compare_complexes(const FreeComplex& a, const FreeComplex& b, int T,
                                 const FieldChoice& field);

}  // namespace quadres
