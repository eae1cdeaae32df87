#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadres/field.hpp"

namespace quadres {

/// A monomial in n variables as its exponent vector.
struct Monomial {
    std::vector<int> exponents;

    int degree() const;
    int num_vars() const { return static_cast<int>(exponents.size()); }
    /// Exponent of x_i, i being 1-based.
    int exponent(int i) const { return exponents[static_cast<std::size_t>(i) - 1]; }
    /// The monomial multiplied by x_i (1-based), without reduction.
    Monomial times_var(int i) const;
    static Monomial one(int num_vars) { return Monomial{std::vector<int>(num_vars, 0)}; }
    static Monomial var(int num_vars, int i);

    std::string to_string() const;  // e.g. "x1^2*x3", "1" for the empty monomial
    auto operator<=>(const Monomial&) const = default;
};

/// R = k[x_1..x_n]/I with I generated by the quadratic monomials x_i*x_j
/// listed in `generators` (a pair (i,i) encodes x_i^2). Generators are kept
/// normalized: i <= j, sorted, deduplicated, all indices in 1..num_vars.
struct RingSpec {
    int num_vars = 0;
    std::vector<std::pair<int, int>> generators;

    /// True iff x_i * x_j lies in the ideal (order of i, j irrelevant).
    bool kills(int i, int j) const;
    std::string to_string() const;  // e.g. "k[x1..x3]/(x1x2, x1x3)"
    bool operator==(const RingSpec&) const = default;
};

RingSpec normalize_spec(std::vector<std::pair<int, int>> raw_pairs, int num_vars);

/// A monomial is admissible iff no ideal generator divides it; the admissible
/// monomials form a k-basis of R.
bool is_admissible(const RingSpec& spec, const Monomial& m);

/// The image of m in R: m itself if admissible, nullopt (zero) otherwise.
std::optional<Monomial> reduce_monomial(const RingSpec& spec, const Monomial& m);

/// All admissible monomials of the given total degree, in descending
/// lexicographic order on exponent vectors (x1^d first).
std::vector<Monomial> enumerate_basis(const RingSpec& spec, int degree);

/// dim_k R_d for d = 0..max_degree.
std::vector<int> hilbert_function(const RingSpec& spec, int max_degree);

/// Finite k-linear combination of admissible monomials. Zero coefficients are
/// never stored; the zero element is the empty term map.
class RingElement {
public:
    explicit RingElement(FieldChoice field) : field_(field) {}
    static RingElement zero(FieldChoice field) { return RingElement(field); }
    static RingElement from_monomial(FieldChoice field, const Monomial& m, long coeff = 1);

    const FieldChoice& field() const { return field_; }
    const std::map<Monomial, FieldScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const FieldScalar& c);

    std::string to_string() const;
    bool operator==(const RingElement& o) const;

private:
    FieldChoice field_;
    std::map<Monomial, FieldScalar> terms_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement multiply(const RingSpec& spec, const RingElement& a, const RingElement& b);

/// Ring spec file format: {"variables": n, "generators": [[i,j], ...]} with
/// 1-based indices; pairs may arrive unnormalized.
RingSpec ring_spec_from_json(const std::string& text);
std::string ring_spec_to_json(const RingSpec& spec);
RingSpec load_ring_spec(const std::string& path);

}  // namespace quadres
