#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quadres/errors.hpp"

namespace quadres {

enum class FieldKind { Rational, Prime };

/// Coefficient field selection: exact rationals or F_p for a prime p.
/// Parsed from the CLI syntax "q" | "fp:<prime>".
struct FieldChoice {
    FieldKind kind = FieldKind::Prime;
    std::uint32_t p = 32003;

    static FieldChoice rationals() { return {FieldKind::Rational, 0}; }
    static FieldChoice prime(std::uint32_t p);  // validates primality
    static FieldChoice parse(const std::string& text);

    std::string to_string() const;
    bool operator==(const FieldChoice&) const = default;
};

bool is_prime(std::uint32_t n);

/// One field element together with the field it lives in. Mixing elements of
/// different fields raises FieldMismatchError.
class FieldScalar {
public:
    FieldScalar() = default;
    static FieldScalar from_int(const FieldChoice& field, long value);
    static FieldScalar from_rational(const mpq_class& q);

    const FieldChoice& field() const { return field_; }
    bool is_zero() const;
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;  // throws on zero
    bool operator==(const FieldScalar& o) const;

    std::string to_string() const;

private:
    FieldChoice field_ = FieldChoice::rationals();
    mpq_class q_ = 0;        // used when kind == Rational (always reduced by mpq_class)
    std::uint64_t r_ = 0;    // used when kind == Prime, in [0, p)
    void check_same_field(const FieldScalar& o) const;
};

}  // namespace quadres
