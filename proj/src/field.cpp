#include "quadres/field.hpp"

#include <sstream>

namespace quadres {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldChoice FieldChoice::prime(std::uint32_t p) {
    if (!is_prime(p)) throw InvalidInputError("field modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
}

FieldChoice FieldChoice::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.size() > 10 ||
            num.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInputError("bad field syntax '" + text + "', expected q or fp:<prime>");
        const unsigned long v = std::stoul(num);
        if (v > 0x7fffffffUL) throw InvalidInputError("field modulus too large: " + num);
        return prime(static_cast<std::uint32_t>(v));
    }
    throw InvalidInputError("bad field syntax '" + text + "', expected q or fp:<prime>");
}

std::string FieldChoice::to_string() const {
    return kind == FieldKind::Rational ? "q" : "fp:" + std::to_string(p);
}

FieldScalar FieldScalar::from_int(const FieldChoice& field, long value) {
    FieldScalar s;
    s.field_ = field;
    if (field.kind == FieldKind::Rational) {
        s.q_ = value;
    } else {
        long r = value % static_cast<long>(field.p);
        if (r < 0) r += field.p;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

FieldScalar FieldScalar::from_rational(const mpq_class& q) {
    FieldScalar s;
    s.field_ = FieldChoice::rationals();
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

bool FieldScalar::is_zero() const {
    return field_.kind == FieldKind::Rational ? q_ == 0 : r_ == 0;
}

void FieldScalar::check_same_field(const FieldScalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("operands live in different fields: " + field_.to_string() +
                                 " vs " + o.field_.to_string());
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same_field(o);
    FieldScalar s = *this;
    if (field_.kind == FieldKind::Rational)
        s.q_ += o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same_field(o);
    FieldScalar s = *this;
    if (field_.kind == FieldKind::Rational)
        s.q_ *= o.q_;
    else
        s.r_ = (r_ * o.r_) % field_.p;
    return s;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar s = *this;
    if (field_.kind == FieldKind::Rational)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw InvalidInputError("inverse of zero field element");
    FieldScalar s = *this;
    if (field_.kind == FieldKind::Rational) {
        s.q_ = 1 / q_;
        return s;
    }
    // Fermat: a^(p-2) mod p
    std::uint64_t base = r_, acc = 1;
    std::uint64_t e = field_.p - 2;
    while (e) {
        if (e & 1) acc = acc * base % field_.p;
        base = base * base % field_.p;
        e >>= 1;
    }
    s.r_ = acc;
    return s;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rational ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldScalar::to_string() const {
    if (field_.kind == FieldKind::Rational) {
        std::ostringstream os;
        os << q_;
        return os.str();
    }
    return std::to_string(r_);
}

}  // namespace quadres
