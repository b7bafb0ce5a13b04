#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pcc/field.hpp"

namespace pcc {

// Dense univariate polynomial over a shared Field, lowest coefficient first,
// normalized (no trailing zero coefficients).  The zero polynomial has an
// empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr f, std::vector<felt> coeffs);

    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly t(FieldPtr f) { return Poly(std::move(f), {0, 1}); }
    static Poly constant(FieldPtr f, felt c) { return Poly(std::move(f), {c}); }
    // Monic polynomial of degree d whose lower coefficients are the base-q
    // digits of `code` (constant term least significant).
    static Poly from_monic_code(FieldPtr f, std::uint32_t d, std::uint64_t code);

    const FieldPtr& field() const { return f_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    felt coeff(std::uint32_t i) const { return i < c_.size() ? c_[i] : 0; }
    felt leading() const { return c_.back(); }
    const std::vector<felt>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(felt c) const;
    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    bool divides(const Poly& other) const;  // *this | other
    Poly make_monic() const;
    Poly pow(std::uint32_t e) const;

    felt eval(felt x) const;
    // Coefficient-wise Frobenius x -> x^(base_order^i); field must match degrees.
    Poly conjugate(std::uint32_t i) const;

    // Integer code sum coeff[i] * q^i of the sub-leading coefficients of a
    // monic polynomial; inverse of from_monic_code.
    std::uint64_t monic_code() const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }
    // Canonical order: by degree, then coefficient codes from the top down.
    bool operator<(const Poly& o) const;

    std::string to_string(char var = 't') const;

private:
    void check_same_field(const Poly& o) const;

    FieldPtr f_;
    std::vector<felt> c_;
};

Poly gcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& a, const Int& e, const Poly& m);

// Expression parser for the text format, e.g. "t^3+t+1", "w+1", "(v+1)w^2+2".
// 'w' is the generator of `f`, 'v' the generator of its base field (when the
// base is itself an extension); integer literals reduce mod the characteristic.
Poly parse_poly(const FieldPtr& f, const std::string& s);
felt parse_element(const FieldPtr& f, const std::string& s);

}  // namespace pcc
