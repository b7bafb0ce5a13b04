#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pcc/common.hpp"

namespace pcc {

// Element of a finite field, encoded as an integer in [0, order).  For a prime
// field the code is the residue; for an extension K = F[t]/(m) of degree b the
// code is sum coords[i] * |F|^i, so F embeds into K as the identity on codes.
using felt = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field GF(p^n), either a prime field or a one-step extension of a
// stored base field by an explicit monic irreducible modulus.  Elements are
// codes; all operations are methods of the field object.  Instances are
// immutable; operations on elements of two different instances are undefined,
// callers must thread one FieldPtr per field through their computation.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Hard ceiling on field order for table construction and scans.
    static constexpr std::uint64_t kOrderGuard = std::uint64_t(1) << 24;

    static FieldPtr prime(std::uint32_t p);

    // GF(p^e) over GF(p) with the canonical modulus (e == 1 gives the prime field).
    static FieldPtr make(std::uint32_t p, std::uint32_t e);

    // One-step extension of `base` by a monic irreducible `modulus` of degree
    // b >= 2 given lowest-coefficient-first.  Rejects reducible moduli.
    static FieldPtr extension(FieldPtr base, const std::vector<felt>& modulus);

    // Extension by the canonical modulus: the lexicographically smallest monic
    // irreducible of degree b (coefficient codes, constant term least
    // significant) whose residue class t is multiplicatively primitive.
    static FieldPtr extension_canonical(FieldPtr base, std::uint32_t b);

    std::uint64_t order() const { return order_; }
    std::uint32_t characteristic() const { return p_; }
    // Extension degree over base() (1 for a prime field).
    std::uint32_t degree() const { return deg_; }
    // Degree over the prime field.
    std::uint32_t degree_absolute() const;
    FieldPtr base() const { return base_; }
    std::uint64_t base_order() const { return base_ ? base_->order() : p_; }
    bool is_prime_field() const { return base_ == nullptr; }
    // Monic modulus over base(), lowest first, size degree()+1.  Empty for a prime field.
    const std::vector<felt>& modulus() const { return modulus_; }

    // Basis generator: the residue class of t for an extension (coords are taken
    // in the basis {1, gen, ..., gen^{b-1}}); 1 for a prime field.
    felt gen() const { return gen_; }
    // An element of multiplicative order order()-1; equals gen() whenever the
    // residue class of t is primitive (always true for canonical moduli).
    felt primitive_element() const { return primitive_; }

    felt zero() const { return 0; }
    felt one() const { return 1; }

    felt add(felt a, felt b) const;
    felt sub(felt a, felt b) const;
    felt neg(felt a) const;
    felt mul(felt a, felt b) const;
    felt inv(felt a) const;  // a != 0
    felt div(felt a, felt b) const { return mul(a, inv(b)); }
    felt pow(felt a, std::uint64_t e) const;
    felt pow(felt a, const Int& e) const;
    // x^(base_order()^i), the i-th power of the base-fixing Frobenius.
    felt frobenius(felt x, std::uint32_t i) const;

    // Multiplicative order of a nonzero element.
    std::uint64_t elem_order(felt a) const;
    // Degree of the minimal polynomial over base() (= Frobenius orbit size).
    std::uint32_t elem_degree(felt a) const;

    // Coordinates over base(), length degree(); prime fields return {a}.
    std::vector<felt> coords(felt a) const;
    felt from_coords(const std::vector<felt>& c) const;

    // Rendering: prime fields print residues, extensions print polynomials in
    // `symbol` ('w' at the top level; a base extension inside a tower uses 'v').
    std::string to_string(felt a, char symbol = 'w') const;

    // Compact deterministic identity string (characteristic, tower moduli codes).
    std::string key_string() const;
    // Human-readable description, e.g. "GF(4) = GF(2)[w]/(w^2+w+1)".
    std::string description() const;

private:
    Field() = default;

    void init_prime(std::uint32_t p);
    void init_extension(FieldPtr base, const std::vector<felt>& modulus);
    void build_tables();
    felt raw_mul(felt a, felt b) const;
    felt raw_inv(felt a) const;
    felt raw_pow(felt a, std::uint64_t e) const;

    std::uint64_t order_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t deg_ = 1;
    FieldPtr base_;
    std::vector<felt> modulus_;
    felt gen_ = 1;
    felt primitive_ = 1;
    std::vector<std::uint64_t> pf_factors_;  // distinct prime factors of order-1

    bool tables_ = false;
    std::vector<felt> exp_;  // exp_[k] = primitive^k, k in [0, 2(order-1))
    std::vector<felt> log_;  // log_[x] in [0, order-1), log_[0] unused

    // Extension scratch: t^deg reduced mod modulus, as coords.
    std::vector<felt> t_deg_red_;
};

// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace pcc
