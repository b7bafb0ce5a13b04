#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcc/common.hpp"

namespace pcc {

// Truncated formal power series with exact rational coefficients.  Index i
// holds the coefficient of u^i; coefficients beyond `order` are unknown, not
// zero, so binary operations truncate to the smaller order.
class Series {
public:
    Series() = default;
    Series(std::vector<Rat> coeffs);  // order = coeffs.size() - 1

    static Series zeros(std::uint32_t order);
    static Series constant(const Rat& c, std::uint32_t order);
    static Series one(std::uint32_t order) { return constant(1, order); }
    static Series one_minus_u(std::uint32_t order);

    std::uint32_t order() const { return std::uint32_t(c_.size()) - 1; }
    const Rat& coeff(std::uint32_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat& mutable_coeff(std::uint32_t i);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(const Rat& c) const;
    // Multiplicative inverse; the constant term must be nonzero.
    Series inverse() const;
    Series pow(unsigned long e) const;
    Series truncated(std::uint32_t new_order) const;
    // Argument substitution u -> s*u.
    Series scale_arg(const Rat& s) const;
    // Division by (1-u): coefficient c becomes the prefix sum of 0..c.
    Series divide_by_one_minus_u() const;

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return c_ != o.c_; }

    std::string to_string(std::uint32_t max_terms = 8) const;

private:
    std::vector<Rat> c_;  // always size order+1
};

// (1-u)^t and (1-u)^-t by binomial expansion.
Series one_minus_u_pow(std::uint32_t t, std::uint32_t order);
Series one_minus_u_inv_pow(std::uint32_t t, std::uint32_t order);

// Shared parameters of the generating functions: a prime power q, an
// extension degree b >= 2, the derived field size Q = q^b, and the count N of
// monic irreducibles of degree b over GF(q).
struct SeriesParams {
    Int q;
    std::uint32_t b = 0;
    Int Q;
    Int N;
};
SeriesParams make_series_params(const Int& q, std::uint32_t b);

// prod_{i=1}^n (1 - Q^-i) = |GL(n,Q)| / |M(n,Q)|.
Rat omega_n(std::uint32_t n, const Int& big_q);

// P(u,Q) = 1 + sum_{n>=1} u^n / omega_n: the all-matrices partition series.
Series p_series(const Int& big_q, std::uint32_t order);

// S(u,Q) = u / ((Q-1)(1 - u/Q)): the single-block (cyclic primary) column.
Series s_series(const Int& big_q, std::uint32_t order);
// The same series from its definitional sum sum_{n>=1} u^n / (Q^n (1 - 1/Q)).
Series s_series_sum(const Int& big_q, std::uint32_t order);

// L(u,Q) = prod_{i>=1} (1 - u Q^-i) = ((1-u) P(u,Q))^-1.  The production path
// uses the exact q-binomial coefficients (see l_coeff_closed); the infinite
// product itself never stabilizes coefficient-wise under finite truncation,
// so the inverse form is the exact cross-check and the literal partial
// product only an approximate one.
Series l_series(const Int& big_q, std::uint32_t order);
Series l_series_inverse_form(const Int& big_q, std::uint32_t order);
// First `factors` factors of the literal product, for approximate comparison.
Series l_series_partial_product(const Int& big_q, std::uint32_t order, std::uint32_t factors);
// [u^c] L = (-1)^c Q^{-c(c+1)/2} / prod_{i=1}^c (1 - Q^-i).
Rat l_coeff_closed(std::uint32_t c, const Int& big_q);

// H(u,Q) = b S (1-u)^-b P^-b = (b/(Q-1)) u/(1-u/Q) L^b: the per-polynomial
// primary cyclic column after collapsing a Frobenius orbit of length b.
Series h_series(const SeriesParams& params, std::uint32_t order);
Series h_series_definitional(const SeriesParams& params, std::uint32_t order);
// H(1,Q) = b Q^-1 / (1-Q^-1)^2 * omega(1,Q)^b as exact scalar given an
// enclosure of omega(1,Q) is evaluated in the census module.

// PCBI(k): generating function for matrices primary cyclic relative to every
// member of a fixed k-subset of the degree-b irreducibles; equals P H^k with
// the convention that the constant term is 1 (empty 0x0 matrix) for k >= 1.
Series pcbi_series(std::uint32_t k, const SeriesParams& params, std::uint32_t order);

// PCB: primary cyclic relative to at least one degree-b irreducible;
// P (1 - (1-H)^N) with constant term 1 by the same convention.
Series pcb_series(const SeriesParams& params, std::uint32_t order);
// Inclusion-exclusion form sum_{i=1}^N (-1)^(i+1) C(N,i) PCBI(i).
Series pcb_series_incl_excl(const SeriesParams& params, std::uint32_t order);
// The raw product P (1 - (1-H)^N) without the constant-term convention; the
// algebraic form entering the J substitution identity.
Series pcb_series_raw(const SeriesParams& params, std::uint32_t order);

// J(u,Q) = (1-uQ) A(uQ) where A(u) = sum_{c>=1} a_c u^c collects the
// proportions a_c = omega_c [u^c] PCB: [u^1] J = a_1 Q and
// [u^c] J = (a_c - a_{c-1}) Q^c for c >= 2.
Series j_series(const SeriesParams& params, std::uint32_t order);
// The same algebra carried out on the GL-normalized series: substitution
// form (1-uQ) pcb_raw(uQ) and the expanded product form
// P [1 - (1 - (bQ/(Q-1)) u (1-u)^(b-1) L^b)^N]; these two agree exactly.
Series j_series_glform_subst(const SeriesParams& params, std::uint32_t order);
Series j_series_glform(const SeriesParams& params, std::uint32_t order);

// X / (1-u): prefix sums of the coefficients.
Series prefix_sum_division(const Series& x);

}  // namespace pcc
