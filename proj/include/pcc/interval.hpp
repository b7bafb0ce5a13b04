#pragma once

#include <cstdint>
#include <string>

#include "pcc/common.hpp"

namespace pcc {

// Closed rational interval [lo, hi] with outward-rounded arithmetic.  Every
// operation returns an interval containing the exact image, so any strict
// comparison that holds between intervals holds for the enclosed reals.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    explicit RatInterval(const Rat& point) : lo(point), hi(point) {}
    RatInterval(Rat lo_, Rat hi_);

    static RatInterval point(const Rat& x) { return RatInterval(x); }

    RatInterval operator+(const RatInterval& o) const;
    RatInterval operator-(const RatInterval& o) const;
    RatInterval operator-() const;
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator/(const RatInterval& o) const;  // 0 must not lie in o
    RatInterval inverse() const;

    // Exact power by repeated interval multiplication.
    RatInterval pow(unsigned long e) const;
    // Power with an outward coefficient snap after every step; keeps the bit
    // size of the endpoints near `bits` for very large exponents.
    RatInterval pow_round(unsigned long e, unsigned bits) const;

    // Widen the endpoints outward onto the 2^-bits grid.
    RatInterval round_out(unsigned bits) const;

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return contains(0); }
    bool is_positive() const { return lo > 0; }
    // Certified strict order of the enclosed reals.
    bool strictly_less(const RatInterval& o) const { return hi < o.lo; }

    std::string to_string(unsigned sig_digits = 20) const;
};

RatInterval operator+(const Rat& a, const RatInterval& b);
RatInterval operator-(const Rat& a, const RatInterval& b);
RatInterval operator*(const Rat& a, const RatInterval& b);

// floor / ceil of x * 2^bits over 2^bits.
Rat floor_to_grid(const Rat& x, unsigned bits);
Rat ceil_to_grid(const Rat& x, unsigned bits);

// Enclosure of exp(-1) from its alternating factorial series.
RatInterval exp_neg1_interval(unsigned bits);

// Enclosure of log(4/3) = 2 atanh(1/7) from the odd power series with an
// explicit geometric tail bound.
RatInterval log43_interval(unsigned bits);

// Enclosure of the square root of a nonnegative interval.
RatInterval sqrt_interval(const RatInterval& x, unsigned bits);

// Enclosure of q^(b/2); exact when b is even.
RatInterval pow_half_interval(const Int& q, std::uint32_t b, unsigned bits);

// Enclosure of omega(1,Q) = prod_{i>=1} (1 - Q^-i) for an integer Q >= 2,
// from the partial product with the Weierstrass tail bound
// prod_{i>M} (1 - Q^-i) >= 1 - Q^-(M+1) / (1 - Q^-1).
RatInterval omega_limit_interval(const Int& big_q, unsigned bits);

}  // namespace pcc
