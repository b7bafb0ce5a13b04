#include "pcc/interval.hpp"

#include <algorithm>

namespace pcc {

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw ValidationError("interval endpoints out of order");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
    return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
    return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator-() const { return RatInterval(-hi, -lo); }

RatInterval RatInterval::operator*(const RatInterval& o) const {
    const Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
}

RatInterval RatInterval::inverse() const {
    if (contains_zero()) throw ValidationError("interval inverse: interval contains zero");
    return RatInterval(Rat(1) / hi, Rat(1) / lo);
}

RatInterval RatInterval::operator/(const RatInterval& o) const { return *this * o.inverse(); }

RatInterval RatInterval::pow(unsigned long e) const {
    RatInterval acc(Rat(1));
    RatInterval base = *this;
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        e >>= 1ul;
        if (e > 0) base = base * base;
    }
    return acc;
}

RatInterval RatInterval::pow_round(unsigned long e, unsigned bits) const {
    RatInterval acc(Rat(1));
    RatInterval base = round_out(bits);
    while (e > 0) {
        if (e & 1ul) acc = (acc * base).round_out(bits);
        e >>= 1ul;
        if (e > 0) base = (base * base).round_out(bits);
    }
    return acc;
}

Rat floor_to_grid(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Int num = x.get_num() * scale, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rat(q, scale);
}

Rat ceil_to_grid(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Int num = x.get_num() * scale, q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rat(q, scale);
}

RatInterval RatInterval::round_out(unsigned bits) const {
    return RatInterval(floor_to_grid(lo, bits), ceil_to_grid(hi, bits));
}

std::string RatInterval::to_string(unsigned sig_digits) const {
    return "[" + rat_fraction(lo) + ", " + rat_fraction(hi) + "] ~ " + rat_decimal(mid(), sig_digits);
}

RatInterval operator+(const Rat& a, const RatInterval& b) { return RatInterval(a) + b; }
RatInterval operator-(const Rat& a, const RatInterval& b) { return RatInterval(a) - b; }
RatInterval operator*(const Rat& a, const RatInterval& b) { return RatInterval(a) * b; }

RatInterval exp_neg1_interval(unsigned bits) {
    const Rat eps = Rat(1) / (Int(1) << (bits + 4));
    Rat sum = 0, term = 1;  // term = 1/k!
    bool negative = false;  // sign of the NEXT term to add
    unsigned long k = 0;
    while (term >= eps) {
        sum += negative ? -term : term;
        negative = !negative;
        ++k;
        term /= static_cast<unsigned long>(k);
    }
    // Alternating series: the truncation error has the sign of the first
    // omitted term and magnitude below it.
    RatInterval r = negative ? RatInterval(sum - term, sum) : RatInterval(sum, sum + term);
    return r.round_out(bits);
}

RatInterval log43_interval(unsigned bits) {
    // 2 atanh(1/7); positive terms 2 x^(2k+1)/(2k+1), geometric tail factor
    // 1/(1 - x^2) = 49/48.
    const Rat x(1, 7);
    const Rat x2 = x * x;
    const Rat eps = Rat(1) / (Int(1) << (bits + 4));
    Rat sum = 0;
    Rat power = x;
    unsigned long k = 0;
    Rat tail;
    while (true) {
        sum += 2 * power / (2 * k + 1);
        power *= x2;
        ++k;
        tail = 2 * power / (2 * k + 1) * Rat(49, 48);
        if (tail < eps) break;
    }
    return RatInterval(sum, sum + tail).round_out(bits);
}

namespace {

// Largest r/2^bits with (r/2^bits)^2 <= x (x >= 0).
Rat sqrt_lower(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Int n = (x.get_num() * scale * scale) / x.get_den();  // floor(x * 4^bits)
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return make_rat(r, scale);
}

}  // namespace

RatInterval sqrt_interval(const RatInterval& x, unsigned bits) {
    if (x.lo < 0) throw ValidationError("sqrt of an interval with a negative endpoint");
    const Rat lo = sqrt_lower(x.lo, bits);
    Rat hi = sqrt_lower(x.hi, bits) + Rat(Int(1), Int(1) << bits);
    // floor(sqrt(floor(x 4^b)))/2^b <= sqrt(x) < that + 2^-b.
    return RatInterval(lo, hi);
}

RatInterval pow_half_interval(const Int& q, std::uint32_t b, unsigned bits) {
    if (b % 2 == 0) return RatInterval(Rat(int_pow(q, b / 2)));
    const Rat whole(int_pow(q, (b - 1) / 2));
    return whole * sqrt_interval(RatInterval(Rat(q)), bits);
}

RatInterval omega_limit_interval(const Int& big_q, unsigned bits) {
    if (big_q < 2) throw ValidationError("omega limit requires Q >= 2");
    // floor(log2 Q) factors take the tail below 2^-(bits+5); per-step rounding
    // at bits+16 keeps endpoint sizes flat, adding width <= 2M 2^-(bits+16).
    const unsigned wbits = bits + 16;
    const unsigned fl = unsigned(mpz_sizeinbase(big_q.get_mpz_t(), 2)) - 1;
    const unsigned long terms = (bits + 5 + fl - 1) / fl;
    RatInterval acc{Rat(1)};
    Rat qi = 1;
    const Rat qinv = make_rat(1, big_q);
    for (unsigned long i = 1; i <= terms; ++i) {
        qi *= qinv;
        acc = (acc * RatInterval(Rat(1 - qi))).round_out(wbits);
    }
    const Rat tail = (qi * qinv) / (1 - qinv);  // Q^-(M+1) / (1 - Q^-1)
    if (tail >= 1) throw GuardError("omega limit tail bound not contractive");
    return RatInterval(acc.lo * (1 - tail), acc.hi).round_out(bits + 2);
}

}  // namespace pcc
