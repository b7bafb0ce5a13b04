#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace pcc {

using Int = mpz_class;
using Rat = mpq_class;

// Input rejected because a stated hypothesis fails (bad parameters, reducible
// modulus, malformed text, ...).  Maps to CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input refused because an enumeration would exceed its size guard.  Maps to
// CLI exit code 3.  The guard can usually be raised explicitly by the caller.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::uint64_t u64_pow_checked(std::uint64_t base, std::uint32_t e, const char* what) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw GuardError(std::string(what) + ": power overflows 64 bits");
        r *= base;
    }
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    if (!n.fits_ulong_p())
        throw ValidationError("binomial: n too large");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k);
    return r;
}

// prod_{i=0}^{n-1} (q^n - q^i)
inline Int gl_order(const Int& q, std::uint32_t n) {
    Int qn = int_pow(q, n), r = 1;
    Int qi = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
    }
    return r;
}

// Moebius function for small n.
inline int mobius(std::uint32_t n) {
    int result = 1;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// Writes q = p^e with p prime; throws ValidationError if q is not a prime power.
void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e);

// Exact rational rendered with the given number of significant decimal digits
// (round half away from zero).
std::string rat_decimal(const Rat& x, unsigned sig_digits = 60);

// "num/den" (always with an explicit denominator) and its inverse.
std::string rat_fraction(const Rat& x);
Rat parse_fraction(const std::string& s);

}  // namespace pcc
