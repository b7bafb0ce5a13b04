#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcc/interval.hpp"
#include "pcc/series.hpp"

namespace pcc {

enum class Method { SERIES, BRUTE_FORCE, MONTE_CARLO, LIMIT };
std::string method_name(Method m);
Method method_from_name(const std::string& s);

// Constants controlling the exponential approach of the proportion to its
// limit: |P(c+1) - P(c)| < a_J Q^-c above the threshold M, and
// |P(c) - P(infinity)| <= k Q^-c with k = a_J/(1 - Q^-1).
struct BoundConstants {
    Int a_L;            // 2 Q
    Rat a_J;
    Rat M_threshold;    // upper-rounded rigorous threshold
    Rat k;
    RatInterval limit_interval;
};

struct CensusReport {
    Int q;
    std::uint32_t b = 0;
    std::uint32_t c = 0;
    Method method = Method::SERIES;
    Rat proportion;                         // midpoint for LIMIT rows
    std::optional<RatInterval> interval;    // LIMIT rows
    std::optional<std::uint64_t> samples;   // MONTE_CARLO rows
    std::optional<std::uint64_t> seed;      // MONTE_CARLO rows
    std::optional<Rat> stderr_estimate;     // MONTE_CARLO rows
    std::optional<BoundConstants> constants;

    bool operator==(const CensusReport& o) const;
};

// Proportion of c x c matrices over GF(q^b) that are primary cyclic in the
// blown-up algebra relative to at least one irreducible of degree b:
// omega_c(1,Q) [u^c] PCB.
Rat proportion_exact(const Int& q, std::uint32_t b, std::uint32_t c);

// Default guard on the q^(b c^2) enumeration; raisable to kGuardRaised.
inline constexpr std::uint64_t kBruteGuardDefault = std::uint64_t(1) << 20;
inline constexpr std::uint64_t kBruteGuardRaised = std::uint64_t(1) << 24;

// Exhaustive count over all of M(c, q^b), deciding each matrix through BOTH
// the extension-field divisor criterion and the blow-up definition; disagreement
// between the routes throws.
Rat proportion_bruteforce(const Int& q, std::uint32_t b, std::uint32_t c,
                          std::uint64_t guard = kBruteGuardDefault,
                          std::uint32_t parallelism = 1);

// Checks |pcb| = sum_{i=1}^N (-1)^(i+1) C(N,i) |pcbI(I_i)| by enumeration,
// including the independence of |pcbI(I)| from the choice of I (all subsets
// when N <= 3, one representative per size otherwise).
bool inclusion_exclusion_check(const Int& q, std::uint32_t b, std::uint32_t c,
                               std::uint64_t guard = kBruteGuardDefault);

struct MonteCarloResult {
    Rat estimate;
    Rat stderr_estimate;  // binomial standard error, upper-rounded rational
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};
// Uniform i.i.d. samples from M(c, q^b) through a counter-based generator:
// sample i depends only on (seed, i), so the result is independent of the
// worker count.
MonteCarloResult proportion_montecarlo(const Int& q, std::uint32_t b, std::uint32_t c,
                                       std::uint64_t samples, std::uint64_t seed,
                                       std::uint32_t parallelism = 1);
// Upper-rounded binomial standard error sqrt(p(1-p)/n); a pure function of
// the estimate and sample count, so parsers can restore it.
Rat binomial_stderr(const Rat& estimate, std::uint64_t samples);

// Rigorous enclosure of the limit proportion 1 - (1 - H1)^N where
// H1 = b Q^-1 / (1 - Q^-1)^2 * omega(1,Q)^b; width <= 2^-precision_bits.
RatInterval limit_proportion(const Int& q, std::uint32_t b, unsigned precision_bits);

struct LimitWindow {
    RatInterval diff;        // limit - (1 - 1/e)
    RatInterval lower;       // -4b / (e q^(b/2))
    RatInterval upper;       // (1+b)/(e Q) + 2(1+b)^2/(e Q^2)
    RatInterval abs_bound;   // 4 b / (e q^(b/2))
    bool two_sided_ok = false;
    bool absolute_ok = false;
    bool ok() const { return two_sided_ok && absolute_ok; }
};
// Certifies that the limit lies in the stated window around 1 - 1/e.
LimitWindow limit_window_check(const Int& q, std::uint32_t b);

// All pairs (q, b) with q a prime power, b >= 2 and q^b <= max_order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> limit_window_domain(std::uint64_t max_order);

BoundConstants convergence_constants(const Int& q, std::uint32_t b, unsigned limit_bits = 128);

struct TailCheckRow {
    std::uint32_t c = 0;
    Rat consecutive_diff;   // |P(c+1) - P(c)|
    Rat consecutive_bound;  // a_J Q^-c
    bool consecutive_ok = false;
    Rat limit_gap;          // sup over the limit interval of |P(c) - limit|
    Rat limit_bound;        // k Q^-c
    bool limit_ok = false;
};
struct TailReport {
    BoundConstants constants;
    std::vector<TailCheckRow> rows;
    bool all_ok = false;
};
// Verifies the consecutive-difference and limit-distance bounds for
// c in [c_lo, c_hi]; requires c_lo above the threshold M and c_hi <= 80.
TailReport verify_tail_bounds(const Int& q, std::uint32_t b, std::uint32_t c_lo,
                              std::uint32_t c_hi, unsigned limit_bits = 260);

struct TableRow {
    CensusReport report;
    std::optional<Rat> reference_value;  // printed small-c polynomial, c <= 3
    std::optional<bool> reference_match;
    std::string note;
};
// Exact proportions for c = 1..c_max plus the small-c reference polynomial
// comparison (rows exist for c <= 3; they are known to need b prime).
std::vector<TableRow> table_generate(const Int& q, std::uint32_t b, std::uint32_t c_max);
// The printed closed-form polynomial for rows c = 1, 2, 3.
Rat reference_polynomial(std::uint32_t c, const Int& q, std::uint32_t b);

}  // namespace pcc
