#include "pcc/census.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pcc/field.hpp"
#include "pcc/irreducibles.hpp"
#include "pcc/matrix.hpp"

namespace pcc {

std::string method_name(Method m) {
    switch (m) {
        case Method::SERIES: return "exact";
        case Method::BRUTE_FORCE: return "brute";
        case Method::MONTE_CARLO: return "mc";
        case Method::LIMIT: return "limit";
    }
    throw ValidationError("unknown method");
}

Method method_from_name(const std::string& s) {
    if (s == "exact") return Method::SERIES;
    if (s == "brute") return Method::BRUTE_FORCE;
    if (s == "mc") return Method::MONTE_CARLO;
    if (s == "limit") return Method::LIMIT;
    throw ValidationError("unknown method '" + s + "' (expected exact, brute, mc or limit)");
}

namespace {

bool same_interval(const std::optional<RatInterval>& a, const std::optional<RatInterval>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->lo == b->lo && a->hi == b->hi);
}

bool same_constants(const std::optional<BoundConstants>& a, const std::optional<BoundConstants>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->a_L == b->a_L && a->a_J == b->a_J && a->M_threshold == b->M_threshold &&
           a->k == b->k && a->limit_interval.lo == b->limit_interval.lo &&
           a->limit_interval.hi == b->limit_interval.hi;
}

}  // namespace

bool CensusReport::operator==(const CensusReport& o) const {
    return q == o.q && b == o.b && c == o.c && method == o.method && proportion == o.proportion &&
           same_interval(interval, o.interval) && samples == o.samples && seed == o.seed &&
           stderr_estimate == o.stderr_estimate && same_constants(constants, o.constants);
}

Rat proportion_exact(const Int& q, std::uint32_t b, std::uint32_t c) {
    if (c == 0) throw ValidationError("the matrix size c must be at least 1");
    const SeriesParams params = make_series_params(q, b);
    const Series pcb = pcb_series(params, c);
    return omega_n(c, params.Q) * pcb.coeff(c);
}

namespace {

struct Algebra {
    FieldPtr F;  // GF(q)
    FieldPtr K;  // GF(q^b), canonical modulus over F
};

Algebra build_algebra(const Int& q, std::uint32_t b) {
    if (!q.fits_ulong_p()) throw GuardError("field order exceeds the table guard");
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q.get_ui(), p, e);
    FieldPtr F = Field::make(p, e);
    FieldPtr K = Field::extension_canonical(F, b);
    return {std::move(F), std::move(K)};
}

// Both the divisor criterion over K and the blow-up definition over F must
// give the same verdict for every pair (X, f); the routes are independent
// computations, so agreement on full enumerations is a strong self-check.
bool dual_route_cyclic(const Mat& X, const Poly& f) {
    const PrimaryCyclicVerdict over_k = is_primary_cyclic_K(X, f);
    const PrimaryCyclicVerdict by_def = is_primary_cyclic_F(X, f);
    if (over_k.is_cyclic != by_def.is_cyclic)
        throw std::logic_error("criterion routes disagree on X = " + X.to_string() +
                               " at f = " + f.to_string());
    return over_k.is_cyclic;
}

std::uint64_t brute_domain_size(const Int& q, std::uint32_t b, std::uint32_t c,
                                std::uint64_t guard) {
    const Int total = int_pow(q, std::uint64_t(b) * c * c);
    if (total > Int(guard)) {
        std::string msg = "enumerating q^(b c^2) = " + total.get_str() +
                          " matrices exceeds the guard " + std::to_string(guard);
        if (guard < kBruteGuardRaised)
            msg += " (--raise-guard lifts it to " + std::to_string(kBruteGuardRaised) + ")";
        throw GuardError(msg);
    }
    return total.get_ui();
}

// Runs fn(worker, code_lo, code_hi) over a contiguous split of [0, total).
template <typename Fn>
void run_partitioned(std::uint64_t total, std::uint32_t parallelism, Fn fn) {
    const std::uint64_t workers =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(parallelism, total));
    if (workers == 1) {
        fn(0, 0, total);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    const std::uint64_t chunk = total / workers, rem = total % workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk + std::min(w, rem);
        const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] {
            try {
                fn(std::uint32_t(w), lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

Rat proportion_bruteforce(const Int& q, std::uint32_t b, std::uint32_t c, std::uint64_t guard,
                          std::uint32_t parallelism) {
    if (c == 0) throw ValidationError("the matrix size c must be at least 1");
    if (guard > kBruteGuardRaised)
        throw ValidationError("the enumeration guard is capped at " +
                              std::to_string(kBruteGuardRaised));
    const Algebra alg = build_algebra(q, b);
    const std::uint64_t total = brute_domain_size(q, b, c, guard);
    const std::vector<Poly> fs = enum_irreducibles(alg.F, b);
    for (const Poly& f : fs) split_over_extension(f, alg.K);  // warm the shared cache

    std::vector<std::uint64_t> hits(std::max<std::uint32_t>(1, parallelism), 0);
    run_partitioned(total, parallelism, [&](std::uint32_t w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t code = lo; code < hi; ++code) {
            const Mat X = Mat::from_code(alg.K, c, code);
            bool any = false;
            for (const Poly& f : fs)
                if (dual_route_cyclic(X, f)) any = true;
            if (any) ++hits[w];
        }
    });
    std::uint64_t hit_total = 0;
    for (std::uint64_t h : hits) hit_total += h;
    return make_rat(hit_total, total);
}

bool inclusion_exclusion_check(const Int& q, std::uint32_t b, std::uint32_t c,
                               std::uint64_t guard) {
    if (c == 0) throw ValidationError("the matrix size c must be at least 1");
    const Algebra alg = build_algebra(q, b);
    const std::uint64_t total = brute_domain_size(q, b, c, guard);
    const std::vector<Poly> fs = enum_irreducibles(alg.F, b);
    const std::uint32_t n_irr = std::uint32_t(fs.size());
    if (n_irr > 20) throw GuardError("inclusion-exclusion masks are capped at 20 irreducibles");

    // mask_count[m] = matrices whose set of cyclicity witnesses is exactly m.
    std::vector<std::uint64_t> mask_count(std::size_t(1) << n_irr, 0);
    std::uint64_t union_count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        const Mat X = Mat::from_code(alg.K, c, code);
        std::uint32_t mask = 0;
        for (std::uint32_t i = 0; i < n_irr; ++i)
            if (dual_route_cyclic(X, fs[i])) mask |= (1u << i);
        ++mask_count[mask];
        if (mask != 0) ++union_count;
    }

    const auto count_supersets = [&](std::uint32_t s) {
        std::uint64_t n = 0;
        for (std::uint32_t m = 0; m < (1u << n_irr); ++m)
            if ((m & s) == s) n += mask_count[m];
        return n;
    };

    Int alternating = 0;
    for (std::uint32_t i = 1; i <= n_irr; ++i) {
        const std::uint64_t rep_count = count_supersets((1u << i) - 1);
        if (n_irr <= 3) {
            for (std::uint32_t s = 1; s < (1u << n_irr); ++s)
                if (std::uint32_t(std::popcount(s)) == i && count_supersets(s) != rep_count)
                    return false;
        }
        const Int term = binomial(Int(n_irr), i) * Int(rep_count);
        alternating += (i % 2 == 1) ? term : -term;
    }
    return alternating == Int(union_count);
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Counter-based stream: the state for sample `index` is a pure function of
// (seed, index), so results do not depend on how samples are partitioned.
struct CounterRng {
    std::uint64_t s;
    CounterRng(std::uint64_t seed, std::uint64_t index)
        : s(mix64(seed + kGolden * (index + 1))) {}
    std::uint64_t next() {
        s += kGolden;
        return mix64(s);
    }
};

// Uniform draw from [0, order) by rejection below the largest multiple of
// `order` representable in 64 bits.
felt uniform_felt(CounterRng& rng, std::uint64_t order) {
    const std::uint64_t limit = (UINT64_MAX / order) * order;
    for (;;) {
        const std::uint64_t r = rng.next();
        if (r < limit) return felt(r % order);
    }
}

}  // namespace

MonteCarloResult proportion_montecarlo(const Int& q, std::uint32_t b, std::uint32_t c,
                                       std::uint64_t samples, std::uint64_t seed,
                                       std::uint32_t parallelism) {
    if (c == 0) throw ValidationError("the matrix size c must be at least 1");
    if (samples == 0) throw ValidationError("the sample count must be positive");
    const Algebra alg = build_algebra(q, b);
    const std::vector<Poly> fs = enum_irreducibles(alg.F, b);
    for (const Poly& f : fs) split_over_extension(f, alg.K);
    const std::uint64_t order = alg.K->order();

    std::vector<std::uint64_t> hits(std::max<std::uint32_t>(1, parallelism), 0);
    run_partitioned(samples, parallelism, [&](std::uint32_t w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            CounterRng rng(seed, i);
            Mat X(alg.K, c, c);
            for (std::uint32_t r = 0; r < c; ++r)
                for (std::uint32_t col = 0; col < c; ++col) X.at(r, col) = uniform_felt(rng, order);
            bool any = false;
            for (const Poly& f : fs)
                if (dual_route_cyclic(X, f)) any = true;
            if (any) ++hits[w];
        }
    });

    MonteCarloResult res;
    res.samples = samples;
    res.seed = seed;
    for (std::uint64_t h : hits) res.hits += h;
    res.estimate = make_rat(res.hits, samples);
    res.stderr_estimate = binomial_stderr(res.estimate, samples);
    return res;
}

Rat binomial_stderr(const Rat& estimate, std::uint64_t samples) {
    if (samples == 0) throw ValidationError("stderr requires at least one sample");
    const Rat variance = estimate * (1 - estimate) / Rat(Int(samples));
    return sqrt_interval(RatInterval(variance), 32).hi;
}

RatInterval limit_proportion(const Int& q, std::uint32_t b, unsigned precision_bits) {
    const SeriesParams params = make_series_params(q, b);
    const unsigned wbits = precision_bits + 80;
    const RatInterval omega = omega_limit_interval(params.Q, wbits);
    const Rat prefactor = make_rat(Int(b) * params.Q, (params.Q - 1) * (params.Q - 1));
    const RatInterval h1 = (prefactor * omega.pow_round(b, wbits)).round_out(wbits);
    const RatInterval survivor = Rat(1) - h1;  // probability of missing one orbit
    if (!(survivor.lo > 0) || !(h1.lo > 0))
        throw GuardError("limit factor 1 - H(1) left the interval (0, 1)");
    if (!params.N.fits_ulong_p()) throw GuardError("irreducible count exceeds the exponent guard");
    const RatInterval powered = survivor.pow_round(params.N.get_ui(), wbits);
    const RatInterval out = (Rat(1) - powered).round_out(precision_bits + 2);
    if (out.width() > make_rat(1, int_pow(Int(2), precision_bits)))
        throw GuardError("limit enclosure wider than requested");
    return out;
}

LimitWindow limit_window_check(const Int& q, std::uint32_t b) {
    constexpr unsigned bits = 128;
    const Int big_q = int_pow(q, b);
    LimitWindow w;
    const RatInterval limit = limit_proportion(q, b, bits);
    const RatInterval einv = exp_neg1_interval(bits);
    w.diff = limit - (Rat(1) - einv);
    const RatInterval half_power = pow_half_interval(q, b, bits);  // q^(b/2)
    w.abs_bound = Rat(4 * b) * einv / half_power;
    w.lower = -w.abs_bound;
    const Rat slack = make_rat(Int(1) + b, big_q) +
                      2 * make_rat((Int(1) + b) * (Int(1) + b), big_q * big_q);
    w.upper = slack * einv;
    w.two_sided_ok = w.lower.strictly_less(w.diff) && w.diff.strictly_less(w.upper);
    const Rat magnitude = std::max(Rat(abs(w.diff.lo)), Rat(abs(w.diff.hi)));
    w.absolute_ok = magnitude < w.abs_bound.lo;
    return w;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> limit_window_domain(std::uint64_t max_order) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t q = 2; q * q <= max_order; ++q) {
        std::uint32_t p = 0, e = 0;
        try {
            factor_prime_power(q, p, e);
        } catch (const ValidationError&) {
            continue;
        }
        std::uint64_t power = q * q;
        for (std::uint32_t b = 2;; ++b) {
            out.emplace_back(q, b);
            if (power > max_order / q) break;
            power *= q;
        }
    }
    return out;
}

namespace {

Rat rat_pow(const Rat& x, unsigned long e) {
    return make_rat(int_pow(Int(x.get_num()), e), int_pow(Int(x.get_den()), e));
}

}  // namespace

BoundConstants convergence_constants(const Int& q, std::uint32_t b, unsigned limit_bits) {
    const SeriesParams params = make_series_params(q, b);
    const Int& big_q = params.Q;
    BoundConstants out;
    out.a_L = 2 * big_q;
    // base = (b Q / (Q-1)) (2Q)^b 2^b Q^b, raised to t = ceil(Q / b)
    const Rat base = make_rat(Int(b) * big_q, big_q - 1) *
                     Rat(int_pow(Int(2), 2 * std::uint64_t(b)) * int_pow(big_q, 2 * std::uint64_t(b)));
    const Int t_exp = (big_q + b - 1) / b;
    if (!t_exp.fits_ulong_p()) throw GuardError("tail constant exponent exceeds the guard");
    out.a_J = make_rat(8, 3) * rat_pow(base, t_exp.get_ui());
    out.k = out.a_J * make_rat(big_q, big_q - 1);
    const Rat threshold_num = std::max(Rat(b - 1), make_rat(big_q, b));
    const RatInterval ratio = RatInterval(threshold_num) / log43_interval(96);
    out.M_threshold = ceil_to_grid((ratio * ratio).hi, 32);
    out.limit_interval = limit_proportion(q, b, limit_bits);
    return out;
}

TailReport verify_tail_bounds(const Int& q, std::uint32_t b, std::uint32_t c_lo,
                              std::uint32_t c_hi, unsigned limit_bits) {
    if (c_lo == 0 || c_hi < c_lo)
        throw ValidationError("the tail range must satisfy 1 <= c_lo <= c_hi");
    if (c_hi > 80) throw GuardError("tail verification is capped at c = 80");
    TailReport rep;
    rep.constants = convergence_constants(q, b, limit_bits);
    if (Rat(c_lo) <= rep.constants.M_threshold)
        throw ValidationError("the tail bounds hold above the threshold M = " +
                              rat_decimal(rep.constants.M_threshold, 8) +
                              "; c_lo must exceed it");

    const SeriesParams params = make_series_params(q, b);
    const std::uint32_t order = c_hi + 1;
    const Series pcb = pcb_series(params, order);
    std::vector<Rat> a(order + 1);
    for (std::uint32_t c = 1; c <= order; ++c) a[c] = omega_n(c, params.Q) * pcb.coeff(c);

    const RatInterval& lim = rep.constants.limit_interval;
    Rat q_pow = rat_pow(make_rat(1, params.Q), c_lo);  // Q^-c, running
    rep.all_ok = true;
    for (std::uint32_t c = c_lo; c <= c_hi; ++c) {
        TailCheckRow row;
        row.c = c;
        row.consecutive_diff = abs(a[c + 1] - a[c]);
        row.consecutive_bound = rep.constants.a_J * q_pow;
        row.consecutive_ok = row.consecutive_diff < row.consecutive_bound;
        row.limit_gap = std::max(Rat(abs(a[c] - lim.lo)), Rat(abs(a[c] - lim.hi)));
        row.limit_bound = rep.constants.k * q_pow;
        row.limit_ok = row.limit_gap <= row.limit_bound;
        rep.all_ok = rep.all_ok && row.consecutive_ok && row.limit_ok;
        rep.rows.push_back(std::move(row));
        q_pow /= params.Q;
    }
    return rep;
}

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<TableRow> table_generate(const Int& q, std::uint32_t b, std::uint32_t c_max) {
    if (c_max == 0) throw ValidationError("the matrix size c must be at least 1");
    const SeriesParams params = make_series_params(q, b);
    const Series pcb = pcb_series(params, c_max);
    const bool b_prime = is_prime_u32(b);
    std::vector<TableRow> rows;
    for (std::uint32_t c = 1; c <= c_max; ++c) {
        TableRow row;
        row.report.q = q;
        row.report.b = b;
        row.report.c = c;
        row.report.method = Method::SERIES;
        row.report.proportion = omega_n(c, params.Q) * pcb.coeff(c);
        if (c <= 3) {
            row.reference_value = reference_polynomial(c, q, b);
            row.reference_match = (*row.reference_value == row.report.proportion);
            if (!b_prime) row.note = "the printed small-c polynomial assumes a prime extension degree";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Rat reference_polynomial(std::uint32_t c, const Int& q, std::uint32_t b) {
    const Rat x = make_rat(1, int_pow(q, b));  // q^-b
    const Rat B(static_cast<unsigned long>(b));
    const Rat Q0(q);
    const Rat B2 = B * B, Q2 = Q0 * Q0, Q3 = Q2 * Q0;
    std::vector<Rat> coeff;
    switch (c) {
        case 1:
            coeff = {Rat(1), -Q0};
            break;
        case 2:
            coeff = {make_rat(1, 2),
                     make_rat(3, 2) - B / 2,
                     -B / 2 - Q0 + B * Q0 / 2 - Q2 / 2,
                     Rat(-1) + B * Q0 / 2 - Q2 / 2,
                     Q0};
            break;
        case 3:
            coeff = {make_rat(2, 3),
                     make_rat(1, 3) - Q0 / 2,
                     make_rat(4, 3) - B / 2 - B2 / 6 + Q0 - B * Q0 / 2,
                     make_rat(-1, 3) - B2 / 3 - B * Q0 / 2 + B2 * Q0 / 6 - Q2 + B * Q2 / 2 - Q3 / 6,
                     Rat(-1) - B2 / 3 + Q0 / 2 - B * Q0 + B2 * Q0 / 3 - Q2 + B * Q2 - Q3 / 3,
                     Rat(-1) + B / 2 - B2 / 6 - B * Q0 / 2 + B2 * Q0 / 3 + B * Q2 - Q3 / 3,
                     -B * Q0 / 2 + B2 * Q0 / 6 + Q2 + B * Q2 / 2 - Q3 / 6,
                     Rat(1) + Q2,
                     -Q0};
            break;
        default:
            throw ValidationError("reference polynomial rows exist for c = 1, 2, 3 only");
    }
    Rat value = 0, x_pow = 1;
    for (const Rat& ck : coeff) {
        value += ck * x_pow;
        x_pow *= x;
    }
    return value;
}

}  // namespace pcc
