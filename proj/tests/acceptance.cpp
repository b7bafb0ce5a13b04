#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "pcc/census.hpp"
#include "pcc/cycleindex.hpp"
#include "pcc/irreducibles.hpp"
#include "pcc/matrix.hpp"
#include "pcc/series.hpp"

using namespace pcc;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& detail) {
    std::cout << "CRITERION " << n << (ok ? " PASS" : " FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

void criterion(int n, const std::string& what, bool (*body)(std::string&)) {
    std::string detail = what;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = what + ": " + e.what();
    }
    report(n, ok, detail);
}

// 1: the enumeration oracle and the generating function agree, with the
// dual-route check implied on every enumerated matrix.
bool oracle_equivalence(std::string&) {
    bool ok = true;
    ok &= proportion_bruteforce(Int(2), 2, 1) == proportion_exact(Int(2), 2, 1);
    ok &= proportion_bruteforce(Int(2), 2, 2) == proportion_exact(Int(2), 2, 2);
    ok &= proportion_bruteforce(Int(3), 2, 1) == proportion_exact(Int(3), 2, 1);
    ok &= proportion_bruteforce(Int(2), 3, 1) == proportion_exact(Int(2), 3, 1);
    ok &= proportion_bruteforce(Int(2), 2, 3, kBruteGuardRaised) == proportion_exact(Int(2), 2, 3);
    return ok;
}

// 2: the small-c closed-form polynomial rows.
bool reference_rows(std::string&) {
    bool ok = true;
    for (std::uint64_t q : {2, 3, 5})
        for (std::uint32_t b : {2, 3})
            for (std::uint32_t c = 1; c <= 3; ++c)
                ok &= reference_polynomial(c, Int(q), b) == proportion_exact(Int(q), b, c);
    return ok;
}

// 3: the cycle index identity under four variable assignments.
bool cycle_index_identity(std::string&) {
    bool ok = true;
    for (std::uint64_t q : {2, 3}) {
        FieldPtr F = Field::prime(std::uint32_t(q));
        const std::vector<std::vector<Poly>> forced_sets{{}, {Poly::t(F)}};
        for (const auto& forced : forced_sets) {
            const Series rhs = icycle_rhs(3, F, forced, assignment_all_ones());
            for (std::uint32_t n = 1; n <= 3; ++n)
                ok &= icycle_lhs(n, F, forced, assignment_all_ones()) == rhs.coeff(n);
        }
        const Series rhs_uni = icycle_rhs(3, F, {}, assignment_unipotent(F));
        for (std::uint32_t n = 1; n <= 3; ++n)
            ok &= icycle_lhs(n, F, {}, assignment_unipotent(F)) == rhs_uni.coeff(n);
    }

    // Forced-divisor assignment inside GF(4), bridged to the PCBI series.
    FieldPtr F2 = Field::prime(2);
    FieldPtr K = Field::extension_canonical(F2, 2);
    const std::vector<Poly> orbit = split_over_extension(enum_irreducibles(F2, 2).front(), K);
    const std::vector<Poly> forced{orbit.front()};
    const VariableAssignment x = assignment_primary_cyclic(forced, orbit);
    const Series rhs = icycle_rhs(2, K, forced, x);
    const Series pcbi = pcbi_series(1, make_series_params(Int(2), 2), 2);
    for (std::uint32_t n = 1; n <= 2; ++n) {
        const Rat lhs = icycle_lhs(n, K, forced, x);
        ok &= lhs == rhs.coeff(n);
        ok &= Rat(2) * lhs == pcbi.coeff(n);
    }
    return ok;
}

// 4: the centralizer order formula against direct enumeration.
bool centralizer_oracle(std::string&) {
    bool ok = true;
    for (std::uint64_t q : {2, 3}) {
        const std::uint32_t max_dim = q == 2 ? 4 : 3;
        FieldPtr F = Field::prime(std::uint32_t(q));
        for (std::uint32_t d = 1; d <= max_dim; ++d)
            for (const Poly& h : enum_irreducibles(F, d))
                for (std::uint32_t m = 1; m * d <= max_dim; ++m)
                    for (const Partition& lam : partitions_of(m))
                        ok &= centralizer_order(lam, d, Int(q)) == centralizer_bruteforce(lam, h);
    }
    for (std::uint64_t Q : {2, 3, 4, 5})
        for (std::uint32_t m = 1; m <= 6; ++m)
            ok &= Rat(centralizer_order(Partition({m}), 1, Int(Q))) ==
                  Rat(int_pow(Int(Q), m)) * (1 - make_rat(1, Q));
    return ok;
}

// 5: the blow-up definition and the divisor criterion agree matrix by matrix.
bool dual_route(std::string&) {
    bool ok = true;
    const std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> cases{
        {2, 2, 2}, {3, 2, 1}, {2, 3, 1}};
    for (auto [q, b, c] : cases) {
        std::uint32_t p = 0, e = 0;
        factor_prime_power(q, p, e);
        FieldPtr F = Field::make(p, e);
        FieldPtr K = Field::extension_canonical(F, b);
        const std::vector<Poly> fs = enum_irreducibles(F, b);
        const std::uint64_t total = u64_pow_checked(K->order(), c * c, "acceptance");
        for (std::uint64_t code = 0; code < total; ++code) {
            const Mat X = Mat::from_code(K, c, code);
            for (const Poly& f : fs)
                ok &= is_primary_cyclic_F(X, f).is_cyclic == is_primary_cyclic_K(X, f).is_cyclic;
        }
    }
    return ok;
}

// 6: the generating-function identity suite at truncation order 30.
bool series_identities(std::string&) {
    bool ok = true;
    const std::uint32_t ord = 30;
    for (auto [q, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        const SeriesParams params = make_series_params(Int(q), b);
        const Int Q = params.Q;
        const Series p = p_series(Q, ord);
        const Series l = l_series(Q, ord);
        ok &= p.scale_arg(make_rat(1, Q)) == Series::one_minus_u(ord) * p;
        ok &= s_series(Q, ord) == s_series_sum(Q, ord);
        ok &= l == l_series_inverse_form(Q, ord);
        for (std::uint32_t c = 0; c <= ord; ++c) ok &= l.coeff(c) == l_coeff_closed(c, Q);
        ok &= Series::one_minus_u(ord) * p * l == Series::one(ord);
        ok &= h_series(params, ord) == h_series_definitional(params, ord);
        ok &= pcb_series(params, ord) == pcb_series_incl_excl(params, ord);
        ok &= j_series_glform_subst(params, ord) == j_series_glform(params, ord);
        ok &= g_series_partition_sum(1, Q, ord) == p.scale_arg(make_rat(1, Q));
        const Series pcb = pcb_series(params, ord);
        for (std::uint32_t c = 1; c <= ord; ++c) {
            const Rat a_c = omega_n(c, Q) * pcb.coeff(c);
            ok &= a_c >= 0 && a_c <= 1;
        }
    }
    return ok;
}

// 7: the unipotent specialization counts q^(n(n-1)) unipotent elements.
bool steinberg_count(std::string&) {
    bool ok = true;
    for (std::uint64_t q : {2, 3}) {
        FieldPtr F = Field::prime(std::uint32_t(q));
        for (std::uint32_t n = 1; n <= 3; ++n)
            ok &= icycle_lhs(n, F, {}, assignment_unipotent(F)) ==
                  make_rat(int_pow(Int(q), std::uint64_t(n) * (n - 1)), gl_order(Int(q), n));
    }
    return ok;
}

// 8: rigorous tail bounds for c in [49, 60] with a 2^-260 limit enclosure.
bool tail_bounds(std::string&) {
    const TailReport rep = verify_tail_bounds(Int(2), 2, 49, 60, 260);
    const Rat width_cap = make_rat(1, int_pow(Int(2), 260));
    return rep.all_ok && rep.rows.size() == 12 && rep.constants.limit_interval.width() <= width_cap;
}

// 9: the limit window around 1 - 1/e for every prime power q^b <= 2^16.
bool limit_windows(std::string& detail) {
    const auto domain = limit_window_domain(std::uint64_t(1) << 16);
    bool ok = domain.size() == 126;
    for (auto [q, b] : domain) ok &= limit_window_check(Int(q), b).ok();
    detail += ": " + std::to_string(domain.size()) + " pairs";
    return ok;
}

// 10: Monte Carlo calibration, advisory only.
bool mc_calibration(std::string& detail) {
    const Rat exact = proportion_exact(Int(2), 2, 3);
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const MonteCarloResult r = proportion_montecarlo(Int(2), 2, 3, 4096, seed);
        if (Rat(abs(r.estimate - exact)) <= 2 * r.stderr_estimate) ++within;
    }
    detail += ": " + std::to_string(within) + "/20 seeds within 2 stderr";
    return within >= 18;
}

}  // namespace

int main() {
    criterion(1, "oracle equivalence", oracle_equivalence);
    criterion(2, "small-c reference rows", reference_rows);
    criterion(3, "cycle index assignments", cycle_index_identity);
    criterion(4, "centralizer formula", centralizer_oracle);
    criterion(5, "dual criterion agreement", dual_route);
    criterion(6, "series identities", series_identities);
    criterion(7, "Steinberg unipotent count", steinberg_count);
    criterion(8, "tail bounds", tail_bounds);
    criterion(9, "limit windows", limit_windows);

    // Advisory: sampling noise can legitimately exceed the window; report
    // without failing the run.
    std::string detail = "Monte Carlo calibration";
    bool ok = false;
    try {
        ok = mc_calibration(detail);
    } catch (const std::exception& e) {
        detail += std::string(": ") + e.what();
    }
    std::cout << "CRITERION 10 " << (ok ? "PASS" : "ADVISORY") << " (" << detail << ")"
              << std::endl;

    return g_failures == 0 ? 0 : 1;
}
