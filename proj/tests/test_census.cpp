#include <doctest.h>

#include <string>

#include "pcc/census.hpp"

using namespace pcc;

TEST_CASE("method names round-trip") {
    for (Method m : {Method::SERIES, Method::BRUTE_FORCE, Method::MONTE_CARLO, Method::LIMIT})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK(method_name(Method::SERIES) == "exact");
    CHECK_THROWS_AS(method_from_name("guess"), ValidationError);
}

TEST_CASE("exact proportions at desk scale") {
    CHECK(proportion_exact(Int(2), 2, 1) == make_rat(1, 2));
    CHECK(proportion_exact(Int(3), 2, 1) == make_rat(2, 3));
    CHECK(proportion_exact(Int(2), 3, 1) == make_rat(3, 4));
    CHECK(proportion_exact(Int(2), 2, 2) == make_rat(55, 128));
    CHECK(proportion_exact(Int(2), 2, 3) == make_rat(13881, 32768));
    CHECK_THROWS_AS(proportion_exact(Int(2), 1, 1), ValidationError);
    CHECK_THROWS_AS(proportion_exact(Int(6), 2, 1), ValidationError);
}

TEST_CASE("brute force agrees with the series and respects parallelism") {
    CHECK(proportion_bruteforce(Int(2), 2, 1) == make_rat(1, 2));
    CHECK(proportion_bruteforce(Int(3), 2, 1) == make_rat(2, 3));
    CHECK(proportion_bruteforce(Int(2), 3, 1) == make_rat(3, 4));
    CHECK(proportion_bruteforce(Int(2), 2, 2, kBruteGuardDefault, 3) == make_rat(55, 128));
}

TEST_CASE("brute force guard names the size and the override") {
    CHECK_THROWS_AS(proportion_bruteforce(Int(2), 2, 4), GuardError);
    try {
        proportion_bruteforce(Int(2), 2, 4);
    } catch (const GuardError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("4294967296") != std::string::npos);
        CHECK(msg.find("--raise-guard") != std::string::npos);
    }
    // The raised ceiling admits (2,2,3) but not (2,2,4).
    CHECK_THROWS_AS(proportion_bruteforce(Int(2), 2, 4, kBruteGuardRaised), GuardError);
}

TEST_CASE("inclusion-exclusion identity by enumeration") {
    CHECK(inclusion_exclusion_check(Int(2), 2, 2));
    CHECK(inclusion_exclusion_check(Int(3), 2, 1));
    CHECK(inclusion_exclusion_check(Int(2), 3, 1));
}

TEST_CASE("Monte Carlo is reproducible and worker-count independent") {
    const MonteCarloResult a = proportion_montecarlo(Int(2), 2, 1, 4096, 7, 1);
    CHECK(a.estimate == make_rat(2057, 4096));
    CHECK(a.hits == 2057);
    const MonteCarloResult b = proportion_montecarlo(Int(2), 2, 1, 4096, 7, 3);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_estimate == b.stderr_estimate);

    const MonteCarloResult one = proportion_montecarlo(Int(2), 2, 1, 1, 12345, 1);
    CHECK((one.estimate == 0 || one.estimate == 1));
    CHECK_THROWS_AS(proportion_montecarlo(Int(2), 2, 1, 0, 1), ValidationError);
}

TEST_CASE("Monte Carlo lands near the exact value") {
    const Rat exact = proportion_exact(Int(2), 2, 2);
    for (std::uint64_t seed : {1, 2, 3}) {
        const MonteCarloResult r = proportion_montecarlo(Int(2), 2, 2, 2048, seed, 1);
        CHECK(Rat(abs(r.estimate - exact)) <= 4 * r.stderr_estimate);
    }
}

TEST_CASE("binomial stderr is a pure function of estimate and count") {
    const Rat s = binomial_stderr(make_rat(1, 2), 4096);
    // sqrt(1/4 / 4096) = 1/128.
    CHECK(s >= make_rat(1, 128));
    CHECK(s <= make_rat(1, 128) + make_rat(1, 1 << 20));
    CHECK(binomial_stderr(Rat(0), 100) >= 0);
    CHECK_THROWS_AS(binomial_stderr(make_rat(1, 2), 0), ValidationError);
}

TEST_CASE("limit interval is tight and consistent across precisions") {
    const RatInterval lim = limit_proportion(Int(2), 2, 128);
    CHECK(lim.width() <= make_rat(1, int_pow(Int(2), 128)));
    // 0.42140794668777172585057786619393...
    const Rat ref = Rat("42140794668777172585057786619393") / Rat("100000000000000000000000000000000");
    CHECK(Rat(abs(lim.mid() - ref)) <= make_rat(1, int_pow(Int(10), 30)));

    // Both enclose the same real number, so they must overlap.
    const RatInterval coarse = limit_proportion(Int(2), 2, 64);
    CHECK(coarse.lo <= lim.hi);
    CHECK(lim.lo <= coarse.hi);

    const RatInterval other = limit_proportion(Int(3), 2, 96);
    CHECK(other.is_positive());
    CHECK(other.hi < 1);
}

TEST_CASE("finite proportions approach the limit monotonically in distance") {
    const RatInterval lim = limit_proportion(Int(2), 2, 128);
    const Rat a20 = proportion_exact(Int(2), 2, 20);
    const Rat a40 = proportion_exact(Int(2), 2, 40);
    const Rat d20 = std::max(Rat(abs(a20 - lim.lo)), Rat(abs(a20 - lim.hi)));
    const Rat d40 = std::max(Rat(abs(a40 - lim.lo)), Rat(abs(a40 - lim.hi)));
    CHECK(d40 < d20);
    CHECK(d20 < make_rat(1, 1 << 20));
}

TEST_CASE("convergence constants at (2,2)") {
    const BoundConstants bc = convergence_constants(Int(2), 2);
    CHECK(bc.a_L == 8);
    CHECK(bc.a_J == make_rat(8589934592, 27));
    CHECK(bc.k == make_rat(34359738368, 81));
    // Internal consistency: k = a_J / (1 - 1/Q).
    CHECK(bc.k == bc.a_J / (1 - make_rat(1, 4)));
    CHECK(bc.M_threshold > 48);
    CHECK(bc.M_threshold < 49);
    CHECK(bc.limit_interval.contains(bc.limit_interval.mid()));
}

TEST_CASE("tail bounds hold above the threshold") {
    const TailReport rep = verify_tail_bounds(Int(2), 2, 49, 52);
    CHECK(rep.all_ok);
    REQUIRE(rep.rows.size() == 4);
    for (const TailCheckRow& row : rep.rows) {
        CHECK(row.consecutive_ok);
        CHECK(row.limit_ok);
        CHECK(row.consecutive_diff < row.consecutive_bound);
        CHECK(row.limit_gap <= row.limit_bound);
    }
    // Below the threshold M the guarantee is not claimed.
    CHECK_THROWS_AS(verify_tail_bounds(Int(2), 2, 10, 12), ValidationError);
    CHECK_THROWS_AS(verify_tail_bounds(Int(2), 2, 49, 81), GuardError);
}

TEST_CASE("limit window around 1 - 1/e") {
    const LimitWindow w = limit_window_check(Int(2), 2);
    CHECK(w.ok());
    CHECK(w.lower.hi <= 0);
    CHECK(w.upper.is_positive());
    CHECK(w.lower.strictly_less(w.diff));
    CHECK(w.diff.strictly_less(w.upper));

    // Small-Q windows across the whole desk-scale domain.
    const auto domain = limit_window_domain(1 << 10);
    CHECK(domain.size() == 38);
    for (auto [q, b] : domain) {
        CHECK(b >= 2);
        CHECK(limit_window_check(Int(q), b).ok());
    }
}

TEST_CASE("limit window domain counts prime powers") {
    const auto domain = limit_window_domain(100);
    // q^b <= 100, b >= 2: 4 8 16 32 64 (q=2), 9 27 81 (q=3), 16 64 (q=4),
    // 25 (q=5), 49 (q=7), 64 (q=8), 81 (q=9).
    CHECK(domain.size() == 14);
    CHECK(domain.front() == std::pair<std::uint64_t, std::uint32_t>{2, 2});
}

TEST_CASE("table rows carry references only for small c") {
    const std::vector<TableRow> rows = table_generate(Int(2), 2, 5);
    REQUIRE(rows.size() == 5);
    for (std::uint32_t c = 1; c <= 5; ++c) {
        CHECK(rows[c - 1].report.c == c);
        CHECK(rows[c - 1].report.proportion == proportion_exact(Int(2), 2, c));
        CHECK(rows[c - 1].reference_match.has_value() == (c <= 3));
    }
    CHECK(*rows[0].reference_match);
    CHECK(*rows[1].reference_match);
    CHECK(*rows[2].reference_match);
    CHECK(rows[0].note.empty());

    // Non-prime b: the printed polynomial no longer applies.
    const std::vector<TableRow> b4 = table_generate(Int(2), 4, 1);
    REQUIRE(b4.size() == 1);
    CHECK(!*b4[0].reference_match);
    CHECK(b4[0].note.find("prime extension degree") != std::string::npos);
}

TEST_CASE("reference polynomial matches the exact census where it applies") {
    for (std::uint64_t q : {2, 3, 5})
        for (std::uint32_t b : {2, 3})
            for (std::uint32_t c = 1; c <= 3; ++c)
                CHECK(reference_polynomial(c, Int(q), b) == proportion_exact(Int(q), b, c));
}
