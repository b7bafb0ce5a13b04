#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcc/census.hpp"
#include "pcc/cycleindex.hpp"
#include "pcc/field.hpp"
#include "pcc/irreducibles.hpp"
#include "pcc/report.hpp"
#include "pcc/series.hpp"

namespace {

using namespace pcc;

struct GlobalOpts {
    std::string cache_dir;
    bool no_cache = false;
    std::uint32_t parallelism = std::max(1u, std::thread::hardware_concurrency());
    bool raise_guard = false;

    std::uint64_t guard() const { return raise_guard ? kBruteGuardRaised : kBruteGuardDefault; }
};

struct ProportionOpts {
    std::uint64_t q = 0;
    std::uint32_t b = 0, c = 0;
    std::string method = "exact";
    std::uint64_t samples = 4096, seed = 0;
    std::string format = "text";
};

struct LimitOpts {
    std::uint64_t q = 0;
    std::uint32_t b = 0;
    unsigned bits = 128;
    bool with_constants = false;
    std::string format = "text";
};

struct TableOpts {
    std::uint64_t q = 0;
    std::uint32_t b = 0, cmax = 0;
    std::string format = "text";
};

struct VerifyOpts {
    std::string suite;
    std::uint64_t q = 2;
    std::uint32_t b = 2, c = 1, n = 2, max_dim = 4, c_lo = 49, c_hi = 55;
    std::string assignment = "all-ones";
};

struct SeriesOpts {
    std::uint64_t q = 0;
    std::uint32_t b = 0, order = 10, k = 1;
    std::string which = "pcb";
};

int cmd_proportion(const GlobalOpts& g, const ProportionOpts& o) {
    CensusReport r;
    r.q = Int(o.q);
    r.b = o.b;
    r.c = o.c;
    r.method = method_from_name(o.method);
    if (r.method == Method::SERIES) {
        r.proportion = proportion_exact(r.q, o.b, o.c);
    } else if (r.method == Method::BRUTE_FORCE) {
        r.proportion = proportion_bruteforce(r.q, o.b, o.c, g.guard(), g.parallelism);
    } else if (r.method == Method::MONTE_CARLO) {
        const MonteCarloResult mc =
            proportion_montecarlo(r.q, o.b, o.c, o.samples, o.seed, g.parallelism);
        r.proportion = mc.estimate;
        r.samples = mc.samples;
        r.seed = mc.seed;
        r.stderr_estimate = mc.stderr_estimate;
    } else {
        throw ValidationError("the limit method belongs to the limit subcommand");
    }
    if (o.format == "json")
        std::cout << report_to_json(r) << "\n";
    else if (o.format == "csv")
        std::cout << report_csv_row(r) << "\n";
    else
        std::cout << report_to_text(r) << "\n";
    return 0;
}

int cmd_limit(const GlobalOpts&, const LimitOpts& o) {
    CensusReport r;
    r.q = Int(o.q);
    r.b = o.b;
    r.c = 0;
    r.method = Method::LIMIT;
    r.interval = limit_proportion(r.q, o.b, o.bits);
    r.proportion = r.interval->mid();
    if (o.with_constants) {
        BoundConstants bc = convergence_constants(r.q, o.b, o.bits);
        bc.limit_interval = *r.interval;
        r.constants = std::move(bc);
    }
    const LimitWindow w = limit_window_check(r.q, o.b);
    if (o.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_to_json(r));
        j["window_ok"] = w.ok();
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << report_csv_row(r) << "\n";
    } else {
        std::cout << r.interval->to_string(40) << "\n";
        if (r.constants) {
            std::cout << "a_L = " << r.constants->a_L.get_str() << "\n";
            std::cout << "a_J = " << rat_fraction(r.constants->a_J) << " ~ "
                      << rat_decimal(r.constants->a_J, 8) << "\n";
            std::cout << "M = " << rat_decimal(r.constants->M_threshold, 8) << "\n";
            std::cout << "k = " << rat_fraction(r.constants->k) << " ~ "
                      << rat_decimal(r.constants->k, 8) << "\n";
        }
        std::cout << "window around 1 - 1/e: " << (w.ok() ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int cmd_table(const GlobalOpts&, const TableOpts& o) {
    const std::vector<TableRow> rows = table_generate(Int(o.q), o.b, o.cmax);
    const auto match_cell = [](const TableRow& row) -> std::string {
        if (!row.reference_match) return "";
        if (*row.reference_match) return "yes";
        return row.note.empty() ? "no" : "no; " + row.note;
    };
    if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const TableRow& row : rows) {
            nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_to_json(row.report));
            if (row.reference_value) j["reference"] = rat_fraction(*row.reference_value);
            if (row.reference_match) j["match"] = *row.reference_match;
            if (!row.note.empty()) j["note"] = row.note;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        for (const TableRow& row : rows)
            std::cout << report_csv_row(row.report) << "," << match_cell(row) << "\n";
    } else {
        std::cout << "c method proportion match\n";
        for (const TableRow& row : rows) {
            std::cout << row.report.c << " " << method_name(row.report.method) << " "
                      << rat_fraction(row.report.proportion);
            const std::string m = match_cell(row);
            if (!m.empty()) std::cout << " " << m;
            std::cout << "\n";
        }
    }
    return 0;
}

// One PASS/FAIL line with both sides; returns whether it passed.
bool emit_check(const std::string& label, const std::string& lhs, const std::string& rhs,
                bool ok) {
    std::cout << label << ": " << lhs << " vs " << rhs << " " << (ok ? "PASS" : "FAIL") << "\n";
    return ok;
}

bool verify_cycle_index(std::uint64_t q, std::uint32_t b, std::uint32_t n_max,
                        const std::string& assignment) {
    bool all = true;
    if (assignment == "pcbi") {
        std::uint32_t p = 0, e = 0;
        factor_prime_power(q, p, e);
        FieldPtr F = Field::make(p, e);
        FieldPtr K = Field::extension_canonical(F, b);
        const std::vector<Poly> fs = enum_irreducibles(F, b);
        std::vector<Poly> forced, orbit;
        for (const Poly& g : split_over_extension(fs.at(0), K)) orbit.push_back(g);
        forced.push_back(orbit.at(0));
        const VariableAssignment x = assignment_primary_cyclic(forced, orbit);
        const Series rhs = icycle_rhs(n_max, K, forced, x);
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            const Rat lhs = icycle_lhs(n, K, forced, x);
            all &= emit_check("cycle-index q=" + std::to_string(q) + "^" + std::to_string(b) +
                                  " n=" + std::to_string(n) + " assignment=pcbi",
                              rat_fraction(lhs), rat_fraction(rhs.coeff(n)),
                              lhs == rhs.coeff(n));
        }
        return all;
    }
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);
    FieldPtr F = Field::make(p, e);
    const VariableAssignment x =
        assignment == "unipotent" ? assignment_unipotent(F) : assignment_all_ones();
    const Series rhs = icycle_rhs(n_max, F, {}, x);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const Rat lhs = icycle_lhs(n, F, {}, x);
        all &= emit_check("cycle-index q=" + std::to_string(q) + " n=" + std::to_string(n) +
                              " assignment=" + assignment,
                          rat_fraction(lhs), rat_fraction(rhs.coeff(n)), lhs == rhs.coeff(n));
    }
    return all;
}

bool verify_centralizer(std::uint64_t q, std::uint32_t max_dim) {
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);
    FieldPtr F = Field::make(p, e);
    bool all = true;
    for (std::uint32_t d = 1; d <= max_dim; ++d) {
        for (const Poly& h : enum_irreducibles(F, d)) {
            for (std::uint32_t m = 1; m * d <= max_dim; ++m) {
                for (const Partition& lam : partitions_of(m)) {
                    const Int formula = centralizer_order(lam, d, Int(q));
                    const Int brute = centralizer_bruteforce(lam, h);
                    all &= emit_check("centralizer q=" + std::to_string(q) +
                                          " h=" + h.to_string() + " lambda=" + lam.to_string(),
                                      formula.get_str(), brute.get_str(), formula == brute);
                }
            }
        }
    }
    return all;
}

bool verify_criterion(const GlobalOpts& g, std::uint64_t q, std::uint32_t b, std::uint32_t c) {
    const Rat brute = proportion_bruteforce(Int(q), b, c, g.guard(), g.parallelism);
    const Rat exact = proportion_exact(Int(q), b, c);
    return emit_check("criterion q=" + std::to_string(q) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c) + " (both routes agree on every matrix)",
                      rat_fraction(brute), rat_fraction(exact), brute == exact);
}

bool verify_inclusion_exclusion(const GlobalOpts& g, std::uint64_t q, std::uint32_t b,
                                std::uint32_t c) {
    const bool ok = inclusion_exclusion_check(Int(q), b, c, g.guard());
    std::cout << "inclusion-exclusion q=" << q << " b=" << b << " c=" << c
              << ": alternating sum vs direct count " << (ok ? "PASS" : "FAIL") << "\n";
    return ok;
}

bool verify_tail(std::uint64_t q, std::uint32_t b, std::uint32_t c_lo, std::uint32_t c_hi) {
    const TailReport rep = verify_tail_bounds(Int(q), b, c_lo, c_hi);
    bool all = true;
    for (const TailCheckRow& row : rep.rows) {
        all &= emit_check(
            "tail c=" + std::to_string(row.c) + " consecutive",
            rat_decimal(row.consecutive_diff, 4), "< " + rat_decimal(row.consecutive_bound, 4),
            row.consecutive_ok);
        all &= emit_check("tail c=" + std::to_string(row.c) + " limit-distance",
                          rat_decimal(row.limit_gap, 4), "<= " + rat_decimal(row.limit_bound, 4),
                          row.limit_ok);
    }
    return all && rep.all_ok;
}

int cmd_verify(const GlobalOpts& g, const VerifyOpts& o) {
    bool all = true;
    if (o.suite == "cycle-index") {
        all &= verify_cycle_index(o.q, o.b, o.n, o.assignment);
    } else if (o.suite == "centralizer") {
        all &= verify_centralizer(o.q, o.max_dim);
    } else if (o.suite == "criterion") {
        all &= verify_criterion(g, o.q, o.b, o.c);
    } else if (o.suite == "inclusion-exclusion") {
        all &= verify_inclusion_exclusion(g, o.q, o.b, o.c);
    } else if (o.suite == "tail") {
        all &= verify_tail(o.q, o.b, o.c_lo, o.c_hi);
    } else if (o.suite == "all") {
        for (std::uint64_t q : {2, 3})
            for (const char* a : {"all-ones", "unipotent", "pcbi"})
                all &= verify_cycle_index(q, 2, 2, a);
        all &= verify_centralizer(2, 4);
        all &= verify_centralizer(3, 3);
        all &= verify_criterion(g, 2, 2, 1);
        all &= verify_criterion(g, 2, 2, 2);
        all &= verify_criterion(g, 3, 2, 1);
        all &= verify_criterion(g, 2, 3, 1);
        all &= verify_inclusion_exclusion(g, 2, 2, 2);
        all &= verify_inclusion_exclusion(g, 3, 2, 1);
        all &= verify_tail(2, 2, 49, 55);
    } else {
        throw ValidationError("unknown verify suite '" + o.suite + "'");
    }
    std::cout << "RESULT " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : 1;
}

int cmd_series(const GlobalOpts&, const SeriesOpts& o) {
    const SeriesParams params = make_series_params(Int(o.q), o.b);
    Series s = Series::one(0);
    if (o.which == "p")
        s = p_series(params.Q, o.order);
    else if (o.which == "s")
        s = s_series(params.Q, o.order);
    else if (o.which == "l")
        s = l_series(params.Q, o.order);
    else if (o.which == "h")
        s = h_series(params, o.order);
    else if (o.which == "pcbi")
        s = pcbi_series(o.k, params, o.order);
    else if (o.which == "pcb")
        s = pcb_series(params, o.order);
    else if (o.which == "j")
        s = j_series(params, o.order);
    else
        throw ValidationError("unknown series '" + o.which + "'");
    nlohmann::ordered_json j;
    j["series"] = o.which;
    j["q"] = o.q;
    j["b"] = o.b;
    if (o.which == "pcbi") j["k"] = o.k;
    j["order"] = o.order;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (std::uint32_t i = 0; i <= s.order(); ++i) coeffs.push_back(rat_fraction(s.coeff(i)));
    j["coefficients"] = std::move(coeffs);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact census of primary cyclic matrices in M(c,q^b) viewed inside M(bc,q)"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir,
                   "Directory for the irreducible-polynomial cache (PCC_CACHE_DIR overrides)");
    app.add_flag("--no-cache", g.no_cache, "Disable the on-disk cache");
    app.add_option("--parallelism", g.parallelism, "Worker count for enumerations")
        ->check(CLI::PositiveNumber);
    app.add_flag("--raise-guard", g.raise_guard,
                 "Raise the enumeration guard from 2^20 to 2^24 matrices");

    ProportionOpts po;
    CLI::App* prop = app.add_subcommand("proportion", "Proportion of primary cyclic matrices");
    prop->fallthrough();
    prop->add_option("--q", po.q, "Field size q (prime power)")->required();
    prop->add_option("--b", po.b, "Extension degree b (>= 2)")->required();
    prop->add_option("--c", po.c, "Matrix size c")->required();
    prop->add_option("--method", po.method, "exact | brute | mc")
        ->check(CLI::IsMember({"exact", "brute", "mc"}));
    prop->add_option("--samples", po.samples, "Monte Carlo sample count");
    prop->add_option("--seed", po.seed, "Monte Carlo seed");
    prop->add_option("--format", po.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    LimitOpts lo;
    CLI::App* lim = app.add_subcommand("limit", "Limit proportion as c grows");
    lim->fallthrough();
    lim->add_option("--q", lo.q, "Field size q (prime power)")->required();
    lim->add_option("--b", lo.b, "Extension degree b (>= 2)")->required();
    lim->add_option("--bits", lo.bits, "Interval precision in bits");
    lim->add_flag("--with-constants", lo.with_constants, "Include the convergence constants");
    lim->add_option("--format", lo.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    TableOpts to;
    CLI::App* tab = app.add_subcommand("table", "Proportions for c = 1..cmax with references");
    tab->fallthrough();
    tab->add_option("--q", to.q, "Field size q (prime power)")->required();
    tab->add_option("--b", to.b, "Extension degree b (>= 2)")->required();
    tab->add_option("--cmax", to.cmax, "Largest matrix size")->required();
    tab->add_option("--format", to.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    VerifyOpts vo;
    CLI::App* ver = app.add_subcommand("verify", "Cross-check suites (exit 1 on any FAIL)");
    ver->fallthrough();
    ver->add_option("suite", vo.suite,
                    "cycle-index | centralizer | criterion | inclusion-exclusion | tail | all")
        ->required()
        ->check(CLI::IsMember(
            {"cycle-index", "centralizer", "criterion", "inclusion-exclusion", "tail", "all"}));
    ver->add_option("--q", vo.q, "Field size q (prime power)");
    ver->add_option("--b", vo.b, "Extension degree b");
    ver->add_option("--c", vo.c, "Matrix size for criterion / inclusion-exclusion");
    ver->add_option("--n", vo.n, "Largest matrix size for cycle-index");
    ver->add_option("--assignment", vo.assignment, "all-ones | unipotent | pcbi")
        ->check(CLI::IsMember({"all-ones", "unipotent", "pcbi"}));
    ver->add_option("--max-dim", vo.max_dim, "Largest |lambda| deg h for centralizer");
    ver->add_option("--c-lo", vo.c_lo, "First c for tail bounds");
    ver->add_option("--c-hi", vo.c_hi, "Last c for tail bounds");

    SeriesOpts so;
    CLI::App* ser = app.add_subcommand("series", "Dump generating-function coefficients");
    ser->fallthrough();
    ser->add_option("--q", so.q, "Field size q (prime power)")->required();
    ser->add_option("--b", so.b, "Extension degree b (>= 2)")->required();
    ser->add_option("--order", so.order, "Truncation order");
    ser->add_option("--k", so.k, "Forced-subset size for pcbi");
    ser->add_option("--dump-series", so.which, "p | s | l | h | pcbi | pcb | j")
        ->check(CLI::IsMember({"p", "s", "l", "h", "pcbi", "pcb", "j"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const char* env_cache = std::getenv("PCC_CACHE_DIR");
        if (env_cache != nullptr && *env_cache != '\0') g.cache_dir = env_cache;
        if (g.no_cache) g.cache_dir.clear();
        set_irreducible_cache_dir(g.cache_dir);

        if (prop->parsed()) return cmd_proportion(g, po);
        if (lim->parsed()) return cmd_limit(g, lo);
        if (tab->parsed()) return cmd_table(g, to);
        if (ver->parsed()) return cmd_verify(g, vo);
        if (ser->parsed()) return cmd_series(g, so);
        throw ValidationError("no subcommand given");
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    }
}
