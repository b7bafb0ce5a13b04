#include "pcc/report.hpp"

#include <cctype>

#include <json.hpp>

namespace pcc {

namespace {

// Sign of num/den - 10^e for positive num, den.
int cmp_with_pow10(const Int& num, const Int& den, long e) {
    Int lhs = num, rhs = den;
    if (e >= 0)
        rhs *= int_pow(Int(10), e);
    else
        lhs *= int_pow(Int(10), -e);
    return cmp(lhs, rhs);
}

}  // namespace

std::string rat_decimal(const Rat& x, unsigned sig_digits) {
    if (sig_digits == 0) throw ValidationError("rat_decimal needs at least one significant digit");
    if (x == 0) return "0";
    const bool negative = x < 0;
    const Int num = negative ? Int(-x.get_num()) : Int(x.get_num());
    const Int den = x.get_den();

    // e with 10^(e-1) <= num/den < 10^e, from a digit-count estimate.
    long e = long(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             long(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
    while (cmp_with_pow10(num, den, e) >= 0) ++e;
    while (cmp_with_pow10(num, den, e - 1) < 0) --e;

    // digits = round(num/den * 10^(sig-e)), half away from zero.
    const long shift = long(sig_digits) - e;
    Int scaled_num = num, scaled_den = den;
    if (shift >= 0)
        scaled_num *= int_pow(Int(10), shift);
    else
        scaled_den *= int_pow(Int(10), -shift);
    Int digits;
    mpz_fdiv_q(digits.get_mpz_t(), Int(2 * scaled_num + scaled_den).get_mpz_t(),
               Int(2 * scaled_den).get_mpz_t());
    if (digits == int_pow(Int(10), sig_digits)) {  // 999... rounded up a place
        digits = int_pow(Int(10), sig_digits - 1);
        ++e;
    }

    std::string ds = digits.get_str();
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

    std::string out;
    const long len = long(ds.size());
    if (e >= len)
        out = ds + std::string(std::size_t(e - len), '0');
    else if (e > 0)
        out = ds.substr(0, std::size_t(e)) + "." + ds.substr(std::size_t(e));
    else
        out = "0." + std::string(std::size_t(-e), '0') + ds;
    return negative ? "-" + out : out;
}

std::string rat_fraction(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_fraction(const std::string& s) {
    const auto bad = [&] { return ValidationError("malformed fraction '" + s + "'"); };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw bad();
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0 || i != s.size()) throw bad();
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw bad();
    if (r.get_den() == 0) throw ValidationError("fraction '" + s + "' has a zero denominator");
    r.canonicalize();
    return r;
}

std::string report_to_json(const CensusReport& r, int indent) {
    if (!r.q.fits_ulong_p()) throw ValidationError("report field q exceeds 64 bits");
    nlohmann::ordered_json j;
    j["q"] = std::uint64_t(r.q.get_ui());
    j["b"] = r.b;
    j["c"] = r.c;
    j["method"] = method_name(r.method);
    j["proportion"] = rat_fraction(r.proportion);
    if (r.interval)
        j["interval"] = {rat_fraction(r.interval->lo), rat_fraction(r.interval->hi)};
    if (r.constants) {
        nlohmann::ordered_json cj;
        cj["a_L"] = r.constants->a_L.get_str();
        cj["a_J"] = rat_fraction(r.constants->a_J);
        cj["M"] = rat_fraction(r.constants->M_threshold);
        cj["k"] = rat_fraction(r.constants->k);
        j["constants"] = std::move(cj);
    }
    if (r.seed) j["seed"] = *r.seed;
    if (r.samples) j["samples"] = *r.samples;
    return j.dump(indent);
}

CensusReport report_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed JSON report: ") + ex.what());
    }
    try {
        CensusReport r;
        if (j.at("q").is_string())
            r.q = Int(j.at("q").get<std::string>());
        else
            r.q = Int(std::uint64_t(j.at("q").get<std::uint64_t>()));
        r.b = j.at("b").get<std::uint32_t>();
        r.c = j.at("c").get<std::uint32_t>();
        r.method = method_from_name(j.at("method").get<std::string>());
        r.proportion = parse_fraction(j.at("proportion").get<std::string>());
        if (j.contains("interval")) {
            const auto& arr = j.at("interval");
            if (!arr.is_array() || arr.size() != 2)
                throw ValidationError("report interval must be a two-element array");
            r.interval = RatInterval(parse_fraction(arr.at(0).get<std::string>()),
                                     parse_fraction(arr.at(1).get<std::string>()));
        }
        if (j.contains("constants")) {
            const auto& cj = j.at("constants");
            BoundConstants bc;
            bc.a_L = Int(cj.at("a_L").get<std::string>());
            bc.a_J = parse_fraction(cj.at("a_J").get<std::string>());
            bc.M_threshold = parse_fraction(cj.at("M").get<std::string>());
            bc.k = parse_fraction(cj.at("k").get<std::string>());
            bc.limit_interval = r.interval ? *r.interval : RatInterval(r.proportion);
            r.constants = std::move(bc);
        }
        if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("samples")) r.samples = j.at("samples").get<std::uint64_t>();
        // The standard error is a pure function of (proportion, samples), so
        // it is restored rather than serialized.
        if (r.method == Method::MONTE_CARLO && r.samples)
            r.stderr_estimate = binomial_stderr(r.proportion, *r.samples);
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("JSON report missing or mistyped field: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ValidationError(std::string("JSON report holds a malformed number: ") + ex.what());
    }
}

std::string report_csv_row(const CensusReport& r) {
    return std::to_string(r.c) + "," + method_name(r.method) + "," + rat_decimal(r.proportion, 60);
}

std::string report_to_text(const CensusReport& r) {
    if (r.interval) return r.interval->to_string(40);
    return rat_fraction(r.proportion);
}

}  // namespace pcc
