#include "pcc/irreducibles.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace pcc {

namespace {
std::string g_cache_dir;
std::mutex g_cache_dir_mutex;
}  // namespace

void set_irreducible_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    g_cache_dir = dir;
}

std::string irreducible_cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    return g_cache_dir;
}

Int count_irreducibles(const Int& q, std::uint32_t d) {
    if (q < 2) throw ValidationError("count_irreducibles requires q >= 2");
    if (d == 0) throw ValidationError("count_irreducibles requires d >= 1");
    Int sum = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = mobius(e);
        if (mu == 0) continue;
        sum += mu * int_pow(q, d / e);
    }
    Int n = sum / d;
    if (n * d != sum) throw std::logic_error("necklace count is not integral");
    return n;
}

Int count_irreducibles(std::uint64_t q, std::uint32_t d) {
    return count_irreducibles(Int(static_cast<unsigned long>(q)), d);
}

static void require_monic_nonconstant(const Poly& f) {
    if (f.deg() < 1) throw ValidationError("irreducibility is defined for nonconstant polynomials");
    if (!f.is_monic()) throw ValidationError("expected a monic polynomial");
}

bool is_irreducible_exhaustive(const Poly& f) {
    require_monic_nonconstant(f);
    const FieldPtr& F = f.field();
    int d = f.deg();
    if (d > 4) throw ValidationError("exhaustive irreducibility test supports degree <= 4");
    if (d == 1) return true;
    for (std::uint64_t x = 0; x < F->order(); ++x)
        if (f.eval(static_cast<felt>(x)) == 0) return false;
    if (d <= 3) return true;
    for (const Poly& g : enum_irreducibles(F, 2))
        if (g.divides(f)) return false;
    return true;
}

bool is_irreducible_rabin(const Poly& f) {
    require_monic_nonconstant(f);
    const FieldPtr& F = f.field();
    std::uint32_t d = static_cast<std::uint32_t>(f.deg());
    if (d == 1) return true;
    std::vector<std::uint64_t> checkpoints;
    for (auto l : prime_factors(d)) checkpoints.push_back(d / l);
    std::sort(checkpoints.begin(), checkpoints.end());
    const Poly x = Poly::t(F);
    Poly pw = x % f;
    std::uint64_t k = 0;
    Int q = static_cast<unsigned long>(F->order());
    for (std::uint64_t cp : checkpoints) {
        while (k < cp) { pw = pow_mod(pw, q, f); ++k; }
        if (gcd(f, pw - x).deg() != 0) return false;
    }
    while (k < d) { pw = pow_mod(pw, q, f); ++k; }
    return pw == x % f;
}

bool is_irreducible(const Poly& f) {
    require_monic_nonconstant(f);
    if (f.deg() <= 4) {
        std::uint64_t q = f.field()->order();
        bool scans_fit = q <= (std::uint64_t(1) << 24) && (f.deg() < 4 || q * q <= (std::uint64_t(1) << 24));
        if (scans_fit) return is_irreducible_exhaustive(f);
    }
    return is_irreducible_rabin(f);
}

namespace {

// Sieve results memoized per (field identity, degree) as coefficient codes.
std::map<std::pair<std::string, std::uint32_t>, std::vector<std::uint64_t>> g_irr_cache;
std::mutex g_irr_mutex;

std::string sanitize_for_filename(const std::string& s) {
    std::string out;
    for (char c : s)
        out.push_back((std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '-');
    return out;
}

std::string cache_file_path(const std::string& dir, const FieldPtr& F, std::uint32_t d) {
    return dir + "/irr-" + sanitize_for_filename(F->key_string()) + "-d" + std::to_string(d) +
           ".txt";
}

// A cache file is trusted only after full validation: matching header, exact
// count, strictly ascending in-range codes, and a primality test per entry.
bool load_cache_file(const std::string& path, const FieldPtr& F, std::uint32_t d,
                     std::vector<std::uint64_t>& codes) {
    std::ifstream in(path);
    if (!in) return false;
    std::string magic, key;
    std::uint32_t file_d = 0;
    std::size_t count = 0;
    if (!(in >> magic >> key >> file_d >> count)) return false;
    if (magic != "pcc-irreducibles-v1" || key != F->key_string() || file_d != d) return false;
    const Int expected = count_irreducibles(F->order(), d);
    if (Int(static_cast<unsigned long>(count)) != expected) return false;
    std::vector<std::uint64_t> loaded;
    loaded.reserve(count);
    const std::uint64_t total = u64_pow_checked(F->order(), d, "irreducible cache");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (!(in >> code) || code >= total) return false;
        if (!loaded.empty() && code <= loaded.back()) return false;
        if (!is_irreducible(Poly::from_monic_code(F, d, code))) return false;
        loaded.push_back(code);
    }
    codes = std::move(loaded);
    return true;
}

void store_cache_file(const std::string& path, const FieldPtr& F, std::uint32_t d,
                      const std::vector<std::uint64_t>& codes) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << "pcc-irreducibles-v1 " << F->key_string() << " " << d << " " << codes.size() << "\n";
        for (auto c : codes) out << c << "\n";
        if (!out) return;
    }
    std::rename(tmp.c_str(), path.c_str());
}

std::vector<std::uint64_t> irr_codes(const FieldPtr& F, std::uint32_t d, std::uint64_t max_size) {
    std::uint64_t q = F->order();
    std::uint64_t total = u64_pow_checked(q, d, "enum_irreducibles");
    if (total > max_size)
        throw GuardError("enum_irreducibles: q^d = " + std::to_string(total) + " exceeds guard " +
                         std::to_string(max_size));
    {
        std::lock_guard<std::mutex> lock(g_irr_mutex);
        auto it = g_irr_cache.find({F->key_string(), d});
        if (it != g_irr_cache.end()) return it->second;
    }
    const std::string dir = irreducible_cache_dir();
    std::vector<std::uint64_t> codes;
    if (!dir.empty() && load_cache_file(cache_file_path(dir, F, d), F, d, codes)) {
        std::lock_guard<std::mutex> lock(g_irr_mutex);
        g_irr_cache.insert({{F->key_string(), d}, codes});
        return codes;
    }
    if (d == 1) {
        codes.resize(q);
        std::iota(codes.begin(), codes.end(), std::uint64_t(0));
    } else {
        std::vector<bool> reducible(total, false);
        for (std::uint32_t j = 1; 2 * j <= d; ++j) {
            std::uint64_t cofactors = u64_pow_checked(q, d - j, "enum_irreducibles");
            for (std::uint64_t gcode : irr_codes(F, j, max_size)) {
                Poly g = Poly::from_monic_code(F, j, gcode);
                for (std::uint64_t m = 0; m < cofactors; ++m)
                    reducible[(g * Poly::from_monic_code(F, d - j, m)).monic_code()] = true;
            }
        }
        for (std::uint64_t c = 0; c < total; ++c)
            if (!reducible[c]) codes.push_back(c);
    }
    if (!dir.empty()) store_cache_file(cache_file_path(dir, F, d), F, d, codes);
    std::lock_guard<std::mutex> lock(g_irr_mutex);
    g_irr_cache.insert({{F->key_string(), d}, codes});
    return codes;
}

// Divisor lists from split_over_extension, memoized as coefficient codes so a
// hit can be rebuilt over the caller's field instance.
std::map<std::tuple<std::string, std::uint32_t, std::uint64_t>, std::vector<std::vector<felt>>>
    g_split_cache;
std::mutex g_split_mutex;

}  // namespace

void clear_irreducible_memory_cache() {
    std::lock_guard<std::mutex> lock1(g_irr_mutex);
    std::lock_guard<std::mutex> lock2(g_split_mutex);
    g_irr_cache.clear();
    g_split_cache.clear();
}

std::vector<Poly> enum_irreducibles(const FieldPtr& F, std::uint32_t d, std::uint64_t max_size) {
    if (d == 0) throw ValidationError("enum_irreducibles requires d >= 1");
    std::vector<Poly> out;
    for (std::uint64_t code : irr_codes(F, d, max_size)) out.push_back(Poly::from_monic_code(F, d, code));
    return out;
}

Poly conjugate_poly(const Poly& g, std::uint32_t i) { return g.conjugate(i); }

std::vector<Poly> split_over_extension(const Poly& f, const FieldPtr& K) {
    const FieldPtr& F = f.field();
    if (K->base() != F)
        throw ValidationError("split_over_extension: K must be an extension of the field of f");
    if (!f.is_monic()) throw ValidationError("split_over_extension expects a monic polynomial");

    const std::tuple<std::string, std::uint32_t, std::uint64_t> cache_key{
        K->key_string(), std::uint32_t(f.deg()), f.monic_code()};
    {
        std::lock_guard<std::mutex> lock(g_split_mutex);
        auto it = g_split_cache.find(cache_key);
        if (it != g_split_cache.end()) {
            std::vector<Poly> out;
            for (const auto& coeffs : it->second) out.push_back(Poly(K, coeffs));
            return out;
        }
    }
    if (!is_irreducible(f)) throw ValidationError("split_over_extension expects an irreducible polynomial");

    std::uint32_t b = K->degree();
    std::uint32_t d = static_cast<std::uint32_t>(f.deg());
    std::uint32_t r = std::gcd(b, d);
    std::uint32_t e = d / r;

    // Base-field codes embed into K unchanged, so the lift reuses the coefficients.
    Poly lifted(K, f.coeffs());
    if (r == 1) return {lifted};

    std::vector<Poly> out;
    if (e == 1) {
        for (std::uint64_t x = 0; x < K->order(); ++x)
            if (lifted.eval(static_cast<felt>(x)) == 0)
                out.push_back(Poly(K, {K->neg(static_cast<felt>(x)), 1}));
    } else {
        std::uint64_t candidates = u64_pow_checked(K->order(), e, "split_over_extension");
        if (candidates > (std::uint64_t(1) << 24))
            throw GuardError("split_over_extension: factor search space exceeds guard 2^24");
        Poly g = Poly::zero(K);
        for (std::uint64_t code = 0; code < candidates; ++code) {
            Poly cand = Poly::from_monic_code(K, e, code);
            if (cand.divides(lifted)) { g = cand; break; }
        }
        if (g.is_zero()) throw std::logic_error("split_over_extension found no factor");
        for (std::uint32_t i = 0; i < b; ++i) {
            Poly gi = conjugate_poly(g, i);
            if (std::find(out.begin(), out.end(), gi) == out.end()) out.push_back(gi);
        }
    }
    std::sort(out.begin(), out.end());
    if (out.size() != r) throw std::logic_error("split_over_extension: wrong number of conjugates");
    Poly prod = Poly::one(K);
    for (const Poly& g : out) prod = prod * g;
    if (prod != Poly(K, f.coeffs())) throw std::logic_error("split_over_extension: product check failed");
    {
        std::vector<std::vector<felt>> stored;
        for (const Poly& g : out) stored.push_back(g.coeffs());
        std::lock_guard<std::mutex> lock(g_split_mutex);
        g_split_cache.emplace(cache_key, std::move(stored));
    }
    return out;
}

}  // namespace pcc
