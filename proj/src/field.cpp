#include "pcc/field.hpp"

#include <algorithm>
#include <cstddef>

namespace pcc {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) throw ValidationError("q must be a prime power >= 2");
    auto f = prime_factors(q);
    if (f.size() != 1) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(f[0]);
    e = 0;
    while (q > 1) { q /= p; ++e; }
}

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Raw dense polynomials over an already constructed field: vector<felt>,
// lowest coefficient first, no trailing zeros.  Used during extension
// construction, before any Poly machinery exists for the new field.
namespace vp {

using V = std::vector<felt>;

void trim(V& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const V& a) { return static_cast<int>(a.size()) - 1; }

V mul(const Field& f, const V& a, const V& b) {
    if (a.empty() || b.empty()) return {};
    V c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

V sub(const Field& f, V a, const V& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

// Remainder of a by monic... (general leading coefficient handled via inverse).
V mod(const Field& f, V a, const V& m) {
    felt lead_inv = f.inv(m.back());
    while (deg(a) >= deg(m)) {
        felt c = f.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(a);
    }
    return a;
}

V make_monic(const Field& f, V a) {
    if (a.empty() || a.back() == 1) return a;
    felt c = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, c);
    return a;
}

V gcd(const Field& f, V a, V b) {
    while (!b.empty()) {
        V r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, a);
}

V pow_mod(const Field& f, V a, std::uint64_t e, const V& m) {
    V r{1};
    a = mod(f, std::move(a), m);
    while (e) {
        if (e & 1) r = mod(f, mul(f, r, a), m);
        a = mod(f, mul(f, a, a), m);
        e >>= 1;
    }
    return r;
}

// Deterministic Rabin test: f (monic, over f_base) is irreducible iff
// t^(Q^d) == t mod f and gcd(f, t^(Q^(d/l)) - t) = 1 for every prime l | d.
bool irreducible(const Field& base, const V& f) {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    std::vector<std::uint64_t> checkpoints;
    for (auto l : prime_factors(static_cast<std::uint64_t>(d)))
        checkpoints.push_back(static_cast<std::uint64_t>(d) / l);
    std::sort(checkpoints.begin(), checkpoints.end());
    const V x{0, 1};
    V pw = mod(base, x, f);
    std::uint64_t k = 0;
    for (std::uint64_t cp : checkpoints) {
        while (k < cp) { pw = pow_mod(base, pw, base.order(), f); ++k; }
        if (deg(gcd(base, f, sub(base, pw, x))) != 0) return false;
    }
    while (k < static_cast<std::uint64_t>(d)) { pw = pow_mod(base, pw, base.order(), f); ++k; }
    return pw == x;
}

}  // namespace vp

}  // namespace

FieldPtr Field::prime(std::uint32_t p) {
    auto f = std::shared_ptr<Field>(new Field());
    f->init_prime(p);
    return f;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
    if (e == 0) throw ValidationError("field degree must be >= 1");
    FieldPtr pf = prime(p);
    if (e == 1) return pf;
    return extension_canonical(pf, e);
}

FieldPtr Field::extension(FieldPtr base, const std::vector<felt>& modulus) {
    auto f = std::shared_ptr<Field>(new Field());
    f->init_extension(std::move(base), modulus);
    return f;
}

FieldPtr Field::extension_canonical(FieldPtr base, std::uint32_t b) {
    if (!base) throw ValidationError("extension requires a base field");
    if (b < 2) throw ValidationError("extension degree must be >= 2");
    std::uint64_t q = base->order();
    std::uint64_t count = u64_pow_checked(q, b, "canonical modulus search");
    if (count > kOrderGuard)
        throw GuardError("field order " + std::to_string(count) + " exceeds guard 2^24");
    std::uint64_t order_m1 = count - 1;
    auto pf = prime_factors(order_m1);
    for (std::uint64_t code = 1; code < count; ++code) {
        if (code % q == 0) continue;  // constant term 0: divisible by t
        std::vector<felt> m(b + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < b; ++i) { m[i] = static_cast<felt>(c % q); c /= q; }
        m[b] = 1;
        if (!vp::irreducible(*base, m)) continue;
        // Primitivity of t in base[t]/(m): order of t must be exactly order-1.
        bool primitive = true;
        const vp::V x{0, 1};
        for (auto l : pf) {
            if (vp::pow_mod(*base, x, order_m1 / l, m) == vp::V{1}) { primitive = false; break; }
        }
        if (primitive) return extension(base, m);
    }
    throw ValidationError("no primitive modulus found (unreachable for a true prime power)");
}

void Field::init_prime(std::uint32_t p) {
    if (!is_prime_u64(p)) throw ValidationError(std::to_string(p) + " is not prime");
    if (p > kOrderGuard) throw GuardError("field order exceeds guard 2^24");
    p_ = p;
    order_ = p;
    deg_ = 1;
    gen_ = 1;
    pf_factors_ = prime_factors(order_ - 1);
    // Smallest primitive root.
    primitive_ = 1;
    for (felt g = (p == 2 ? 1u : 2u); g < p; ++g) {
        bool ok = true;
        for (auto l : pf_factors_)
            if (raw_pow(g, (order_ - 1) / l) == 1) { ok = false; break; }
        if (ok) { primitive_ = g; break; }
    }
    build_tables();
}

void Field::init_extension(FieldPtr base, const std::vector<felt>& modulus) {
    if (!base) throw ValidationError("extension requires a base field");
    if (modulus.size() < 3) throw ValidationError("extension degree must be >= 2");
    if (modulus.back() != 1) throw ValidationError("modulus must be monic");
    for (felt c : modulus)
        if (c >= base->order()) throw ValidationError("modulus coefficient out of range");
    base_ = std::move(base);
    p_ = base_->characteristic();
    deg_ = static_cast<std::uint32_t>(modulus.size() - 1);
    order_ = u64_pow_checked(base_->order(), deg_, "field order");
    if (order_ > kOrderGuard) throw GuardError("field order " + std::to_string(order_) + " exceeds guard 2^24");
    modulus_ = modulus;
    if (!vp::irreducible(*base_, modulus_))
        throw ValidationError("modulus is reducible over the base field");
    t_deg_red_.resize(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) t_deg_red_[i] = base_->neg(modulus_[i]);
    gen_ = static_cast<felt>(base_->order());  // coords (0,1,0,...)
    pf_factors_ = prime_factors(order_ - 1);

    auto order_is_full = [&](felt x) {
        for (auto l : pf_factors_)
            if (raw_pow(x, (order_ - 1) / l) == 1) return false;
        return true;
    };
    primitive_ = 0;
    if (order_is_full(gen_)) {
        primitive_ = gen_;
    } else {
        for (felt x = 2; x < order_; ++x)
            if (order_is_full(x)) { primitive_ = x; break; }
    }
    build_tables();
}

void Field::build_tables() {
    static constexpr std::uint64_t kTableCap = std::uint64_t(1) << 20;
    if (order_ > kTableCap) return;
    std::uint64_t n = order_ - 1;
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    felt x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        exp_[k] = x;
        exp_[k + n] = x;
        log_[x] = static_cast<felt>(k);
        x = raw_mul(x, primitive_);
    }
    tables_ = true;
}

std::uint32_t Field::degree_absolute() const {
    return deg_ * (base_ ? base_->degree_absolute() : 1);
}

felt Field::add(felt a, felt b) const {
    if (p_ == 2) return a ^ b;
    if (!base_) return static_cast<felt>((a + b) % p_);
    // Codes are positional base p throughout the tower.
    felt r = 0, mult = 1;
    while (a || b) {
        felt d = (a % p_ + b % p_) % p_;
        r += d * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

felt Field::neg(felt a) const {
    if (p_ == 2) return a;
    if (!base_) return a == 0 ? 0 : p_ - a;
    felt r = 0, mult = 1;
    while (a) {
        felt d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

felt Field::sub(felt a, felt b) const { return add(a, neg(b)); }

felt Field::raw_mul(felt a, felt b) const {
    if (!base_) return static_cast<felt>((std::uint64_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    std::uint64_t q = base_->order();
    std::vector<felt> ca = coords(a), cb = coords(b);
    std::vector<felt> c(2 * deg_ - 1, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < deg_; ++j)
            c[i + j] = base_->add(c[i + j], base_->mul(ca[i], cb[j]));
    }
    for (std::uint32_t k = 2 * deg_ - 2; k >= deg_; --k) {
        felt top = c[k];
        if (top == 0) continue;
        c[k] = 0;
        for (std::uint32_t i = 0; i < deg_; ++i)
            c[k - deg_ + i] = base_->add(c[k - deg_ + i], base_->mul(top, t_deg_red_[i]));
    }
    felt r = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        r += static_cast<felt>(c[i] * mult);
        mult *= q;
    }
    return r;
}

felt Field::raw_pow(felt a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    felt r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a);
        a = raw_mul(a, a);
        e >>= 1;
    }
    return r;
}

felt Field::raw_inv(felt a) const {
    if (a == 0) throw ValidationError("division by zero field element");
    return raw_pow(a, order_ - 2);
}

felt Field::mul(felt a, felt b) const {
    if (!tables_) return raw_mul(a, b);
    if (a == 0 || b == 0) return 0;
    return exp_[std::uint64_t(log_[a]) + log_[b]];
}

felt Field::inv(felt a) const {
    if (a == 0) throw ValidationError("division by zero field element");
    if (!tables_) return raw_inv(a);
    return exp_[(order_ - 1) - log_[a]];
}

felt Field::pow(felt a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (!tables_) return raw_pow(a, e % (order_ - 1));
    std::uint64_t k = (std::uint64_t(log_[a]) * (e % (order_ - 1))) % (order_ - 1);
    return exp_[k];
}

felt Field::pow(felt a, const Int& e) const {
    if (e < 0) throw ValidationError("negative exponent");
    Int r = e % Int(static_cast<unsigned long>(order_ - 1));
    return pow(a, static_cast<std::uint64_t>(r.get_ui()));
}

felt Field::frobenius(felt x, std::uint32_t i) const {
    if (x < 2) return x;
    std::uint64_t m = order_ - 1, e = 1, b = base_order() % m;
    for (std::uint32_t k = 0; k < i; ++k) e = (e * b) % m;
    return pow(x, e);
}

std::uint64_t Field::elem_order(felt a) const {
    if (a == 0) throw ValidationError("zero element has no multiplicative order");
    std::uint64_t ord = order_ - 1;
    for (auto l : pf_factors_)
        while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
    return ord;
}

std::uint32_t Field::elem_degree(felt a) const {
    std::uint32_t n = 0;
    felt x = a;
    do {
        x = frobenius(x, 1);
        ++n;
    } while (x != a);
    return n;
}

std::vector<felt> Field::coords(felt a) const {
    if (!base_) return {a};
    std::uint64_t q = base_->order();
    std::vector<felt> c(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) {
        c[i] = static_cast<felt>(a % q);
        a = static_cast<felt>(a / q);
    }
    return c;
}

felt Field::from_coords(const std::vector<felt>& c) const {
    if (!base_) {
        if (c.size() != 1 || c[0] >= order_) throw ValidationError("bad coordinates");
        return c[0];
    }
    if (c.size() != deg_) throw ValidationError("coordinate vector has wrong length");
    std::uint64_t q = base_->order(), mult = 1, r = 0;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        if (c[i] >= q) throw ValidationError("coordinate out of range");
        r += c[i] * mult;
        mult *= q;
    }
    return static_cast<felt>(r);
}

std::string Field::to_string(felt a, char symbol) const {
    if (!base_) return std::to_string(a);
    if (a == 0) return "0";
    auto c = coords(a);
    std::string out;
    for (int i = static_cast<int>(deg_) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        std::string cs = base_->to_string(c[i], 'v');
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") {
            bool needs_parens = cs.find('+') != std::string::npos;
            out += needs_parens ? "(" + cs + ")" : cs;
        }
        out += symbol;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string Field::key_string() const {
    if (!base_) return "p" + std::to_string(p_);
    std::uint64_t code = 0, mult = 1, q = base_->order();
    for (felt c : modulus_) {
        code += c * mult;
        mult *= q;
    }
    return base_->key_string() + "|d" + std::to_string(deg_) + "m" + std::to_string(code);
}

std::string Field::description() const {
    if (!base_) return "GF(" + std::to_string(order_) + ")";
    std::string mod;
    for (int i = static_cast<int>(deg_); i >= 0; --i) {
        felt c = modulus_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::string cs = base_->to_string(c, 'v');
        if (!mod.empty()) mod += '+';
        if (i == 0) {
            mod += cs;
            continue;
        }
        if (cs != "1") mod += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
        mod += "w";
        if (i > 1) mod += "^" + std::to_string(i);
    }
    return "GF(" + std::to_string(order_) + ") = " + base_->description() + "[w]/(" + mod + ")";
}

}  // namespace pcc
