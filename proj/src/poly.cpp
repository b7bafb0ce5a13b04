#include "pcc/poly.hpp"

#include <cctype>

namespace pcc {

Poly::Poly(FieldPtr f, std::vector<felt> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (!f_) throw ValidationError("polynomial requires a field");
    for (felt c : c_)
        if (c >= f_->order()) throw ValidationError("coefficient out of range for field");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::from_monic_code(FieldPtr f, std::uint32_t d, std::uint64_t code) {
    std::uint64_t q = f->order();
    std::vector<felt> c(d + 1);
    for (std::uint32_t i = 0; i < d; ++i) {
        c[i] = static_cast<felt>(code % q);
        code /= q;
    }
    if (code != 0) throw ValidationError("monic code out of range");
    c[d] = 1;
    return Poly(std::move(f), std::move(c));
}

void Poly::check_same_field(const Poly& o) const {
    if (f_ != o.f_) throw ValidationError("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    std::vector<felt> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<felt> c(c_);
    for (auto& x : c) x = f_->neg(x);
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<felt> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(c));
}

Poly Poly::scaled(felt c) const {
    std::vector<felt> v(c_);
    for (auto& x : v) x = f_->mul(x, c);
    return Poly(f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    check_same_field(d);
    if (d.is_zero()) throw ValidationError("polynomial division by zero");
    if (deg() < d.deg()) return {zero(f_), *this};
    felt lead_inv = f_->inv(d.leading());
    std::vector<felt> rem(c_);
    std::vector<felt> quot(static_cast<std::size_t>(deg() - d.deg()) + 1, 0);
    for (int k = deg(); k >= d.deg(); --k) {
        felt c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        felt s = f_->mul(c, lead_inv);
        std::size_t shift = static_cast<std::size_t>(k - d.deg());
        quot[shift] = s;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem[shift + i] = f_->sub(rem[shift + i], f_->mul(s, d.c_[i]));
    }
    return {Poly(f_, std::move(quot)), Poly(f_, std::move(rem))};
}

bool Poly::divides(const Poly& other) const { return other.divrem(*this).second.is_zero(); }

Poly Poly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(f_->inv(leading()));
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = one(f_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

felt Poly::eval(felt x) const {
    felt r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::conjugate(std::uint32_t i) const {
    if (f_->is_prime_field()) return *this;
    std::vector<felt> c(c_);
    for (auto& x : c) x = f_->frobenius(x, i);
    return Poly(f_, std::move(c));
}

std::uint64_t Poly::monic_code() const {
    if (!is_monic()) throw ValidationError("monic code of a non-monic polynomial");
    std::uint64_t code = 0, mult = 1, q = f_->order();
    for (int i = 0; i < deg(); ++i) {
        code += c_[static_cast<std::size_t>(i)] * mult;
        mult *= q;
    }
    return code;
}

bool Poly::operator<(const Poly& o) const {
    if (deg() != o.deg()) return deg() < o.deg();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        felt c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        std::string cs = f_->to_string(c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.make_monic();
}

Poly pow_mod(const Poly& a, const Int& e, const Poly& m) {
    if (e < 0) throw ValidationError("negative exponent");
    Poly r = Poly::one(a.field()), b = a % m;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % m;
        b = (b * b) % m;
        k >>= 1;
    }
    return r;
}

namespace {

// Recursive-descent parser over K[t].  Grammar:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }
//   factor := integer | 'w' ['^' int] | 'v' ['^' int] | 't' ['^' int] | '(' expr ')'
struct Parser {
    const FieldPtr& f;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("parse error at position " + std::to_string(pos) + ": " + msg +
                              " in \"" + s + "\"");
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (std::uint64_t(1) << 60)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    std::uint32_t exponent() {
        if (eat('^')) {
            std::uint64_t e = integer();
            if (e > 4096) fail("exponent too large");
            return static_cast<std::uint32_t>(e);
        }
        return 1;
    }

    Poly factor() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = integer();
            // The prime subfield occupies codes 0..p-1 at every tower level.
            return Poly::constant(f, static_cast<felt>(v % f->characteristic()));
        }
        if (c == 'w' || c == 'v') {
            ++pos;
            felt g;
            if (c == 'w') {
                if (f->is_prime_field()) fail("'w' is not defined over a prime field");
                g = f->gen();
            } else {
                if (!f->base() || f->base()->is_prime_field())
                    fail("'v' requires a base field that is itself an extension");
                g = f->base()->gen();  // base codes embed identically
            }
            return Poly::constant(f, f->pow(g, static_cast<std::uint64_t>(exponent())));
        }
        if (c == 't') {
            ++pos;
            std::uint32_t e = exponent();
            std::vector<felt> coeffs(e + 1, 0);
            coeffs[e] = 1;
            return Poly(f, std::move(coeffs));
        }
        if (c == '(') {
            ++pos;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected character");
    }

    Poly term() {
        Poly r = factor();
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == '*') {
                ++pos;
                r = r * factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'v' ||
                       c == 't' || c == '(') {
                r = r * factor();
            } else {
                break;
            }
        }
        return r;
    }

    Poly expr() {
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else eat('+');
        Poly r = term();
        if (negate) r = -r;
        for (;;) {
            skip_ws();
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else break;
        }
        return r;
    }
};

}  // namespace

Poly parse_poly(const FieldPtr& f, const std::string& s) {
    Parser p{f, s};
    Poly r = p.expr();
    p.skip_ws();
    if (p.pos != s.size()) p.fail("trailing input");
    return r;
}

felt parse_element(const FieldPtr& f, const std::string& s) {
    Poly p = parse_poly(f, s);
    if (p.deg() > 0) throw ValidationError("expected a field element, got a polynomial in t: \"" + s + "\"");
    return p.coeff(0);
}

}  // namespace pcc
