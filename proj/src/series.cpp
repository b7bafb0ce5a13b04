#include "pcc/series.hpp"

#include <sstream>

#include "pcc/irreducibles.hpp"

namespace pcc {

Series::Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ValidationError("series needs at least the constant coefficient");
}

Series Series::zeros(std::uint32_t order) { return Series(std::vector<Rat>(order + 1, Rat(0))); }

Series Series::constant(const Rat& c, std::uint32_t order) {
    auto v = std::vector<Rat>(order + 1, Rat(0));
    v[0] = c;
    return Series(std::move(v));
}

Series Series::one_minus_u(std::uint32_t order) {
    Series s = constant(1, order);
    if (order >= 1) s.c_[1] = -1;
    return s;
}

const Rat& Series::coeff(std::uint32_t i) const {
    if (i >= c_.size()) throw ValidationError("series coefficient index beyond truncation order");
    return c_[i];
}

Rat& Series::mutable_coeff(std::uint32_t i) {
    if (i >= c_.size()) throw ValidationError("series coefficient index beyond truncation order");
    return c_[i];
}

Series Series::operator+(const Series& o) const {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
    return Series(std::move(r));
}

Series Series::operator-(const Series& o) const {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rat> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
    return Series(std::move(r));
}

Series Series::operator-() const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Series(std::move(r));
}

Series Series::operator*(const Series& o) const {
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rat> r(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Series(std::move(r));
}

Series Series::scaled(const Rat& c) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Series(std::move(r));
}

Series Series::inverse() const {
    if (c_[0] == 0) throw ValidationError("series inverse requires a nonzero constant term");
    std::vector<Rat> r(c_.size(), Rat(0));
    const Rat inv0 = Rat(1) / c_[0];
    r[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rat acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r[n - k];
        r[n] = -inv0 * acc;
    }
    return Series(std::move(r));
}

Series Series::pow(unsigned long e) const {
    Series acc = one(order());
    Series base = *this;
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        e >>= 1ul;
        if (e > 0) base = base * base;
    }
    return acc;
}

Series Series::truncated(std::uint32_t new_order) const {
    if (new_order >= c_.size()) throw ValidationError("series truncation cannot raise the order");
    return Series(std::vector<Rat>(c_.begin(), c_.begin() + new_order + 1));
}

Series Series::scale_arg(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    Rat si = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * si;
        si *= s;
    }
    return Series(std::move(r));
}

Series Series::divide_by_one_minus_u() const {
    std::vector<Rat> r(c_.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i];
        r[i] = acc;
    }
    return Series(std::move(r));
}

std::string Series::to_string(std::uint32_t max_terms) const {
    std::ostringstream os;
    os << "[";
    const std::size_t shown = std::min<std::size_t>(max_terms, c_.size());
    for (std::size_t i = 0; i < shown; ++i) {
        if (i > 0) os << ", ";
        os << rat_fraction(c_[i]);
    }
    if (shown < c_.size()) os << ", ...";
    os << "] (order " << order() << ")";
    return os.str();
}

Series one_minus_u_pow(std::uint32_t t, std::uint32_t order) {
    Series s = Series::zeros(order);
    for (std::uint32_t n = 0; n <= order && n <= t; ++n) {
        Rat c(binomial(Int(t), n));
        s.mutable_coeff(n) = (n % 2 == 0) ? c : -c;
    }
    return s;
}

Series one_minus_u_inv_pow(std::uint32_t t, std::uint32_t order) {
    Series s = Series::zeros(order);
    for (std::uint32_t n = 0; n <= order; ++n)
        s.mutable_coeff(n) = Rat(binomial(Int(n) + t - 1, t - 1));
    return s;
}

SeriesParams make_series_params(const Int& q, std::uint32_t b) {
    if (b < 2) throw ValidationError("the extension degree b must exceed 1");
    if (!q.fits_ulong_p()) throw ValidationError("q out of supported range");
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q.get_ui(), p, e);  // rejects non prime powers
    SeriesParams params;
    params.q = q;
    params.b = b;
    params.Q = int_pow(q, b);
    params.N = count_irreducibles(q, b);
    return params;
}

Rat omega_n(std::uint32_t n, const Int& big_q) {
    if (big_q < 2) throw ValidationError("omega_n requires Q >= 2");
    Rat prod = 1;
    const Rat qinv = make_rat(1, big_q);
    Rat qi = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        qi *= qinv;
        prod *= 1 - qi;
    }
    return prod;
}

Series p_series(const Int& big_q, std::uint32_t order) {
    Series s = Series::zeros(order);
    const Rat qinv = make_rat(1, big_q);
    Rat omega = 1, qi = 1;
    s.mutable_coeff(0) = 1;
    for (std::uint32_t n = 1; n <= order; ++n) {
        qi *= qinv;
        omega *= 1 - qi;
        s.mutable_coeff(n) = 1 / omega;
    }
    return s;
}

Series s_series(const Int& big_q, std::uint32_t order) {
    // u / ((Q-1)(1 - u/Q)): geometric expansion.
    Series s = Series::zeros(order);
    Rat c = make_rat(1, big_q - 1);
    for (std::uint32_t n = 1; n <= order; ++n) {
        s.mutable_coeff(n) = c;
        c /= big_q;
    }
    return s;
}

Series s_series_sum(const Int& big_q, std::uint32_t order) {
    Series s = Series::zeros(order);
    const Rat scale = 1 / (1 - make_rat(1, big_q));
    Rat qn = 1;
    for (std::uint32_t n = 1; n <= order; ++n) {
        qn *= big_q;
        s.mutable_coeff(n) = scale / qn;
    }
    return s;
}

Rat l_coeff_closed(std::uint32_t c, const Int& big_q) {
    const Rat mag = make_rat(1, int_pow(big_q, (static_cast<unsigned long>(c) * (c + 1)) / 2)) /
                    omega_n(c, big_q);
    return (c % 2 == 0) ? mag : -mag;
}

Series l_series(const Int& big_q, std::uint32_t order) {
    Series s = Series::zeros(order);
    for (std::uint32_t c = 0; c <= order; ++c) s.mutable_coeff(c) = l_coeff_closed(c, big_q);
    return s;
}

Series l_series_inverse_form(const Int& big_q, std::uint32_t order) {
    return (Series::one_minus_u(order) * p_series(big_q, order)).inverse();
}

Series l_series_partial_product(const Int& big_q, std::uint32_t order, std::uint32_t factors) {
    Series prod = Series::one(order);
    Rat qi = 1;
    for (std::uint32_t i = 1; i <= factors; ++i) {
        qi /= big_q;
        Series factor = Series::one(order);
        if (order >= 1) factor.mutable_coeff(1) = -qi;
        prod = prod * factor;
    }
    return prod;
}

Series h_series(const SeriesParams& params, std::uint32_t order) {
    return (s_series(params.Q, order) * l_series(params.Q, order).pow(params.b))
        .scaled(params.b);
}

Series h_series_definitional(const SeriesParams& params, std::uint32_t order) {
    const Series p_inv_b = p_series(params.Q, order).inverse().pow(params.b);
    return (s_series_sum(params.Q, order) * p_inv_b * one_minus_u_inv_pow(params.b, order))
        .scaled(params.b);
}

Series pcbi_series(std::uint32_t k, const SeriesParams& params, std::uint32_t order) {
    if (Int(k) > params.N)
        throw ValidationError("no subset of that size: k exceeds the number of degree-b irreducibles");
    if (k == 0) return p_series(params.Q, order);
    Series raw = p_series(params.Q, order) * h_series(params, order).pow(k);
    raw.mutable_coeff(0) = 1;  // the empty matrix is vacuously primary cyclic
    return raw;
}

Series pcb_series_raw(const SeriesParams& params, std::uint32_t order) {
    if (!params.N.fits_ulong_p()) throw ValidationError("N too large for series exponentiation");
    const Series h = h_series(params, order);
    const Series inner = (Series::one(order) - h).pow(params.N.get_ui());
    return p_series(params.Q, order) * (Series::one(order) - inner);
}

Series pcb_series(const SeriesParams& params, std::uint32_t order) {
    Series s = pcb_series_raw(params, order);
    s.mutable_coeff(0) = 1;
    return s;
}

Series pcb_series_incl_excl(const SeriesParams& params, std::uint32_t order) {
    if (!params.N.fits_ulong_p()) throw ValidationError("N too large for inclusion-exclusion");
    const unsigned long n = params.N.get_ui();
    Series acc = Series::zeros(order);
    for (unsigned long i = 1; i <= n; ++i) {
        const Series term = pcbi_series(std::uint32_t(i), params, order).scaled(Rat(binomial(params.N, i)));
        acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

Series j_series(const SeriesParams& params, std::uint32_t order) {
    const Series pcb = pcb_series(params, order);
    Series j = Series::zeros(order);
    Rat prev = 0;  // a_0 := 0, the proportion sum starts at c = 1
    Rat qc = 1;
    for (std::uint32_t c = 1; c <= order; ++c) {
        qc *= params.Q;
        const Rat a = omega_n(c, params.Q) * pcb.coeff(c);
        j.mutable_coeff(c) = (a - prev) * qc;
        prev = a;
    }
    return j;
}

Series j_series_glform_subst(const SeriesParams& params, std::uint32_t order) {
    const Series sub = pcb_series_raw(params, order).scale_arg(Rat(params.Q));
    Series one_minus_uq = Series::one(order);
    if (order >= 1) one_minus_uq.mutable_coeff(1) = -Rat(params.Q);
    return one_minus_uq * sub;
}

Series j_series_glform(const SeriesParams& params, std::uint32_t order) {
    if (!params.N.fits_ulong_p()) throw ValidationError("N too large for series exponentiation");
    const Series lb = l_series(params.Q, order).pow(params.b);
    Series u_shift = Series::zeros(order);
    if (order >= 1) u_shift.mutable_coeff(1) = 1;
    const Rat front = Rat(params.b) * Rat(params.Q) / Rat(params.Q - 1);
    const Series inner =
        Series::one(order) -
        (u_shift * one_minus_u_pow(params.b - 1, order) * lb).scaled(front);
    return p_series(params.Q, order) * (Series::one(order) - inner.pow(params.N.get_ui()));
}

Series prefix_sum_division(const Series& x) { return x.divide_by_one_minus_u(); }

}  // namespace pcc
