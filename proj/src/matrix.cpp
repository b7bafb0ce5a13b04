#include "pcc/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "pcc/irreducibles.hpp"

namespace pcc {

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// successive pivot row.
std::vector<std::uint32_t> rref(std::vector<felt>& a, std::uint32_t rows, std::uint32_t cols,
                                const FieldPtr& f) {
    auto at = [&](std::uint32_t i, std::uint32_t j) -> felt& { return a[std::size_t(i) * cols + j]; };
    std::vector<std::uint32_t> pivots;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
        std::uint32_t pr = r;
        while (pr < rows && at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::uint32_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
        const felt inv = f->inv(at(r, c));
        for (std::uint32_t j = c; j < cols; ++j) at(r, j) = f->mul(at(r, j), inv);
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            const felt factor = at(i, c);
            for (std::uint32_t j = c; j < cols; ++j)
                at(i, j) = f->sub(at(i, j), f->mul(factor, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Mat::Mat(FieldPtr f, std::uint32_t rows, std::uint32_t cols)
    : f_(std::move(f)), n_(rows), m_(cols), a_(std::size_t(rows) * cols, 0) {}

Mat Mat::identity(FieldPtr f, std::uint32_t n) { return scalar(std::move(f), n, 1); }

Mat Mat::scalar(FieldPtr f, std::uint32_t n, felt c) {
    Mat r(std::move(f), n, n);
    for (std::uint32_t i = 0; i < n; ++i) r.at(i, i) = c;
    return r;
}

Mat Mat::diag(FieldPtr f, const std::vector<felt>& d) {
    Mat r(std::move(f), std::uint32_t(d.size()), std::uint32_t(d.size()));
    for (std::uint32_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
    return r;
}

Mat Mat::from_code(FieldPtr f, std::uint32_t n, std::uint64_t code) {
    const std::uint64_t q = f->order();
    Mat r(std::move(f), n, n);
    for (std::size_t idx = 0; idx < r.a_.size(); ++idx) {
        r.a_[idx] = felt(code % q);
        code /= q;
    }
    if (code != 0) throw ValidationError("matrix code out of range for the given size");
    return r;
}

Mat Mat::companion(const Poly& monic) {
    if (!monic.is_monic() || monic.deg() < 1)
        throw ValidationError("companion matrix requires a monic polynomial of degree >= 1");
    const auto& f = monic.field();
    const auto n = std::uint32_t(monic.deg());
    Mat r(f, n, n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) r.at(i, i + 1) = 1;
    for (std::uint32_t j = 0; j < n; ++j) r.at(n - 1, j) = f->neg(monic.coeff(j));
    return r;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw ValidationError("block_diag requires at least one block");
    std::uint32_t n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw ValidationError("block_diag blocks must be square");
        n += b.rows();
    }
    Mat r(blocks.front().field(), n, n);
    std::uint32_t off = 0;
    for (const auto& b : blocks) {
        for (std::uint32_t i = 0; i < b.rows(); ++i)
            for (std::uint32_t j = 0; j < b.cols(); ++j) r.at(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return r;
}

void Mat::check_same_shape(const Mat& o) const {
    if (n_ != o.n_ || m_ != o.m_) throw ValidationError("matrix shape mismatch");
}

Mat Mat::operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r(f_, n_, m_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r(f_, n_, m_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (m_ != o.n_) throw ValidationError("matrix product shape mismatch");
    Mat r(f_, n_, o.m_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t k = 0; k < m_; ++k) {
            const felt x = (*this)(i, k);
            if (x == 0) continue;
            for (std::uint32_t j = 0; j < o.m_; ++j) {
                const felt y = o(k, j);
                if (y != 0) r.at(i, j) = f_->add(r(i, j), f_->mul(x, y));
            }
        }
    return r;
}

Mat Mat::scaled(felt c) const {
    Mat r(f_, n_, m_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(f_, m_, n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::pow(std::uint32_t e) const {
    if (n_ != m_) throw ValidationError("matrix power requires a square matrix");
    Mat base = *this;
    Mat acc = identity(f_, n_);
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

Mat Mat::eval_poly(const Poly& h) const {
    if (n_ != m_) throw ValidationError("polynomial evaluation requires a square matrix");
    if (h.field() != f_) throw ValidationError("polynomial evaluation requires matching fields");
    Mat acc(f_, n_, n_);
    for (int k = h.deg(); k >= 0; --k) {
        acc = acc * (*this);
        const felt c = h.coeff(std::uint32_t(k));
        if (c != 0) acc = acc + scalar(f_, n_, c);
    }
    return acc;
}

std::uint32_t Mat::rank() const {
    auto work = a_;
    return std::uint32_t(rref(work, n_, m_, f_).size());
}

felt Mat::det() const {
    if (n_ != m_) throw ValidationError("determinant requires a square matrix");
    auto a = a_;
    auto at = [&](std::uint32_t i, std::uint32_t j) -> felt& { return a[std::size_t(i) * m_ + j]; };
    felt d = 1;
    bool negate = false;
    for (std::uint32_t c = 0; c < n_; ++c) {
        std::uint32_t pr = c;
        while (pr < n_ && at(pr, c) == 0) ++pr;
        if (pr == n_) return 0;
        if (pr != c) {
            for (std::uint32_t j = 0; j < n_; ++j) std::swap(at(pr, j), at(c, j));
            negate = !negate;
        }
        d = f_->mul(d, at(c, c));
        const felt inv = f_->inv(at(c, c));
        for (std::uint32_t i = c + 1; i < n_; ++i) {
            if (at(i, c) == 0) continue;
            const felt factor = f_->mul(at(i, c), inv);
            for (std::uint32_t j = c; j < n_; ++j)
                at(i, j) = f_->sub(at(i, j), f_->mul(factor, at(c, j)));
        }
    }
    return negate ? f_->neg(d) : d;
}

Mat Mat::left_kernel() const {
    // vX = 0 is the right-kernel system of the transpose.
    Mat t = transpose();
    auto work = t.a_;
    const auto pivots = rref(work, t.n_, t.m_, f_);
    std::vector<bool> is_pivot(n_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t j = 0; j < n_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat basis(f_, std::uint32_t(free_cols.size()), n_);
    for (std::uint32_t bi = 0; bi < free_cols.size(); ++bi) {
        const std::uint32_t j = free_cols[bi];
        basis.at(bi, j) = 1;
        for (std::uint32_t r = 0; r < pivots.size(); ++r)
            basis.at(bi, pivots[r]) = f_->neg(work[std::size_t(r) * n_ + j]);
    }
    return basis;
}

std::uint64_t Mat::code() const {
    const std::uint64_t q = f_->order();
    std::uint64_t c = 0;
    for (std::size_t idx = a_.size(); idx-- > 0;) {
        c = c * q + a_[idx];
        if (c > (std::uint64_t(1) << 62)) throw GuardError("matrix code exceeds 64-bit range");
    }
    return c;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (i > 0) os << ';';
        for (std::uint32_t j = 0; j < m_; ++j) {
            if (j > 0) os << ',';
            os << f_->to_string((*this)(i, j));
        }
    }
    return os.str();
}

Mat Mat::parse(const FieldPtr& f, const std::string& s) {
    std::vector<std::vector<felt>> rows;
    std::stringstream rs(s);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<felt> entries;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ',')) entries.push_back(parse_element(f, entry));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ValidationError("empty matrix text");
    const auto cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("ragged matrix text: rows differ in length");
    Mat m(f, std::uint32_t(rows.size()), std::uint32_t(cols));
    for (std::uint32_t i = 0; i < m.rows(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

Poly char_poly(const Mat& X) {
    if (X.rows() != X.cols()) throw ValidationError("characteristic polynomial requires a square matrix");
    const auto& f = X.field();
    const std::uint32_t n = X.rows();
    if (n == 0) return Poly::one(f);

    // Similarity reduction to upper Hessenberg form.
    Mat h = X;
    for (std::uint32_t c = 0; c + 2 < n; ++c) {
        std::uint32_t pr = c + 1;
        while (pr < n && h(pr, c) == 0) ++pr;
        if (pr == n) continue;
        if (pr != c + 1) {
            for (std::uint32_t j = 0; j < n; ++j) std::swap(h.at(pr, j), h.at(c + 1, j));
            for (std::uint32_t i = 0; i < n; ++i) std::swap(h.at(i, pr), h.at(i, c + 1));
        }
        const felt inv = f->inv(h(c + 1, c));
        for (std::uint32_t i = c + 2; i < n; ++i) {
            if (h(i, c) == 0) continue;
            const felt factor = f->mul(h(i, c), inv);
            for (std::uint32_t j = 0; j < n; ++j)
                h.at(i, j) = f->sub(h(i, j), f->mul(factor, h(c + 1, j)));
            for (std::uint32_t i2 = 0; i2 < n; ++i2)
                h.at(i2, c + 1) = f->add(h(i2, c + 1), f->mul(factor, h(i2, i)));
        }
    }

    // Leading-principal-minor recurrence for Hessenberg matrices.
    std::vector<Poly> p;
    p.push_back(Poly::one(f));
    for (std::uint32_t m = 1; m <= n; ++m) {
        Poly factor(f, {f->neg(h(m - 1, m - 1)), 1});
        Poly pm = factor * p[m - 1];
        felt prod = 1;
        for (std::uint32_t i = m - 1; i >= 1; --i) {
            prod = f->mul(prod, h(i, i - 1));
            if (prod == 0) break;
            const felt coeff = f->mul(prod, h(i - 1, m - 1));
            if (coeff != 0) pm = pm - p[i - 1].scaled(coeff);
        }
        p.push_back(std::move(pm));
    }
    return p[n];
}

Partition lambda_partition(const Mat& X, const Poly& h) {
    if (X.rows() != X.cols()) throw ValidationError("lambda partition requires a square matrix");
    if (h.field() != X.field()) throw ValidationError("lambda partition requires matching fields");
    if (h.deg() < 1 || !h.is_monic())
        throw ValidationError("lambda partition requires a monic polynomial of degree >= 1");
    const std::uint32_t n = X.rows();
    const auto d = std::uint32_t(h.deg());
    const Mat b = X.eval_poly(h);
    std::vector<std::uint32_t> conj_parts;  // increments of the kernel-dimension chain
    Mat power = Mat::identity(X.field(), n);
    std::uint32_t prev = 0;
    while (true) {
        power = power * b;
        const std::uint32_t nullity = n - power.rank();
        if (nullity % d != 0)
            throw ValidationError("kernel dimension not divisible by deg(h); h is not irreducible");
        const std::uint32_t k = nullity / d;
        if (k == prev) break;
        conj_parts.push_back(k - prev);
        prev = k;
        if (std::uint64_t(prev) * d >= n) break;
    }
    if (conj_parts.empty()) return Partition{};
    return Partition(conj_parts).conjugate();
}

std::vector<MatrixType> matrix_type(const Mat& X) {
    Poly rem = char_poly(X);
    const auto& f = X.field();
    std::vector<MatrixType> out;
    for (std::uint32_t d = 1; rem.deg() >= int(d); ++d) {
        for (const auto& h : enum_irreducibles(f, d)) {
            if (rem.deg() < int(d)) break;
            if (!h.divides(rem)) continue;
            while (h.divides(rem)) rem = rem / h;
            out.push_back(MatrixType{h, lambda_partition(X, h)});
        }
    }
    if (!rem.is_one()) throw GuardError("characteristic polynomial failed to factor within guards");
    return out;
}

Poly min_poly(const Mat& X) {
    Poly m = Poly::one(X.field());
    for (const auto& t : matrix_type(X)) m = m * t.h.pow(t.lambda.largest());
    return m;
}

std::vector<PrimaryComponent> primary_components(const Mat& X) {
    std::vector<PrimaryComponent> out;
    for (const auto& t : matrix_type(X)) {
        const std::uint32_t mult = t.lambda.largest();
        const Mat basis = X.eval_poly(t.h).pow(mult).left_kernel();
        if (basis.rows() != t.lambda.size() * std::uint32_t(t.h.deg()))
            throw GuardError("primary component dimension mismatch");
        out.push_back(PrimaryComponent{t.h, mult, t.lambda, basis});
    }
    return out;
}

Mat blowup(const Mat& X) {
    const auto& k = X.field();
    if (k->is_prime_field()) return X;
    if (X.rows() != X.cols()) throw ValidationError("blow-up requires a square matrix");
    const auto& f = k->base();
    const std::uint32_t b = k->degree();
    const std::uint32_t c = X.rows();
    const felt g = k->gen();
    Mat y(f, b * c, b * c);
    for (std::uint32_t j = 0; j < c; ++j)
        for (std::uint32_t kcol = 0; kcol < c; ++kcol)
            for (std::uint32_t i = 0; i < b; ++i) {
                const felt val = k->mul(k->pow(g, i), X(j, kcol));
                const auto digits = k->coords(val);
                for (std::uint32_t l = 0; l < b; ++l) y.at(j * b + i, kcol * b + l) = digits[l];
            }
    return y;
}

PrimaryCyclicVerdict is_primary_cyclic_F(const Mat& X, const Poly& f) {
    const auto& k = X.field();
    const auto& base = k->is_prime_field() ? k : k->base();
    if (f.field() != base)
        throw ValidationError("the test polynomial must live over the coefficient field of the blow-up");
    PrimaryCyclicVerdict v;
    v.f = f;
    v.route = CriterionRoute::BlowupDefinition;
    v.is_cyclic = lambda_partition(blowup(X), f).single_part();
    return v;
}

PrimaryCyclicVerdict is_primary_cyclic_K(const Mat& X, const Poly& f) {
    const auto& k = X.field();
    if (k->is_prime_field())
        throw ValidationError("the divisor criterion requires a proper extension field");
    if (f.field() != k->base())
        throw ValidationError("the test polynomial must live over the base field");
    PrimaryCyclicVerdict v;
    v.f = f;
    v.route = CriterionRoute::DivisorCriterion;
    const std::uint32_t b = k->degree();
    if (f.deg() % int(b) != 0) return v;
    const auto divisors = split_over_extension(f, k);
    const Poly cx = char_poly(X);
    for (const auto& g : divisors) {
        if (!lambda_partition(X, g).single_part()) continue;
        bool conjugate_free = true;
        for (const auto& other : divisors) {
            if (other == g) continue;
            if (other.divides(cx)) {
                conjugate_free = false;
                break;
            }
        }
        if (conjugate_free) {
            v.is_cyclic = true;
            v.witness = g;
            return v;
        }
    }
    return v;
}

}  // namespace pcc
