#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcc/partition.hpp"
#include "pcc/poly.hpp"

namespace pcc {

// Dense matrix over a shared Field.  Vectors are ROW vectors and matrices act
// on the right (v -> vX), matching the blow-up basis convention; kernels are
// therefore left kernels.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, std::uint32_t rows, std::uint32_t cols);

    static Mat identity(FieldPtr f, std::uint32_t n);
    static Mat scalar(FieldPtr f, std::uint32_t n, felt c);
    static Mat diag(FieldPtr f, const std::vector<felt>& d);
    // Entries are the base-q digits of `code`, row-major, entry (0,0) least
    // significant: the enumeration odometer over M(n, q).
    static Mat from_code(FieldPtr f, std::uint32_t n, std::uint64_t code);
    // Companion matrix of a monic polynomial in the row convention:
    // e_i -> e_{i+1} for i < n, e_n -> -(c_0 e_1 + ... + c_{n-1} e_n).
    static Mat companion(const Poly& monic);
    static Mat block_diag(const std::vector<Mat>& blocks);

    const FieldPtr& field() const { return f_; }
    std::uint32_t rows() const { return n_; }
    std::uint32_t cols() const { return m_; }
    felt operator()(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t(i) * m_ + j]; }
    felt& at(std::uint32_t i, std::uint32_t j) { return a_[std::size_t(i) * m_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(felt c) const;
    bool operator==(const Mat& o) const { return a_ == o.a_ && n_ == o.n_ && m_ == o.m_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat pow(std::uint32_t e) const;
    // h(X) by Horner's rule; square matrices only.
    Mat eval_poly(const Poly& h) const;

    std::uint32_t rank() const;
    felt det() const;
    // Echelonized basis of {v : vX = 0}, one row per basis vector.
    Mat left_kernel() const;

    std::uint64_t code() const;  // inverse of from_code for square matrices
    std::string to_string() const;  // "w+1,0;1,w" (rows ';', entries ',')
    static Mat parse(const FieldPtr& f, const std::string& s);

private:
    void check_same_shape(const Mat& o) const;

    FieldPtr f_;
    std::uint32_t n_ = 0, m_ = 0;
    std::vector<felt> a_;
};

// Characteristic polynomial det(tI - X), monic, via Hessenberg reduction over
// the exact field.
Poly char_poly(const Mat& X);

// Partition lambda(X, h) for irreducible h: conjugate parts are the increments
// of the kernel-dimension sequence k_j = dim Null(h(X)^j) / deg h.  Empty iff
// h does not divide char_poly(X).
Partition lambda_partition(const Mat& X, const Poly& h);

struct MatrixType {
    Poly h;
    Partition lambda;
};
// Distinct monic irreducible divisors of char_poly(X) with their partitions,
// in canonical polynomial order.
std::vector<MatrixType> matrix_type(const Mat& X);

Poly min_poly(const Mat& X);

struct PrimaryComponent {
    Poly h;
    std::uint32_t multiplicity;  // exponent of h in min_poly = largest part
    Partition lambda;
    Mat basis;  // rows span Null(h(X)^multiplicity)
};
std::vector<PrimaryComponent> primary_components(const Mat& X);

// The blow-up of a c x c matrix over K into M(bc, q) over F = K->base(), via
// the row basis (v_1, g v_1, ..., g^{b-1} v_1, v_2, ...) with g = K->gen().
// A matrix over a prime field is returned unchanged.
Mat blowup(const Mat& X);

enum class CriterionRoute { BlowupDefinition, DivisorCriterion };

struct PrimaryCyclicVerdict {
    Poly f;
    bool is_cyclic = false;
    std::optional<Poly> witness;  // K-divisor certifying the divisor route
    CriterionRoute route = CriterionRoute::BlowupDefinition;
};

// f-primary-cyclic test through the definition: lambda(blowup(X), f) has a
// single part.
PrimaryCyclicVerdict is_primary_cyclic_F(const Mat& X, const Poly& f);

// Same predicate through the divisor criterion over K: b | deg f and some
// divisor g of f over K has single-part lambda(X, g) while no nontrivial
// conjugate of g divides char_poly(X).
PrimaryCyclicVerdict is_primary_cyclic_K(const Mat& X, const Poly& f);

}  // namespace pcc
