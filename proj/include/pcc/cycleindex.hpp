#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcc/matrix.hpp"
#include "pcc/partition.hpp"
#include "pcc/poly.hpp"
#include "pcc/series.hpp"

namespace pcc {

// Order of the centralizer in GL(|lambda| d, q) of a matrix whose sole
// primary type is (h, lambda) with deg h = d: with Q = q^d and conjugate
// partition lambda', c(lambda,d,q) = Q^{sum_i (lambda'_i)^2} * prod_k
// omega_{m_k}(1,Q) where m_k is the multiplicity of the part k.  The empty
// partition gives 1.
Int centralizer_order(const Partition& lambda, std::uint32_t d, const Int& q);

// Oracle for the formula: builds the block-companion matrix of type
// (h, lambda) and counts the invertible matrices commuting with it.
Int centralizer_bruteforce(const Partition& lambda, const Poly& h,
                           std::uint64_t guard = std::uint64_t(1) << 24);

// Values x_{h,lambda} for the cycle-index sums.  Only the assignment shapes
// the identities need are provided, not general symbolic indeterminates.
struct VariableAssignment {
    std::string name;
    std::function<Rat(const Poly&, const Partition&)> value;
};

VariableAssignment assignment_all_ones();
VariableAssignment assignment_constant_zero();
// 1 exactly on (t - 1, any lambda), 0 elsewhere: indicator of unipotency.
VariableAssignment assignment_unipotent(const FieldPtr& f);
// The forced-divisor assignment: 1 on (h, single-part lambda) for h in
// `forced`, 0 on (h, other lambda) for h in `forced`, 0 on any polynomial of
// `orbit` outside `forced`, 1 everywhere else.
VariableAssignment assignment_primary_cyclic(std::vector<Poly> forced, std::vector<Poly> orbit);

// (1/|GL(n,q)|) sum over X in M(n,q) of prod_{h in Div X union I}
// x(h, lambda(X,h)), by exhaustive enumeration.
Rat icycle_lhs(std::uint32_t n, const FieldPtr& f, const std::vector<Poly>& forced,
               const VariableAssignment& x, std::uint64_t guard = std::uint64_t(1) << 24);

// Truncated generating function prod_{h not in I} (1 + sum_{lambda != ()}
// x u^{|lambda| deg h} / c(lambda, deg h, q)) * prod_{h in I} (x_{h,()} +
// sum_{lambda != ()} ...), whose u^n coefficient matches icycle_lhs(n).
Series icycle_rhs(std::uint32_t order, const FieldPtr& f, const std::vector<Poly>& forced,
                  const VariableAssignment& x);

// Per-polynomial factor with all x = 1: 1 + sum_{m>=1} u^m sum_{lambda of m}
// 1/c(lambda, s, Q); at s = 1 equals P(u/Q, Q).
Series g_series_partition_sum(std::uint32_t s, const Int& big_q, std::uint32_t order);

}  // namespace pcc
