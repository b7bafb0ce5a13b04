#include "pcc/cycleindex.hpp"

#include <algorithm>

#include "pcc/irreducibles.hpp"

namespace pcc {

Int centralizer_order(const Partition& lambda, std::uint32_t d, const Int& q) {
    if (d < 1) throw ValidationError("centralizer order requires d >= 1");
    if (q < 2) throw ValidationError("centralizer order requires q >= 2");
    if (lambda.empty()) return 1;
    const Int big_q = int_pow(q, d);
    const Partition conj = lambda.conjugate();
    unsigned long sq = 0;
    for (auto part : conj.parts) sq += static_cast<unsigned long>(part) * part;
    Rat value(int_pow(big_q, sq));
    for (std::size_t i = 0; i < lambda.parts.size();) {
        std::size_t j = i;
        while (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[i]) ++j;
        value *= omega_n(std::uint32_t(j - i), big_q);
        i = j;
    }
    if (value.get_den() != 1) throw GuardError("centralizer order did not reduce to an integer");
    return value.get_num();
}

Int centralizer_bruteforce(const Partition& lambda, const Poly& h, std::uint64_t guard) {
    if (h.deg() < 1 || !h.is_monic())
        throw ValidationError("centralizer oracle requires a monic polynomial of degree >= 1");
    const auto& f = h.field();
    if (lambda.empty()) return 1;
    const std::uint32_t s = lambda.size() * std::uint32_t(h.deg());
    const std::uint64_t total = u64_pow_checked(f->order(), s * s, "centralizer scan");
    if (total > guard) throw GuardError("centralizer scan of " + std::to_string(total) +
                                        " matrices exceeds the guard");
    std::vector<Mat> blocks;
    for (auto part : lambda.parts) blocks.push_back(Mat::companion(h.pow(part)));
    const Mat x = Mat::block_diag(blocks);
    Int count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        const Mat y = Mat::from_code(f, s, code);
        if (x * y == y * x && y.det() != 0) ++count;
    }
    return count;
}

VariableAssignment assignment_all_ones() {
    return {"all-ones", [](const Poly&, const Partition&) { return Rat(1); }};
}

VariableAssignment assignment_constant_zero() {
    return {"zero", [](const Poly&, const Partition&) { return Rat(0); }};
}

VariableAssignment assignment_unipotent(const FieldPtr& f) {
    const Poly target(f, {f->neg(1), 1});
    return {"unipotent",
            [target](const Poly& h, const Partition&) { return Rat(h == target ? 1 : 0); }};
}

VariableAssignment assignment_primary_cyclic(std::vector<Poly> forced, std::vector<Poly> orbit) {
    auto in = [](const std::vector<Poly>& v, const Poly& h) {
        return std::find(v.begin(), v.end(), h) != v.end();
    };
    return {"primary-cyclic",
            [forced = std::move(forced), orbit = std::move(orbit), in](const Poly& h,
                                                                       const Partition& lambda) {
                if (in(forced, h)) return Rat(lambda.single_part() ? 1 : 0);
                if (in(orbit, h)) return Rat(0);
                return Rat(1);
            }};
}

namespace {

void check_forced(const FieldPtr& f, const std::vector<Poly>& forced) {
    for (const auto& h : forced) {
        if (h.field() != f) throw ValidationError("forced polynomial over the wrong field");
        if (!h.is_monic() || !is_irreducible(h))
            throw ValidationError("forced polynomials must be monic irreducibles");
    }
}

}  // namespace

Rat icycle_lhs(std::uint32_t n, const FieldPtr& f, const std::vector<Poly>& forced,
               const VariableAssignment& x, std::uint64_t guard) {
    check_forced(f, forced);
    const std::uint64_t total = u64_pow_checked(f->order(), n * n, "matrix algebra scan");
    if (total > guard)
        throw GuardError("enumeration of " + std::to_string(total) + " matrices exceeds the guard");
    Rat sum = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        const Mat m = Mat::from_code(f, n, code);
        const auto types = matrix_type(m);
        Rat prod = 1;
        for (const auto& t : types) {
            prod *= x.value(t.h, t.lambda);
            if (prod == 0) break;
        }
        if (prod != 0) {
            for (const auto& h : forced) {
                const auto it = std::find_if(types.begin(), types.end(),
                                             [&](const MatrixType& t) { return t.h == h; });
                if (it == types.end()) prod *= x.value(h, Partition{});
                if (prod == 0) break;
            }
        }
        sum += prod;
    }
    return sum / Rat(gl_order(Int(static_cast<unsigned long>(f->order())), n));
}

Series icycle_rhs(std::uint32_t order, const FieldPtr& f, const std::vector<Poly>& forced,
                  const VariableAssignment& x) {
    check_forced(f, forced);
    const Int q(static_cast<unsigned long>(f->order()));
    Series result = Series::one(order);
    auto factor_for = [&](const Poly& h, bool is_forced) {
        Series factor = Series::zeros(order);
        factor.mutable_coeff(0) = is_forced ? x.value(h, Partition{}) : Rat(1);
        const auto d = std::uint32_t(h.deg());
        for (std::uint32_t m = 1; m * d <= order; ++m) {
            Rat acc = 0;
            for (const auto& lambda : partitions_of(m))
                acc += x.value(h, lambda) / Rat(centralizer_order(lambda, d, q));
            factor.mutable_coeff(m * d) = acc;
        }
        return factor;
    };
    for (std::uint32_t d = 1; d <= order; ++d)
        for (const auto& h : enum_irreducibles(f, d)) {
            const bool is_forced = std::find(forced.begin(), forced.end(), h) != forced.end();
            result = result * factor_for(h, is_forced);
        }
    // Forced polynomials of degree beyond the truncation order still
    // contribute their constant factor x_{h,()}.
    for (const auto& h : forced)
        if (std::uint32_t(h.deg()) > order) result = result.scaled(x.value(h, Partition{}));
    return result;
}

Series g_series_partition_sum(std::uint32_t s, const Int& big_q, std::uint32_t order) {
    Series g = Series::one(order);
    for (std::uint32_t m = 1; m <= order; ++m) {
        Rat acc = 0;
        for (const auto& lambda : partitions_of(m))
            acc += 1 / Rat(centralizer_order(lambda, s, big_q));
        g.mutable_coeff(m) = acc;
    }
    return g;
}

}  // namespace pcc
