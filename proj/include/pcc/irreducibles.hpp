#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcc/poly.hpp"

namespace pcc {

// Optional on-disk cache for enumerated irreducibles, keyed by (field, degree).
// Purely an optimization: corrupt or stale files are re-derived and rewritten.
// An empty path disables the cache.
void set_irreducible_cache_dir(const std::string& dir);
std::string irreducible_cache_dir();
// Drops the in-memory memo (the disk cache stays), so cache-on/off comparisons
// start cold.
void clear_irreducible_memory_cache();

// Number of monic irreducible polynomials of degree d over GF(q):
// (1/d) * sum_{e | d} mu(e) q^(d/e).  q need not fit in a machine word.
Int count_irreducibles(const Int& q, std::uint32_t d);
Int count_irreducibles(std::uint64_t q, std::uint32_t d);

// Deterministic irreducibility tests for monic nonconstant input.  The
// exhaustive route (degree <= 4) scans for roots and low-degree factors; the
// Rabin route uses gcd(f, t^(q^k) - t) checkpoints and works for any degree.
// is_irreducible dispatches: exhaustive when degree <= 4 and the scans fit the
// guard, Rabin otherwise.
bool is_irreducible(const Poly& f);
bool is_irreducible_exhaustive(const Poly& f);
bool is_irreducible_rabin(const Poly& f);

// All monic irreducibles of degree d over F in canonical order, generated by a
// product sieve over q^d monic polynomials.  Guard: q^d <= max_size.
std::vector<Poly> enum_irreducibles(const FieldPtr& F, std::uint32_t d,
                                    std::uint64_t max_size = std::uint64_t(1) << 24);

// g with every coefficient raised to base_order^i (the i-th Frobenius power of
// the extension's Galois group).
Poly conjugate_poly(const Poly& g, std::uint32_t i);

// Factorization over K of a monic irreducible f over F = K->base():
// gcd(b, d) conjugate monic irreducibles of degree d / gcd(b, d), in canonical
// order, whose product is f lifted to K.
std::vector<Poly> split_over_extension(const Poly& f, const FieldPtr& K);

}  // namespace pcc
