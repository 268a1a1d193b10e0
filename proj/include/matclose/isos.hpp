#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matclose/closure.hpp"
#include "matclose/ring.hpp"

namespace matclose {

/// MC_n(R x S) -> MC_n(R) x MC_n(S): split every entry at x's level, then
/// normalize each side on its own.
std::pair<ClosureElement, ClosureElement> product_iso_forward(const ClosureElement& x);

/// Inverse of `product_iso_forward`: lift both sides to a common level and
/// zip the entries. Throws RingMismatch unless both have the same n.
ClosureElement product_iso_backward(const ClosureElement& a, const ClosureElement& b);

/// MC_n(R)[X] -> MC_n(R[X]) for X one of x (polynomials), C_m (cyclic group
/// ring) or x, x^-1 (Laurent). `source` is the ring MC_n(R)[X] and `p` one
/// of its elements: coefficients are lifted to a common level m and the
/// n^m matrix whose (i, j) entry is sum_d (c_d)_ij X^d is normalized.
ClosureElement symbol_iso(const Ring& source, const Value& p);

/// Inverse of `symbol_iso`: re-split the entries coefficient by coefficient.
Value symbol_iso_inverse(const ClosureElement& y, const Ring& source);

/// MC_n(R[X]) for `source` = MC_n(R)[X].
Ring symbol_iso_target(const Ring& source);

/// Named conveniences over `symbol_iso`.
inline ClosureElement poly_iso(const Ring& source, const Value& p) { return symbol_iso(source, p); }
inline ClosureElement group_iso(const Ring& source, const Value& g) { return symbol_iso(source, g); }

/// Outcome of a sampled iso verification.
struct IsoWitnessReport {
  std::string iso;
  std::string rings;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Round trips in both directions, additivity, multiplicativity and
/// unitality of the forward map on `samples` seeded pairs.
/// `left` x `right` is the product; closures use n and levels <= max_level.
IsoWitnessReport verify_product_iso(const Ring& left, const Ring& right, std::size_t n,
                                    std::size_t max_level, std::size_t samples, std::uint64_t seed);

/// Same for `symbol_iso` with `source` = MC_n(R)[X].
IsoWitnessReport verify_symbol_iso(const Ring& source, std::size_t max_level, std::size_t samples,
                                   std::uint64_t seed, std::int64_t max_degree = 3);

}  // namespace matclose
