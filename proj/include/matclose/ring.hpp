#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matclose/errors.hpp"
#include "matclose/value.hpp"

namespace matclose {

enum class RingKind { Modular, Product, Matrix, CyclicGroup, Polynomial, Laurent, Closure };

namespace detail {
struct RingNode;
}

/// Handle to an immutable unital ring. Copies share the same node.
///
/// The zoo is closed under the constructors below; `closure` is the matricial
/// closure MC_n(inner), which is what lets closure elements serve as entries
/// and coefficients of other rings (MC_n(MC_n(R)), MC_n(R)[x], ...).
///
/// Every arithmetic method takes and returns canonical payloads. The payloads
/// are not checked against the ring on the hot path; `RingElement` is the
/// checked front end.
class Ring {
 public:
  static Ring modular(std::int64_t m);
  /// Same ring as `modular(p)`, spelled GF(p). Throws DomainError unless p is prime.
  static Ring prime_field(std::int64_t p);
  static Ring product(Ring left, Ring right);
  static Ring matrix(Ring inner, std::size_t k);
  static Ring cyclic_group(Ring inner, std::size_t m);
  static Ring polynomial(Ring inner);
  /// Group ring over the infinite cyclic group, i.e. Laurent polynomials.
  static Ring laurent(Ring inner);
  /// MC_n(inner). n >= 2 unless `allow_degenerate` is set.
  static Ring closure(Ring inner, std::size_t n, bool allow_degenerate = false);

  RingKind kind() const;
  /// Display name, e.g. "GF(2) x Z/3", "M2(GF(2))", "GF(2)[C2]".
  const std::string& name() const;
  std::int64_t modulus() const;
  bool is_prime_field() const;
  /// Left factor of a product, or the coefficient/entry ring of any other
  /// non-modular kind.
  const Ring& inner() const;
  const Ring& left() const { return inner(); }
  const Ring& right() const;
  /// Matrix size k, cyclic order m or closure n.
  std::size_t size() const;

  bool enumerable() const;
  /// Number of elements; throws NotEnumerable for infinite rings.
  std::uint64_t order() const;
  bool is_zero_ring() const;

  Value zero() const;
  Value one() const;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  /// k * 1.
  Value from_int(std::int64_t k) const;
  bool is_zero(const Value& a) const { return a == zero(); }

  /// Mixed-radix indexing of an enumerable ring: element_at(index_of(a)) == a.
  Value element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Value& a) const;
  std::vector<Value> elements() const;

  /// Shape check of a payload against this ring, including canonicity.
  bool contains(const Value& a) const;

  std::string format(const Value& a) const;
  /// Parses an element literal; syntax is listed in README.md.
  Value parse(std::string_view text) const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::RingNode> node_;
};

/// Checked element: carries its ring, throws RingMismatch on mixed operands.
struct RingElement {
  Ring ring;
  Value value;

  static RingElement zero(const Ring& r) { return {r, r.zero()}; }
  static RingElement one(const Ring& r) { return {r, r.one()}; }
  static RingElement parse(const Ring& r, std::string_view text) { return {r, r.parse(text)}; }

  std::string str() const { return ring.format(value); }
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);
bool operator==(const RingElement& a, const RingElement& b);

/// Two-sided inverse of `a` if it is a unit. Fast paths for modular rings
/// (extended gcd), products, matrices and closure elements; brute-force
/// search over enumerable rings otherwise. In a finite ring a one-sided
/// inverse is automatically two-sided, so the search only solves a*b = 1.
/// Throws NotDecidable for rings with neither.
std::optional<Value> unit_inverse(const Ring& ring, const Value& a);
inline bool is_unit(const Ring& ring, const Value& a) { return unit_inverse(ring, a).has_value(); }

/// Cen(R) by brute force.
std::vector<Value> center(const Ring& ring);

bool is_prime_number(std::int64_t p);

}  // namespace matclose
