#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "matclose/matrix.hpp"
#include "matclose/morphism.hpp"
#include "matclose/ring.hpp"

namespace matclose {

/// n^k, throwing BoundExceeded past 2^20.
std::size_t level_size(std::size_t n, std::size_t level);

/// One element of MC_n(R): the class of a level-k matrix under the
/// transitions A -> I_n (x) A.
///
/// Always stored in canonical form: the level is minimal, i.e. a body at
/// level k > 0 is never of the form I_n (x) B. Since the transitions are
/// injective every class has exactly one such representative, so equality
/// is structural.
class ClosureElement {
 public:
  /// i^n_k(body), normalized.
  static ClosureElement inject(const Ring& base, std::size_t n, std::size_t level, Matrix body,
                               bool allow_degenerate = false);
  /// Same, with the closure ring MC_n(base) already built.
  static ClosureElement inject(const Ring& closure_ring, std::size_t level, Matrix body);
  static ClosureElement scalar(const Ring& closure_ring, const Value& a);
  static ClosureElement zero(const Ring& closure_ring);
  static ClosureElement one(const Ring& closure_ring);
  static ClosureElement from_value(const Ring& closure_ring, const Value& v);
  /// `@k [[...]]` or a bare base-ring literal for level 0.
  static ClosureElement parse(const Ring& closure_ring, std::string_view text);

  /// MC_n(R) as a ring handle.
  const Ring& ring() const { return ring_; }
  const Ring& base() const { return ring_.inner(); }
  std::size_t n() const { return ring_.size(); }
  std::size_t level() const { return level_; }
  const Matrix& body() const { return body_; }

  /// Representative at level m >= level(): I_{n^(m-k)} (x) body.
  Matrix lift(std::size_t m) const;
  /// The same representative built one transition at a time.
  Matrix lift_stepwise(std::size_t m) const;

  Value to_value() const;
  std::string str() const;

  friend bool operator==(const ClosureElement& a, const ClosureElement& b);
  friend bool operator!=(const ClosureElement& a, const ClosureElement& b) { return !(a == b); }
  friend bool operator<(const ClosureElement& a, const ClosureElement& b);

 private:
  ClosureElement(Ring ring, std::size_t level, Matrix body)
      : ring_(std::move(ring)), level_(level), body_(std::move(body)) {}

  Ring ring_;
  std::size_t level_;
  Matrix body_;
};

ClosureElement operator+(const ClosureElement& x, const ClosureElement& y);
ClosureElement operator-(const ClosureElement& x, const ClosureElement& y);
ClosureElement operator-(const ClosureElement& x);
ClosureElement operator*(const ClosureElement& x, const ClosureElement& y);

/// Applies `op` to representatives at the common level `level` (which must be
/// at least both levels) and normalizes. Used to check that the result does
/// not depend on the chosen level.
ClosureElement combine_at_level(const ClosureElement& x, const ClosureElement& y,
                                std::size_t level, bool multiply);

/// MC_n(f).
ClosureElement cmap(const RingMorphism& f, const ClosureElement& x);
/// MC_n(f) as a morphism MC_n(source) -> MC_n(target).
RingMorphism closure_functor(const RingMorphism& f, std::size_t n);

/// The inverse of x, computed at x's own level: x is a unit of MC_n(R) iff its
/// body is invertible in M_{n^k}(R).
std::optional<ClosureElement> unit_inverse(const ClosureElement& x);

/// Whether x commutes with every matrix unit and every scalar matrix a*I at
/// its level (a ranging over the whole base ring). These generate
/// M_{n^k}(R), so this decides centrality in MC_n(R).
bool is_central(const ClosureElement& x);
/// a in Cen(R) with inject(a) == x. Throws DomainError("not central").
Value center_section(const ClosureElement& x);

/// MC_n(MC_n(R)) -> MC_n(R).
///
/// x has outer level k and entries of inner levels <= m. Both are lifted to
/// d = max(k, m) and the n^d x n^d matrix of n^d x n^d blocks is laid out as
/// one n^(2d) matrix whose row index interleaves the base-n digits of the
/// outer and inner indices, newest digits first:
///   (a_d, r_d, a_(d-1), r_(d-1), ..., a_1, r_1).
/// Raising both levels by one then prepends an identity factor on the two
/// leading digits, which is exactly the transition of MC_n(R); that is what
/// makes the map well defined on classes and multiplicative. The plain block
/// layout of `flatten` is not compatible with raising the inner level alone.
ClosureElement flatten_closure(const ClosureElement& x);
/// Two-sided inverse of `flatten_closure`; `outer` is MC_n(MC_n(R)).
ClosureElement unflatten_closure(const ClosureElement& y, const Ring& outer);

}  // namespace matclose
