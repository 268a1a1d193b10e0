#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "matclose/matrix.hpp"
#include "matclose/ring.hpp"

namespace matclose {

class Rng;

/// Unital ring morphism given by a total element map.
struct RingMorphism {
  Ring source;
  Ring target;
  std::function<Value(const Value&)> apply;
  std::string name;

  Value operator()(const Value& a) const { return apply(a); }
};

namespace morphisms {

RingMorphism identity(const Ring& r);
/// Z/m -> Z/d for d | m.
RingMorphism reduction(const Ring& source, const Ring& target);
/// a -> (a, a) into R x R.
RingMorphism diagonal(const Ring& r);
/// a -> (a, b) given morphisms into the two factors.
RingMorphism pairing(const RingMorphism& f, const RingMorphism& g);
/// (a, b) -> (f a, g b).
RingMorphism product_map(const RingMorphism& f, const RingMorphism& g);
/// Constants R -> R[x].
RingMorphism constant_polynomial(const Ring& r);
/// g after f.
RingMorphism compose(const RingMorphism& g, const RingMorphism& f);

}  // namespace morphisms

/// M_k(f): entry-wise application.
Matrix mat_map(const RingMorphism& f, const Matrix& a);

/// M_k(f) packaged as a morphism M_k(source) -> M_k(target).
RingMorphism matrix_functor(const RingMorphism& f, std::size_t k);

/// First failure of the morphism laws, if any: f(1) = 1, additivity and
/// multiplicativity. Exhaustive over pairs when the source has order <= 64,
/// otherwise `samples` random pairs.
std::optional<std::string> check_morphism(const RingMorphism& f, Rng& rng,
                                          std::size_t samples = 500);

}  // namespace matclose
