#include "matclose/sampling.hpp"

#include <set>

#include "internal.hpp"

namespace matclose {

Value random_value(const Ring& ring, Rng& rng, const SampleShape& shape) {
  if (ring.enumerable()) {
    try {
      return ring.element_at(rng.below(ring.order()));
    } catch (const BoundExceeded&) {
      // Order overflows 2^62: fall through and build entry by entry.
    }
  }
  switch (ring.kind()) {
    case RingKind::Product:
      return Value(std::vector<Value>{random_value(ring.left(), rng, shape),
                                      random_value(ring.right(), rng, shape)});
    case RingKind::Matrix:
    case RingKind::CyclicGroup: {
      const std::size_t count =
          ring.kind() == RingKind::Matrix ? ring.size() * ring.size() : ring.size();
      std::vector<Value> parts(count);
      for (auto& p : parts) p = random_value(ring.inner(), rng, shape);
      return Value(std::move(parts));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const std::int64_t lo = ring.kind() == RingKind::Laurent ? -shape.max_degree : 0;
      Value out = ring.zero();
      for (std::int64_t e = lo; e <= shape.max_degree; ++e) {
        if (!rng.coin()) continue;
        Value term;
        term.exps = {e};
        term.parts = {random_value(ring.inner(), rng, shape)};
        if (ring.inner().is_zero(term.parts[0])) continue;
        out = ring.add(out, term);
      }
      return out;
    }
    case RingKind::Closure:
      return random_closure(ring, rng, shape.max_level, shape).to_value();
    case RingKind::Modular:
      break;
  }
  return ring.zero();
}

ClosureElement random_closure(const Ring& closure_ring, Rng& rng, std::size_t max_level,
                              const SampleShape& shape) {
  const std::size_t level = rng.below(max_level + 1);
  const std::size_t side = level_size(closure_ring.size(), level);
  std::vector<Value> entries(side * side);
  for (auto& e : entries) e = random_value(closure_ring.inner(), rng, shape);
  return ClosureElement::inject(closure_ring, level,
                                Matrix(closure_ring.inner(), side, side, std::move(entries)));
}

std::vector<ClosureElement> closure_classes_up_to(const Ring& closure_ring, std::size_t max_level,
                                                  std::uint64_t budget) {
  const Ring& base = closure_ring.inner();
  std::set<ClosureElement> seen;
  std::uint64_t visited = 0;
  for (std::size_t level = 0; level <= max_level; ++level) {
    const std::size_t side = level_size(closure_ring.size(), level);
    const Ring body_ring = Ring::matrix(base, side);
    const std::uint64_t count = body_ring.order();
    visited += count;
    if (visited > budget) {
      throw BoundExceeded("enumerating closure classes of level <= " + std::to_string(max_level) +
                          " over " + base.name() + " exceeds budget");
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      seen.insert(ClosureElement::inject(closure_ring, level,
                                         Matrix::from_value(body_ring, body_ring.element_at(i))));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace matclose
