#include "matclose/morphism.hpp"

#include "matclose/sampling.hpp"

namespace matclose {

namespace morphisms {

RingMorphism identity(const Ring& r) {
  return {r, r, [](const Value& a) { return a; }, "id_" + r.name()};
}

RingMorphism reduction(const Ring& source, const Ring& target) {
  const std::int64_t m = source.modulus();
  const std::int64_t d = target.modulus();
  if (m % d != 0) {
    throw DomainError("reduction Z/" + std::to_string(m) + " -> Z/" + std::to_string(d) +
                      " needs d | m");
  }
  return {source, target, [d](const Value& a) { return Value(a.scalar % d); },
          source.name() + "->" + target.name()};
}

RingMorphism diagonal(const Ring& r) {
  return {r, Ring::product(r, r),
          [](const Value& a) { return Value(std::vector<Value>{a, a}); }, "diag_" + r.name()};
}

RingMorphism pairing(const RingMorphism& f, const RingMorphism& g) {
  if (f.source != g.source) throw RingMismatch("pairing needs a common source");
  return {f.source, Ring::product(f.target, g.target),
          [f, g](const Value& a) { return Value(std::vector<Value>{f(a), g(a)}); },
          "<" + f.name + "," + g.name + ">"};
}

RingMorphism product_map(const RingMorphism& f, const RingMorphism& g) {
  return {Ring::product(f.source, g.source), Ring::product(f.target, g.target),
          [f, g](const Value& a) { return Value(std::vector<Value>{f(a.parts[0]), g(a.parts[1])}); },
          f.name + "x" + g.name};
}

RingMorphism constant_polynomial(const Ring& r) {
  const Ring target = Ring::polynomial(r);
  return {r, target,
          [r](const Value& a) {
            Value v;
            if (!r.is_zero(a)) {
              v.exps = {0};
              v.parts = {a};
            }
            return v;
          },
          "const_" + r.name()};
}

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
  if (f.target != g.source) {
    throw RingMismatch("cannot compose " + g.name + " after " + f.name);
  }
  return {f.source, g.target, [f, g](const Value& a) { return g(f(a)); }, g.name + "." + f.name};
}

}  // namespace morphisms

Matrix mat_map(const RingMorphism& f, const Matrix& a) {
  if (a.ring() != f.source) {
    throw RingMismatch("mat_map: matrix over " + a.ring().name() + ", morphism from " +
                       f.source.name());
  }
  std::vector<Value> out;
  out.reserve(a.entries().size());
  for (const auto& v : a.entries()) out.push_back(f(v));
  return Matrix(f.target, a.rows(), a.cols(), std::move(out));
}

RingMorphism matrix_functor(const RingMorphism& f, std::size_t k) {
  const Ring src = Ring::matrix(f.source, k);
  const Ring dst = Ring::matrix(f.target, k);
  return {src, dst,
          [f, src](const Value& a) { return mat_map(f, Matrix::from_value(src, a)).to_value(); },
          "M" + std::to_string(k) + "(" + f.name + ")"};
}

std::optional<std::string> check_morphism(const RingMorphism& f, Rng& rng, std::size_t samples) {
  const Ring& s = f.source;
  const Ring& t = f.target;
  if (f(s.one()) != t.one()) return f.name + ": f(1) != 1";
  auto check_pair = [&](const Value& a, const Value& b) -> std::optional<std::string> {
    if (f(s.add(a, b)) != t.add(f(a), f(b))) {
      return f.name + ": not additive at (" + s.format(a) + ", " + s.format(b) + ")";
    }
    if (f(s.mul(a, b)) != t.mul(f(a), f(b))) {
      return f.name + ": not multiplicative at (" + s.format(a) + ", " + s.format(b) + ")";
    }
    return std::nullopt;
  };
  bool exhaustive = false;
  try {
    exhaustive = s.enumerable() && s.order() <= 64;
  } catch (const BoundExceeded&) {
  }
  if (exhaustive) {
    const auto all = s.elements();
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (auto err = check_pair(a, b)) return err;
      }
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    if (auto err = check_pair(random_value(s, rng), random_value(s, rng))) return err;
  }
  return std::nullopt;
}

}  // namespace matclose
