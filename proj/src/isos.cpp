#include "matclose/isos.hpp"

#include <algorithm>
#include <map>

#include "matclose/sampling.hpp"

namespace matclose {

namespace {

bool symbolic(RingKind k) {
  return k == RingKind::Polynomial || k == RingKind::Laurent || k == RingKind::CyclicGroup;
}

// (exponent, coefficient) pairs with nonzero coefficients.
std::vector<std::pair<std::int64_t, Value>> terms_of(const Ring& ring, const Value& v) {
  std::vector<std::pair<std::int64_t, Value>> out;
  if (ring.kind() == RingKind::CyclicGroup) {
    for (std::size_t i = 0; i < v.parts.size(); ++i) {
      if (!ring.inner().is_zero(v.parts[i])) out.emplace_back(static_cast<std::int64_t>(i), v.parts[i]);
    }
  } else {
    for (std::size_t i = 0; i < v.parts.size(); ++i) out.emplace_back(v.exps[i], v.parts[i]);
  }
  return out;
}

// c X^e in a symbolic ring.
Value monomial(const Ring& ring, const Value& c, std::int64_t e) {
  if (ring.inner().is_zero(c)) return ring.zero();
  Value v;
  if (ring.kind() == RingKind::CyclicGroup) {
    const auto m = static_cast<std::int64_t>(ring.size());
    v.parts.assign(ring.size(), ring.inner().zero());
    v.parts[static_cast<std::size_t>(((e % m) + m) % m)] = c;
  } else {
    v.parts = {c};
    v.exps = {e};
  }
  return v;
}

Ring same_symbol_over(const Ring& shape, const Ring& coeffs) {
  switch (shape.kind()) {
    case RingKind::Polynomial:
      return Ring::polynomial(coeffs);
    case RingKind::Laurent:
      return Ring::laurent(coeffs);
    case RingKind::CyclicGroup:
      return Ring::cyclic_group(coeffs, shape.size());
    default:
      throw DomainError(shape.name() + " is not a polynomial, Laurent or group ring");
  }
}

void require_symbolic_closure(const Ring& source) {
  if (!symbolic(source.kind()) || source.inner().kind() != RingKind::Closure) {
    throw DomainError(source.name() + " is not MC_n(R)[X]");
  }
}

void note(std::vector<std::string>& failures, std::string what) {
  if (failures.size() < 8) failures.push_back(std::move(what));
}

}  // namespace

std::pair<ClosureElement, ClosureElement> product_iso_forward(const ClosureElement& x) {
  const Ring& base = x.base();
  if (base.kind() != RingKind::Product) throw DomainError(x.ring().name() + " is not MC_n(R x S)");
  const std::size_t side = x.body().rows();
  std::vector<Value> left;
  std::vector<Value> right;
  for (const auto& e : x.body().entries()) {
    left.push_back(e.parts[0]);
    right.push_back(e.parts[1]);
  }
  return {ClosureElement::inject(base.left(), x.n(), x.level(),
                                 Matrix(base.left(), side, side, std::move(left))),
          ClosureElement::inject(base.right(), x.n(), x.level(),
                                 Matrix(base.right(), side, side, std::move(right)))};
}

ClosureElement product_iso_backward(const ClosureElement& a, const ClosureElement& b) {
  if (a.n() != b.n()) {
    throw RingMismatch("product_iso_backward: n = " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  const Ring product = Ring::product(a.base(), b.base());
  const std::size_t level = std::max(a.level(), b.level());
  const Matrix la = a.lift(level);
  const Matrix lb = b.lift(level);
  std::vector<Value> zipped;
  for (std::size_t i = 0; i < la.entries().size(); ++i) {
    zipped.push_back(Value(std::vector<Value>{la.entries()[i], lb.entries()[i]}));
  }
  return ClosureElement::inject(product, a.n(), level, Matrix(product, la.rows(), la.cols(), std::move(zipped)));
}

Ring symbol_iso_target(const Ring& source) {
  require_symbolic_closure(source);
  const Ring& mc = source.inner();
  return Ring::closure(same_symbol_over(source, mc.inner()), mc.size());
}

ClosureElement symbol_iso(const Ring& source, const Value& p) {
  const Ring target = symbol_iso_target(source);
  const Ring& mc = source.inner();
  const Ring& sym = target.inner();
  const auto terms = terms_of(source, p);
  std::size_t level = 0;
  for (const auto& [e, c] : terms) level = std::max(level, ClosureElement::from_value(mc, c).level());
  const std::size_t side = level_size(mc.size(), level);
  std::vector<Value> entries(side * side, sym.zero());
  for (const auto& [e, c] : terms) {
    const Matrix lifted = ClosureElement::from_value(mc, c).lift(level);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i] = sym.add(entries[i], monomial(sym, lifted.entries()[i], e));
    }
  }
  return ClosureElement::inject(target, level, Matrix(sym, side, side, std::move(entries)));
}

Value symbol_iso_inverse(const ClosureElement& y, const Ring& source) {
  if (y.ring() != symbol_iso_target(source)) {
    throw RingMismatch("symbol_iso_inverse: " + y.ring().name() + " is not the target of " + source.name());
  }
  const Ring& mc = source.inner();
  const Ring& base = mc.inner();
  const std::size_t cells = y.body().entries().size();
  const std::size_t side = y.body().rows();
  std::map<std::int64_t, std::vector<Value>> split;
  for (std::size_t i = 0; i < cells; ++i) {
    for (const auto& [e, c] : terms_of(y.base(), y.body().entries()[i])) {
      auto [it, inserted] = split.try_emplace(e, cells, base.zero());
      it->second[i] = c;
    }
  }
  Value out = source.zero();
  for (auto& [e, entries] : split) {
    const ClosureElement coeff = ClosureElement::inject(mc, y.level(), Matrix(base, side, side, std::move(entries)));
    out = source.add(out, monomial(source, coeff.to_value(), e));
  }
  return out;
}

IsoWitnessReport verify_product_iso(const Ring& left, const Ring& right, std::size_t n,
                                    std::size_t max_level, std::size_t samples, std::uint64_t seed) {
  const Ring product = Ring::product(left, right);
  const Ring mp = Ring::closure(product, n);
  const Ring ml = Ring::closure(left, n);
  const Ring mr = Ring::closure(right, n);
  IsoWitnessReport report{"product", mp.name() + " ~ " + ml.name() + " x " + mr.name(), samples, {}};
  Rng rng(seed);
  auto same = [](const std::pair<ClosureElement, ClosureElement>& a,
                 const std::pair<ClosureElement, ClosureElement>& b) {
    return a.first == b.first && a.second == b.second;
  };
  const auto one = product_iso_forward(ClosureElement::one(mp));
  if (one.first != ClosureElement::one(ml) || one.second != ClosureElement::one(mr)) {
    note(report.failures, "forward(1) != (1,1)");
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const ClosureElement x = random_closure(mp, rng, max_level);
    const ClosureElement y = random_closure(mp, rng, max_level);
    const ClosureElement a = random_closure(ml, rng, max_level);
    const ClosureElement b = random_closure(mr, rng, max_level);
    const auto fx = product_iso_forward(x);
    const auto fy = product_iso_forward(y);
    if (product_iso_backward(fx.first, fx.second) != x) note(report.failures, "backward(forward(x)) != x for x=" + x.str());
    const auto back = product_iso_forward(product_iso_backward(a, b));
    if (back.first != a || back.second != b) {
      note(report.failures, "forward(backward(a,b)) != (a,b) for a=" + a.str() + " b=" + b.str());
    }
    if (!same(product_iso_forward(x + y), {fx.first + fy.first, fx.second + fy.second})) {
      note(report.failures, "additivity at x=" + x.str() + " y=" + y.str());
    }
    if (!same(product_iso_forward(x * y), {fx.first * fy.first, fx.second * fy.second})) {
      note(report.failures, "multiplicativity at x=" + x.str() + " y=" + y.str());
    }
  }
  return report;
}

IsoWitnessReport verify_symbol_iso(const Ring& source, std::size_t max_level, std::size_t samples,
                                   std::uint64_t seed, std::int64_t max_degree) {
  const Ring target = symbol_iso_target(source);
  IsoWitnessReport report{"symbol", source.name() + " ~ " + target.name(), samples, {}};
  Rng rng(seed);
  SampleShape shape;
  shape.max_degree = max_degree;
  shape.max_level = max_level;
  if (symbol_iso(source, source.one()) != ClosureElement::one(target)) note(report.failures, "forward(1) != 1");
  for (std::size_t s = 0; s < samples; ++s) {
    const Value p = random_value(source, rng, shape);
    const Value q = random_value(source, rng, shape);
    const ClosureElement y = random_closure(target, rng, max_level, shape);
    const ClosureElement fp = symbol_iso(source, p);
    const ClosureElement fq = symbol_iso(source, q);
    if (symbol_iso_inverse(fp, source) != p) note(report.failures, "backward(forward(p)) != p for p=" + source.format(p));
    if (symbol_iso(source, symbol_iso_inverse(y, source)) != y) {
      note(report.failures, "forward(backward(y)) != y for y=" + y.str());
    }
    if (symbol_iso(source, source.add(p, q)) != fp + fq) {
      note(report.failures, "additivity at p=" + source.format(p) + " q=" + source.format(q));
    }
    if (symbol_iso(source, source.mul(p, q)) != fp * fq) {
      note(report.failures, "multiplicativity at p=" + source.format(p) + " q=" + source.format(q));
    }
  }
  return report;
}

}  // namespace matclose
