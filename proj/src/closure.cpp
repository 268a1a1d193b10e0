#include "matclose/closure.hpp"

#include <algorithm>

#include "internal.hpp"

namespace matclose {

namespace {

constexpr std::size_t kMaxSide = std::size_t{1} << 12;

void require_same(const ClosureElement& x, const ClosureElement& y) {
  if (x.ring() != y.ring()) {
    throw RingMismatch("closure mismatch: " + x.ring().name() + " vs " + y.ring().name());
  }
}

// Index of (outer a, inner r) in the interleaved layout used by
// flatten_closure: base-n digits a_j, r_j (j = 0 least significant) become
// the digit pair (a_j, r_j) at position j of a base-n^2 number.
std::size_t interleave(std::size_t a, std::size_t r, std::size_t n, std::size_t d) {
  std::size_t out = 0;
  std::size_t weight = 1;
  for (std::size_t j = 0; j < d; ++j) {
    out += ((a % n) * n + (r % n)) * weight;
    a /= n;
    r /= n;
    weight *= n * n;
  }
  return out;
}

}  // namespace

std::size_t level_size(std::size_t n, std::size_t level) {
  std::size_t side = 1;
  for (std::size_t i = 0; i < level; ++i) {
    if (n > 1 && side > kMaxSide / n) {
      throw BoundExceeded("closure level " + std::to_string(level) + " too large for n = " +
                          std::to_string(n));
    }
    side *= n;
  }
  return side;
}

ClosureElement ClosureElement::inject(const Ring& base, std::size_t n, std::size_t level, Matrix body,
                                      bool allow_degenerate) {
  return inject(Ring::closure(base, n, allow_degenerate), level, std::move(body));
}

ClosureElement ClosureElement::inject(const Ring& closure_ring, std::size_t level, Matrix body) {
  if (closure_ring.kind() != RingKind::Closure) {
    throw DomainError(closure_ring.name() + " is not a matricial closure");
  }
  const std::size_t n = closure_ring.size();
  if (body.ring() != closure_ring.inner()) {
    throw RingMismatch("body over " + body.ring().name() + ", closure over " +
                       closure_ring.inner().name());
  }
  const std::size_t side = level_size(n, level);
  if (!body.square() || body.rows() != side) {
    throw DomainError("body of size " + std::to_string(body.rows()) + "x" +
                      std::to_string(body.cols()) + " is not n^" + std::to_string(level) +
                      " with n = " + std::to_string(n));
  }
  while (level > 0) {
    auto block = body.strip_kron_identity(n);
    if (!block) break;
    body = std::move(*block);
    --level;
  }
  return ClosureElement(closure_ring, level, std::move(body));
}

ClosureElement ClosureElement::scalar(const Ring& closure_ring, const Value& a) {
  return inject(closure_ring, 0, Matrix::scalar(closure_ring.inner(), 1, a));
}

ClosureElement ClosureElement::zero(const Ring& closure_ring) {
  return scalar(closure_ring, closure_ring.inner().zero());
}

ClosureElement ClosureElement::one(const Ring& closure_ring) {
  return scalar(closure_ring, closure_ring.inner().one());
}

ClosureElement ClosureElement::from_value(const Ring& closure_ring, const Value& v) {
  const auto level = static_cast<std::size_t>(v.scalar);
  const std::size_t side = level_size(closure_ring.size(), level);
  return ClosureElement(closure_ring, level, Matrix(closure_ring.inner(), side, side, v.parts));
}

ClosureElement ClosureElement::parse(const Ring& closure_ring, std::string_view text) {
  return from_value(closure_ring, closure_ring.parse(text));
}

Matrix ClosureElement::lift(std::size_t m) const {
  if (m < level_) {
    throw DomainError("cannot lift level-" + std::to_string(level_) + " element to level " +
                      std::to_string(m));
  }
  if (m == level_) return body_;
  return body_.kron_identity(level_size(n(), m - level_));
}

Matrix ClosureElement::lift_stepwise(std::size_t m) const {
  if (m < level_) {
    throw DomainError("cannot lift level-" + std::to_string(level_) + " element to level " +
                      std::to_string(m));
  }
  Matrix out = body_;
  for (std::size_t k = level_; k < m; ++k) out = out.kron_identity(n());
  return out;
}

Value ClosureElement::to_value() const {
  Value v(static_cast<std::int64_t>(level_));
  v.parts = body_.entries();
  return v;
}

std::string ClosureElement::str() const {
  if (level_ == 0) return base().format(body_.at(0, 0));
  return "@" + std::to_string(level_) + " " + body_.str();
}

bool operator==(const ClosureElement& a, const ClosureElement& b) {
  return a.level_ == b.level_ && a.ring_ == b.ring_ && a.body_.entries() == b.body_.entries();
}

bool operator<(const ClosureElement& a, const ClosureElement& b) {
  if (a.level_ != b.level_) return a.level_ < b.level_;
  const auto& x = a.body_.entries();
  const auto& y = b.body_.entries();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

ClosureElement combine_at_level(const ClosureElement& x, const ClosureElement& y, std::size_t level,
                                bool multiply) {
  require_same(x, y);
  Matrix a = x.lift(level);
  Matrix b = y.lift(level);
  return ClosureElement::inject(x.ring(), level, multiply ? a * b : a + b);
}

ClosureElement operator+(const ClosureElement& x, const ClosureElement& y) {
  return combine_at_level(x, y, std::max(x.level(), y.level()), false);
}

ClosureElement operator*(const ClosureElement& x, const ClosureElement& y) {
  return combine_at_level(x, y, std::max(x.level(), y.level()), true);
}

ClosureElement operator-(const ClosureElement& x) {
  return ClosureElement::inject(x.ring(), x.level(), -x.body());
}

ClosureElement operator-(const ClosureElement& x, const ClosureElement& y) { return x + (-y); }

ClosureElement cmap(const RingMorphism& f, const ClosureElement& x) {
  if (x.base() != f.source) {
    throw RingMismatch("cmap: element over " + x.base().name() + ", morphism from " +
                       f.source.name());
  }
  return ClosureElement::inject(Ring::closure(f.target, x.n(), x.n() == 1), x.level(),
                                mat_map(f, x.body()));
}

RingMorphism closure_functor(const RingMorphism& f, std::size_t n) {
  const Ring src = Ring::closure(f.source, n, n == 1);
  const Ring dst = Ring::closure(f.target, n, n == 1);
  return {src, dst,
          [f, src](const Value& a) { return cmap(f, ClosureElement::from_value(src, a)).to_value(); },
          "MC" + std::to_string(n) + "(" + f.name + ")"};
}

std::optional<ClosureElement> unit_inverse(const ClosureElement& x) {
  auto inv = inverse(x.body());
  if (!inv) return std::nullopt;
  return ClosureElement::inject(x.ring(), x.level(), std::move(*inv));
}

bool is_central(const ClosureElement& x) {
  const Ring& base = x.base();
  const std::size_t side = x.body().rows();
  const Matrix& body = x.body();
  for (std::size_t i = 1; i <= side; ++i) {
    for (std::size_t j = 1; j <= side; ++j) {
      Matrix e = matrix_unit(base, side, i, j);
      if (body * e != e * body) return false;
    }
  }
  for (const auto& a : base.elements()) {
    Matrix s = Matrix::scalar(base, side, a);
    if (body * s != s * body) return false;
  }
  return true;
}

Value center_section(const ClosureElement& x) {
  if (!is_central(x)) throw DomainError("not central: " + x.str());
  // A central body commutes with all matrix units, so it is scalar and
  // normalization has already brought it to level 0.
  return x.body().at(0, 0);
}

ClosureElement flatten_closure(const ClosureElement& x) {
  const Ring& inner = x.base();
  if (inner.kind() != RingKind::Closure) {
    throw DomainError("flatten_closure needs MC_n(MC_n(R)), got MC over " + inner.name());
  }
  const std::size_t n = x.n();
  if (inner.size() != n) {
    throw DomainError("flatten_closure: mixed n (outer " + std::to_string(n) + ", inner " +
                      std::to_string(inner.size()) + ")");
  }
  std::size_t d = x.level();
  for (const auto& e : x.body().entries()) d = std::max(d, static_cast<std::size_t>(e.scalar));
  const Matrix outer = x.lift(d);
  const std::size_t side = level_size(n, d);
  Matrix flat(inner.inner(), side * side, side * side);
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      const Matrix block = ClosureElement::from_value(inner, outer.at(a, b)).lift(d);
      for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t s = 0; s < side; ++s) {
          flat.set(interleave(a, r, n, d), interleave(b, s, n, d), block.at(r, s));
        }
      }
    }
  }
  return ClosureElement::inject(inner, 2 * d, std::move(flat));
}

ClosureElement unflatten_closure(const ClosureElement& y, const Ring& outer) {
  if (outer.kind() != RingKind::Closure || outer.inner() != y.ring() || outer.size() != y.n()) {
    throw DomainError("unflatten_closure: " + outer.name() + " is not MC_n(" + y.ring().name() + ")");
  }
  const std::size_t n = y.n();
  const std::size_t d = (y.level() + 1) / 2;
  const Matrix flat = y.lift(2 * d);
  const std::size_t side = level_size(n, d);
  const Ring& inner = y.ring();
  Matrix body(inner, side, side);
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      Matrix block(y.base(), side, side);
      for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t s = 0; s < side; ++s) {
          block.set(r, s, flat.at(interleave(a, r, n, d), interleave(b, s, n, d)));
        }
      }
      body.set(a, b, ClosureElement::inject(inner, d, std::move(block)).to_value());
    }
  }
  return ClosureElement::inject(outer, d, std::move(body));
}

}  // namespace matclose
