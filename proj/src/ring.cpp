#include "matclose/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "internal.hpp"
#include "matclose/closure.hpp"
#include "matclose/matrix.hpp"

namespace matclose {

namespace detail {

struct RingNode {
  RingKind kind = RingKind::Modular;
  std::int64_t modulus = 0;
  bool gf = false;
  std::size_t size = 0;
  std::vector<Ring> children;
  std::string name;
  std::string key;
  bool enumerable = false;
  bool order_overflow = false;
  std::uint64_t order = 0;
  Value zero;
  Value one;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 62) / base) {
      throw BoundExceeded("ring order exceeds 2^62");
    }
    r *= base;
  }
  return r;
}

}  // namespace detail

namespace {

constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 62;

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Postfix constructors bind tighter than products, so a product operand
// needs parentheses.
std::string wrap_product(const Ring& r, const std::string& s) {
  return r.kind() == RingKind::Product ? "(" + s + ")" : s;
}

bool order_product(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  if (a != 0 && b > kOrderCap / a) return false;
  out = a * b;
  return true;
}

// Sparse coefficient table helpers for polynomial and Laurent rings.
using Terms = std::map<std::int64_t, Value>;

Terms to_terms(const Value& v) {
  Terms t;
  for (std::size_t i = 0; i < v.parts.size(); ++i) t.emplace(v.exps[i], v.parts[i]);
  return t;
}

Value from_terms(const Ring& coeff, const Terms& t) {
  Value v;
  for (const auto& [e, c] : t) {
    if (coeff.is_zero(c)) continue;
    v.exps.push_back(e);
    v.parts.push_back(c);
  }
  return v;
}

char symbol_of(RingKind k) { return k == RingKind::CyclicGroup ? 'g' : 'x'; }

}  // namespace

// ---------------------------------------------------------------------------
// Construction

namespace {

std::shared_ptr<detail::RingNode> make_node(RingKind kind) {
  auto node = std::make_shared<detail::RingNode>();
  node->kind = kind;
  return node;
}

}  // namespace

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Ring Ring::modular(std::int64_t m) {
  if (m < 1) throw DomainError("modulus must be positive, got " + std::to_string(m));
  auto node = make_node(RingKind::Modular);
  node->modulus = m;
  node->name = "Z/" + std::to_string(m);
  node->key = node->name;
  node->enumerable = true;
  node->order = static_cast<std::uint64_t>(m);
  node->zero = Value(0);
  node->one = Value(m == 1 ? 0 : 1);
  return Ring(std::move(node));
}

Ring Ring::prime_field(std::int64_t p) {
  if (!is_prime_number(p)) {
    throw DomainError("non-prime modulus for GF: " + std::to_string(p));
  }
  auto node = make_node(RingKind::Modular);
  node->modulus = p;
  node->gf = true;
  node->name = "GF(" + std::to_string(p) + ")";
  node->key = "Z/" + std::to_string(p);
  node->enumerable = true;
  node->order = static_cast<std::uint64_t>(p);
  node->zero = Value(0);
  node->one = Value(1);
  return Ring(std::move(node));
}

Ring Ring::product(Ring left, Ring right) {
  auto node = make_node(RingKind::Product);
  std::string rname = right.kind() == RingKind::Product ? "(" + right.name() + ")" : right.name();
  std::string rkey = right.kind() == RingKind::Product ? "(" + right.node_->key + ")" : right.node_->key;
  node->name = left.name() + " x " + rname;
  node->key = left.node_->key + " x " + rkey;
  node->enumerable = left.enumerable() && right.enumerable();
  if (node->enumerable) {
    if (left.node_->order_overflow || right.node_->order_overflow ||
        !order_product(left.node_->order, right.node_->order, node->order)) {
      node->order_overflow = true;
    }
  }
  node->zero = Value(std::vector<Value>{left.zero(), right.zero()});
  node->one = Value(std::vector<Value>{left.one(), right.one()});
  node->children = {std::move(left), std::move(right)};
  return Ring(std::move(node));
}

Ring Ring::matrix(Ring inner, std::size_t k) {
  if (k < 1) throw DomainError("matrix size must be positive");
  auto node = make_node(RingKind::Matrix);
  node->size = k;
  node->name = "M" + std::to_string(k) + "(" + inner.name() + ")";
  node->key = "M" + std::to_string(k) + "(" + inner.node_->key + ")";
  node->enumerable = inner.enumerable();
  if (node->enumerable) {
    try {
      if (inner.node_->order_overflow) throw BoundExceeded("");
      node->order = detail::checked_pow(inner.node_->order, k * k);
    } catch (const BoundExceeded&) {
      node->order_overflow = true;
    }
  }
  node->zero = Value(std::vector<Value>(k * k, inner.zero()));
  node->one = node->zero;
  for (std::size_t i = 0; i < k; ++i) node->one.parts[i * k + i] = inner.one();
  node->children = {std::move(inner)};
  return Ring(std::move(node));
}

Ring Ring::cyclic_group(Ring inner, std::size_t m) {
  if (m < 1) throw DomainError("cyclic group order must be positive");
  auto node = make_node(RingKind::CyclicGroup);
  node->size = m;
  node->name = wrap_product(inner, inner.name()) + "[C" + std::to_string(m) + "]";
  node->key = wrap_product(inner, inner.node_->key) + "[C" + std::to_string(m) + "]";
  node->enumerable = inner.enumerable();
  if (node->enumerable) {
    try {
      if (inner.node_->order_overflow) throw BoundExceeded("");
      node->order = detail::checked_pow(inner.node_->order, m);
    } catch (const BoundExceeded&) {
      node->order_overflow = true;
    }
  }
  node->zero = Value(std::vector<Value>(m, inner.zero()));
  node->one = node->zero;
  node->one.parts[0] = inner.one();
  node->children = {std::move(inner)};
  return Ring(std::move(node));
}

Ring Ring::polynomial(Ring inner) {
  auto node = make_node(RingKind::Polynomial);
  node->name = wrap_product(inner, inner.name()) + "[x]";
  node->key = wrap_product(inner, inner.node_->key) + "[x]";
  node->zero = Value();
  if (!inner.is_zero_ring()) {
    node->one.exps = {0};
    node->one.parts = {inner.one()};
  }
  node->children = {std::move(inner)};
  return Ring(std::move(node));
}

Ring Ring::laurent(Ring inner) {
  auto node = make_node(RingKind::Laurent);
  node->name = wrap_product(inner, inner.name()) + "[x,x^-1]";
  node->key = wrap_product(inner, inner.node_->key) + "[x,x^-1]";
  node->zero = Value();
  if (!inner.is_zero_ring()) {
    node->one.exps = {0};
    node->one.parts = {inner.one()};
  }
  node->children = {std::move(inner)};
  return Ring(std::move(node));
}

Ring Ring::closure(Ring inner, std::size_t n, bool allow_degenerate) {
  if (n < 1 || (n == 1 && !allow_degenerate)) {
    throw DomainError("closure size n must be >= 2 (n = 1 only with allow_degenerate)");
  }
  auto node = make_node(RingKind::Closure);
  node->size = n;
  node->name = "MC" + std::to_string(n) + "(" + inner.name() + ")";
  node->key = "MC" + std::to_string(n) + "(" + inner.node_->key + ")";
  node->zero = Value(0);
  node->zero.parts = {inner.zero()};
  node->one = Value(0);
  node->one.parts = {inner.one()};
  node->children = {std::move(inner)};
  return Ring(std::move(node));
}

// ---------------------------------------------------------------------------
// Accessors

RingKind Ring::kind() const { return node_->kind; }
const std::string& Ring::name() const { return node_->name; }

std::int64_t Ring::modulus() const {
  if (node_->kind != RingKind::Modular) throw DomainError(name() + " is not a modular ring");
  return node_->modulus;
}

bool Ring::is_prime_field() const {
  return node_->kind == RingKind::Modular && is_prime_number(node_->modulus);
}

const Ring& Ring::inner() const {
  if (node_->children.empty()) throw DomainError(name() + " has no inner ring");
  return node_->children.front();
}

const Ring& Ring::right() const {
  if (node_->kind != RingKind::Product) throw DomainError(name() + " is not a product");
  return node_->children[1];
}

std::size_t Ring::size() const { return node_->size; }
bool Ring::enumerable() const { return node_->enumerable; }

std::uint64_t Ring::order() const {
  if (!node_->enumerable) throw NotEnumerable("ring not enumerable: " + name());
  if (node_->order_overflow) throw BoundExceeded("order of " + name() + " exceeds 2^62");
  return node_->order;
}

bool Ring::is_zero_ring() const { return node_->zero == node_->one; }

Value Ring::zero() const { return node_->zero; }
Value Ring::one() const { return node_->one; }

bool operator==(const Ring& a, const Ring& b) {
  return a.node_ == b.node_ || a.node_->key == b.node_->key;
}

// ---------------------------------------------------------------------------
// Arithmetic

Value Ring::add(const Value& a, const Value& b) const {
  switch (node_->kind) {
    case RingKind::Modular: {
      std::int64_t s = a.scalar + b.scalar;
      if (s >= node_->modulus) s -= node_->modulus;
      return Value(s);
    }
    case RingKind::Product:
      return Value(std::vector<Value>{left().add(a.parts[0], b.parts[0]),
                                      right().add(a.parts[1], b.parts[1])});
    case RingKind::Matrix:
    case RingKind::CyclicGroup: {
      const Ring& in = inner();
      std::vector<Value> out(a.parts.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = in.add(a.parts[i], b.parts[i]);
      return Value(std::move(out));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      Terms t = to_terms(a);
      const Ring& in = inner();
      for (std::size_t i = 0; i < b.parts.size(); ++i) {
        auto [it, inserted] = t.emplace(b.exps[i], b.parts[i]);
        if (!inserted) it->second = in.add(it->second, b.parts[i]);
      }
      return from_terms(in, t);
    }
    case RingKind::Closure:
      return (ClosureElement::from_value(*this, a) + ClosureElement::from_value(*this, b))
          .to_value();
  }
  return {};
}

Value Ring::neg(const Value& a) const {
  switch (node_->kind) {
    case RingKind::Modular:
      return Value(a.scalar == 0 ? 0 : node_->modulus - a.scalar);
    case RingKind::Product:
      return Value(std::vector<Value>{left().neg(a.parts[0]), right().neg(a.parts[1])});
    case RingKind::Matrix:
    case RingKind::CyclicGroup:
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      Value out = a;
      for (auto& p : out.parts) p = inner().neg(p);
      return out;
    }
    case RingKind::Closure:
      return (-ClosureElement::from_value(*this, a)).to_value();
  }
  return {};
}

Value Ring::sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

Value Ring::mul(const Value& a, const Value& b) const {
  switch (node_->kind) {
    case RingKind::Modular: {
      __extension__ using wide = __int128;
      const wide p = static_cast<wide>(a.scalar) * b.scalar;
      return Value(static_cast<std::int64_t>(p % node_->modulus));
    }
    case RingKind::Product:
      return Value(std::vector<Value>{left().mul(a.parts[0], b.parts[0]),
                                      right().mul(a.parts[1], b.parts[1])});
    case RingKind::Matrix: {
      const Ring& in = inner();
      const std::size_t k = node_->size;
      std::vector<Value> out(k * k, in.zero());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          const Value& ail = a.parts[i * k + l];
          if (in.is_zero(ail)) continue;
          for (std::size_t j = 0; j < k; ++j) {
            out[i * k + j] = in.add(out[i * k + j], in.mul(ail, b.parts[l * k + j]));
          }
        }
      }
      return Value(std::move(out));
    }
    case RingKind::CyclicGroup: {
      const Ring& in = inner();
      const std::size_t m = node_->size;
      std::vector<Value> out(m, in.zero());
      for (std::size_t i = 0; i < m; ++i) {
        if (in.is_zero(a.parts[i])) continue;
        for (std::size_t j = 0; j < m; ++j) {
          Value& slot = out[(i + j) % m];
          slot = in.add(slot, in.mul(a.parts[i], b.parts[j]));
        }
      }
      return Value(std::move(out));
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const Ring& in = inner();
      Terms t;
      for (std::size_t i = 0; i < a.parts.size(); ++i) {
        for (std::size_t j = 0; j < b.parts.size(); ++j) {
          Value p = in.mul(a.parts[i], b.parts[j]);
          auto [it, inserted] = t.emplace(a.exps[i] + b.exps[j], p);
          if (!inserted) it->second = in.add(it->second, p);
        }
      }
      return from_terms(in, t);
    }
    case RingKind::Closure:
      return (ClosureElement::from_value(*this, a) * ClosureElement::from_value(*this, b))
          .to_value();
  }
  return {};
}

Value Ring::from_int(std::int64_t k) const {
  Value acc = zero();
  Value unit = k >= 0 ? one() : neg(one());
  std::int64_t count = k >= 0 ? k : -k;
  if (node_->kind == RingKind::Modular) return Value(mod_reduce(k, node_->modulus));
  // Double-and-add keeps this logarithmic in |k|.
  while (count > 0) {
    if (count & 1) acc = add(acc, unit);
    unit = add(unit, unit);
    count >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enumeration

Value Ring::element_at(std::uint64_t index) const {
  const std::uint64_t ord = order();
  if (index >= ord) throw DomainError("element index out of range for " + name());
  switch (node_->kind) {
    case RingKind::Modular:
      return Value(static_cast<std::int64_t>(index));
    case RingKind::Product: {
      const std::uint64_t lo = left().order();
      return Value(std::vector<Value>{left().element_at(index % lo), right().element_at(index / lo)});
    }
    case RingKind::Matrix:
    case RingKind::CyclicGroup: {
      const Ring& in = inner();
      const std::uint64_t base = in.order();
      const std::size_t count = node_->kind == RingKind::Matrix ? node_->size * node_->size : node_->size;
      std::vector<Value> parts(count);
      for (std::size_t i = 0; i < count; ++i) {
        parts[i] = in.element_at(index % base);
        index /= base;
      }
      return Value(std::move(parts));
    }
    default:
      throw NotEnumerable("ring not enumerable: " + name());
  }
}

std::uint64_t Ring::index_of(const Value& a) const {
  switch (node_->kind) {
    case RingKind::Modular:
      return static_cast<std::uint64_t>(a.scalar);
    case RingKind::Product:
      return left().index_of(a.parts[0]) + left().order() * right().index_of(a.parts[1]);
    case RingKind::Matrix:
    case RingKind::CyclicGroup: {
      const Ring& in = inner();
      const std::uint64_t base = in.order();
      std::uint64_t idx = 0;
      for (std::size_t i = a.parts.size(); i-- > 0;) idx = idx * base + in.index_of(a.parts[i]);
      return idx;
    }
    default:
      throw NotEnumerable("ring not enumerable: " + name());
  }
}

std::vector<Value> Ring::elements() const {
  const std::uint64_t ord = order();
  if (ord > (std::uint64_t{1} << 24)) {
    throw BoundExceeded("refusing to enumerate " + std::to_string(ord) + " elements of " + name());
  }
  std::vector<Value> out;
  out.reserve(ord);
  for (std::uint64_t i = 0; i < ord; ++i) out.push_back(element_at(i));
  return out;
}

bool Ring::contains(const Value& a) const {
  switch (node_->kind) {
    case RingKind::Modular:
      return a.parts.empty() && a.exps.empty() && a.scalar >= 0 && a.scalar < node_->modulus;
    case RingKind::Product:
      return a.scalar == 0 && a.exps.empty() && a.parts.size() == 2 && left().contains(a.parts[0]) &&
             right().contains(a.parts[1]);
    case RingKind::Matrix:
    case RingKind::CyclicGroup: {
      const std::size_t count =
          node_->kind == RingKind::Matrix ? node_->size * node_->size : node_->size;
      if (a.scalar != 0 || !a.exps.empty() || a.parts.size() != count) return false;
      return std::all_of(a.parts.begin(), a.parts.end(),
                         [this](const Value& p) { return inner().contains(p); });
    }
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      if (a.scalar != 0 || a.exps.size() != a.parts.size()) return false;
      for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (node_->kind == RingKind::Polynomial && a.exps[i] < 0) return false;
        if (i > 0 && a.exps[i] <= a.exps[i - 1]) return false;
        if (!inner().contains(a.parts[i]) || inner().is_zero(a.parts[i])) return false;
      }
      return true;
    }
    case RingKind::Closure: {
      if (a.scalar < 0 || !a.exps.empty()) return false;
      std::size_t side = 1;
      for (std::int64_t i = 0; i < a.scalar; ++i) side *= node_->size;
      if (a.parts.size() != side * side) return false;
      if (!std::all_of(a.parts.begin(), a.parts.end(),
                       [this](const Value& p) { return inner().contains(p); })) {
        return false;
      }
      Matrix body(inner(), side, side, a.parts);
      return a.scalar == 0 || !body.strip_kron_identity(node_->size).has_value();
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

std::string format_coefficient(const Ring& coeff, const Value& c) {
  std::string s = coeff.format(c);
  const auto k = coeff.kind();
  if ((k == RingKind::Polynomial || k == RingKind::Laurent || k == RingKind::CyclicGroup) &&
      s.find_first_of("+-") != std::string::npos) {
    return "(" + s + ")";
  }
  return s;
}

}  // namespace

std::string Ring::format(const Value& a) const {
  switch (node_->kind) {
    case RingKind::Modular:
      return std::to_string(a.scalar);
    case RingKind::Product:
      return "(" + left().format(a.parts[0]) + "," + right().format(a.parts[1]) + ")";
    case RingKind::Matrix:
      return Matrix(inner(), node_->size, node_->size, a.parts).str();
    case RingKind::CyclicGroup:
    case RingKind::Polynomial:
    case RingKind::Laurent: {
      const Ring& in = inner();
      std::vector<std::pair<std::int64_t, const Value*>> terms;
      if (node_->kind == RingKind::CyclicGroup) {
        for (std::size_t i = 0; i < a.parts.size(); ++i) {
          if (!in.is_zero(a.parts[i])) terms.emplace_back(static_cast<std::int64_t>(i), &a.parts[i]);
        }
      } else {
        for (std::size_t i = 0; i < a.parts.size(); ++i) terms.emplace_back(a.exps[i], &a.parts[i]);
      }
      if (terms.empty()) return "0";
      const char sym = symbol_of(node_->kind);
      std::string out;
      for (const auto& [e, c] : terms) {
        if (!out.empty()) out += "+";
        std::string power;
        if (e != 0) {
          power = std::string(1, sym);
          if (e != 1) power += "^" + std::to_string(e);
        }
        if (power.empty()) {
          out += format_coefficient(in, *c);
        } else if (*c == in.one()) {
          out += power;
        } else {
          out += format_coefficient(in, *c) + "*" + power;
        }
      }
      return out;
    }
    case RingKind::Closure:
      return ClosureElement::from_value(*this, a).str();
  }
  return {};
}

namespace detail {

std::vector<Value> parse_matrix_literal(const Ring& ring, Cursor& cur, std::size_t& rows,
                                        std::size_t& cols) {
  std::vector<Value> entries;
  cur.expect('[');
  rows = 0;
  cols = 0;
  do {
    cur.expect('[');
    std::size_t row_len = 0;
    do {
      entries.push_back(parse_element(ring, cur));
      ++row_len;
    } while (cur.accept(','));
    cur.expect(']');
    if (rows == 0) {
      cols = row_len;
    } else if (row_len != cols) {
      cur.fail("ragged matrix literal");
    }
    ++rows;
  } while (cur.accept(','));
  cur.expect(']');
  return entries;
}

namespace {

Value parse_coefficient(const Ring& coeff, Cursor& cur) {
  const auto k = coeff.kind();
  if (cur.peek() == '(' &&
      (k == RingKind::Polynomial || k == RingKind::Laurent || k == RingKind::CyclicGroup)) {
    cur.expect('(');
    Value v = parse_element(coeff, cur);
    cur.expect(')');
    return v;
  }
  return parse_element(coeff, cur);
}

Value parse_symbolic(const Ring& ring, Cursor& cur) {
  const Ring& in = ring.inner();
  const char sym = symbol_of(ring.kind());
  std::map<std::int64_t, Value> terms;
  bool first = true;
  while (true) {
    bool negative = false;
    if (!first) {
      if (cur.accept('+')) {
      } else if (cur.accept('-')) {
        negative = true;
      } else {
        break;
      }
    } else if (cur.peek() == '-') {
      // A leading minus belongs to the term, not to a modular coefficient,
      // so that "-x" parses.
      std::size_t save = cur.pos();
      cur.expect('-');
      if (cur.peek() == sym) {
        negative = true;
      } else {
        cur.seek(save);
      }
    }
    first = false;
    Value coeff = in.one();
    std::int64_t exponent = 0;
    if (cur.peek() != sym) {
      coeff = parse_coefficient(in, cur);
      cur.accept('*');
    }
    if (cur.accept(sym)) {
      exponent = 1;
      if (cur.accept('^')) exponent = cur.parse_signed();
    }
    if (exponent < 0 && ring.kind() == RingKind::Polynomial) {
      cur.fail("negative exponent in polynomial literal");
    }
    if (ring.kind() == RingKind::CyclicGroup) {
      exponent = mod_reduce(exponent, static_cast<std::int64_t>(ring.size()));
    }
    if (negative) coeff = in.neg(coeff);
    auto [it, inserted] = terms.emplace(exponent, coeff);
    if (!inserted) it->second = in.add(it->second, coeff);
  }
  if (ring.kind() == RingKind::CyclicGroup) {
    std::vector<Value> parts(ring.size(), in.zero());
    for (auto& [e, c] : terms) parts[static_cast<std::size_t>(e)] = c;
    return Value(std::move(parts));
  }
  return from_terms(in, terms);
}

}  // namespace

Value parse_element(const Ring& ring, Cursor& cur) {
  switch (ring.kind()) {
    case RingKind::Modular: {
      std::int64_t v = cur.parse_signed();
      return Value(mod_reduce(v, ring.modulus()));
    }
    case RingKind::Product: {
      cur.expect('(');
      Value l = parse_element(ring.left(), cur);
      cur.expect(',');
      Value r = parse_element(ring.right(), cur);
      cur.expect(')');
      return Value(std::vector<Value>{std::move(l), std::move(r)});
    }
    case RingKind::Matrix: {
      std::size_t start = cur.pos();
      std::size_t rows = 0, cols = 0;
      auto entries = parse_matrix_literal(ring.inner(), cur, rows, cols);
      if (rows != ring.size() || cols != ring.size()) {
        Cursor::fail_at("matrix literal has wrong size for " + ring.name(), start);
      }
      return Value(std::move(entries));
    }
    case RingKind::CyclicGroup:
    case RingKind::Polynomial:
    case RingKind::Laurent:
      return parse_symbolic(ring, cur);
    case RingKind::Closure: {
      if (cur.accept('@')) {
        std::size_t start = cur.pos();
        const auto level = static_cast<std::size_t>(cur.parse_unsigned());
        std::size_t rows = 0, cols = 0;
        auto entries = parse_matrix_literal(ring.inner(), cur, rows, cols);
        std::size_t side = 0;
        try {
          side = level_size(ring.size(), level);
        } catch (const BoundExceeded&) {
          Cursor::fail_at("closure level too large", start);
        }
        if (rows != side || cols != side) {
          Cursor::fail_at("closure body size is not n^level", start);
        }
        return ClosureElement::inject(ring, level, Matrix(ring.inner(), rows, cols, std::move(entries)))
            .to_value();
      }
      return ClosureElement::scalar(ring, parse_element(ring.inner(), cur)).to_value();
    }
  }
  cur.fail("unsupported ring");
}

}  // namespace detail

Value Ring::parse(std::string_view text) const {
  detail::Cursor cur(text);
  Value v = detail::parse_element(*this, cur);
  cur.expect_end();
  return v;
}

// ---------------------------------------------------------------------------
// Checked elements

namespace {

void require_same(const RingElement& a, const RingElement& b) {
  if (a.ring != b.ring) {
    throw RingMismatch("ring mismatch: " + a.ring.name() + " vs " + b.ring.name());
  }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring, a.ring.add(a.value, b.value)};
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring, a.ring.sub(a.value, b.value)};
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  return {a.ring, a.ring.mul(a.value, b.value)};
}

RingElement operator-(const RingElement& a) { return {a.ring, a.ring.neg(a.value)}; }

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring == b.ring && a.value == b.value;
}

// ---------------------------------------------------------------------------
// Units and center

namespace {

std::optional<std::int64_t> modular_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_reduce(old_s, m);
}

constexpr std::uint64_t kBruteUnitBound = std::uint64_t{1} << 20;

std::optional<Value> brute_unit_inverse(const Ring& ring, const Value& a) {
  if (!ring.enumerable()) {
    throw NotDecidable("unit test not decidable for " + ring.name());
  }
  const std::uint64_t ord = ring.order();
  if (ord > kBruteUnitBound) {
    throw BoundExceeded("unit search over " + ring.name() + " exceeds bound");
  }
  const Value one = ring.one();
  for (std::uint64_t i = 0; i < ord; ++i) {
    Value b = ring.element_at(i);
    if (ring.mul(a, b) == one) return b;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Value> unit_inverse(const Ring& ring, const Value& a) {
  switch (ring.kind()) {
    case RingKind::Modular: {
      auto inv = modular_inverse(a.scalar, ring.modulus());
      if (!inv) return std::nullopt;
      return Value(*inv);
    }
    case RingKind::Product: {
      auto l = unit_inverse(ring.left(), a.parts[0]);
      if (!l) return std::nullopt;
      auto r = unit_inverse(ring.right(), a.parts[1]);
      if (!r) return std::nullopt;
      return Value(std::vector<Value>{std::move(*l), std::move(*r)});
    }
    case RingKind::Matrix: {
      auto inv = inverse(Matrix::from_value(ring, a));
      if (!inv) return std::nullopt;
      return inv->to_value();
    }
    case RingKind::Closure: {
      auto inv = unit_inverse(ClosureElement::from_value(ring, a));
      if (!inv) return std::nullopt;
      return inv->to_value();
    }
    case RingKind::CyclicGroup:
      return brute_unit_inverse(ring, a);
    case RingKind::Polynomial:
    case RingKind::Laurent:
      throw NotDecidable("unit test not decidable for " + ring.name());
  }
  return std::nullopt;
}

std::vector<Value> center(const Ring& ring) {
  if (!ring.enumerable()) throw NotEnumerable("ring not enumerable: " + ring.name());
  if (ring.order() > (std::uint64_t{1} << 16)) {
    throw BoundExceeded("center of " + ring.name() + " exceeds brute-force bound");
  }
  const auto all = ring.elements();
  std::vector<Value> out;
  for (const auto& a : all) {
    bool central = std::all_of(all.begin(), all.end(), [&](const Value& r) {
      return ring.mul(a, r) == ring.mul(r, a);
    });
    if (central) out.push_back(a);
  }
  return out;
}

}  // namespace matclose
