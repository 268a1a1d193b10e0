#include "matclose/ring_spec.hpp"

#include "cursor.hpp"

namespace matclose {

namespace {

using detail::Cursor;

std::int64_t parse_size(Cursor& cur) {
  const bool angled = cur.accept('<');
  std::size_t start = cur.pos();
  std::int64_t k = cur.parse_unsigned();
  if (angled) cur.expect('>');
  if (k < 1) Cursor::fail_at("size must be positive", start);
  return k;
}

Ring parse_ring(Cursor& cur);

Ring parse_atom(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos();
  if (cur.accept("Z/")) {
    std::int64_t m = cur.parse_unsigned();
    if (m < 1) Cursor::fail_at("modulus must be positive", start);
    return Ring::modular(m);
  }
  if (cur.accept("GF")) {
    cur.expect('(');
    std::size_t at = cur.pos();
    std::int64_t p = cur.parse_unsigned();
    cur.expect(')');
    if (!is_prime_number(p)) {
      Cursor::fail_at("non-prime modulus for GF (" + std::to_string(p) +
                          "); only prime fields are supported",
                      at);
    }
    return Ring::prime_field(p);
  }
  if (cur.accept("MC")) {
    std::int64_t n = parse_size(cur);
    if (n < 2) Cursor::fail_at("closure size must be >= 2", start);
    cur.expect('(');
    Ring inner = parse_ring(cur);
    cur.expect(')');
    return Ring::closure(std::move(inner), static_cast<std::size_t>(n));
  }
  if (cur.accept('M')) {
    std::int64_t k = parse_size(cur);
    cur.expect('(');
    Ring inner = parse_ring(cur);
    cur.expect(')');
    return Ring::matrix(std::move(inner), static_cast<std::size_t>(k));
  }
  if (cur.accept('(')) {
    Ring inner = parse_ring(cur);
    cur.expect(')');
    return inner;
  }
  cur.fail("expected ring atom (Z/m, GF(p), M<k>(...), MC<n>(...) or parenthesis)");
}

Ring parse_postfix(Cursor& cur) {
  Ring ring = parse_atom(cur);
  while (cur.accept('[')) {
    if (cur.accept('C')) {
      std::int64_t m = parse_size(cur);
      ring = Ring::cyclic_group(std::move(ring), static_cast<std::size_t>(m));
    } else if (cur.accept('x')) {
      if (cur.accept(',')) {
        cur.expect('x');
        cur.expect('^');
        cur.expect('-');
        std::size_t at = cur.pos();
        if (cur.parse_unsigned() != 1) Cursor::fail_at("expected x^-1", at);
        ring = Ring::laurent(std::move(ring));
      } else {
        ring = Ring::polynomial(std::move(ring));
      }
    } else {
      cur.fail("expected C<m>, x or x,x^-1 inside brackets");
    }
    cur.expect(']');
  }
  return ring;
}

bool accept_times(Cursor& cur) {
  // U+00D7 MULTIPLICATION SIGN is accepted as a synonym of 'x'.
  return cur.accept('x') || cur.accept("\xC3\x97");
}

Ring parse_ring(Cursor& cur) {
  Ring ring = parse_postfix(cur);
  while (accept_times(cur)) ring = Ring::product(std::move(ring), parse_postfix(cur));
  return ring;
}

}  // namespace

Ring build_ring(std::string_view spec) {
  Cursor cur(spec);
  Ring ring = parse_ring(cur);
  cur.expect_end();
  return ring;
}

}  // namespace matclose
