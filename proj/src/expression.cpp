#include "matclose/expression.hpp"

#include "internal.hpp"

namespace matclose {

namespace {

class Evaluator {
 public:
  Evaluator(const Ring& ring, std::string_view text) : ring_(ring), cur_(text) {}

  Value run() {
    Value v = expr();
    cur_.expect_end();
    return v;
  }

 private:
  Value expr() {
    Value acc = term();
    while (true) {
      if (cur_.accept('+')) {
        acc = ring_.add(acc, term());
      } else if (cur_.accept('-')) {
        acc = ring_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = unary();
    while (cur_.accept('*')) acc = ring_.mul(acc, unary());
    return acc;
  }

  Value unary() {
    if (cur_.accept('-')) return ring_.neg(unary());
    return power();
  }

  Value power() {
    Value base = atom();
    if (!cur_.accept('^')) return base;
    const std::size_t at = cur_.pos();
    const std::int64_t e = cur_.parse_unsigned();
    if (e > 4096) detail::Cursor::fail_at("exponent too large", at);
    Value out = ring_.one();
    for (std::int64_t i = 0; i < e; ++i) out = ring_.mul(out, base);
    return out;
  }

  Value atom() {
    if (cur_.accept("inv(")) {
      const std::size_t at = cur_.pos();
      Value v = expr();
      cur_.expect(')');
      auto inv = unit_inverse(ring_, v);
      if (!inv) throw DomainError("not a unit: " + ring_.format(v) + " (argument at byte " + std::to_string(at) + ")");
      return *inv;
    }
    if (cur_.peek() == '(') {
      const std::size_t save = cur_.pos();
      try {
        return detail::parse_element(ring_, cur_);
      } catch (const ParseError&) {
        cur_.seek(save);
      }
      cur_.expect('(');
      Value v = expr();
      cur_.expect(')');
      return v;
    }
    return detail::parse_element(ring_, cur_);
  }

  const Ring& ring_;
  detail::Cursor cur_;
};

}  // namespace

RingElement evaluate(const Ring& ring, std::string_view expr) { return {ring, Evaluator(ring, expr).run()}; }

}  // namespace matclose
