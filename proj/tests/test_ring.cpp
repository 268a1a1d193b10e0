#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "matclose/ring.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"
#include "oracles.hpp"

using namespace matclose;

namespace {

std::vector<Ring> zoo() {
  std::vector<Ring> out;
  for (const char* spec : {"Z/4", "Z/6", "GF(2)", "GF(3)", "GF(2)xZ/3", "GF(2)[C2]", "M2(GF(2))", "Z/2[x]",
                           "Z/3[x,x^-1]", "MC2(Z/2)"}) {
    out.push_back(build_ring(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("modular arithmetic matches integer arithmetic mod m") {
  const Ring z4 = Ring::modular(4);
  CHECK(z4.add(Value(3), Value(2)) == Value(1));
  for (std::int64_t m : {2, 4, 6, 9, 12}) {
    const Ring r = Ring::modular(m);
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < m; ++b) {
        CHECK(r.add(Value(a), Value(b)) == Value(oracle::mod(a + b, m)));
        CHECK(r.mul(Value(a), Value(b)) == Value(oracle::mod(a * b, m)));
        CHECK(r.sub(Value(a), Value(b)) == Value(oracle::mod(a - b, m)));
      }
  }
}

TEST_CASE("group ring GF(2)[C2] matches the a + b g oracle") {
  const Ring r = build_ring("GF(2)[C2]");
  const Value one_plus_g = r.parse("1+g");
  CHECK(r.mul(one_plus_g, one_plus_g) == r.zero());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Value x(std::vector<Value>{Value(a), Value(b)});
          Value y(std::vector<Value>{Value(c), Value(d)});
          const auto o = oracle::GroupRingC2{a, b} * oracle::GroupRingC2{c, d};
          CHECK(r.mul(x, y) == Value(std::vector<Value>{Value(o.a), Value(o.b)}));
        }
}

TEST_CASE("ring axioms hold on random triples in every zoo ring") {
  Rng rng(7);
  for (const Ring& r : zoo()) {
    CAPTURE(r.name());
    SampleShape shape;
    shape.max_level = 1;
    for (int s = 0; s < 150; ++s) {
      const Value x = random_value(r, rng, shape);
      const Value y = random_value(r, rng, shape);
      const Value z = random_value(r, rng, shape);
      CHECK(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
      CHECK(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
      CHECK(r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z)));
      CHECK(r.mul(r.one(), x) == x);
      CHECK(r.mul(x, r.one()) == x);
      CHECK(r.add(x, r.neg(x)) == r.zero());
      CHECK(r.contains(x));
    }
  }
}

TEST_CASE("format and parse round-trip") {
  Rng rng(11);
  for (const Ring& r : zoo()) {
    CAPTURE(r.name());
    SampleShape shape;
    shape.max_level = 1;
    for (int s = 0; s < 100; ++s) {
      const Value x = random_value(r, rng, shape);
      CAPTURE(r.format(x));
      CHECK(r.parse(r.format(x)) == x);
    }
  }
}

TEST_CASE("enumeration is a bijection with indices") {
  for (const char* spec : {"Z/6", "GF(2)xZ/3", "GF(2)[C2]", "M2(GF(2))", "M2(Z/3)"}) {
    const Ring r = build_ring(spec);
    CAPTURE(spec);
    const auto all = r.elements();
    REQUIRE(all.size() == r.order());
    for (std::uint64_t i = 0; i < r.order(); ++i) CHECK(r.index_of(all[i]) == i);
  }
  CHECK(build_ring("M2(Z/3)").order() == 81);
  CHECK_FALSE(build_ring("Z/2[x]").enumerable());
}

TEST_CASE("ring spec parser") {
  CHECK(build_ring("GF(2) x Z/3").name() == Ring::product(Ring::prime_field(2), Ring::modular(3)).name());
  CHECK(build_ring("GF(2)") == Ring::modular(2));
  CHECK(build_ring("M<2>(GF(2))") == build_ring("M2(GF(2))"));
  CHECK(build_ring("GF(2)[C<2>]") == build_ring("GF(2)[C2]"));
  CHECK(build_ring("MC2(MC2(GF(2)))").kind() == RingKind::Closure);
  CHECK(build_ring("(Z/2 x Z/3) x Z/5").left().kind() == RingKind::Product);

  try {
    build_ring("GF(4)");
    FAIL("composite GF accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-prime modulus for GF") != std::string::npos);
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(build_ring("Z/"), ParseError);
  CHECK_THROWS_AS(build_ring("Q"), ParseError);
  CHECK_THROWS_AS(build_ring("Z/4 x"), ParseError);
  CHECK_THROWS_AS(build_ring("MC1(Z/2)"), Error);
}

TEST_CASE("units agree with the gcd oracle") {
  for (std::int64_t m : {2, 4, 6, 10, 12, 15}) {
    const Ring r = Ring::modular(m);
    for (std::int64_t a = 0; a < m; ++a) {
      const auto inv = unit_inverse(r, Value(a));
      CHECK(inv.has_value() == oracle::is_unit_mod(a, m));
      if (inv) CHECK(r.mul(Value(a), *inv) == r.one());
    }
  }
  const Ring gc2 = build_ring("GF(3)[C2]");
  std::size_t units = 0;
  for (const auto& a : gc2.elements()) units += is_unit(gc2, a);
  // GF(3)[C2] is GF(3) x GF(3): 4 units.
  CHECK(units == 4);
  CHECK_THROWS_AS(unit_inverse(build_ring("Z/2[x]"), build_ring("Z/2[x]").parse("x")), NotDecidable);
}

TEST_CASE("center") {
  CHECK(center(Ring::modular(4)).size() == 4);
  const Ring m2 = build_ring("M2(GF(2))");
  const auto c = center(m2);
  CHECK(c.size() == 2);
  CHECK(std::find(c.begin(), c.end(), m2.one()) != c.end());
}

TEST_CASE("checked elements refuse mixed rings") {
  const RingElement a = RingElement::parse(Ring::modular(4), "3");
  const RingElement b = RingElement::parse(Ring::modular(4), "2");
  CHECK((a + b).str() == "1");
  CHECK((a * b).str() == "2");
  CHECK_THROWS_AS(a + RingElement::one(Ring::modular(6)), RingMismatch);
}

TEST_CASE("Laurent and polynomial literals") {
  const Ring l = build_ring("Z/3[x,x^-1]");
  CHECK(l.mul(l.parse("x"), l.parse("x^-1")) == l.one());
  const Ring p = build_ring("Z/2[x]");
  CHECK(p.mul(p.parse("1+x"), p.parse("1+x")) == p.parse("1+x^2"));
  CHECK_THROWS_AS(p.parse("x^-1"), ParseError);
}
