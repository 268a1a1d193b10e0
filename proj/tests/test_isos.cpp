#include <string>

#include "doctest.h"
#include "matclose/closure.hpp"
#include "matclose/isos.hpp"
#include "matclose/ring.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"

using namespace matclose;

TEST_CASE("product iso splits entries and renormalizes each side") {
  const Ring f2 = Ring::prime_field(2);
  const Ring mc = Ring::closure(Ring::product(f2, f2), 2);
  const ClosureElement x = ClosureElement::parse(mc, "@1 [[(1,0),(0,0)],[(0,0),(1,0)]]");
  CHECK(x.level() == 0);
  const auto [a, b] = product_iso_forward(x);
  CHECK(a == ClosureElement::one(Ring::closure(f2, 2)));
  CHECK(b == ClosureElement::zero(Ring::closure(f2, 2)));
  CHECK(product_iso_backward(a, b) == x);

  const ClosureElement y = ClosureElement::parse(mc, "@1 [[(1,1),(0,1)],[(0,0),(1,1)]]");
  const auto [c, d] = product_iso_forward(y);
  CHECK(c.level() == 0);
  CHECK(d.str() == "@1 [[1,1],[0,1]]");
  CHECK(product_iso_backward(c, d) == y);
  CHECK_THROWS_AS(product_iso_backward(c, ClosureElement::one(Ring::closure(f2, 3))), RingMismatch);
}

TEST_CASE("polynomial iso on x e_11") {
  const Ring source = build_ring("MC2(GF(2))[x]");
  const Value p = source.parse("@1 [[1,0],[0,0]]*x");
  const ClosureElement y = poly_iso(source, p);
  CHECK(y.ring() == symbol_iso_target(source));
  CHECK(y.str() == "@1 [[x,0],[0,0]]");
  CHECK(symbol_iso_inverse(y, source) == p);
}

TEST_CASE("group ring iso on g e_11") {
  const Ring source = build_ring("MC2(GF(2))[C2]");
  Value g_e11 = source.zero();
  g_e11.parts[1] = ClosureElement::parse(source.inner(), "@1 [[1,0],[0,0]]").to_value();
  const ClosureElement y = group_iso(source, g_e11);
  CHECK(y.str() == "@1 [[g,0],[0,0]]");
  CHECK(symbol_iso_inverse(y, source) == g_e11);
}

TEST_CASE("sampled verification of every iso") {
  CHECK(verify_product_iso(build_ring("GF(2)"), build_ring("Z/3"), 2, 2, 300, 1).passed());
  CHECK(verify_product_iso(build_ring("Z/4"), build_ring("GF(2)[C2]"), 2, 2, 300, 2).passed());
  CHECK(verify_product_iso(build_ring("GF(3)"), build_ring("GF(2)"), 3, 1, 200, 3).passed());
  for (const char* spec : {"MC2(GF(2))[x]", "MC2(Z/4)[x]", "MC2(GF(2))[C2]", "MC2(GF(3))[C3]",
                           "MC2(GF(2))[x,x^-1]", "MC3(GF(2))[x,x^-1]"}) {
    CAPTURE(spec);
    const auto report = verify_symbol_iso(build_ring(spec), 2, 300, 5);
    CHECK(report.samples == 300);
    CHECK(report.passed());
  }
}
