#include <algorithm>
#include <vector>

#include "doctest.h"
#include "matclose/closure.hpp"
#include "matclose/morphism.hpp"
#include "matclose/ring.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"
#include "oracles.hpp"

using namespace matclose;

TEST_CASE("bodies are normalized to their minimal level") {
  const Ring z4 = Ring::modular(4);
  const Ring mc = Ring::closure(z4, 2);
  const ClosureElement one = ClosureElement::inject(mc, 1, Matrix::identity(z4, 2));
  CHECK(one.level() == 0);
  CHECK(one == ClosureElement::one(mc));

  const Matrix b = Matrix::parse(z4, "[[1,2],[0,3]]");
  const ClosureElement x = ClosureElement::inject(mc, 3, b.kron_identity(4));
  CHECK(x.level() == 1);
  CHECK(x.body() == b);
  CHECK(x.lift(3) == b.kron_identity(4));
  CHECK(x.lift_stepwise(3) == x.lift(3));

  CHECK(ClosureElement::parse(mc, "@1 [[1,0],[0,1]]") == one);
  CHECK(ClosureElement::parse(mc, "@2 [[3,0,0,0],[0,3,0,0],[0,0,3,0],[0,0,0,3]]").str() == "3");
  CHECK(ClosureElement::parse(mc, "@1 [[1,2],[0,3]]").str() == "@1 [[1,2],[0,3]]");
  CHECK_THROWS_AS(ClosureElement::parse(mc, "@1 [[1,2,3],[0,3,1],[1,1,1]]"), Error);
}

TEST_CASE("sums and products do not depend on the representing level") {
  Rng rng(21);
  for (const char* spec : {"MC2(Z/4)", "MC3(GF(2))", "MC2(GF(2)xZ/3)", "MC2(GF(2)[C2])"}) {
    const Ring mc = build_ring(spec);
    CAPTURE(spec);
    for (int t = 0; t < 60; ++t) {
      const ClosureElement x = random_closure(mc, rng, 2);
      const ClosureElement y = random_closure(mc, rng, 2);
      const std::size_t base = std::max(x.level(), y.level());
      for (std::size_t extra = 0; extra <= 1; ++extra) {
        CHECK(combine_at_level(x, y, base + extra, true) == x * y);
        CHECK(combine_at_level(x, y, base + extra, false) == x + y);
      }
      CHECK((x * y).lift(base + 1) == x.lift(base + 1) * y.lift(base + 1));
    }
  }
}

TEST_CASE("flatten_closure matches the interleaved digit layout") {
  Rng rng(33);
  const std::size_t n = 2;
  const Ring base = Ring::prime_field(2);
  const Ring inner = Ring::closure(base, n);
  const Ring outer = Ring::closure(inner, n);
  for (int t = 0; t < 80; ++t) {
    const ClosureElement x = random_closure(outer, rng, 2);
    std::size_t d = x.level();
    for (const auto& v : x.body().entries()) d = std::max(d, ClosureElement::from_value(inner, v).level());
    const Matrix outer_rep = x.lift(d);
    const std::size_t side = level_size(n, d);
    Matrix expected(base, side * side, side * side);
    for (std::size_t a = 0; a < side; ++a)
      for (std::size_t b = 0; b < side; ++b) {
        const Matrix block = ClosureElement::from_value(inner, outer_rep.at(a, b)).lift(d);
        for (std::size_t r = 0; r < side; ++r)
          for (std::size_t s = 0; s < side; ++s)
            expected.set(oracle::interleave(a, r, n, d), oracle::interleave(b, s, n, d), block.at(r, s));
      }
    const ClosureElement y = flatten_closure(x);
    CHECK(y == ClosureElement::inject(base, n, 2 * d, expected));
    CHECK(unflatten_closure(y, outer) == x);
  }
}

TEST_CASE("flatten_closure is a ring isomorphism") {
  Rng rng(34);
  for (const char* spec : {"Z/4", "GF(2)"}) {
    const Ring outer = build_ring(std::string("MC2(MC2(") + spec + "))");
    const Ring flat = outer.inner().inner();
    CAPTURE(spec);
    CHECK(flatten_closure(ClosureElement::one(outer)) == ClosureElement::one(Ring::closure(flat, 2)));
    for (int t = 0; t < 60; ++t) {
      const ClosureElement x = random_closure(outer, rng, 2);
      const ClosureElement y = random_closure(outer, rng, 2);
      CHECK(flatten_closure(x * y) == flatten_closure(x) * flatten_closure(y));
      CHECK(flatten_closure(x + y) == flatten_closure(x) + flatten_closure(y));
      const ClosureElement z = random_closure(Ring::closure(flat, 2), rng, 2);
      CHECK(flatten_closure(unflatten_closure(z, outer)) == z);
    }
  }
}

TEST_CASE("units of MC2(GF(2)) up to level 1") {
  const Ring mc = build_ring("MC2(GF(2))");
  const auto classes = closure_classes_up_to(mc, 1);
  CHECK(classes.size() == 16);
  std::size_t units = 0;
  for (const auto& x : classes) {
    const auto inv = unit_inverse(x);
    if (!inv) continue;
    ++units;
    CHECK(x * *inv == ClosureElement::one(mc));
    CHECK(*inv * x == ClosureElement::one(mc));
  }
  CHECK(units == static_cast<std::size_t>(oracle::gl2_order(2)));
}

TEST_CASE("unit inverses over Z/4 match the determinant oracle") {
  const Ring z4 = Ring::modular(4);
  const Ring mc = Ring::closure(z4, 2);
  for (const auto& a : oracle::all_matrices(2, 4)) {
    std::vector<Value> entries;
    for (auto e : a) entries.emplace_back(e);
    const ClosureElement x = ClosureElement::inject(mc, 1, Matrix(z4, 2, 2, std::move(entries)));
    CHECK(unit_inverse(x).has_value() == oracle::invertible2(a, 4));
  }
}

TEST_CASE("center of MC2(Z/4) is the scalars") {
  const Ring z4 = Ring::modular(4);
  const Ring mc = Ring::closure(z4, 2);
  std::vector<Value> sections;
  for (const auto& x : closure_classes_up_to(mc, 1)) {
    if (!is_central(x)) {
      CHECK_THROWS_AS(center_section(x), DomainError);
      continue;
    }
    const Value a = center_section(x);
    CHECK(ClosureElement::scalar(mc, a) == x);
    sections.push_back(a);
  }
  CHECK(sections.size() == 4);
  const Ring mm = build_ring("MC2(M2(GF(2)))");
  std::size_t central = 0;
  for (const auto& x : closure_classes_up_to(mm, 0)) central += is_central(x);
  CHECK(central == 2);
}

TEST_CASE("the closure functor respects identity, composition and the ring laws") {
  Rng rng(41);
  const Ring z12 = Ring::modular(12);
  const Ring z6 = Ring::modular(6);
  const Ring z2 = Ring::modular(2);
  const RingMorphism f = morphisms::reduction(z12, z6);
  const RingMorphism g = morphisms::reduction(z6, z2);
  const RingMorphism gf = morphisms::compose(g, f);
  const Ring mc = Ring::closure(z12, 3);
  for (int t = 0; t < 80; ++t) {
    const ClosureElement x = random_closure(mc, rng, 2);
    const ClosureElement y = random_closure(mc, rng, 2);
    CHECK(cmap(morphisms::identity(z12), x) == x);
    CHECK(cmap(g, cmap(f, x)) == cmap(gf, x));
    CHECK(cmap(f, x * y) == cmap(f, x) * cmap(f, y));
    CHECK(cmap(f, x + y) == cmap(f, x) + cmap(f, y));
    CHECK(mat_map(f, x.lift(2)) == cmap(f, x).lift(2));
  }
  CHECK(cmap(f, ClosureElement::one(mc)) == ClosureElement::one(Ring::closure(z6, 3)));
  const RingMorphism mf = closure_functor(f, 3);
  Rng check_rng(1);
  CHECK_FALSE(check_morphism(mf, check_rng, 200).has_value());
}

TEST_CASE("n must be at least 2") {
  CHECK_THROWS_AS(Ring::closure(Ring::modular(2), 1), DomainError);
  CHECK_NOTHROW(Ring::closure(Ring::modular(2), 1, true));
  CHECK(level_size(3, 2) == 9);
  CHECK_THROWS_AS(level_size(2, 30), BoundExceeded);
}
