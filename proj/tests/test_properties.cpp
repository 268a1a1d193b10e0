#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "matclose/closure.hpp"
#include "matclose/ideals.hpp"
#include "matclose/properties.hpp"
#include "matclose/ring.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"
#include "matclose/suites.hpp"
#include "oracles.hpp"

using namespace matclose;

namespace {

std::set<std::int64_t> scalars(const FiniteIdeal& i) {
  std::set<std::int64_t> out;
  for (const auto& v : i.members()) out.insert(v.scalar);
  return out;
}

Matrix random_matrix(const Ring& r, std::size_t k, Rng& rng) {
  std::vector<Value> entries;
  for (std::size_t i = 0; i < k * k; ++i) entries.push_back(random_value(r, rng));
  return Matrix(r, k, k, std::move(entries));
}

}  // namespace

TEST_CASE("Jacobson radical of Z/m matches the oracle") {
  CHECK(jacobson_radical(Ring::modular(4)).str() == "{0,2}");
  CHECK(jacobson_radical(Ring::modular(2)).is_zero());
  for (std::int64_t m = 2; m <= 40; ++m) {
    CAPTURE(m);
    CHECK(scalars(jacobson_radical(Ring::modular(m))) == oracle::radical_of_zm(m));
  }
}

TEST_CASE("radical of the group ring and cross-check with maximal ideals") {
  const Ring gc2 = build_ring("GF(2)[C2]");
  const FiniteIdeal j = jacobson_radical(gc2);
  CHECK(j.size() == 2);
  CHECK(j.contains(gc2.parse("1+g")));
  for (const auto& spec : default_zoo()) {
    CAPTURE(spec);
    const Ring r = build_ring(spec);
    CHECK(radical_by_maximal_ideals(r).mask() == jacobson_radical(r).mask());
  }
}

TEST_CASE("radical of M2(Z/4) has the oracle size") {
  const FiniteIdeal j = jacobson_radical(build_ring("M2(Z/4)"), 256);
  CHECK(j.size() == oracle::radical_size_m2(4));
  CHECK(j.size() == 16);
}

TEST_CASE("closure radical matches M(J) level by level") {
  for (const char* spec : {"Z/4", "Z/6", "GF(2)", "GF(2)[C2]"}) {
    CAPTURE(spec);
    const auto report = closure_radical_check(build_ring(spec), 2, 2);
    CHECK(report.passed());
    std::size_t levels = 0;
    for (const auto& r : report.records) levels += r.check == "radical.level";
    CHECK(levels == 3);
  }
}

TEST_CASE("semiprime, prime and regular Z/m follow squarefree and prime m") {
  for (std::int64_t m = 2; m <= 30; ++m) {
    CAPTURE(m);
    const Ring r = Ring::modular(m);
    CHECK((is_semiprime(r).verdict == Verdict::Holds) == oracle::squarefree(m));
    CHECK((is_prime(r).verdict == Verdict::Holds) == oracle::is_prime(m));
    CHECK((is_von_neumann_regular(r).verdict == Verdict::Holds) == oracle::squarefree(m));
    CHECK((is_semisimple(r).verdict == Verdict::Holds) == oracle::squarefree(m));
  }
  CHECK(is_semiprime(Ring::modular(4)).witness == "a=2");
  CHECK(is_prime(Ring::modular(6)).witness == "(2,3)");
  CHECK(is_prime(build_ring("M2(GF(2))")).verdict == Verdict::Holds);
  CHECK(is_semiprime(build_ring("GF(2)[C2]")).verdict == Verdict::Fails);
}

TEST_CASE("closure semiprime and prime checks") {
  CHECK(closure_semiprime_check(build_ring("Z/6"), 2, 1).passed());
  const auto z4 = closure_semiprime_check(build_ring("Z/4"), 2, 1);
  REQUIRE(z4.records.size() == 1);
  CHECK(z4.records.front().verdict == Verdict::Vacuous);
  CHECK(closure_prime_check(build_ring("GF(2)"), 2, 2).passed());
  CHECK(closure_prime_check(build_ring("GF(3)"), 2, 1).passed());
  CHECK(closure_prime_check(build_ring("M2(GF(2))"), 2, 1).passed());
  CHECK(closure_prime_check(build_ring("Z/6"), 2, 1).records.front().verdict == Verdict::Vacuous);
}

TEST_CASE("von Neumann witnesses satisfy A Y A = A") {
  Rng rng(12);
  for (const char* spec : {"GF(2)", "GF(3)", "Z/6", "GF(2)xGF(3)", "M2(GF(2))", "Z/30"}) {
    CAPTURE(spec);
    const Ring r = build_ring(spec);
    for (std::size_t k = 1; k <= 4; ++k)
      for (int t = 0; t < 25; ++t) {
        const Matrix a = random_matrix(r, k, rng);
        const auto y = matrix_vnr_witness(a);
        REQUIRE(y.has_value());
        CHECK(a * *y * a == a);
      }
  }
  CHECK_FALSE(matrix_vnr_witness(Matrix::parse(Ring::modular(4), "[[2]]")).has_value());

  const Ring mc = build_ring("MC2(GF(2)xGF(3))");
  for (int t = 0; t < 200; ++t) {
    const ClosureElement x = random_closure(mc, rng, 2);
    const ClosureElement y = closure_vnr_witness(x);
    CHECK(x * y * x == x);
  }
  CHECK_THROWS_AS(closure_vnr_witness(ClosureElement::scalar(Ring::closure(Ring::modular(4), 2), Value(2))),
                  DomainError);
}

TEST_CASE("invariant basis number") {
  const std::uint64_t budget = std::uint64_t{1} << 24;
  CHECK_FALSE(find_rectangular_inverse_pair(Ring::modular(2), 1, 2, budget).has_value());
  CHECK(find_rectangular_inverse_pair(Ring::modular(2), 1, 1, budget).has_value());
  CHECK_THROWS_AS(find_rectangular_inverse_pair(Ring::modular(6), 3, 4, budget), BoundExceeded);
  for (const char* spec : {"GF(2)", "Z/6"}) {
    CAPTURE(spec);
    const auto rec = ibn_check(build_ring(spec), 2, 2, 2, 0);
    CHECK(rec.verdict == Verdict::Holds);
    CHECK(rec.witness.find("1x2") != std::string::npos);
  }
  const auto big = ibn_check(build_ring("Z/4"), 2, 2, 2, 1, 1000);
  CHECK(big.verdict == Verdict::Holds);
  CHECK(big.witness.find("cardinality") != std::string::npos);
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(build_ring("GF(2)xZ/3")).verdict == Verdict::Holds);
  CHECK(is_semisimple(build_ring("M2(GF(2))")).verdict == Verdict::Holds);
  CHECK(is_semisimple(build_ring("GF(3)[C2]")).verdict == Verdict::Holds);
  CHECK(is_semisimple(build_ring("GF(2)[C2]")).verdict == Verdict::Fails);
  CHECK(is_semisimple(build_ring("Z/4")).witness == "J={0,2}");
}
