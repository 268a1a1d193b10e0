#include <vector>

#include "doctest.h"
#include "matclose/matrix.hpp"
#include "matclose/ring.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"
#include "oracles.hpp"

using namespace matclose;

namespace {

Matrix from_ints(const Ring& r, std::size_t k, const oracle::IntMatrix& a) {
  std::vector<Value> entries;
  for (auto x : a) entries.emplace_back(x);
  return Matrix(r, k, k, std::move(entries));
}

Matrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<Value> entries;
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_value(r, rng));
  return Matrix(r, rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("product over Z/4") {
  const Ring z4 = Ring::modular(4);
  const Matrix a = Matrix::parse(z4, "[[1,2],[3,0]]");
  const Matrix b = Matrix::parse(z4, "[[2,1],[1,1]]");
  CHECK(a * b == Matrix::parse(z4, "[[0,3],[2,3]]"));
}

TEST_CASE("products match the integer oracle") {
  Rng rng(3);
  for (std::int64_t m : {2, 4, 6}) {
    const Ring r = Ring::modular(m);
    for (std::size_t k : {1, 2, 3, 4}) {
      for (int t = 0; t < 40; ++t) {
        oracle::IntMatrix a(k * k), b(k * k);
        for (auto& x : a) x = static_cast<std::int64_t>(rng.below(m));
        for (auto& x : b) x = static_cast<std::int64_t>(rng.below(m));
        CHECK(from_ints(r, k, a) * from_ints(r, k, b) == from_ints(r, k, oracle::mat_mul(a, b, k, m)));
      }
    }
  }
}

TEST_CASE("kron with identity matches the oracle layout") {
  Rng rng(5);
  const Ring r = Ring::modular(6);
  for (std::size_t k : {1, 2, 3})
    for (std::size_t count : {1, 2, 3}) {
      oracle::IntMatrix a(k * k);
      for (auto& x : a) x = static_cast<std::int64_t>(rng.below(6));
      const Matrix big = from_ints(r, k, a).kron_identity(count);
      CHECK(big == from_ints(r, k * count, oracle::kron_identity(a, k, count)));
      const auto back = big.strip_kron_identity(count);
      REQUIRE(back.has_value());
      CHECK(*back == from_ints(r, k, a));
    }
  const Matrix e12 = matrix_unit(r, 2, 1, 2);
  CHECK_FALSE(e12.strip_kron_identity(2).has_value());
}

TEST_CASE("inverse agrees with the determinant oracle on 2x2 matrices") {
  for (std::int64_t m : {2, 3, 4, 6}) {
    const Ring r = Ring::modular(m);
    std::size_t invertible = 0;
    for (const auto& a : oracle::all_matrices(2, m)) {
      const Matrix x = from_ints(r, 2, a);
      const auto inv = inverse(x);
      CHECK(inv.has_value() == oracle::invertible2(a, m));
      if (inv) {
        ++invertible;
        CHECK(x * *inv == Matrix::identity(r, 2));
        CHECK(*inv * x == Matrix::identity(r, 2));
      }
    }
    if (oracle::is_prime(m)) CHECK(invertible == static_cast<std::size_t>(oracle::gl2_order(m)));
  }
}

TEST_CASE("matrix units multiply as e_ij e_kl = delta_jk e_il") {
  const Ring r = build_ring("GF(2)[C2]");
  const std::size_t k = 3;
  Matrix sum(r, k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    sum = sum + matrix_unit(r, k, i, i);
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t p = 1; p <= k; ++p)
        for (std::size_t l = 1; l <= k; ++l) {
          const Matrix prod = matrix_unit(r, k, i, j) * matrix_unit(r, k, p, l);
          CHECK(prod == (j == p ? matrix_unit(r, k, i, l) : Matrix(r, k, k)));
        }
  }
  CHECK(sum == Matrix::identity(r, k));
  CHECK_THROWS_AS(matrix_unit(r, k, 0, 1), DomainError);
  CHECK_THROWS_AS(matrix_unit(r, k, 1, 4), DomainError);
}

TEST_CASE("flatten is a ring isomorphism M_a(M_b(R)) -> M_ab(R)") {
  Rng rng(9);
  const Ring z4 = Ring::modular(4);
  const Ring inner = Ring::matrix(z4, 2);
  for (int t = 0; t < 60; ++t) {
    const Matrix x = random_matrix(inner, 2, 2, rng);
    const Matrix y = random_matrix(inner, 2, 2, rng);
    const Matrix fx = flatten(x);
    REQUIRE(fx.rows() == 4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const Matrix block = Matrix::from_value(inner, x.at(a, b));
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) CHECK(fx.at(a * 2 + i, b * 2 + j) == block.at(i, j));
      }
    CHECK(unflatten(fx, 2) == x);
    CHECK(flatten(x * y) == fx * flatten(y));
    CHECK(flatten(x + y) == fx + flatten(y));
  }
  const Matrix rect = random_matrix(inner, 1, 2, rng);
  CHECK(flatten(rect).rows() == 2);
  CHECK(flatten(rect).cols() == 4);
  CHECK(unflatten(flatten(rect), 2) == rect);
}

TEST_CASE("dimension errors") {
  const Ring r = Ring::modular(2);
  CHECK_THROWS_AS(Matrix(r, 2, 3) * Matrix(r, 2, 3), DomainError);
  CHECK_THROWS_AS(Matrix(r, 2, 2) + Matrix(r, 3, 3), DomainError);
  CHECK_THROWS_AS(Matrix(r, 2, 2) + Matrix(Ring::modular(3), 2, 2), RingMismatch);
  CHECK_THROWS_AS(Matrix::parse(r, "[[1,0],[0]]"), ParseError);
}
