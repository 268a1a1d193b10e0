#pragma once

// Test-only reference computations. They work on plain integers and never
// call into the library, so agreement with the library is evidence rather
// than a tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::int64_t>;  // row-major, square

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, std::size_t k, std::int64_t m) {
  IntMatrix out(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * k + j];
      out[i * k + j] = mod(s, m);
    }
  return out;
}

inline IntMatrix identity(std::size_t k) {
  IntMatrix out(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) out[i * k + i] = 1;
  return out;
}

/// Entry (i, j) of I_count (x) A lives at (block*k + i, block*k + j).
inline IntMatrix kron_identity(const IntMatrix& a, std::size_t k, std::size_t count) {
  const std::size_t side = k * count;
  IntMatrix out(side * side, 0);
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out[(b * k + i) * side + (b * k + j)] = a[i * k + j];
  return out;
}

/// All k x k matrices over Z/m, row-major digit order (entry 0 fastest).
inline std::vector<IntMatrix> all_matrices(std::size_t k, std::int64_t m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < k * k; ++i) count *= static_cast<std::size_t>(m);
  std::vector<IntMatrix> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    IntMatrix a(k * k);
    std::size_t c = code;
    for (auto& e : a) {
      e = static_cast<std::int64_t>(c % static_cast<std::size_t>(m));
      c /= static_cast<std::size_t>(m);
    }
    out.push_back(a);
  }
  return out;
}

inline bool is_unit_mod(std::int64_t a, std::int64_t m) { return std::gcd(mod(a, m), m) == 1; }

/// Over a commutative Z/m a 2x2 matrix is invertible iff its determinant is.
inline bool invertible2(const IntMatrix& a, std::int64_t m) { return is_unit_mod(a[0] * a[3] - a[1] * a[2], m); }

/// |GL(2, p)| = (p^2 - 1)(p^2 - p).
inline std::int64_t gl2_order(std::int64_t p) { return (p * p - 1) * (p * p - p); }

inline std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline bool squarefree(std::int64_t m) {
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

inline bool is_prime(std::int64_t m) { return m >= 2 && prime_factors(m) == std::vector<std::int64_t>{m}; }

/// Ideals of Z/m are dZ/m for d | m.
inline std::size_t ideal_count(std::int64_t m) {
  std::size_t c = 0;
  for (std::int64_t d = 1; d <= m; ++d) c += m % d == 0;
  return c;
}

/// J(Z/m) = multiples of the radical of m.
inline std::set<std::int64_t> radical_of_zm(std::int64_t m) {
  std::int64_t rad = 1;
  for (auto p : prime_factors(m)) rad *= p;
  std::set<std::int64_t> out;
  for (std::int64_t a = 0; a < m; a += rad) out.insert(a);
  return out;
}

/// |J(M2(Z/m))| by quasiregularity with the determinant test.
inline std::size_t radical_size_m2(std::int64_t m) {
  const auto all = all_matrices(2, m);
  const IntMatrix one = identity(2);
  std::size_t count = 0;
  for (const auto& a : all) {
    bool in = true;
    for (const auto& z : all) {
      IntMatrix za = mat_mul(z, a, 2, m);
      IntMatrix d(4);
      for (int i = 0; i < 4; ++i) d[i] = mod(one[i] - za[i], m);
      if (!invertible2(d, m)) {
        in = false;
        break;
      }
    }
    count += in;
  }
  return count;
}

/// GF(2)[C2] as a + b g with g^2 = 1.
struct GroupRingC2 {
  int a, b;
  friend GroupRingC2 operator*(GroupRingC2 x, GroupRingC2 y) {
    return {(x.a * y.a + x.b * y.b) % 2, (x.a * y.b + x.b * y.a) % 2};
  }
  friend GroupRingC2 operator+(GroupRingC2 x, GroupRingC2 y) { return {(x.a + y.a) % 2, (x.b + y.b) % 2}; }
  friend bool operator==(GroupRingC2 x, GroupRingC2 y) { return x.a == y.a && x.b == y.b; }
};

/// Interleaved flatten position: base-n digits of the outer index a and
/// inner index r, d digits each, paired as (a_j, r_j) with j = 0 least
/// significant. Computed by building the digit string explicitly.
inline std::size_t interleave(std::size_t a, std::size_t r, std::size_t n, std::size_t d) {
  std::vector<std::size_t> digits;  // least significant first
  for (std::size_t j = 0; j < d; ++j) {
    digits.push_back(r % n);
    digits.push_back(a % n);
    a /= n;
    r /= n;
  }
  std::size_t out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * n + digits[i];
  return out;
}

/// Z-span {sum_j r_j v_j} of a column over Z/m acting on Z/d (d | m).
inline std::set<std::int64_t> span(const std::vector<std::int64_t>& v, std::int64_t m, std::int64_t d) {
  std::set<std::int64_t> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::int64_t> next = out;
    for (auto x : out)
      for (auto vj : v)
        for (std::int64_t r = 0; r < m; ++r) next.insert(mod(x + r * vj, d));
    if (next.size() != out.size()) {
      out = next;
      grew = true;
    }
  }
  return out;
}

}  // namespace oracle
