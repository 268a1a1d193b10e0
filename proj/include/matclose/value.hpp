#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace matclose {

/// Canonical payload of a ring element. The meaning of the fields depends on
/// the ring kind:
///   modular      scalar = residue in [0, m)
///   product      parts = {left, right}
///   matrix       parts = k*k entries, row-major
///   cyclic group parts = m coefficients, parts[i] is the coefficient of g^i
///   polynomial,
///   laurent      parts[i] is the (nonzero) coefficient of x^exps[i],
///                exps strictly increasing
///   closure      scalar = level, parts = n^level * n^level body, row-major
/// Equality is structural; ring code keeps every payload canonical.
struct Value {
  std::int64_t scalar = 0;
  std::vector<Value> parts;
  std::vector<std::int64_t> exps;

  Value() = default;
  explicit Value(std::int64_t s) : scalar(s) {}
  explicit Value(std::vector<Value> p) : parts(std::move(p)) {}
};

bool operator==(const Value& a, const Value& b);
bool operator<(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept;
};

}  // namespace matclose
