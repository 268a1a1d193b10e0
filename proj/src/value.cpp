#include "matclose/value.hpp"

#include <algorithm>

namespace matclose {

bool operator==(const Value& a, const Value& b) {
  return a.scalar == b.scalar && a.exps == b.exps && a.parts == b.parts;
}

bool operator<(const Value& a, const Value& b) {
  if (a.scalar != b.scalar) return a.scalar < b.scalar;
  if (a.exps != b.exps) return a.exps < b.exps;
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                      b.parts.end());
}

std::size_t ValueHash::operator()(const Value& v) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(v.scalar) + 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto e : v.exps) mix(std::hash<std::int64_t>{}(e));
  for (const auto& p : v.parts) mix((*this)(p));
  mix(v.parts.size());
  return h;
}

}  // namespace matclose
