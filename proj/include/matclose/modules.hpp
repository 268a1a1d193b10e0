#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matclose/closure.hpp"
#include "matclose/ideals.hpp"
#include "matclose/ring.hpp"

namespace matclose {

class Rng;

/// Finite left unitary module over an enumerable ring, given by total
/// addition and action tables on element indices. Index 0 is zero.
class FiniteModule {
 public:
  /// R as a left module over itself.
  static FiniteModule regular(const Ring& ring);
  /// Z/d as a module over `ring` = Z/m (d | m), acting through the quotient.
  static FiniteModule quotient(const Ring& ring, std::int64_t d);
  static FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);
  static FiniteModule zero(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  /// r * m with r given by its ring index.
  std::size_t act(std::uint64_t r, std::size_t m) const { return act_[r * size_ + m]; }
  std::size_t act(const Value& r, std::size_t m) const { return act(ring_.index_of(r), m); }
  const std::string& label(std::size_t m) const { return labels_[m]; }

  /// First violated module axiom, exhaustive.
  std::optional<std::string> axiom_failure() const;
  /// Submodule R m.
  std::vector<bool> cyclic_submodule(std::size_t m) const;
  /// Nonzero, and every nonzero element generates.
  bool is_simple() const;
  /// No nonzero r with r M = 0.
  bool is_faithful() const;

 private:
  FiniteModule(Ring ring, std::string name, std::size_t size)
      : ring_(std::move(ring)), name_(std::move(name)), size_(size) {}

  Ring ring_;
  std::string name_;
  std::size_t size_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> act_;
  std::vector<std::string> labels_;
};

/// Module DSL: `<ring>^k` (free module, k >= 0), `Z/d over <ring>`, and
/// `A (+) B` (direct sum, left-associative).
FiniteModule parse_module(std::string_view spec);

/// Element of Delta(M): the class of a column in M^(n^k) under the
/// transitions v -> (v, ..., v) (n copies). Stored with minimal k.
class DeltaElement {
 public:
  static DeltaElement make(std::shared_ptr<const FiniteModule> module, std::size_t n, std::size_t level,
                           std::vector<std::size_t> vec);

  const FiniteModule& module() const { return *module_; }
  const std::shared_ptr<const FiniteModule>& module_ptr() const { return module_; }
  std::size_t n() const { return n_; }
  std::size_t level() const { return level_; }
  const std::vector<std::size_t>& vec() const { return vec_; }
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const DeltaElement& a, const DeltaElement& b) {
    return a.module_ == b.module_ && a.n_ == b.n_ && a.level_ == b.level_ && a.vec_ == b.vec_;
  }
  friend bool operator!=(const DeltaElement& a, const DeltaElement& b) { return !(a == b); }

 private:
  DeltaElement(std::shared_ptr<const FiniteModule> module, std::size_t n, std::size_t level,
               std::vector<std::size_t> vec)
      : module_(std::move(module)), n_(n), level_(level), vec_(std::move(vec)) {}

  std::shared_ptr<const FiniteModule> module_;
  std::size_t n_;
  std::size_t level_;
  std::vector<std::size_t> vec_;
};

/// Representative of v at level m >= v.level(): n^(m-k) stacked copies.
std::vector<std::size_t> delta_lift(const DeltaElement& v, std::size_t m);

/// (A v)_i = sum_j A_ij v_j at the common level, normalized.
DeltaElement delta_act(const ClosureElement& a, const DeltaElement& v);

/// Uniform random element of level <= max_level.
DeltaElement random_delta(const std::shared_ptr<const FiniteModule>& module, std::size_t n,
                          std::size_t max_level, Rng& rng);

/// {A v : A in M_side(R)} == M^side for a raw column of length side.
bool generates_column(const FiniteModule& module, std::size_t side, const std::vector<std::size_t>& vec,
                      std::uint64_t budget = std::uint64_t{1} << 20);

/// Brute force at v's level: every column of that level is A v for some A.
bool generates_at_level(const DeltaElement& v, std::uint64_t budget = std::uint64_t{1} << 20);

/// Every nonzero column at every level <= K generates. Vacuous unless S is
/// simple.
CheckReport delta_simple_check(const FiniteModule& s, std::size_t n, std::size_t max_level);

/// No nonzero A in M_{n^k}(R), k <= K, kills M^(n^k). Vacuous unless M is
/// faithful.
CheckReport delta_faithful_check(const FiniteModule& m, std::size_t n, std::size_t max_level);

/// Delta(M) (+) Delta(N) -> Delta(M (+) N), zipping columns at a common level:
/// a bijection on columns of every level <= K, and action preserving on
/// `samples` seeded triples.
CheckReport delta_coproduct_check(const FiniteModule& m, const FiniteModule& other, std::size_t n,
                                  std::size_t max_level, std::size_t samples = 500,
                                  std::uint64_t seed = 1);

}  // namespace matclose
