#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matclose/closure.hpp"
#include "matclose/report.hpp"
#include "matclose/ring.hpp"

namespace matclose {

class Rng;

enum class Side { Left, Right, TwoSided };
std::string to_string(Side s);

/// An ideal of an enumerable ring, stored as a membership mask over the
/// ring's element indices.
class FiniteIdeal {
 public:
  FiniteIdeal(Ring ring, Side side, std::vector<bool> mask);

  const Ring& ring() const { return ring_; }
  Side side() const { return side_; }
  const std::vector<bool>& mask() const { return mask_; }

  bool contains(const Value& a) const { return mask_[ring_.index_of(a)]; }
  std::size_t size() const;
  std::vector<Value> members() const;
  bool is_subset_of(const FiniteIdeal& other) const;
  bool is_zero() const { return size() == 1; }
  bool is_whole() const { return size() == mask_.size(); }

  /// Contains 0, closed under +, absorbs multiplication on the declared
  /// side(s). Exhaustive.
  bool satisfies_axioms() const;

  /// "{0,2}"
  std::string str() const;

  friend bool operator==(const FiniteIdeal& a, const FiniteIdeal& b) {
    return a.ring_ == b.ring_ && a.side_ == b.side_ && a.mask_ == b.mask_;
  }

 private:
  Ring ring_;
  Side side_;
  std::vector<bool> mask_;
};

/// Smallest ideal of the given side containing `generators`.
FiniteIdeal generate_ideal(const Ring& ring, Side side, const std::vector<Value>& generators);

/// All ideals of the given side, sorted by size (a linear extension of
/// inclusion) and then by mask. Requires order <= max_order.
std::vector<FiniteIdeal> enumerate_ideals(const Ring& ring, Side side, std::uint64_t max_order = 64);

/// Inclusion-maximal proper members of `ideals`.
std::vector<FiniteIdeal> maximal_ideals(const std::vector<FiniteIdeal>& ideals);

/// MC_n(I) as a membership predicate: a closure element belongs iff every
/// entry of its body lies in I. Lifting only copies entries and adds zeros,
/// so the canonical body decides membership at every level.
struct ClosureIdealView {
  FiniteIdeal base;
  std::size_t n;

  bool contains(const ClosureElement& x) const;
};

bool closure_membership(const ClosureElement& x, const ClosureIdealView& view);

/// Two-sided ideal of R generated by every entry of every generator's body.
/// Entry (i, j) of X is the (1,1) entry of e_{1i} X e_{j1}, so this is the
/// ideal of R corresponding to the two-sided ideal the generators span.
FiniteIdeal extract_ideal(const Ring& base, const std::vector<ClosureElement>& generators);

struct CheckReport {
  std::vector<Record> records;
  bool passed() const;
};

/// Two-sided ideal lattice of R against MC_n(R):
///  * extract_ideal(MC_n(I)) == I for every ideal I,
///  * I <= J iff MC_n(I) <= MC_n(J), on every class of level <= K,
///  * I != J gives views that differ on a level-0 element,
///  * MC_n(I) absorbs products on both sides (sampled),
///  * entry extraction / reconstruction through matrix units,
///  * at levels whose matrix ring has <= 4096 elements, the ideal generated
///    by a sampled X is exactly M_{n^L}(extract({X})).
/// Requires order(R) <= 16.
CheckReport lattice_iso_roundtrip(const Ring& ring, std::size_t n, std::size_t max_level,
                                  std::uint64_t seed = 1);

/// MC_n(I) is a left, right or two-sided ideal of MC_n(R) for every ideal I
/// of the given side: closure under + and absorption on sampled elements of
/// level <= K.
CheckReport closure_ideal_check(const Ring& ring, std::size_t n, Side side, std::size_t max_level,
                                Rng& rng, std::size_t samples);

struct ChainReport {
  std::vector<Record> records;
  std::size_t strict_descents = 0;
  /// One-based (row, col) of the entry proving strictness at each step.
  std::vector<std::pair<std::size_t, std::size_t>> strictness_witnesses;
};

/// The chain I_k = MC_n(R) i_k(e^{n^k}_{11}), k < depth. Step k records
///  * containment: e^{n^(k+1)}_{11} = e^{n^(k+1)}_{11} * i_k(e^{n^k}_{11}),
///  * strictness: the lift of i_k(e^{n^k}_{11}) to level k+1 has a nonzero
///    entry outside column 1. Left multiples of e^{n^(k+1)}_{11} are
///    supported on columns divisible by n^(k+1) (zero-based) at every level,
///    while the lift of e^{n^k}_{11} has a 1 in column n^k, so it is not in
///    I_{k+1} although it is in I_k.
/// Throws DomainError for the zero ring.
ChainReport idempotent_chain(const Ring& ring, std::size_t n, std::size_t depth);

/// Level-wise left ideals I_k of M_{n^k}(R).
struct LevelIdealFamily {
  std::string name;
  std::function<bool(std::size_t level, const Matrix& a)> contains;
};

/// I_k = {A : the first column of A is zero}.
LevelIdealFamily column_zero_family();

/// I_k = {A : every entry of the first column lies in m}. For a maximal left
/// ideal m of R this is a maximal left ideal of M_k(R): rows of Z A are left
/// combinations of rows of A, and R^k / {first coordinate in m} is R/m.
LevelIdealFamily column_in_ideal_family(const FiniteIdeal& m);

/// The union I of w_k(I_k) for an ascending family, verified up to level K:
/// compatibility w_k(I_k) <= w_{k+1}(I_{k+1}); each I_k is a left ideal;
/// I is closed under + and left multiplication (sampled); 1 is not in I;
/// and for every A outside I_k (all, or `samples` of them on large levels)
/// an explicit z with 1 - zA in I_k, i.e. I_k + M_{n^k}(R)A = M_{n^k}(R).
/// The z search visits at most `search_budget` candidates per A; running out
/// gives an undecided record.
CheckReport maximal_family_union(const Ring& ring, std::size_t n, const LevelIdealFamily& family,
                                 std::size_t max_level, Rng& rng, std::size_t samples = 32,
                                 std::uint64_t search_budget = std::uint64_t{1} << 16);

}  // namespace matclose
