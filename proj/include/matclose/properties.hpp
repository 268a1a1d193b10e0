#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "matclose/closure.hpp"
#include "matclose/ideals.hpp"
#include "matclose/matrix.hpp"
#include "matclose/report.hpp"
#include "matclose/ring.hpp"

namespace matclose {

/// {x : 1 - r x is a unit for every r}, by brute force. Requires
/// order <= max_order.
FiniteIdeal jacobson_radical(const Ring& ring, std::uint64_t max_order = 64);

/// Intersection of the maximal left ideals (order <= 16). Cross-check for
/// `jacobson_radical`.
FiniteIdeal radical_by_maximal_ideals(const Ring& ring);

/// J(M_{n^k}(R)) == M_{n^k}(J(R)) for k <= K.
///
/// Levels whose matrix ring has at most 4096 elements are decided by
/// quasiregularity over the whole matrix ring. Larger levels use a
/// certificate: I - A is invertible for every A in M(J) (enumerated up to
/// 4096 members, sampled beyond), so the ideal M(J) is quasiregular; and for
/// every a outside J some r makes I - r a e_11 singular, so no matrix with
/// an entry outside J is in the radical (the radical is two-sided and
/// e_1i A e_j1 = a_ij e_11).
CheckReport closure_radical_check(const Ring& ring, std::size_t n, std::size_t max_level);

PropertyVerdict is_semiprime(const Ring& ring);
PropertyVerdict is_prime(const Ring& ring);

/// Every nonzero A in M_{n^k}(R), k <= K, has Z with A Z A != 0 (resp. every
/// nonzero pair A, B has A Z B != 0). Vacuous when R is not semiprime
/// (resp. prime). Candidates Z are tried as r e_ij first.
CheckReport closure_semiprime_check(const Ring& ring, std::size_t n, std::size_t max_level);
CheckReport closure_prime_check(const Ring& ring, std::size_t n, std::size_t max_level);

PropertyVerdict is_von_neumann_regular(const Ring& ring);

/// Y with A Y A = A for a square matrix A. Structural for products, prime
/// fields (P A Q = D), squarefree Z/m (CRT) and matrix base rings
/// (flattening); brute force over M_k(R) otherwise (at most 2^20 matrices).
/// Returns nullopt when no Y exists.
std::optional<Matrix> matrix_vnr_witness(const Matrix& a);

/// y at x's level with x y x = x, verified before returning. Throws
/// DomainError if the base ring has no witness for x.
ClosureElement closure_vnr_witness(const ClosureElement& x);

/// A in M_{rows x cols}(R), B in M_{cols x rows}(R) with AB = I and BA = I,
/// searched in index order. Throws BoundExceeded if the candidate count
/// exceeds `budget`.
std::optional<std::pair<Matrix, Matrix>> find_rectangular_inverse_pair(const Ring& ring,
                                                                      std::size_t rows,
                                                                      std::size_t cols,
                                                                      std::uint64_t budget);

/// No A in M_{r x s}(M_{n^K}(R)), B in M_{s x r}(M_{n^K}(R)) with AB = I,
/// BA = I and r != s, for r <= r_max, s <= s_max. Pairs are searched in
/// flattened form as R-matrices of size n^K r x n^K s. Beyond `budget` a finite
/// nonzero R is settled by cardinality; other rings are Undecided.
PropertyVerdict ibn_check(const Ring& ring, std::size_t n, std::size_t r_max, std::size_t s_max,
                          std::size_t level, std::uint64_t budget = std::uint64_t{1} << 24);

PropertyVerdict is_semisimple(const Ring& ring);

}  // namespace matclose
