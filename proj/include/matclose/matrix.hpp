#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matclose/ring.hpp"

namespace matclose {

/// rows x cols array of elements of one ring, row-major. Square matrices of
/// size k are the elements of M_k(R) (see `to_value` / `from_value`).
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  static Matrix identity(const Ring& ring, std::size_t k);
  static Matrix scalar(const Ring& ring, std::size_t k, const Value& a);
  /// Reinterprets an element of `matrix_ring` = M_k(R) as a k x k matrix over R.
  static Matrix from_value(const Ring& matrix_ring, const Value& v);
  static Matrix parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Value& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Value v) { entries_[r * cols_ + c] = std::move(v); }
  const std::vector<Value>& entries() const { return entries_; }

  /// Payload of this matrix as an element of M_k(R). Requires square.
  Value to_value() const;

  /// I_count (x) this: block diagonal with `count` copies. Block (a, b) holds
  /// entry (a*rows + r, b*cols + s), zero-based.
  Matrix kron_identity(std::size_t count) const;
  /// B with this == I_n (x) B, if this has that shape.
  std::optional<Matrix> strip_kron_identity(std::size_t n) const;

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// e^k_{ij}: 1 at (i, j), zero elsewhere. Indices are one-based, 1 <= i, j <= k.
Matrix matrix_unit(const Ring& ring, std::size_t k, std::size_t i, std::size_t j);

/// Two-sided inverse, if any.
///
/// Prime fields use Gauss-Jordan elimination; matrix and product base rings
/// reduce to their constituents; any other enumerable base ring is searched
/// column by column (A b = e_j over R^k), limited to base order <= 8 and
/// size <= 4. A right inverse in M_k(R) is two-sided because M_k(R) is finite.
/// Throws NotDecidable for infinite base rings and BoundExceeded beyond the
/// brute-force limits.
std::optional<Matrix> inverse(const Matrix& a);

/// M_n(M_m(R)) -> M_{nm}(R) (also for rectangular block matrices). Block
/// entry (a, b) with inner position (r, s) lands at (a*m + r, b*m + s).
Matrix flatten(const Matrix& blocks);
/// Inverse of `flatten` for inner block size m.
Matrix unflatten(const Matrix& flat, std::size_t m);

}  // namespace matclose
