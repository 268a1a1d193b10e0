#include "matclose/matrix.hpp"

#include <algorithm>

#include "internal.hpp"

namespace matclose {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DomainError("matrix entry count does not match " + std::to_string(rows_) + "x" +
                      std::to_string(cols_));
  }
}

Matrix Matrix::identity(const Ring& ring, std::size_t k) { return scalar(ring, k, ring.one()); }

Matrix Matrix::scalar(const Ring& ring, std::size_t k, const Value& a) {
  Matrix m(ring, k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, a);
  return m;
}

Matrix Matrix::from_value(const Ring& matrix_ring, const Value& v) {
  if (matrix_ring.kind() != RingKind::Matrix) {
    throw DomainError(matrix_ring.name() + " is not a matrix ring");
  }
  const std::size_t k = matrix_ring.size();
  return Matrix(matrix_ring.inner(), k, k, v.parts);
}

Matrix Matrix::parse(const Ring& ring, std::string_view text) {
  detail::Cursor cur(text);
  std::size_t rows = 0, cols = 0;
  auto entries = detail::parse_matrix_literal(ring, cur, rows, cols);
  cur.expect_end();
  return Matrix(ring, rows, cols, std::move(entries));
}

Value Matrix::to_value() const {
  if (!square()) throw DomainError("only square matrices are ring elements");
  return Value(entries_);
}

Matrix Matrix::kron_identity(std::size_t count) const {
  Matrix out(ring_, rows_ * count, cols_ * count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t s = 0; s < cols_; ++s) {
        out.set(a * rows_ + r, a * cols_ + s, at(r, s));
      }
    }
  }
  return out;
}

std::optional<Matrix> Matrix::strip_kron_identity(std::size_t n) const {
  if (!square() || n == 0 || rows_ % n != 0) return std::nullopt;
  const std::size_t m = rows_ / n;
  const Value zero = ring_.zero();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          const Value& e = at(a * m + r, b * m + s);
          if (a == b ? e != at(r, s) : e != zero) return std::nullopt;
        }
      }
    }
  }
  Matrix block(ring_, m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) block.set(r, s, at(r, s));
  }
  return block;
}

bool Matrix::is_zero() const {
  const Value zero = ring_.zero();
  return std::all_of(entries_.begin(), entries_.end(), [&](const Value& v) { return v == zero; });
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ",";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ",";
      out += ring_.format(at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("dimension mismatch in add");
  std::vector<Value> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().add(a.entries()[i], b.entries()[i]);
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a) {
  std::vector<Value> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.ring().neg(a.entries()[i]);
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows()) throw DomainError("dimension mismatch in multiply");
  const Ring& ring = a.ring();
  Matrix out(ring, a.rows(), b.cols());
  std::vector<Value> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), ring.zero());
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Value& ail = a.at(i, l);
      if (ring.is_zero(ail)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = ring.add(acc[j], ring.mul(ail, b.at(l, j)));
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, std::move(acc[j]));
  }
  return out;
}

Matrix matrix_unit(const Ring& ring, std::size_t k, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > k || j > k) {
    throw DomainError("matrix unit index out of range: e^" + std::to_string(k) + "_{" +
                      std::to_string(i) + "," + std::to_string(j) + "}");
  }
  Matrix m(ring, k, k);
  m.set(i - 1, j - 1, ring.one());
  return m;
}

// ---------------------------------------------------------------------------
// Inversion

namespace {

constexpr std::uint64_t kBruteBaseOrder = 8;
constexpr std::size_t kBruteSize = 4;

std::optional<Matrix> gauss_jordan_inverse(const Matrix& a) {
  const Ring& f = a.ring();
  const std::size_t k = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(f, k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && f.is_zero(work.at(pivot, col))) ++pivot;
    if (pivot == k) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) {
        Value t = work.at(col, c);
        work.set(col, c, work.at(pivot, c));
        work.set(pivot, c, std::move(t));
        t = inv.at(col, c);
        inv.set(col, c, inv.at(pivot, c));
        inv.set(pivot, c, std::move(t));
      }
    }
    const Value scale = *unit_inverse(f, work.at(col, col));
    for (std::size_t c = 0; c < k; ++c) {
      work.set(col, c, f.mul(scale, work.at(col, c)));
      inv.set(col, c, f.mul(scale, inv.at(col, c)));
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || f.is_zero(work.at(r, col))) continue;
      const Value factor = work.at(r, col);
      for (std::size_t c = 0; c < k; ++c) {
        work.set(r, c, f.sub(work.at(r, c), f.mul(factor, work.at(col, c))));
        inv.set(r, c, f.sub(inv.at(r, c), f.mul(factor, inv.at(col, c))));
      }
    }
  }
  return inv;
}

// Solves A b = e_j for each column j by enumerating R^k.
std::optional<Matrix> column_search_inverse(const Matrix& a) {
  const Ring& ring = a.ring();
  const std::size_t k = a.rows();
  if (ring.order() > kBruteBaseOrder || k > kBruteSize) {
    throw BoundExceeded("brute-force inverse limited to base order <= 8 and size <= 4 (got " +
                        ring.name() + ", size " + std::to_string(k) + ")");
  }
  const std::uint64_t base = ring.order();
  const std::uint64_t candidates = detail::checked_pow(base, k);
  Matrix result(ring, k, k);
  Matrix column(ring, k, 1);
  for (std::size_t j = 0; j < k; ++j) {
    bool found = false;
    for (std::uint64_t idx = 0; idx < candidates && !found; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < k; ++i) {
        column.set(i, 0, ring.element_at(rest % base));
        rest /= base;
      }
      Matrix image = a * column;
      bool hit = true;
      for (std::size_t i = 0; i < k && hit; ++i) {
        hit = image.at(i, 0) == (i == j ? ring.one() : ring.zero());
      }
      if (hit) {
        for (std::size_t i = 0; i < k; ++i) result.set(i, j, column.at(i, 0));
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return result;
}

Matrix split_product(const Matrix& a, std::size_t side) {
  const Ring& factor = side == 0 ? a.ring().left() : a.ring().right();
  std::vector<Value> entries;
  entries.reserve(a.entries().size());
  for (const auto& v : a.entries()) entries.push_back(v.parts[side]);
  return Matrix(factor, a.rows(), a.cols(), std::move(entries));
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw DomainError("only square matrices can be inverted");
  const Ring& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Modular:
      if (ring.is_prime_field()) return gauss_jordan_inverse(a);
      return column_search_inverse(a);
    case RingKind::Product: {
      auto l = inverse(split_product(a, 0));
      if (!l) return std::nullopt;
      auto r = inverse(split_product(a, 1));
      if (!r) return std::nullopt;
      std::vector<Value> entries(a.entries().size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i] = Value(std::vector<Value>{l->entries()[i], r->entries()[i]});
      }
      return Matrix(ring, a.rows(), a.cols(), std::move(entries));
    }
    case RingKind::Matrix: {
      auto flat = inverse(flatten(a));
      if (!flat) return std::nullopt;
      return unflatten(*flat, ring.size());
    }
    case RingKind::CyclicGroup:
      if (!ring.enumerable()) break;
      return column_search_inverse(a);
    default:
      break;
  }
  throw NotDecidable("matrix invertibility not decidable over " + ring.name());
}

// ---------------------------------------------------------------------------
// Block identification

Matrix flatten(const Matrix& blocks) {
  const Ring& outer = blocks.ring();
  if (outer.kind() != RingKind::Matrix) {
    throw DomainError("flatten needs a matrix over a matrix ring, got entries in " + outer.name());
  }
  const std::size_t m = outer.size();
  const Ring& base = outer.inner();
  Matrix out(base, blocks.rows() * m, blocks.cols() * m);
  for (std::size_t a = 0; a < blocks.rows(); ++a) {
    for (std::size_t b = 0; b < blocks.cols(); ++b) {
      const Value& block = blocks.at(a, b);
      if (block.parts.size() != m * m) throw DomainError("flatten: entry dimension mismatch");
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) out.set(a * m + r, b * m + s, block.parts[r * m + s]);
      }
    }
  }
  return out;
}

Matrix unflatten(const Matrix& flat, std::size_t m) {
  if (m == 0 || flat.rows() % m != 0 || flat.cols() % m != 0) {
    throw DomainError("unflatten: dimensions not divisible by block size " + std::to_string(m));
  }
  const Ring outer = Ring::matrix(flat.ring(), m);
  Matrix out(outer, flat.rows() / m, flat.cols() / m);
  for (std::size_t a = 0; a < out.rows(); ++a) {
    for (std::size_t b = 0; b < out.cols(); ++b) {
      std::vector<Value> block(m * m);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) block[r * m + s] = flat.at(a * m + r, b * m + s);
      }
      out.set(a, b, Value(std::move(block)));
    }
  }
  return out;
}

}  // namespace matclose
