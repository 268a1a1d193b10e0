#include "matclose/properties.hpp"

#include <algorithm>

#include "internal.hpp"
#include "matclose/sampling.hpp"

namespace matclose {

namespace {

std::vector<bool> unit_mask(const Ring& ring, const std::vector<Value>& all) {
  std::vector<bool> mask(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) mask[i] = is_unit(ring, all[i]);
  return mask;
}

void require_order(const Ring& ring, std::uint64_t max_order, const char* what) {
  if (!ring.enumerable()) throw NotEnumerable(std::string(what) + ": " + ring.name() + " is infinite");
  if (ring.order() > max_order) {
    throw BoundExceeded(std::string(what) + " limited to order <= " + std::to_string(max_order) +
                        ", " + ring.name() + " has " + std::to_string(ring.order()));
  }
}

bool entries_in(const Value& matrix_value, const FiniteIdeal& ideal) {
  return std::all_of(matrix_value.parts.begin(), matrix_value.parts.end(),
                     [&](const Value& e) { return ideal.contains(e); });
}

Record verdict_record(std::string check, const Ring& ring, Verdict v, std::string witness) {
  return {std::move(check), ring.name(), 0, -1, v, std::move(witness), 0.0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Radical

FiniteIdeal jacobson_radical(const Ring& ring, std::uint64_t max_order) {
  require_order(ring, max_order, "jacobson_radical");
  const auto all = ring.elements();
  const auto units = unit_mask(ring, all);
  const Value one = ring.one();
  std::vector<bool> mask(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool quasiregular = true;
    for (const auto& r : all) {
      if (!units[ring.index_of(ring.sub(one, ring.mul(r, all[i])))]) {
        quasiregular = false;
        break;
      }
    }
    mask[i] = quasiregular;
  }
  return FiniteIdeal(ring, Side::TwoSided, std::move(mask));
}

FiniteIdeal radical_by_maximal_ideals(const Ring& ring) {
  require_order(ring, 16, "radical_by_maximal_ideals");
  const auto maximal = maximal_ideals(enumerate_ideals(ring, Side::Left));
  std::vector<bool> mask(ring.order(), true);
  for (const auto& m : maximal) {
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] && m.mask()[i];
  }
  return FiniteIdeal(ring, Side::TwoSided, std::move(mask));
}

CheckReport closure_radical_check(const Ring& ring, std::size_t n, std::size_t max_level) {
  CheckReport report;
  const FiniteIdeal j = jacobson_radical(ring);
  report.records.push_back(make_record("radical.base", ring.name(), n, -1, j.satisfies_axioms(),
                                       "J=" + j.str()));
  const Value one = ring.one();
  const auto all = ring.elements();
  const auto members = j.members();
  Rng rng(1);

  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const Ring s = Ring::matrix(ring, side);
    const auto lvl = static_cast<std::int64_t>(k);
    const std::string check = "radical.level";
    try {
      if (s.order() <= 4096) {
        const FiniteIdeal js = jacobson_radical(s, 4096);
        bool equal = true;
        std::string witness = "|J(M)|=" + std::to_string(js.size()) + " J=" + j.str();
        for (std::uint64_t idx = 0; idx < s.order(); ++idx) {
          const Value a = s.element_at(idx);
          if (js.mask()[idx] != entries_in(a, j)) {
            equal = false;
            witness = "A=" + s.format(a);
            break;
          }
        }
        report.records.push_back(make_record(check, ring.name(), n, lvl, equal, witness));
        continue;
      }

      // Certificate route.
      const Matrix id = Matrix::identity(ring, side);
      const std::size_t cells = side * side;
      const std::uint64_t ideal_count = detail::checked_pow(members.size(), cells);
      const bool exhaustive = ideal_count <= 4096;
      const std::uint64_t visits = exhaustive ? ideal_count : 256;
      bool ok = true;
      std::string witness;
      for (std::uint64_t t = 0; t < visits && ok; ++t) {
        std::vector<Value> entries(cells);
        std::uint64_t code = t;
        for (auto& e : entries) {
          if (exhaustive) {
            e = members[code % members.size()];
            code /= members.size();
          } else {
            e = members[rng.below(members.size())];
          }
        }
        const Matrix a(ring, side, side, std::move(entries));
        if (!inverse(id - a)) {
          ok = false;
          witness = "I-A singular for A=" + a.str();
        }
      }
      for (const auto& a : all) {
        if (!ok || j.contains(a)) continue;
        bool singular_found = false;
        for (const auto& r : all) {
          Matrix m = id;
          m.set(0, 0, ring.sub(one, ring.mul(r, a)));
          if (!inverse(m)) {
            singular_found = true;
            break;
          }
        }
        if (!singular_found) {
          ok = false;
          witness = "no r makes I - r a e11 singular for a=" + ring.format(a);
        }
      }
      if (ok) {
        witness = std::string("certificate: ") + (exhaustive ? "all " : "sampled ") +
                  std::to_string(visits) + " of M(J) quasiregular, J=" + j.str();
      }
      report.records.push_back(make_record(check, ring.name(), n, lvl, ok, witness));
    } catch (const BoundExceeded& e) {
      report.records.push_back({check, ring.name(), n, lvl, Verdict::Undecided, e.what(), 0.0});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Semiprime / prime

PropertyVerdict is_semiprime(const Ring& ring) {
  require_order(ring, 4096, "is_semiprime");
  const auto all = ring.elements();
  for (const auto& a : all) {
    if (ring.is_zero(a)) continue;
    const bool kills = std::all_of(all.begin(), all.end(), [&](const Value& r) {
      return ring.is_zero(ring.mul(ring.mul(a, r), a));
    });
    if (kills) return verdict_record("semiprime", ring, Verdict::Fails, "a=" + ring.format(a));
  }
  return verdict_record("semiprime", ring, Verdict::Holds, "aRa=0 only for a=0");
}

PropertyVerdict is_prime(const Ring& ring) {
  require_order(ring, 256, "is_prime");
  const auto all = ring.elements();
  for (const auto& a : all) {
    if (ring.is_zero(a)) continue;
    for (const auto& b : all) {
      if (ring.is_zero(b)) continue;
      const bool kills = std::all_of(all.begin(), all.end(), [&](const Value& r) {
        return ring.is_zero(ring.mul(ring.mul(a, r), b));
      });
      if (kills) {
        return verdict_record("prime", ring, Verdict::Fails,
                              "(" + ring.format(a) + "," + ring.format(b) + ")");
      }
    }
  }
  return verdict_record("prime", ring, Verdict::Holds, "aRb=0 only for a=0 or b=0");
}

namespace {

// r e_ij for all r, i, j, followed by every element of M_side(R).
std::vector<Matrix> sandwich_candidates(const Ring& ring, std::size_t side) {
  std::vector<Matrix> out;
  for (const auto& r : ring.elements()) {
    if (ring.is_zero(r)) continue;
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        Matrix m(ring, side, side);
        m.set(i, j, r);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

bool has_nonzero_sandwich(const Matrix& a, const Matrix& b, const std::vector<Matrix>& quick,
                          const Ring& s) {
  for (const auto& z : quick) {
    if (!(a * z * b).is_zero()) return true;
  }
  for (std::uint64_t i = 0; i < s.order(); ++i) {
    if (!(a * Matrix::from_value(s, s.element_at(i)) * b).is_zero()) return true;
  }
  return false;
}

constexpr std::uint64_t kLevelEnumeration = std::uint64_t{1} << 16;

// For levels too large to enumerate. Given nonzero A, B pick A_ij != 0 and
// B_pl != 0; the base property yields r with A_ij r B_pl != 0, and then
// A (r e_jp) B has that value at (i, l). The construction is run on sampled
// pairs (A = B when `same`) and every sandwich is checked to be nonzero.
Record entrywise_certificate(const std::string& check, const Ring& ring, std::size_t n, std::size_t k,
                             std::size_t side, bool same) {
  const auto elems = ring.elements();
  Rng rng(0x9e3779b97f4a7c15ULL ^ (side * 131 + (same ? 1 : 0)));
  auto sample_nonzero = [&] {
    for (;;) {
      std::vector<Value> entries(side * side);
      for (auto& e : entries) e = rng.coin() ? ring.zero() : elems[rng.below(elems.size())];
      Matrix m(ring, side, side, std::move(entries));
      if (!m.is_zero()) return m;
    }
  };
  auto first_nonzero = [side](const Matrix& m) {
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j)
        if (!m.ring().is_zero(m.at(i, j))) return std::make_pair(i, j);
    return std::make_pair(side, side);
  };
  constexpr int kSamples = 200;
  for (int t = 0; t < kSamples; ++t) {
    const Matrix a = sample_nonzero();
    const Matrix b = same ? a : sample_nonzero();
    const auto [i, j] = first_nonzero(a);
    const auto [p, l] = first_nonzero(b);
    bool found = false;
    for (const auto& r : elems) {
      if (ring.is_zero(ring.mul(ring.mul(a.at(i, j), r), b.at(p, l)))) continue;
      Matrix z(ring, side, side);
      z.set(j, p, r);
      found = !(a * z * b).is_zero();
      break;
    }
    if (!found) {
      return {check, ring.name(), n, static_cast<std::int64_t>(k), Verdict::Fails,
              "A=" + a.str() + " B=" + b.str(), 0.0};
    }
  }
  return {check, ring.name(), n, static_cast<std::int64_t>(k), Verdict::Holds,
          "entrywise certificate r e_jp from the base property; construction verified on " +
              std::to_string(kSamples) + " sampled pairs",
          0.0};
}

}  // namespace

CheckReport closure_semiprime_check(const Ring& ring, std::size_t n, std::size_t max_level) {
  CheckReport report;
  const PropertyVerdict base = is_semiprime(ring);
  if (base.verdict != Verdict::Holds) {
    report.records.push_back({"semiprime.level", ring.name(), n, -1, Verdict::Vacuous,
                              "base not semiprime, " + base.witness, 0.0});
    return report;
  }
  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const Ring s = Ring::matrix(ring, side);
    const auto lvl = static_cast<std::int64_t>(k);
    if (!s.enumerable() || s.order() > kLevelEnumeration) {
      report.records.push_back(entrywise_certificate("semiprime.level", ring, n, k, side, true));
      continue;
    }
    const auto quick = sandwich_candidates(ring, side);
    bool ok = true;
    std::string witness = std::to_string(s.order() - 1) + " nonzero matrices";
    for (std::uint64_t i = 1; i < s.order() && ok; ++i) {
      const Matrix a = Matrix::from_value(s, s.element_at(i));
      if (!has_nonzero_sandwich(a, a, quick, s)) {
        ok = false;
        witness = "A=" + a.str();
      }
    }
    report.records.push_back(make_record("semiprime.level", ring.name(), n, lvl, ok, witness));
  }
  return report;
}

CheckReport closure_prime_check(const Ring& ring, std::size_t n, std::size_t max_level) {
  CheckReport report;
  const PropertyVerdict base = is_prime(ring);
  if (base.verdict != Verdict::Holds) {
    report.records.push_back({"prime.level", ring.name(), n, -1, Verdict::Vacuous,
                              "base not prime, " + base.witness, 0.0});
    return report;
  }
  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const Ring s = Ring::matrix(ring, side);
    const auto lvl = static_cast<std::int64_t>(k);
    if (!s.enumerable() || s.order() > 4096) {
      report.records.push_back(entrywise_certificate("prime.level", ring, n, k, side, false));
      continue;
    }
    const auto quick = sandwich_candidates(ring, side);
    bool ok = true;
    std::string witness = std::to_string(s.order() - 1) + " nonzero matrices, all pairs";
    for (std::uint64_t i = 1; i < s.order() && ok; ++i) {
      const Matrix a = Matrix::from_value(s, s.element_at(i));
      for (std::uint64_t j = 1; j < s.order(); ++j) {
        const Matrix b = Matrix::from_value(s, s.element_at(j));
        if (!has_nonzero_sandwich(a, b, quick, s)) {
          ok = false;
          witness = "A=" + a.str() + " B=" + b.str();
          break;
        }
      }
    }
    report.records.push_back(make_record("prime.level", ring.name(), n, lvl, ok, witness));
  }
  return report;
}

// ---------------------------------------------------------------------------
// von Neumann regularity

PropertyVerdict is_von_neumann_regular(const Ring& ring) {
  require_order(ring, 4096, "is_von_neumann_regular");
  const auto all = ring.elements();
  for (const auto& a : all) {
    const bool found = std::any_of(all.begin(), all.end(), [&](const Value& x) {
      return ring.mul(ring.mul(a, x), a) == a;
    });
    if (!found) return verdict_record("vnr", ring, Verdict::Fails, "a=" + ring.format(a));
  }
  return verdict_record("vnr", ring, Verdict::Holds, "every a has x with axa=a");
}

namespace {

// Over a prime field: P A Q = diag(1,..,1,0,..,0) by elimination, and then
// Y = Q D P satisfies A Y A = P^-1 D^3 Q^-1 = A.
Matrix field_vnr_witness(const Matrix& a) {
  const Ring& f = a.ring();
  const std::size_t k = a.rows();
  Matrix m = a;
  Matrix p = Matrix::identity(f, k);
  Matrix q = Matrix::identity(f, k);
  auto swap_rows = [k](Matrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < k; ++c) {
      Value t = x.at(i, c);
      x.set(i, c, x.at(j, c));
      x.set(j, c, std::move(t));
    }
  };
  auto swap_cols = [k](Matrix& x, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < k; ++r) {
      Value t = x.at(r, i);
      x.set(r, i, x.at(r, j));
      x.set(r, j, std::move(t));
    }
  };
  // row_i += c * row_j
  auto row_op = [&f, k](Matrix& x, std::size_t i, std::size_t j, const Value& c) {
    for (std::size_t col = 0; col < k; ++col) x.set(i, col, f.add(x.at(i, col), f.mul(c, x.at(j, col))));
  };
  auto col_op = [&f, k](Matrix& x, std::size_t i, std::size_t j, const Value& c) {
    for (std::size_t r = 0; r < k; ++r) x.set(r, i, f.add(x.at(r, i), f.mul(x.at(r, j), c)));
  };

  std::size_t rank = 0;
  for (; rank < k; ++rank) {
    std::size_t pi = k;
    std::size_t pj = k;
    for (std::size_t i = rank; i < k && pi == k; ++i) {
      for (std::size_t j = rank; j < k; ++j) {
        if (!f.is_zero(m.at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == k) break;
    swap_rows(m, rank, pi);
    swap_rows(p, rank, pi);
    swap_cols(m, rank, pj);
    swap_cols(q, rank, pj);
    const Value inv = *unit_inverse(f, m.at(rank, rank));
    for (std::size_t c = 0; c < k; ++c) {
      m.set(rank, c, f.mul(inv, m.at(rank, c)));
      p.set(rank, c, f.mul(inv, p.at(rank, c)));
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == rank || f.is_zero(m.at(i, rank))) continue;
      const Value c = f.neg(m.at(i, rank));
      row_op(m, i, rank, c);
      row_op(p, i, rank, c);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (j == rank || f.is_zero(m.at(rank, j))) continue;
      const Value c = f.neg(m.at(rank, j));
      col_op(m, j, rank, c);
      col_op(q, j, rank, c);
    }
  }
  Matrix d(f, k, k);
  for (std::size_t i = 0; i < rank; ++i) d.set(i, i, f.one());
  return q * d * p;
}

std::vector<std::int64_t> squarefree_primes(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return {};
    out.push_back(p);
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::optional<Matrix> brute_vnr_witness(const Matrix& a) {
  const Ring s = Ring::matrix(a.ring(), a.rows());
  if (!s.enumerable() || s.order() > (std::uint64_t{1} << 20)) {
    throw BoundExceeded("von Neumann witness search over " + s.name() + " exceeds 2^20 candidates");
  }
  for (std::uint64_t i = 0; i < s.order(); ++i) {
    Matrix y = Matrix::from_value(s, s.element_at(i));
    if (a * y * a == a) return y;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Matrix> matrix_vnr_witness(const Matrix& a) {
  if (!a.square()) throw DomainError("von Neumann witness needs a square matrix");
  const Ring& ring = a.ring();
  const std::size_t k = a.rows();
  switch (ring.kind()) {
    case RingKind::Product: {
      std::vector<Value> left;
      std::vector<Value> right;
      for (const auto& e : a.entries()) {
        left.push_back(e.parts[0]);
        right.push_back(e.parts[1]);
      }
      auto yl = matrix_vnr_witness(Matrix(ring.left(), k, k, std::move(left)));
      if (!yl) return std::nullopt;
      auto yr = matrix_vnr_witness(Matrix(ring.right(), k, k, std::move(right)));
      if (!yr) return std::nullopt;
      std::vector<Value> zipped;
      for (std::size_t i = 0; i < k * k; ++i) {
        zipped.push_back(Value(std::vector<Value>{yl->entries()[i], yr->entries()[i]}));
      }
      return Matrix(ring, k, k, std::move(zipped));
    }
    case RingKind::Modular: {
      const std::int64_t m = ring.modulus();
      if (m == 1) return a;
      if (is_prime_number(m)) return field_vnr_witness(a);
      const auto primes = squarefree_primes(m);
      if (primes.empty()) return brute_vnr_witness(a);
      // CRT: y = sum_p y_p * e_p with e_p = 1 mod p and 0 mod the other primes.
      Matrix y(ring, k, k);
      for (const auto p : primes) {
        const Ring fp = Ring::modular(p);
        std::vector<Value> reduced;
        for (const auto& e : a.entries()) reduced.push_back(Value(e.scalar % p));
        const Matrix yp = field_vnr_witness(Matrix(fp, k, k, std::move(reduced)));
        const std::int64_t cofactor = m / p;
        const Value cof_inv = *unit_inverse(fp, Value(cofactor % p));
        const Value idem = ring.mul(Value(cofactor), Value(cof_inv.scalar));
        std::vector<Value> lifted;
        for (const auto& e : yp.entries()) lifted.push_back(ring.mul(Value(e.scalar), idem));
        y = y + Matrix(ring, k, k, std::move(lifted));
      }
      return y;
    }
    case RingKind::Matrix: {
      auto flat = matrix_vnr_witness(flatten(a));
      if (!flat) return std::nullopt;
      return unflatten(*flat, ring.size());
    }
    default:
      return brute_vnr_witness(a);
  }
}

ClosureElement closure_vnr_witness(const ClosureElement& x) {
  auto y = matrix_vnr_witness(x.body());
  if (!y) throw DomainError("no von Neumann witness for " + x.str() + " over " + x.base().name());
  ClosureElement out = ClosureElement::inject(x.ring(), x.level(), std::move(*y));
  if (x * out * x != x) throw Error("von Neumann witness failed verification for " + x.str());
  return out;
}

// ---------------------------------------------------------------------------
// Invariant basis number

std::optional<std::pair<Matrix, Matrix>> find_rectangular_inverse_pair(const Ring& ring,
                                                                      std::size_t rows,
                                                                      std::size_t cols,
                                                                      std::uint64_t budget) {
  require_order(ring, std::uint64_t{1} << 20, "rectangular inverse search");
  const std::size_t cells = rows * cols;
  const std::uint64_t per_side = detail::checked_pow(ring.order(), cells);
  if (per_side > budget || per_side * per_side > budget) {
    throw BoundExceeded("rectangular inverse search needs " + std::to_string(per_side) + "^2 candidates");
  }
  const auto all = ring.elements();
  const Matrix id_rows = Matrix::identity(ring, rows);
  const Matrix id_cols = Matrix::identity(ring, cols);
  auto decode = [&](std::uint64_t code, std::size_t r, std::size_t c) {
    std::vector<Value> entries(r * c);
    for (auto& e : entries) {
      e = all[code % all.size()];
      code /= all.size();
    }
    return Matrix(ring, r, c, std::move(entries));
  };
  std::vector<Matrix> bs;
  bs.reserve(per_side);
  for (std::uint64_t j = 0; j < per_side; ++j) bs.push_back(decode(j, cols, rows));
  for (std::uint64_t i = 0; i < per_side; ++i) {
    const Matrix a = decode(i, rows, cols);
    for (const auto& b : bs) {
      if (a * b == id_rows && b * a == id_cols) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

PropertyVerdict ibn_check(const Ring& ring, std::size_t n, std::size_t r_max, std::size_t s_max,
                          std::size_t level, std::uint64_t budget) {
  const std::size_t m = level_size(n, level);
  const auto lvl = static_cast<std::int64_t>(level);
  std::string searched;
  bool undecided = false;
  for (std::size_t r = 1; r <= r_max; ++r) {
    for (std::size_t s = 1; s <= s_max; ++s) {
      if (r == s) continue;
      try {
        auto pair = find_rectangular_inverse_pair(ring, r * m, s * m, budget);
        if (pair) {
          return {"ibn", ring.name(), n, lvl, Verdict::Fails,
                  "r=" + std::to_string(r) + " s=" + std::to_string(s) + " A=" + pair->first.str() +
                      " B=" + pair->second.str(),
                  0.0};
        }
        searched += (searched.empty() ? "" : ",") + std::to_string(r) + "x" + std::to_string(s);
      } catch (const BoundExceeded&) {
        undecided = true;
      }
    }
  }
  if (undecided && ring.enumerable() && ring.order() >= 2) {
    // A pair over a finite R gives R^(rm) isomorphic to R^(sm) as sets, impossible
    // by cardinality when r != s.
    return {"ibn", ring.name(), n, lvl, Verdict::Holds,
            "cardinality certificate: |R|=" + std::to_string(ring.order()) +
                " so |R|^(r*" + std::to_string(m) + ") != |R|^(s*" + std::to_string(m) +
                ") for r != s; brute force covered " + (searched.empty() ? "none" : searched),
            0.0};
  }
  if (undecided) {
    return {"ibn", ring.name(), n, lvl, Verdict::Undecided,
            "budget " + std::to_string(budget) + " exceeded; searched " + (searched.empty() ? "none" : searched),
            0.0};
  }
  return {"ibn", ring.name(), n, lvl, Verdict::Holds,
          "no rectangular inverse pair for shapes " + (searched.empty() ? "none" : searched) +
              " over R-matrices of block size " + std::to_string(m),
          0.0};
}

PropertyVerdict is_semisimple(const Ring& ring) {
  const FiniteIdeal j = jacobson_radical(ring);
  return verdict_record("semisimple", ring, j.is_zero() ? Verdict::Holds : Verdict::Fails, "J=" + j.str());
}

}  // namespace matclose
