#include "matclose/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "matclose/sampling.hpp"

namespace matclose {

std::string to_string(Side s) {
  switch (s) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::TwoSided:
      return "two-sided";
  }
  return "?";
}

bool CheckReport::passed() const {
  return std::none_of(records.begin(), records.end(), [](const Record& r) {
    return r.verdict == Verdict::Fails || r.verdict == Verdict::Undecided;
  });
}

// ---------------------------------------------------------------------------
// FiniteIdeal

FiniteIdeal::FiniteIdeal(Ring ring, Side side, std::vector<bool> mask)
    : ring_(std::move(ring)), side_(side), mask_(std::move(mask)) {
  if (mask_.size() != ring_.order()) throw DomainError("ideal mask does not match ring order");
}

std::size_t FiniteIdeal::size() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<Value> FiniteIdeal::members() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(ring_.element_at(i));
  }
  return out;
}

bool FiniteIdeal::is_subset_of(const FiniteIdeal& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

bool FiniteIdeal::satisfies_axioms() const {
  if (!contains(ring_.zero())) return false;
  const auto mem = members();
  for (const auto& a : mem) {
    for (const auto& b : mem) {
      if (!contains(ring_.add(a, b))) return false;
    }
  }
  const auto all = ring_.elements();
  for (const auto& a : mem) {
    for (const auto& r : all) {
      if (side_ != Side::Right && !contains(ring_.mul(r, a))) return false;
      if (side_ != Side::Left && !contains(ring_.mul(a, r))) return false;
    }
  }
  return true;
}

std::string FiniteIdeal::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members()) {
    if (!first) out += ",";
    out += ring_.format(m);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Generation and enumeration

namespace {

// Elements spanning the ring additively. Absorbing these on each side is
// enough because multiplication distributes over sums.
std::vector<Value> additive_spanning_set(const Ring& ring) {
  if (ring.kind() != RingKind::Matrix) return ring.elements();
  const std::size_t k = ring.size();
  std::vector<Value> out;
  for (const auto& a : ring.inner().elements()) {
    if (ring.inner().is_zero(a)) continue;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Matrix m(ring.inner(), k, k);
        m.set(i, j, a);
        out.push_back(m.to_value());
      }
  }
  return out;
}

}  // namespace

FiniteIdeal generate_ideal(const Ring& ring, Side side, const std::vector<Value>& generators) {
  const std::uint64_t ord = ring.order();
  if (ord > (std::uint64_t{1} << 16)) {
    throw BoundExceeded("ideal generation over " + ring.name() + " exceeds bound");
  }
  const auto all = ring.elements();
  const auto span = additive_spanning_set(ring);
  std::vector<bool> mask(ord, false);
  std::vector<std::uint64_t> members;
  std::deque<Value> queue;
  // Grows the additive subgroup H to H + <g> one coset at a time.
  auto extend = [&](const Value& g) {
    if (mask[ring.index_of(g)]) return;
    std::vector<Value> multiples;
    for (Value cur = g; !mask[ring.index_of(cur)]; cur = ring.add(cur, g)) multiples.push_back(cur);
    const std::vector<std::uint64_t> old = members;
    for (const auto& m : multiples) {
      for (const auto h : old) {
        const std::uint64_t idx = ring.index_of(ring.add(all[h], m));
        if (!mask[idx]) {
          mask[idx] = true;
          members.push_back(idx);
        }
      }
    }
    queue.push_back(g);
  };
  mask[ring.index_of(ring.zero())] = true;
  members.push_back(ring.index_of(ring.zero()));
  for (const auto& g : generators) extend(g);
  while (!queue.empty()) {
    const Value x = queue.front();
    queue.pop_front();
    for (const auto& r : span) {
      if (side != Side::Right) extend(ring.mul(r, x));
      if (side != Side::Left) extend(ring.mul(x, r));
    }
  }
  return FiniteIdeal(ring, side, std::move(mask));
}

std::vector<FiniteIdeal> enumerate_ideals(const Ring& ring, Side side, std::uint64_t max_order) {
  if (!ring.enumerable()) throw NotEnumerable("ring not enumerable: " + ring.name());
  if (ring.order() > max_order) {
    throw BoundExceeded("ideal enumeration limited to order <= " + std::to_string(max_order) +
                        ", " + ring.name() + " has " + std::to_string(ring.order()));
  }
  std::map<std::vector<bool>, FiniteIdeal> found;
  std::deque<std::vector<bool>> queue;
  FiniteIdeal zero = generate_ideal(ring, side, {});
  queue.push_back(zero.mask());
  found.emplace(zero.mask(), zero);
  while (!queue.empty()) {
    const std::vector<bool> mask = queue.front();
    queue.pop_front();
    const FiniteIdeal& base = found.at(mask);
    const auto gens = base.members();
    for (std::uint64_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) continue;
      auto extended = gens;
      extended.push_back(ring.element_at(i));
      FiniteIdeal next = generate_ideal(ring, side, extended);
      if (found.emplace(next.mask(), next).second) queue.push_back(next.mask());
    }
  }
  std::vector<FiniteIdeal> out;
  for (auto& [mask, ideal] : found) out.push_back(ideal);
  std::stable_sort(out.begin(), out.end(), [](const FiniteIdeal& a, const FiniteIdeal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() > b.mask();
  });
  return out;
}

std::vector<FiniteIdeal> maximal_ideals(const std::vector<FiniteIdeal>& ideals) {
  std::vector<FiniteIdeal> out;
  for (const auto& i : ideals) {
    if (i.is_whole()) continue;
    bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const FiniteIdeal& j) {
      return !j.is_whole() && j.size() > i.size() && i.is_subset_of(j);
    });
    if (maximal) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closure views

bool ClosureIdealView::contains(const ClosureElement& x) const {
  const auto& entries = x.body().entries();
  return std::all_of(entries.begin(), entries.end(), [this](const Value& v) { return base.contains(v); });
}

bool closure_membership(const ClosureElement& x, const ClosureIdealView& view) {
  if (x.base() != view.base.ring() || x.n() != view.n) {
    throw RingMismatch("closure_membership: element of " + x.ring().name() + ", view over " +
                       view.base.ring().name() + " with n = " + std::to_string(view.n));
  }
  return view.contains(x);
}

FiniteIdeal extract_ideal(const Ring& base, const std::vector<ClosureElement>& generators) {
  std::vector<Value> entries;
  for (const auto& g : generators) {
    if (g.base() != base) throw RingMismatch("extract_ideal: generator over " + g.base().name());
    for (const auto& e : g.body().entries()) entries.push_back(e);
  }
  return generate_ideal(base, Side::TwoSided, entries);
}

namespace {

ClosureElement random_member(const Ring& closure_ring, const FiniteIdeal& ideal, Rng& rng,
                             std::size_t max_level) {
  const auto mem = ideal.members();
  const std::size_t level = rng.below(max_level + 1);
  const std::size_t side = level_size(closure_ring.size(), level);
  std::vector<Value> entries(side * side);
  for (auto& e : entries) e = mem[rng.below(mem.size())];
  return ClosureElement::inject(closure_ring, level,
                                Matrix(closure_ring.inner(), side, side, std::move(entries)));
}

// e_{1i} X e_{j1} = X_ij e_11 for all i, j, and X = sum_ij e_{i1} (X_ij e_11) e_{1j}.
bool matrix_unit_identities(const Matrix& x) {
  const Ring& r = x.ring();
  const std::size_t k = x.rows();
  Matrix rebuilt(r, k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      Matrix extracted = matrix_unit(r, k, 1, i) * x * matrix_unit(r, k, j, 1);
      Matrix expected(r, k, k);
      expected.set(0, 0, x.at(i - 1, j - 1));
      if (extracted != expected) return false;
      rebuilt = rebuilt + matrix_unit(r, k, i, 1) * extracted * matrix_unit(r, k, 1, j);
    }
  }
  return rebuilt == x;
}

}  // namespace

CheckReport lattice_iso_roundtrip(const Ring& ring, std::size_t n, std::size_t max_level,
                                  std::uint64_t seed) {
  if (ring.order() > 16) {
    throw BoundExceeded("lattice check limited to order <= 16, " + ring.name() + " has " +
                        std::to_string(ring.order()));
  }
  CheckReport report;
  const Ring mc = Ring::closure(ring, n);
  const auto ideals = enumerate_ideals(ring, Side::TwoSided);
  const auto classes = closure_classes_up_to(mc, max_level);
  const auto level = static_cast<std::int64_t>(max_level);
  Rng rng(seed);

  report.records.push_back(make_record("lattice.count", ring.name(), n, -1, true,
                                       std::to_string(ideals.size()) + " two-sided ideals"));

  std::vector<ClosureIdealView> views;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& ideal = ideals[i];
    std::vector<ClosureElement> gens;
    for (const auto& a : ideal.members()) gens.push_back(ClosureElement::scalar(mc, a));
    const FiniteIdeal back = extract_ideal(ring, gens);
    report.records.push_back(make_record("lattice.roundtrip[" + std::to_string(i) + "]", ring.name(),
                                         n, -1, back == ideal, ideal.str()));
    views.push_back({ideal, n});
  }

  // Membership matrix over every class of level <= K.
  std::vector<std::vector<bool>> in(ideals.size(), std::vector<bool>(classes.size()));
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) in[i][c] = views[i].contains(classes[c]);
  }
  bool order_ok = true;
  bool injective = true;
  std::string order_witness = std::to_string(classes.size()) + " classes";
  for (std::size_t i = 0; i < ideals.size() && order_ok; ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      bool view_subset = true;
      for (std::size_t c = 0; c < classes.size() && view_subset; ++c) {
        if (in[i][c] && !in[j][c]) view_subset = false;
      }
      if (view_subset != ideals[i].is_subset_of(ideals[j])) {
        order_ok = false;
        order_witness = ideals[i].str() + " vs " + ideals[j].str();
        break;
      }
      if (i != j) {
        bool differ = false;
        for (const auto& a : ring.elements()) {
          ClosureElement x = ClosureElement::scalar(mc, a);
          if (views[i].contains(x) != views[j].contains(x)) differ = true;
        }
        if (!differ) injective = false;
      }
    }
  }
  report.records.push_back(make_record("lattice.order", ring.name(), n, level, order_ok, order_witness));
  report.records.push_back(make_record("lattice.injective", ring.name(), n, 0, injective,
                                       "distinct ideals differ on level-0 elements"));

  bool absorbs = true;
  std::string absorb_witness = "sampled 64 products per ideal";
  for (std::size_t i = 0; i < ideals.size() && absorbs; ++i) {
    for (int s = 0; s < 64; ++s) {
      ClosureElement x = random_member(mc, ideals[i], rng, max_level);
      ClosureElement y = random_member(mc, ideals[i], rng, max_level);
      ClosureElement z = random_closure(mc, rng, max_level);
      if (!views[i].contains(x + y) || !views[i].contains(z * x) || !views[i].contains(x * z)) {
        absorbs = false;
        absorb_witness = "x=" + x.str() + " z=" + z.str();
        break;
      }
    }
  }
  report.records.push_back(make_record("lattice.ideal", ring.name(), n, level, absorbs, absorb_witness));

  bool units_ok = true;
  for (int s = 0; s < 32 && units_ok; ++s) {
    ClosureElement x = random_closure(mc, rng, max_level);
    units_ok = matrix_unit_identities(x.lift(max_level));
  }
  report.records.push_back(make_record("lattice.matrix-units", ring.name(), n, level, units_ok,
                                       "e_1i X e_j1 = X_ij e_11 and X = sum e_i1 X_ij e_1j"));

  for (std::size_t L = 1; L <= max_level; ++L) {
    const Ring s = Ring::matrix(ring, level_size(n, L));
    if (s.order() > 4096) break;
    bool onto = true;
    std::string witness;
    for (int t = 0; t < 6 && onto; ++t) {
      const Value xv = s.element_at(rng.below(s.order()));
      const FiniteIdeal generated = generate_ideal(s, Side::TwoSided, {xv});
      const FiniteIdeal j = extract_ideal(ring, {ClosureElement::inject(mc, L, Matrix::from_value(s, xv))});
      std::vector<bool> expected(s.order());
      for (std::uint64_t idx = 0; idx < s.order(); ++idx) {
        const Value y = s.element_at(idx);
        expected[idx] = std::all_of(y.parts.begin(), y.parts.end(),
                                    [&](const Value& e) { return j.contains(e); });
      }
      if (generated.mask() != expected) {
        onto = false;
        witness = "X=" + s.format(xv);
      } else {
        witness += (witness.empty() ? "" : "; ") + s.format(xv) + "->" + j.str();
      }
    }
    report.records.push_back(make_record("lattice.onto", ring.name(), n, static_cast<std::int64_t>(L),
                                         onto, witness));
  }
  return report;
}

CheckReport closure_ideal_check(const Ring& ring, std::size_t n, Side side, std::size_t max_level,
                                Rng& rng, std::size_t samples) {
  CheckReport report;
  const Ring mc = Ring::closure(ring, n);
  const auto ideals = enumerate_ideals(ring, side);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const ClosureIdealView view{ideals[i], n};
    bool ok = true;
    std::string witness = ideals[i].str();
    for (std::size_t s = 0; s < samples && ok; ++s) {
      ClosureElement x = random_member(mc, ideals[i], rng, max_level);
      ClosureElement y = random_member(mc, ideals[i], rng, max_level);
      ClosureElement z = random_closure(mc, rng, max_level);
      ok = view.contains(x + y) && view.contains(-x);
      if (side != Side::Right) ok = ok && view.contains(z * x);
      if (side != Side::Left) ok = ok && view.contains(x * z);
      if (!ok) witness = "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
    }
    report.records.push_back(make_record("ideal." + to_string(side) + "[" + std::to_string(i) + "]",
                                         ring.name(), n, static_cast<std::int64_t>(max_level), ok,
                                         witness));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Idempotent chain

ChainReport idempotent_chain(const Ring& ring, std::size_t n, std::size_t depth) {
  if (ring.is_zero_ring()) throw DomainError("idempotent chain needs a nonzero ring");
  ChainReport report;
  const Ring mc = Ring::closure(ring, n);
  auto idempotent = [&](std::size_t k) {
    return ClosureElement::inject(mc, k, matrix_unit(ring, level_size(n, k), 1, 1));
  };
  for (std::size_t k = 0; k < depth; ++k) {
    const ClosureElement ek = idempotent(k);
    const ClosureElement next = idempotent(k + 1);
    const bool is_idempotent = ek * ek == ek;
    const bool contained = next == next * ek;

    const Matrix lifted = ek.lift(k + 1);
    std::optional<std::pair<std::size_t, std::size_t>> outside;
    for (std::size_t r = 0; r < lifted.rows() && !outside; ++r) {
      for (std::size_t c = 1; c < lifted.cols(); ++c) {
        if (!ring.is_zero(lifted.at(r, c))) {
          outside = std::make_pair(r + 1, c + 1);
          break;
        }
      }
    }
    const auto lvl = static_cast<std::int64_t>(k);
    report.records.push_back(make_record("chain.idempotent[" + std::to_string(k) + "]", ring.name(), n,
                                         lvl, is_idempotent, ek.str()));
    report.records.push_back(make_record("chain.contained[" + std::to_string(k) + "]", ring.name(), n,
                                         lvl, contained,
                                         next.str() + " = " + next.str() + " * " + ek.str()));
    std::string where = outside ? "(" + std::to_string(outside->first) + "," +
                                      std::to_string(outside->second) + ")"
                                : "none";
    report.records.push_back(make_record("chain.strict[" + std::to_string(k) + "]", ring.name(), n, lvl,
                                         outside.has_value(),
                                         "nonzero entry of lift to level " + std::to_string(k + 1) +
                                             " at " + where));
    if (is_idempotent && contained && outside) {
      ++report.strict_descents;
      report.strictness_witnesses.push_back(*outside);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Ascending families

LevelIdealFamily column_zero_family() {
  return {"first-column-zero", [](std::size_t, const Matrix& a) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
              if (!a.ring().is_zero(a.at(r, 0))) return false;
            }
            return true;
          }};
}

LevelIdealFamily column_in_ideal_family(const FiniteIdeal& m) {
  return {"first-column-in-" + m.str(), [m](std::size_t, const Matrix& a) {
            for (std::size_t r = 0; r < a.rows(); ++r) {
              if (!m.contains(a.at(r, 0))) return false;
            }
            return true;
          }};
}

namespace {

constexpr std::uint64_t kExhaustiveLevelOrder = 256;

// Members of I_k: all of them for small levels, otherwise rejection-sampled.
std::vector<Matrix> family_members(const Ring& body_ring, const LevelIdealFamily& family,
                                   std::size_t k, Rng& rng, std::size_t samples, bool& exhaustive) {
  std::vector<Matrix> out;
  exhaustive = body_ring.order() <= kExhaustiveLevelOrder;
  if (exhaustive) {
    for (std::uint64_t i = 0; i < body_ring.order(); ++i) {
      Matrix a = Matrix::from_value(body_ring, body_ring.element_at(i));
      if (family.contains(k, a)) out.push_back(std::move(a));
    }
    return out;
  }
  for (std::size_t attempts = 0; out.size() < samples && attempts < samples * 4096; ++attempts) {
    Matrix a = Matrix::from_value(body_ring, random_value(body_ring, rng));
    if (family.contains(k, a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

CheckReport maximal_family_union(const Ring& ring, std::size_t n, const LevelIdealFamily& family,
                                 std::size_t max_level, Rng& rng, std::size_t samples,
                                 std::uint64_t search_budget) {
  CheckReport report;
  const Ring mc = Ring::closure(ring, n);
  const std::string tag = family.name;

  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const Ring body_ring = Ring::matrix(ring, side);
    const auto lvl = static_cast<std::int64_t>(k);
    bool exhaustive = false;
    const auto members = family_members(body_ring, family, k, rng, samples, exhaustive);

    // I_k is a left ideal of M_{n^k}(R).
    bool left_ideal = family.contains(k, Matrix(ring, side, side));
    for (std::size_t s = 0; s < std::min<std::size_t>(members.size() * members.size(), 4096) && left_ideal;
         ++s) {
      const Matrix& a = members[exhaustive ? s / members.size() : rng.below(members.size())];
      const Matrix& b = members[exhaustive ? s % members.size() : rng.below(members.size())];
      Matrix z = Matrix::from_value(body_ring, random_value(body_ring, rng));
      left_ideal = family.contains(k, a + b) && family.contains(k, z * a);
    }
    report.records.push_back(make_record("union.left-ideal[" + tag + "]", ring.name(), n, lvl,
                                         left_ideal, std::to_string(members.size()) + " members checked"));

    if (k < max_level) {
      bool compatible = true;
      std::string witness = "w_k(I_k) <= w_(k+1)(I_(k+1))";
      for (const auto& a : members) {
        if (!family.contains(k + 1, a.kron_identity(n))) {
          compatible = false;
          witness = a.str();
          break;
        }
      }
      if (!compatible) {
        throw DomainError("family " + tag + " incompatible at level " + std::to_string(k) + ": " + witness);
      }
      report.records.push_back(make_record("union.compatible[" + tag + "]", ring.name(), n, lvl, true, witness));
    }

    const bool proper = !family.contains(k, Matrix::identity(ring, side));
    report.records.push_back(make_record("union.proper[" + tag + "]", ring.name(), n, lvl, proper,
                                         "identity not in I_" + std::to_string(k)));

    // Maximality: every A outside I_k has z with 1 - zA in I_k.
    std::vector<Matrix> outside;
    if (body_ring.order() <= kExhaustiveLevelOrder) {
      for (std::uint64_t i = 0; i < body_ring.order(); ++i) {
        Matrix a = Matrix::from_value(body_ring, body_ring.element_at(i));
        if (!family.contains(k, a)) outside.push_back(std::move(a));
      }
    } else {
      for (std::size_t attempts = 0; outside.size() < samples && attempts < samples * 64; ++attempts) {
        Matrix a = Matrix::from_value(body_ring, random_value(body_ring, rng));
        if (!family.contains(k, a)) outside.push_back(std::move(a));
      }
    }
    Verdict maximal = Verdict::Holds;
    std::string witness = std::to_string(outside.size()) + " elements outside I_" + std::to_string(k);
    const Matrix one = Matrix::identity(ring, side);
    const std::uint64_t candidates = std::min(body_ring.order(), search_budget);
    for (const auto& a : outside) {
      bool found = false;
      for (std::uint64_t i = 0; i < candidates && !found; ++i) {
        Matrix z = Matrix::from_value(body_ring, body_ring.element_at(i));
        found = family.contains(k, one - z * a);
      }
      if (!found) {
        maximal = candidates < body_ring.order() ? Verdict::Undecided : Verdict::Fails;
        witness = "A=" + a.str();
        break;
      }
    }
    report.records.push_back({"union.maximal[" + tag + "]", ring.name(), n, lvl, maximal, witness, 0.0});
  }

  // The union itself, represented at level K.
  auto in_union = [&](const ClosureElement& x) { return family.contains(max_level, x.lift(max_level)); };
  bool closed = true;
  std::string witness = "sampled " + std::to_string(samples) + " pairs";
  std::size_t drawn = 0;
  for (std::size_t attempts = 0; drawn < samples && attempts < samples * 4096 && closed; ++attempts) {
    ClosureElement x = random_closure(mc, rng, max_level);
    ClosureElement y = random_closure(mc, rng, max_level);
    if (!in_union(x) || !in_union(y)) continue;
    ++drawn;
    ClosureElement z = random_closure(mc, rng, max_level);
    if (!in_union(x + y) || !in_union(z * x)) {
      closed = false;
      witness = "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
    }
  }
  report.records.push_back(make_record("union.closed[" + tag + "]", ring.name(), n,
                                       static_cast<std::int64_t>(max_level), closed, witness));
  report.records.push_back(make_record("union.proper-limit[" + tag + "]", ring.name(), n,
                                       static_cast<std::int64_t>(max_level),
                                       !in_union(ClosureElement::one(mc)), "1 not in I"));
  return report;
}

}  // namespace matclose
