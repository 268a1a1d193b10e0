#include "matclose/modules.hpp"

#include <algorithm>
#include <cctype>

#include "internal.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"

namespace matclose {

namespace {

constexpr std::uint64_t kMaxModuleTable = std::uint64_t{1} << 22;

void require_table(const Ring& ring, std::uint64_t size) {
  if (!ring.enumerable()) throw NotEnumerable("modules need an enumerable ring, got " + ring.name());
  if (ring.order() * size > kMaxModuleTable || size * size > kMaxModuleTable) {
    throw BoundExceeded("module tables over " + ring.name() + " exceed bound");
  }
}

std::uint64_t column_count(std::size_t module_size, std::size_t side, std::uint64_t budget) {
  const std::uint64_t count = detail::checked_pow(module_size, side);
  if (count > budget) throw BoundExceeded("column space of size " + std::to_string(count) + " exceeds budget");
  return count;
}

std::vector<std::size_t> decode_column(std::uint64_t code, std::size_t module_size, std::size_t side) {
  std::vector<std::size_t> out(side);
  for (auto& e : out) {
    e = static_cast<std::size_t>(code % module_size);
    code /= module_size;
  }
  return out;
}

std::uint64_t encode_column(const std::vector<std::size_t>& col, std::size_t module_size) {
  std::uint64_t code = 0;
  for (std::size_t i = col.size(); i-- > 0;) code = code * module_size + col[i];
  return code;
}

// Visits every matrix of M_side(R) as a vector of ring indices, in index
// order, until `visit` returns false.
template <class F>
void for_each_matrix(const Ring& ring, std::size_t side, std::uint64_t budget, F visit) {
  const std::size_t cells = side * side;
  const std::uint64_t count = detail::checked_pow(ring.order(), cells);
  if (count > budget) {
    throw BoundExceeded("M" + std::to_string(side) + "(" + ring.name() + ") has " + std::to_string(count) +
                        " elements, over budget " + std::to_string(budget));
  }
  std::vector<std::uint64_t> digits(cells, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!visit(digits)) return;
    for (std::size_t c = 0; c < cells; ++c) {
      if (++digits[c] < ring.order()) break;
      digits[c] = 0;
    }
  }
}

std::vector<std::size_t> apply_indices(const FiniteModule& m, const std::vector<std::uint64_t>& a,
                                       const std::vector<std::size_t>& v) {
  const std::size_t side = v.size();
  std::vector<std::size_t> out(side, 0);
  for (std::size_t i = 0; i < side; ++i) {
    std::size_t acc = 0;
    for (std::size_t j = 0; j < side; ++j) acc = m.add(acc, m.act(a[i * side + j], v[j]));
    out[i] = acc;
  }
  return out;
}

std::string strip_offset(const ParseError& e) {
  std::string msg = e.what();
  const auto at = msg.rfind(" at byte ");
  return at == std::string::npos ? msg : msg.substr(0, at);
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Ring ring_at(std::string_view text, std::size_t offset) {
  try {
    return build_ring(text);
  } catch (const ParseError& e) {
    throw ParseError(strip_offset(e), offset + e.offset());
  }
}

FiniteModule parse_module_at(std::string_view text, std::size_t offset) {
  text = trim(text, offset);
  if (text.empty()) throw ParseError("expected a module", offset);
  const auto sum = text.rfind("(+)");
  if (sum != std::string_view::npos) {
    FiniteModule left = parse_module_at(text.substr(0, sum), offset);
    FiniteModule right = parse_module_at(text.substr(sum + 3), offset + sum + 3);
    if (left.ring() != right.ring()) {
      throw ParseError("direct sum of modules over " + left.ring().name() + " and " + right.ring().name(),
                       offset + sum);
    }
    return FiniteModule::direct_sum(left, right);
  }
  const auto over = text.find(" over ");
  if (over != std::string_view::npos) {
    std::size_t q_off = offset;
    std::string_view quotient = trim(text.substr(0, over), q_off);
    if (quotient.substr(0, 2) != "Z/") throw ParseError("expected Z/d before 'over'", q_off);
    std::int64_t d = 0;
    std::size_t i = 2;
    for (; i < quotient.size() && std::isdigit(static_cast<unsigned char>(quotient[i])); ++i) {
      if (d > (INT64_MAX - 9) / 10) throw ParseError("modulus too large", q_off + i);
      d = d * 10 + (quotient[i] - '0');
    }
    if (i == 2 || i != quotient.size()) throw ParseError("expected Z/d before 'over'", q_off + i);
    const Ring ring = ring_at(text.substr(over + 6), offset + over + 6);
    try {
      return FiniteModule::quotient(ring, d);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), q_off);
    }
  }
  const auto caret = text.rfind('^');
  if (caret != std::string_view::npos) {
    const std::string_view power = text.substr(caret + 1);
    if (!power.empty() && power.size() <= 2 &&
        std::all_of(power.begin(), power.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const Ring ring = ring_at(text.substr(0, caret), offset);
      const int k = std::stoi(std::string(power));
      FiniteModule out = FiniteModule::zero(ring);
      for (int i = 0; i < k; ++i) {
        out = i == 0 ? FiniteModule::regular(ring) : FiniteModule::direct_sum(out, FiniteModule::regular(ring));
      }
      return out;
    }
  }
  throw ParseError("expected '<ring>^k', 'Z/d over <ring>' or 'A (+) B'", offset);
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule FiniteModule::regular(const Ring& ring) {
  require_table(ring, ring.order());
  const auto all = ring.elements();
  FiniteModule m(ring, ring.name() + "^1", all.size());
  m.add_.resize(all.size() * all.size());
  m.act_.resize(all.size() * all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    m.labels_.push_back(ring.format(all[a]));
    for (std::size_t b = 0; b < all.size(); ++b) {
      m.add_[a * all.size() + b] = ring.index_of(ring.add(all[a], all[b]));
      m.act_[a * all.size() + b] = ring.index_of(ring.mul(all[a], all[b]));
    }
  }
  return m;
}

FiniteModule FiniteModule::quotient(const Ring& ring, std::int64_t d) {
  if (ring.kind() != RingKind::Modular) throw DomainError("Z/d modules need Z/m, got " + ring.name());
  if (d < 1 || ring.modulus() % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide " + std::to_string(ring.modulus()));
  }
  const auto size = static_cast<std::size_t>(d);
  require_table(ring, size);
  FiniteModule m(ring, "Z/" + std::to_string(d) + " over " + ring.name(), size);
  m.add_.resize(size * size);
  m.act_.resize(ring.order() * size);
  for (std::size_t a = 0; a < size; ++a) {
    m.labels_.push_back(std::to_string(a));
    for (std::size_t b = 0; b < size; ++b) m.add_[a * size + b] = (a + b) % size;
  }
  for (std::uint64_t r = 0; r < ring.order(); ++r) {
    const auto rv = static_cast<std::size_t>(ring.element_at(r).scalar) % size;
    for (std::size_t x = 0; x < size; ++x) m.act_[r * size + x] = (rv * x) % size;
  }
  return m;
}

FiniteModule FiniteModule::direct_sum(const FiniteModule& a, const FiniteModule& b) {
  if (a.ring_ != b.ring_) throw RingMismatch("direct sum over " + a.ring_.name() + " and " + b.ring_.name());
  const std::size_t size = a.size_ * b.size_;
  require_table(a.ring_, size);
  FiniteModule m(a.ring_, a.name_ + " (+) " + b.name_, size);
  m.add_.resize(size * size);
  m.act_.resize(a.ring_.order() * size);
  for (std::size_t x = 0; x < size; ++x) {
    const std::size_t xa = x % a.size_;
    const std::size_t xb = x / a.size_;
    m.labels_.push_back("(" + a.labels_[xa] + "," + b.labels_[xb] + ")");
    for (std::size_t y = 0; y < size; ++y) {
      m.add_[x * size + y] = a.add(xa, y % a.size_) + a.size_ * b.add(xb, y / a.size_);
    }
    for (std::uint64_t r = 0; r < a.ring_.order(); ++r) {
      m.act_[r * size + x] = a.act(r, xa) + a.size_ * b.act(r, xb);
    }
  }
  return m;
}

FiniteModule FiniteModule::zero(const Ring& ring) {
  require_table(ring, 1);
  FiniteModule m(ring, "0", 1);
  m.add_ = {0};
  m.act_.assign(ring.order(), 0);
  m.labels_ = {"0"};
  return m;
}

std::optional<std::string> FiniteModule::axiom_failure() const {
  const std::uint64_t order = ring_.order();
  const auto all = ring_.elements();
  const std::uint64_t one = ring_.index_of(ring_.one());
  for (std::size_t x = 0; x < size_; ++x) {
    if (act(one, x) != x) return "1*" + labels_[x] + " != " + labels_[x];
    if (add(0, x) != x) return "0+" + labels_[x] + " != " + labels_[x];
    for (std::size_t y = 0; y < size_; ++y) {
      if (add(x, y) != add(y, x)) return "addition not commutative";
      for (std::uint64_t r = 0; r < order; ++r) {
        if (act(r, add(x, y)) != add(act(r, x), act(r, y))) {
          return "r(m+m') != rm+rm' for r=" + ring_.format(all[r]);
        }
      }
    }
    for (std::uint64_t r = 0; r < order; ++r) {
      for (std::uint64_t s = 0; s < order; ++s) {
        if (act(ring_.index_of(ring_.add(all[r], all[s])), x) != add(act(r, x), act(s, x))) {
          return "(r+s)m != rm+sm at m=" + labels_[x];
        }
        if (act(ring_.index_of(ring_.mul(all[r], all[s])), x) != act(r, act(s, x))) {
          return "(rs)m != r(sm) at m=" + labels_[x];
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> FiniteModule::cyclic_submodule(std::size_t m) const {
  std::vector<bool> mask(size_, false);
  for (std::uint64_t r = 0; r < ring_.order(); ++r) mask[act(r, m)] = true;
  return mask;
}

bool FiniteModule::is_simple() const {
  if (size_ <= 1) return false;
  for (std::size_t m = 1; m < size_; ++m) {
    const auto mask = cyclic_submodule(m);
    if (std::count(mask.begin(), mask.end(), true) != static_cast<std::ptrdiff_t>(size_)) return false;
  }
  return true;
}

bool FiniteModule::is_faithful() const {
  const std::uint64_t zero = ring_.index_of(ring_.zero());
  for (std::uint64_t r = 0; r < ring_.order(); ++r) {
    if (r == zero) continue;
    bool kills = true;
    for (std::size_t m = 0; m < size_ && kills; ++m) kills = act(r, m) == 0;
    if (kills) return false;
  }
  return true;
}

FiniteModule parse_module(std::string_view spec) { return parse_module_at(spec, 0); }

// ---------------------------------------------------------------------------
// Delta

DeltaElement DeltaElement::make(std::shared_ptr<const FiniteModule> module, std::size_t n, std::size_t level,
                                std::vector<std::size_t> vec) {
  if (n < 2) throw DomainError("Delta needs n >= 2");
  if (vec.size() != level_size(n, level)) {
    throw DomainError("column of length " + std::to_string(vec.size()) + " at level " + std::to_string(level));
  }
  for (const auto x : vec) {
    if (x >= module->size()) throw DomainError("module index out of range");
  }
  while (level > 0) {
    const std::size_t block = vec.size() / n;
    bool repeated = true;
    for (std::size_t i = block; i < vec.size() && repeated; ++i) repeated = vec[i] == vec[i % block];
    if (!repeated) break;
    vec.resize(block);
    --level;
  }
  return DeltaElement(std::move(module), n, level, std::move(vec));
}

bool DeltaElement::is_zero() const {
  return std::all_of(vec_.begin(), vec_.end(), [](std::size_t x) { return x == 0; });
}

std::string DeltaElement::str() const {
  std::string out = "@" + std::to_string(level_) + " (";
  for (std::size_t i = 0; i < vec_.size(); ++i) out += (i ? "," : "") + module_->label(vec_[i]);
  return out + ")";
}

std::vector<std::size_t> delta_lift(const DeltaElement& v, std::size_t m) {
  if (m < v.level()) {
    throw DomainError("cannot lift level-" + std::to_string(v.level()) + " column to level " + std::to_string(m));
  }
  const std::size_t copies = level_size(v.n(), m - v.level());
  std::vector<std::size_t> out;
  out.reserve(copies * v.vec().size());
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), v.vec().begin(), v.vec().end());
  return out;
}

DeltaElement delta_act(const ClosureElement& a, const DeltaElement& v) {
  if (a.base() != v.module().ring() || a.n() != v.n()) {
    throw RingMismatch("delta_act: " + a.ring().name() + " on Delta(" + v.module().name() + ") with n = " +
                       std::to_string(v.n()));
  }
  const std::size_t level = std::max(a.level(), v.level());
  const Matrix body = a.lift(level);
  const auto w = delta_lift(v, level);
  std::vector<std::uint64_t> indices;
  indices.reserve(body.entries().size());
  for (const auto& e : body.entries()) indices.push_back(a.base().index_of(e));
  return DeltaElement::make(v.module_ptr(), v.n(), level, apply_indices(v.module(), indices, w));
}

DeltaElement random_delta(const std::shared_ptr<const FiniteModule>& module, std::size_t n,
                          std::size_t max_level, Rng& rng) {
  const std::size_t level = rng.below(max_level + 1);
  std::vector<std::size_t> vec(level_size(n, level));
  for (auto& x : vec) x = rng.below(module->size());
  return DeltaElement::make(module, n, level, std::move(vec));
}

bool generates_column(const FiniteModule& module, std::size_t side, const std::vector<std::size_t>& vec,
                      std::uint64_t budget) {
  const std::uint64_t total = column_count(module.size(), side, budget);
  std::vector<bool> hit(total, false);
  std::uint64_t reached = 0;
  for_each_matrix(module.ring(), side, budget, [&](const std::vector<std::uint64_t>& a) {
    const std::uint64_t code = encode_column(apply_indices(module, a, vec), module.size());
    if (!hit[code]) {
      hit[code] = true;
      ++reached;
    }
    return reached < total;
  });
  return reached == total;
}

bool generates_at_level(const DeltaElement& v, std::uint64_t budget) {
  return generates_column(v.module(), v.vec().size(), v.vec(), budget);
}

CheckReport delta_simple_check(const FiniteModule& s, std::size_t n, std::size_t max_level) {
  CheckReport report;
  if (!s.is_simple()) {
    report.records.push_back({"delta.simple", s.name(), n, -1, Verdict::Vacuous, "module not simple", 0.0});
    return report;
  }
  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const auto lvl = static_cast<std::int64_t>(k);
    try {
      const std::uint64_t total = column_count(s.size(), side, std::uint64_t{1} << 20);
      bool ok = true;
      std::string witness = std::to_string(total - 1) + " nonzero columns generate";
      for (std::uint64_t code = 1; code < total && ok; ++code) {
        const auto col = decode_column(code, s.size(), side);
        if (!generates_column(s, side, col)) {
          ok = false;
          witness = DeltaElement::make(std::make_shared<FiniteModule>(s), n, k, col).str();
        }
      }
      report.records.push_back(make_record("delta.simple", s.name(), n, lvl, ok, witness));
    } catch (const BoundExceeded& e) {
      report.records.push_back({"delta.simple", s.name(), n, lvl, Verdict::Undecided, e.what(), 0.0});
    }
  }
  return report;
}

CheckReport delta_faithful_check(const FiniteModule& m, std::size_t n, std::size_t max_level) {
  CheckReport report;
  if (!m.is_faithful()) {
    report.records.push_back({"delta.faithful", m.name(), n, -1, Verdict::Vacuous, "module not faithful", 0.0});
    return report;
  }
  const std::uint64_t zero = m.ring().index_of(m.ring().zero());
  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const auto lvl = static_cast<std::int64_t>(k);
    try {
      const std::uint64_t columns = column_count(m.size(), side, std::uint64_t{1} << 20);
      std::vector<std::vector<std::size_t>> cols;
      for (std::uint64_t c = 1; c < columns; ++c) cols.push_back(decode_column(c, m.size(), side));
      bool ok = true;
      std::uint64_t checked = 0;
      std::string witness;
      for_each_matrix(m.ring(), side, std::uint64_t{1} << 20, [&](const std::vector<std::uint64_t>& a) {
        if (std::all_of(a.begin(), a.end(), [&](std::uint64_t x) { return x == zero; })) return true;
        ++checked;
        const bool moves = std::any_of(cols.begin(), cols.end(), [&](const std::vector<std::size_t>& col) {
          const auto out = apply_indices(m, a, col);
          return std::any_of(out.begin(), out.end(), [](std::size_t x) { return x != 0; });
        });
        if (!moves) {
          ok = false;
          std::vector<Value> entries;
          for (const auto x : a) entries.push_back(m.ring().element_at(x));
          witness = "A=" + Matrix(m.ring(), side, side, std::move(entries)).str() + " kills M^" + std::to_string(side);
        }
        return ok;
      });
      if (ok) witness = std::to_string(checked) + " nonzero matrices act nontrivially";
      report.records.push_back(make_record("delta.faithful", m.name(), n, lvl, ok, witness));
    } catch (const BoundExceeded& e) {
      report.records.push_back({"delta.faithful", m.name(), n, lvl, Verdict::Undecided, e.what(), 0.0});
    }
  }
  return report;
}

namespace {

DeltaElement zip(const std::shared_ptr<const FiniteModule>& sum, const DeltaElement& v, const DeltaElement& w) {
  const std::size_t level = std::max(v.level(), w.level());
  const auto a = delta_lift(v, level);
  const auto b = delta_lift(w, level);
  std::vector<std::size_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + v.module().size() * b[i];
  return DeltaElement::make(sum, v.n(), level, std::move(out));
}

}  // namespace

CheckReport delta_coproduct_check(const FiniteModule& m, const FiniteModule& other, std::size_t n,
                                  std::size_t max_level, std::size_t samples, std::uint64_t seed) {
  CheckReport report;
  const auto left = std::make_shared<const FiniteModule>(m);
  const auto right = std::make_shared<const FiniteModule>(other);
  const auto sum = std::make_shared<const FiniteModule>(FiniteModule::direct_sum(m, other));
  const std::string name = sum->name();
  for (std::size_t k = 0; k <= max_level; ++k) {
    const std::size_t side = level_size(n, k);
    const auto lvl = static_cast<std::int64_t>(k);
    try {
      const std::uint64_t lc = column_count(m.size(), side, std::uint64_t{1} << 20);
      const std::uint64_t rc = column_count(other.size(), side, std::uint64_t{1} << 20);
      const std::uint64_t sc = column_count(sum->size(), side, std::uint64_t{1} << 20);
      std::vector<bool> hit(sc, false);
      std::uint64_t distinct = 0;
      for (std::uint64_t a = 0; a < lc; ++a) {
        const auto v = decode_column(a, m.size(), side);
        for (std::uint64_t b = 0; b < rc; ++b) {
          const auto w = decode_column(b, other.size(), side);
          std::vector<std::size_t> u(side);
          for (std::size_t i = 0; i < side; ++i) u[i] = v[i] + m.size() * w[i];
          const std::uint64_t code = encode_column(u, sum->size());
          if (!hit[code]) {
            hit[code] = true;
            ++distinct;
          }
        }
      }
      const bool bijective = distinct == sc && lc * rc == sc;
      report.records.push_back(make_record("delta.coproduct.bijection", name, n, lvl, bijective,
                                           std::to_string(lc) + "x" + std::to_string(rc) + " pairs onto " +
                                               std::to_string(sc) + " columns"));
    } catch (const BoundExceeded& e) {
      report.records.push_back({"delta.coproduct.bijection", name, n, lvl, Verdict::Undecided, e.what(), 0.0});
    }
  }
  Rng rng(seed);
  const Ring mc = Ring::closure(m.ring(), n);
  bool preserved = true;
  std::string witness = std::to_string(samples) + " sampled (A, v, w)";
  for (std::size_t s = 0; s < samples && preserved; ++s) {
    const ClosureElement a = random_closure(mc, rng, max_level);
    const DeltaElement v = random_delta(left, n, max_level, rng);
    const DeltaElement w = random_delta(right, n, max_level, rng);
    if (zip(sum, delta_act(a, v), delta_act(a, w)) != delta_act(a, zip(sum, v, w))) {
      preserved = false;
      witness = "A=" + a.str() + " v=" + v.str() + " w=" + w.str();
    }
  }
  report.records.push_back(make_record("delta.coproduct.action", name, n, static_cast<std::int64_t>(max_level),
                                       preserved, witness));
  return report;
}

}  // namespace matclose
