#include "matclose/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "matclose/closure.hpp"
#include "matclose/ideals.hpp"
#include "matclose/isos.hpp"
#include "matclose/modules.hpp"
#include "matclose/morphism.hpp"
#include "matclose/properties.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/sampling.hpp"

namespace matclose {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kClassBudget = std::uint64_t{1} << 20;
constexpr std::size_t kExhaustivePairs = 4096;

struct Runner {
  const SuiteConfig& cfg;
  Ring ring;
  Ring mc;
  std::vector<Record> records;

  Runner(const SuiteConfig& c, Ring r) : cfg(c), ring(r), mc(Ring::closure(r, c.n)) {}

  std::int64_t top() const { return static_cast<std::int64_t>(cfg.levels); }

  void add(std::string check, std::int64_t level, bool ok, std::string witness) {
    records.push_back(make_record(std::move(check), ring.name(), cfg.n, level, ok, std::move(witness)));
  }
  void add(std::string check, std::int64_t level, Verdict v, std::string witness) {
    records.push_back({std::move(check), ring.name(), cfg.n, level, v, std::move(witness), 0.0});
  }
  void absorb(const std::vector<Record>& more) { records.insert(records.end(), more.begin(), more.end()); }

  // Runs one chunk of checks, stamps its records with the elapsed time and
  // turns bound/decidability errors into an undecided record.
  void timed(const std::string& name, const std::function<void()>& body) {
    const auto start = Clock::now();
    const std::size_t before = records.size();
    try {
      body();
    } catch (const BoundExceeded& e) {
      add(name, -1, Verdict::Undecided, e.what());
    } catch (const NotEnumerable& e) {
      add(name, -1, Verdict::Undecided, e.what());
    } catch (const NotDecidable& e) {
      add(name, -1, Verdict::Undecided, e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (std::size_t i = before; i < records.size(); ++i) records[i].elapsed_ms = ms;
  }
};

std::string plural(std::size_t count, const std::string& noun) {
  return std::to_string(count) + " " + noun + (count == 1 ? "" : "s");
}

std::string level_counts(const std::vector<ClosureElement>& xs, std::size_t max_level) {
  std::vector<std::size_t> per(max_level + 1, 0);
  for (const auto& x : xs) ++per[x.level()];
  std::string out;
  for (std::size_t k = 0; k <= max_level; ++k) {
    out += (k ? "," : "") + std::string("level") + std::to_string(k) + "=" + std::to_string(per[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------

void suite_axioms(Runner& r) {
  r.timed("axioms", [&] {
    Rng rng(r.cfg.seed);
    const ClosureElement one = ClosureElement::one(r.mc);
    const ClosureElement zero = ClosureElement::zero(r.mc);
    std::map<std::string, std::string> failures;
    auto fail = [&](const std::string& law, const std::string& what) { failures.try_emplace(law, what); };
    for (std::size_t s = 0; s < r.cfg.samples; ++s) {
      const ClosureElement x = random_closure(r.mc, rng, r.cfg.levels);
      const ClosureElement y = random_closure(r.mc, rng, r.cfg.levels);
      const ClosureElement z = random_closure(r.mc, rng, r.cfg.levels);
      const std::string at = "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
      if ((x * y) * z != x * (y * z)) fail("axioms.assoc", at);
      if (x * (y + z) != x * y + x * z || (x + y) * z != x * z + y * z) fail("axioms.distrib", at);
      if (one * x != x || x * one != x) fail("axioms.identity", at);
      if (x + zero != x || x + (-x) != zero || x + y != y + x || (x + y) + z != x + (y + z)) {
        fail("axioms.additive", at);
      }
      const std::size_t up = std::max(x.level(), y.level()) + 1;
      if (combine_at_level(x, y, up, true) != x * y || combine_at_level(x, y, up, false) != x + y) {
        fail("axioms.level-independent", at);
      }
    }
    for (const char* law :
         {"axioms.additive", "axioms.assoc", "axioms.distrib", "axioms.identity", "axioms.level-independent"}) {
      auto it = failures.find(law);
      r.add(law, r.top(), it == failures.end(),
            it == failures.end() ? plural(r.cfg.samples, "sampled triple") : it->second);
    }
  });
}

void suite_transition(Runner& r) {
  const std::size_t target = std::max<std::size_t>(2, r.cfg.levels + 1);
  r.timed("transition.level0", [&] {
    if (!r.ring.enumerable() || r.ring.order() > (std::uint64_t{1} << 16)) {
      r.add("transition.level0", 0, Verdict::Undecided, "base ring not enumerable within bound");
      return;
    }
    bool ok = true;
    std::string witness = plural(r.ring.order(), "element") + " lifted to level " + std::to_string(target);
    for (const auto& a : r.ring.elements()) {
      const ClosureElement x = ClosureElement::scalar(r.mc, a);
      for (std::size_t m = 0; m <= target && ok; ++m) {
        const Matrix single = x.lift(m);
        const bool same = x.lift_stepwise(m) == single &&
                          single == Matrix::scalar(r.ring, level_size(r.cfg.n, m), a) &&
                          ClosureElement::inject(r.mc, m, single) == x;
        if (!same) {
          ok = false;
          witness = "a=" + r.ring.format(a) + " level " + std::to_string(m);
        }
      }
    }
    r.add("transition.level0", 0, ok, witness);
  });
  r.timed("transition.sampled", [&] {
    Rng rng(r.cfg.seed);
    bool ok = true;
    std::string witness = plural(r.cfg.samples, "sampled element");
    for (std::size_t s = 0; s < r.cfg.samples && ok; ++s) {
      const ClosureElement x = random_closure(r.mc, rng, r.cfg.levels);
      const std::size_t m = x.level() + 1 + rng.below(2);
      const Matrix single = x.lift(m);
      ok = x.lift_stepwise(m) == single && ClosureElement::inject(r.mc, m, single) == x &&
           x.lift(x.level() + 1).kron_identity(level_size(r.cfg.n, m - x.level() - 1)) == single;
      if (!ok) witness = "x=" + x.str() + " to level " + std::to_string(m);
    }
    r.add("transition.sampled", r.top(), ok, witness);
  });
}

void suite_functor(Runner& r) {
  struct Case {
    RingMorphism f;
    bool injective;
  };
  std::vector<Case> cases{{morphisms::identity(r.ring), true},
                          {morphisms::diagonal(r.ring), true},
                          {morphisms::constant_polynomial(r.ring), true}};
  if (r.ring.kind() == RingKind::Modular) {
    for (std::int64_t d = 2; d < r.ring.modulus(); ++d) {
      if (r.ring.modulus() % d == 0) cases.push_back({morphisms::reduction(r.ring, Ring::modular(d)), false});
    }
  }
  Rng rng(r.cfg.seed);
  r.timed("functor.identity", [&] {
    bool ok = true;
    std::string witness = plural(r.cfg.samples, "sampled element");
    for (std::size_t s = 0; s < r.cfg.samples && ok; ++s) {
      const ClosureElement x = random_closure(r.mc, rng, r.cfg.levels);
      ok = cmap(morphisms::identity(r.ring), x) == x;
      if (!ok) witness = "x=" + x.str();
    }
    r.add("functor.identity", r.top(), ok, witness);
  });
  r.timed("functor.composition", [&] {
    std::vector<std::pair<RingMorphism, RingMorphism>> pairs;
    for (const auto& c : cases) pairs.emplace_back(morphisms::identity(c.f.target), c.f);
    pairs.emplace_back(morphisms::product_map(morphisms::identity(r.ring), morphisms::identity(r.ring)),
                       morphisms::diagonal(r.ring));
    pairs.emplace_back(morphisms::product_map(morphisms::constant_polynomial(r.ring),
                                              morphisms::identity(r.ring)),
                       morphisms::diagonal(r.ring));
    bool ok = true;
    std::string witness = plural(pairs.size(), "composable pair") + ", " + plural(r.cfg.samples, "sample");
    for (const auto& [g, f] : pairs) {
      const RingMorphism gf = morphisms::compose(g, f);
      for (std::size_t s = 0; s < r.cfg.samples && ok; ++s) {
        const ClosureElement x = random_closure(r.mc, rng, r.cfg.levels);
        ok = cmap(gf, x) == cmap(g, cmap(f, x));
        if (!ok) witness = gf.name + " at x=" + x.str();
      }
    }
    r.add("functor.composition", r.top(), ok, witness);
  });
  for (const auto& c : cases) {
    const std::string check = "functor.morphism[" + c.f.name + "]";
    r.timed(check, [&] {
      const auto err = check_morphism(closure_functor(c.f, r.cfg.n), rng, r.cfg.samples);
      r.add(check, -1, !err.has_value(), err.value_or("unital, additive, multiplicative on samples"));
    });
  }
  for (const auto& c : cases) {
    if (!c.injective) continue;
    const std::string check = "functor.injective[" + c.f.name + "]";
    r.timed(check, [&] {
      std::vector<ClosureElement> domain;
      bool exhaustive = r.ring.enumerable() && r.ring.order() <= 16;
      if (exhaustive) {
        try {
          domain = closure_classes_up_to(r.mc, r.cfg.levels, kClassBudget);
        } catch (const BoundExceeded&) {
          exhaustive = false;
        }
      }
      if (!exhaustive) {
        for (std::size_t s = 0; s < r.cfg.samples; ++s) domain.push_back(random_closure(r.mc, rng, r.cfg.levels));
      }
      std::map<Value, ClosureElement> images;
      bool ok = true;
      std::string witness = std::string(exhaustive ? "all " : "sampled ") + plural(domain.size(), "class") +
                            " of level <= " + std::to_string(r.cfg.levels);
      for (const auto& x : domain) {
        auto [it, inserted] = images.emplace(cmap(c.f, x).to_value(), x);
        if (!inserted && it->second != x) {
          ok = false;
          witness = "x=" + x.str() + " y=" + it->second.str();
          break;
        }
      }
      r.add(check, r.top(), ok, witness);
    });
  }
}

void suite_idempotency(Runner& r) {
  r.timed("idempotency", [&] {
    const Ring outer = Ring::closure(r.mc, r.cfg.n);
    Rng rng(r.cfg.seed);
    SampleShape shape;
    shape.max_level = r.cfg.levels;
    bool round = flatten_closure(ClosureElement::one(outer)) == ClosureElement::one(r.mc);
    bool morph = round;
    std::string round_w = plural(r.cfg.samples, "sample") + " both directions";
    std::string morph_w = plural(r.cfg.samples, "sampled pair");
    if (!round) morph_w = "flatten(1) != 1";
    for (std::size_t s = 0; s < r.cfg.samples; ++s) {
      const ClosureElement x = random_closure(outer, rng, r.cfg.levels, shape);
      const ClosureElement y = random_closure(outer, rng, r.cfg.levels, shape);
      const ClosureElement z = random_closure(r.mc, rng, 2 * r.cfg.levels);
      const ClosureElement fx = flatten_closure(x);
      const ClosureElement fy = flatten_closure(y);
      if (round && (unflatten_closure(fx, outer) != x || flatten_closure(unflatten_closure(z, outer)) != z)) {
        round = false;
        round_w = "x=" + x.str() + " z=" + z.str();
      }
      if (morph && (flatten_closure(x + y) != fx + fy || flatten_closure(x * y) != fx * fy)) {
        morph = false;
        morph_w = "x=" + x.str() + " y=" + y.str();
      }
    }
    r.add("idempotency.roundtrip", r.top(), round, round_w);
    r.add("idempotency.morphism", r.top(), morph, morph_w);
  });
}

void suite_units(Runner& r) {
  r.timed("units", [&] {
    const auto classes = closure_classes_up_to(r.mc, r.cfg.levels, std::min(r.cfg.budget, kClassBudget));
    const ClosureElement one = ClosureElement::one(r.mc);
    std::vector<ClosureElement> by_inverse;
    std::vector<bool> unit(classes.size());
    bool verified = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto inv = unit_inverse(classes[i]);
      unit[i] = inv.has_value();
      if (inv) {
        by_inverse.push_back(classes[i]);
        verified = verified && classes[i] * *inv == one && *inv * classes[i] == one;
      }
    }
    r.add("units.inverse", r.top(), verified,
          plural(by_inverse.size(), "unit") + " among " + plural(classes.size(), "class") + " (" +
              level_counts(by_inverse, r.cfg.levels) + ")");

    // Independent search: a two-sided inverse among the classes of the same
    // level (an inverse of a canonical level-k class is canonical at level k).
    const bool exhaustive = classes.size() <= kExhaustivePairs;
    Rng rng(r.cfg.seed);
    std::vector<std::size_t> probe;
    if (exhaustive) {
      for (std::size_t i = 0; i < classes.size(); ++i) probe.push_back(i);
    } else {
      for (std::size_t s = 0; s < std::min<std::size_t>(r.cfg.samples, 32); ++s) probe.push_back(rng.below(classes.size()));
    }
    bool agree = true;
    std::string witness = exhaustive ? "exhaustive search over " + plural(classes.size(), "class")
                                     : "search for " + plural(probe.size(), "sampled class");
    for (const auto i : probe) {
      const ClosureElement& x = classes[i];
      bool found = false;
      for (const auto& y : classes) {
        if (y.level() == x.level() && x * y == one && y * x == one) {
          found = true;
          break;
        }
      }
      if (found != unit[i]) {
        agree = false;
        witness = "x=" + x.str();
        break;
      }
    }
    r.add("units.agree", r.top(), agree, witness);
  });
}

void suite_center(Runner& r) {
  r.timed("center", [&] {
    const auto classes = closure_classes_up_to(r.mc, r.cfg.levels, std::min(r.cfg.budget, kClassBudget));
    std::vector<ClosureElement> central;
    for (const auto& x : classes) {
      if (is_central(x)) central.push_back(x);
    }
    const bool exhaustive = classes.size() <= kExhaustivePairs;
    Rng rng(r.cfg.seed);
    bool agree = true;
    std::string witness = exhaustive ? "commutation with all " + plural(classes.size(), "class")
                                     : "central classes commute with 64 sampled classes";
    for (const auto& x : classes) {
      const bool flagged = std::binary_search(central.begin(), central.end(), x);
      if (!exhaustive && !flagged) continue;
      bool commutes = true;
      if (exhaustive) {
        for (const auto& y : classes) {
          if (x * y != y * x) {
            commutes = false;
            break;
          }
        }
      } else {
        for (int s = 0; s < 64 && commutes; ++s) {
          const ClosureElement& y = classes[rng.below(classes.size())];
          commutes = x * y == y * x;
        }
      }
      if (commutes != flagged) {
        agree = false;
        witness = "x=" + x.str();
        break;
      }
    }
    r.add("center.agree", r.top(), agree, witness);

    std::vector<ClosureElement> expected;
    for (const auto& c : center(r.ring)) expected.push_back(ClosureElement::scalar(r.mc, c));
    std::sort(expected.begin(), expected.end());
    bool sections = expected == central;
    for (const auto& x : central) {
      sections = sections && ClosureElement::scalar(r.mc, center_section(x)) == x;
    }
    std::string listing;
    for (const auto& x : central) listing += (listing.empty() ? "" : ",") + x.str();
    r.add("center.section", r.top(), sections,
          plural(central.size(), "central class") + " {" + listing + "}");
  });
}

void suite_product_iso(Runner& r) {
  r.timed("iso.product", [&] {
    const bool split = r.ring.kind() == RingKind::Product;
    const Ring left = split ? r.ring.left() : r.ring;
    const Ring right = split ? r.ring.right() : r.ring;
    const auto rep = verify_product_iso(left, right, r.cfg.n, r.cfg.levels, r.cfg.samples, r.cfg.seed);
    r.add("iso.product", r.top(), rep.passed(),
          rep.passed() ? rep.rings + ", " + plural(rep.samples, "sample") : rep.failures.front());

    const Ring product = Ring::product(left, right);
    const Ring mp = Ring::closure(product, r.cfg.n);
    const RingMorphism f = morphisms::diagonal(left);
    const RingMorphism g = morphisms::diagonal(right);
    const RingMorphism h = morphisms::product_map(f, g);
    Rng rng(r.cfg.seed + 1);
    bool natural = true;
    std::string witness = "split(MC(f x g)(x)) = (MC(f), MC(g))(split x) on " + plural(r.cfg.samples, "sample");
    for (std::size_t s = 0; s < r.cfg.samples && natural; ++s) {
      const ClosureElement x = random_closure(mp, rng, r.cfg.levels);
      const auto parts = product_iso_forward(x);
      const auto mapped = product_iso_forward(cmap(h, x));
      natural = mapped.first == cmap(f, parts.first) && mapped.second == cmap(g, parts.second);
      if (!natural) witness = "x=" + x.str();
    }
    r.add("iso.product.natural", r.top(), natural, witness);
  });
}

void symbol_suite(Runner& r, const std::string& check, const Ring& source) {
  r.timed(check, [&] {
    const auto rep = verify_symbol_iso(source, r.cfg.levels, r.cfg.samples, r.cfg.seed);
    r.add(check, r.top(), rep.passed(),
          rep.passed() ? rep.rings + ", " + plural(rep.samples, "sample") : rep.failures.front());
  });
}

void suite_poly_iso(Runner& r) {
  const Ring source = Ring::polynomial(r.mc);
  symbol_suite(r, "iso.poly", source);
  r.timed("iso.poly.constants", [&] {
    const RingMorphism inc = morphisms::constant_polynomial(r.ring);
    Rng rng(r.cfg.seed + 2);
    bool ok = true;
    std::string witness = "degree-0 polynomials agree with MC(R -> R[x]) on " + plural(r.cfg.samples, "sample");
    for (std::size_t s = 0; s < r.cfg.samples && ok; ++s) {
      const ClosureElement c = random_closure(r.mc, rng, r.cfg.levels);
      Value p = source.zero();
      if (!r.mc.is_zero(c.to_value())) {
        p.parts = {c.to_value()};
        p.exps = {0};
      }
      ok = symbol_iso(source, p) == cmap(inc, c);
      if (!ok) witness = "c=" + c.str();
    }
    r.add("iso.poly.constants", r.top(), ok, witness);
  });
}

void suite_group_iso(Runner& r) { symbol_suite(r, "iso.group", Ring::cyclic_group(r.mc, 2)); }
void suite_laurent_iso(Runner& r) { symbol_suite(r, "iso.laurent", Ring::laurent(r.mc)); }

std::shared_ptr<const FiniteModule> module_for(const Runner& r, const std::string& spec) {
  FiniteModule m = spec.empty() ? FiniteModule::regular(r.ring) : parse_module(spec);
  if (m.ring() != r.ring) {
    throw DomainError("module " + m.name() + " is over " + m.ring().name() + ", suite ring is " + r.ring.name());
  }
  return std::make_shared<const FiniteModule>(std::move(m));
}

DeltaElement delta_add(const DeltaElement& v, const DeltaElement& w) {
  const std::size_t level = std::max(v.level(), w.level());
  auto a = delta_lift(v, level);
  const auto b = delta_lift(w, level);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = v.module().add(a[i], b[i]);
  return DeltaElement::make(v.module_ptr(), v.n(), level, std::move(a));
}

void suite_delta(Runner& r) {
  const auto m = module_for(r, r.cfg.module);
  const auto m2 = r.cfg.module2.empty() ? m : module_for(r, r.cfg.module2);
  r.timed("delta.axioms", [&] {
    if (auto err = m->axiom_failure()) {
      r.add("delta.module", -1, false, m->name() + ": " + *err);
      return;
    }
    Rng rng(r.cfg.seed);
    const ClosureElement one = ClosureElement::one(r.mc);
    bool axioms = true;
    bool compat = true;
    std::string axioms_w = plural(r.cfg.samples, "sampled triple");
    std::string compat_w = "delta_lift(Av) = lift(A) delta_lift(v) on " + plural(r.cfg.samples, "sample");
    for (std::size_t s = 0; s < r.cfg.samples; ++s) {
      const ClosureElement a = random_closure(r.mc, rng, r.cfg.levels);
      const ClosureElement b = random_closure(r.mc, rng, r.cfg.levels);
      const DeltaElement v = random_delta(m, r.cfg.n, r.cfg.levels, rng);
      const DeltaElement w = random_delta(m, r.cfg.n, r.cfg.levels, rng);
      const DeltaElement av = delta_act(a, v);
      if (axioms && (delta_act(a * b, v) != delta_act(a, delta_act(b, v)) ||
                     delta_act(a + b, v) != delta_add(av, delta_act(b, v)) ||
                     delta_act(a, delta_add(v, w)) != delta_add(av, delta_act(a, w)) || delta_act(one, v) != v)) {
        axioms = false;
        axioms_w = "A=" + a.str() + " B=" + b.str() + " v=" + v.str();
      }
      const std::size_t up = std::max(a.level(), v.level()) + 1;
      const Matrix lifted = a.lift(up);
      const auto lv = delta_lift(v, up);
      std::vector<std::size_t> direct(lv.size(), 0);
      for (std::size_t i = 0; i < lv.size(); ++i) {
        for (std::size_t j = 0; j < lv.size(); ++j) direct[i] = m->add(direct[i], m->act(lifted.at(i, j), lv[j]));
      }
      if (compat && delta_lift(av, up) != direct) {
        compat = false;
        compat_w = "A=" + a.str() + " v=" + v.str();
      }
    }
    r.add("delta.axioms", r.top(), axioms, axioms_w);
    r.add("delta.compat", r.top(), compat, compat_w);
  });
  r.timed("delta.simple", [&] { r.absorb(delta_simple_check(*m, r.cfg.n, r.cfg.levels).records); });
  r.timed("delta.faithful", [&] { r.absorb(delta_faithful_check(*m, r.cfg.n, r.cfg.levels).records); });
  r.timed("delta.coproduct", [&] {
    r.absorb(delta_coproduct_check(*m, *m2, r.cfg.n, r.cfg.levels, r.cfg.samples, r.cfg.seed).records);
  });
}

void suite_lattice(Runner& r) {
  r.timed("lattice", [&] { r.absorb(lattice_iso_roundtrip(r.ring, r.cfg.n, r.cfg.levels, r.cfg.seed).records); });
}

void suite_ideals(Runner& r) {
  Rng rng(r.cfg.seed);
  for (const Side side : {Side::Left, Side::Right, Side::TwoSided}) {
    const std::string check = "ideal." + to_string(side);
    r.timed(check, [&] {
      const auto ideals = enumerate_ideals(r.ring, side);
      bool ok = std::all_of(ideals.begin(), ideals.end(), [](const FiniteIdeal& i) { return i.satisfies_axioms(); });
      r.add(check + ".base", -1, ok, plural(ideals.size(), to_string(side) + " ideal"));
      r.absorb(closure_ideal_check(r.ring, r.cfg.n, side, r.cfg.levels, rng, std::min<std::size_t>(r.cfg.samples, 64))
                   .records);
    });
  }
}

void suite_chain(Runner& r) {
  r.timed("chain", [&] {
    const ChainReport rep = idempotent_chain(r.ring, r.cfg.n, r.cfg.depth);
    r.absorb(rep.records);
    std::string where;
    for (const auto& [row, col] : rep.strictness_witnesses) {
      where += (where.empty() ? "" : ",") + std::string("(") + std::to_string(row) + "," + std::to_string(col) + ")";
    }
    r.add("chain.descents", static_cast<std::int64_t>(r.cfg.depth), rep.strict_descents == r.cfg.depth,
          plural(rep.strict_descents, "strict descent") + " witnesses " + (where.empty() ? "none" : where));
  });
}

void suite_union(Runner& r) {
  r.timed("union", [&] {
    const auto maximal = maximal_ideals(enumerate_ideals(r.ring, Side::Left));
    if (maximal.empty()) {
      r.add("union.base", -1, Verdict::Vacuous, "no maximal left ideal");
      return;
    }
    const FiniteIdeal& m = maximal.front();
    r.add("union.base", -1, true, "maximal left ideal m=" + m.str());
    Rng rng(r.cfg.seed);
    r.absorb(maximal_family_union(r.ring, r.cfg.n, column_in_ideal_family(m), r.cfg.levels, rng,
                                  std::min<std::size_t>(r.cfg.samples, 32))
                 .records);
  });
}

void suite_radical(Runner& r) {
  r.timed("radical", [&] { r.absorb(closure_radical_check(r.ring, r.cfg.n, r.cfg.levels).records); });
  r.timed("radical.cross", [&] {
    const FiniteIdeal quasi = jacobson_radical(r.ring);
    const FiniteIdeal inter = radical_by_maximal_ideals(r.ring);
    r.add("radical.cross", -1, quasi.mask() == inter.mask(),
          "quasiregular " + quasi.str() + ", maximal left ideals " + inter.str());
  });
}

// Base-ring classification: the verdict of the predicate becomes the witness,
// so a "no" answer is a finding, not a failed check.
void classify(Runner& r, const std::string& check, const PropertyVerdict& v) {
  r.add(check, -1, true, std::string(v.verdict == Verdict::Holds ? "yes" : "no") + ": " + v.witness);
}

void suite_semiprime(Runner& r) {
  r.timed("semiprime.base", [&] { classify(r, "semiprime.base", is_semiprime(r.ring)); });
  r.timed("semiprime.level", [&] { r.absorb(closure_semiprime_check(r.ring, r.cfg.n, r.cfg.levels).records); });
}

void suite_prime(Runner& r) {
  r.timed("prime.base", [&] {
    const PropertyVerdict prime = is_prime(r.ring);
    const PropertyVerdict semiprime = is_semiprime(r.ring);
    classify(r, "prime.base", prime);
    r.add("prime.implies-semiprime", -1, prime.verdict != Verdict::Holds || semiprime.verdict == Verdict::Holds,
          "prime=" + to_string(prime.verdict) + " semiprime=" + to_string(semiprime.verdict));
  });
  r.timed("prime.level", [&] { r.absorb(closure_prime_check(r.ring, r.cfg.n, r.cfg.levels).records); });
}

void suite_vnr(Runner& r) {
  r.timed("vnr", [&] {
    const PropertyVerdict base = is_von_neumann_regular(r.ring);
    classify(r, "vnr.base", base);
    if (base.verdict != Verdict::Holds) {
      r.add("vnr.witness", r.top(), Verdict::Vacuous, "base not von Neumann regular, " + base.witness);
      return;
    }
    Rng rng(r.cfg.seed);
    bool ok = true;
    std::string witness = plural(r.cfg.samples, "sampled element") + ", witness at the element's level";
    for (std::size_t s = 0; s < r.cfg.samples && ok; ++s) {
      const ClosureElement x = random_closure(r.mc, rng, r.cfg.levels);
      try {
        const ClosureElement y = closure_vnr_witness(x);
        ok = x * y * x == x && y.level() <= x.level();
      } catch (const DomainError& e) {
        ok = false;
        witness = e.what();
      }
      if (!ok && witness.find("x=") == std::string::npos) witness = "x=" + x.str();
    }
    r.add("vnr.witness", r.top(), ok, witness);
  });
}

void suite_ibn(Runner& r) {
  r.timed("ibn", [&] {
    Record rec = ibn_check(r.ring, r.cfg.n, r.cfg.rmax, r.cfg.smax, r.cfg.levels, r.cfg.budget);
    r.records.push_back(rec);
    const auto square = find_rectangular_inverse_pair(r.ring, 1, 1, r.cfg.budget);
    r.add("ibn.square", 0, square.has_value(),
          square ? "r=s=1 pair A=" + square->first.str() + " B=" + square->second.str() + " accepted"
                 : "no 1x1 pair found");
  });
}

void suite_semisimple(Runner& r) {
  r.timed("semisimple", [&] {
    const PropertyVerdict base = is_semisimple(r.ring);
    classify(r, "semisimple.base", base);
    if (base.verdict != Verdict::Holds) {
      r.add("semisimple.level", r.top(), Verdict::Vacuous, "base not semisimple, " + base.witness);
      return;
    }
    for (auto rec : closure_radical_check(r.ring, r.cfg.n, r.cfg.levels).records) {
      if (rec.check == "radical.base") continue;
      rec.check = "semisimple.level";
      r.records.push_back(std::move(rec));
    }
  });
}

struct SuiteEntry {
  SuiteInfo info;
  void (*run)(Runner&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"axioms", "MC_n(R) is a unital ring: associativity, distributivity, identity on sampled triples"},
       suite_axioms},
      {{"transition", "stepwise lifting agrees with the single transition I (x) A, and lifts renormalize"},
       suite_transition},
      {{"functor", "MC_n is a functor preserving identities, composition and injective morphisms"}, suite_functor},
      {{"idempotency", "MC_n(MC_n(R)) is isomorphic to MC_n(R) via interleaved flattening"}, suite_idempotency},
      {{"units", "units of MC_n(R) are exactly the classes of invertible matrices"}, suite_units},
      {{"center", "the center of MC_n(R) is the image of the center of R"}, suite_center},
      {{"product-iso", "MC_n(R x S) is isomorphic to MC_n(R) x MC_n(S), naturally"}, suite_product_iso},
      {{"poly-iso", "MC_n(R)[x] is isomorphic to MC_n(R[x]), fixing constants"}, suite_poly_iso},
      {{"group-iso", "MC_n(R)[C2] is isomorphic to MC_n(R[C2])"}, suite_group_iso},
      {{"laurent-iso", "MC_n(R)[x,x^-1] is isomorphic to MC_n(R[x,x^-1])"}, suite_laurent_iso},
      {{"delta", "Delta(M) is a module over MC_n(R) preserving generators, simplicity, faithfulness, coproducts"},
       suite_delta},
      {{"lattice", "two-sided ideals of R and of MC_n(R) correspond as lattices"}, suite_lattice},
      {{"ideals", "MC_n(I) is a left, right or two-sided ideal whenever I is"}, suite_ideals},
      {{"chain", "MC_n(R) has a strictly descending chain of idempotent-generated left ideals"}, suite_chain},
      {{"union", "a compatible family of maximal left ideals unions to a proper left ideal, maximal levelwise"},
       suite_union},
      {{"radical", "J(MC_n(R)) = MC_n(J(R)), checked levelwise as J(M_k(R)) = M_k(J(R))"}, suite_radical},
      {{"semiprime", "MC_n(R) is semiprime when R is"}, suite_semiprime},
      {{"prime", "MC_n(R) is prime when R is"}, suite_prime},
      {{"vnr", "MC_n(R) is von Neumann regular when R is, with witnesses at the element's level"}, suite_vnr},
      {{"ibn", "MC_n(R) has invariant basis number when R does (bounded rectangular inverse search)"}, suite_ibn},
      {{"semisimple", "MC_n(R) is semisimple when R is"}, suite_semisimple},
  };
  return entries;
}

}  // namespace

int SuiteReport::exit_code() const {
  if (failed > 0) return 1;
  if (undecided > 0) return 2;
  return 0;
}

const std::vector<SuiteInfo>& list_suites() {
  static const std::vector<SuiteInfo> rows = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return rows;
}

const std::vector<std::string>& default_zoo() {
  static const std::vector<std::string> zoo{"Z/4", "Z/6", "GF(2)", "GF(3)", "GF(2)xZ/3", "GF(2)[C2]", "M2(GF(2))"};
  return zoo;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const SuiteEntry& e) { return e.info.name == config.suite; });
  if (it == entries.end()) throw DomainError("unknown suite '" + config.suite + "'");
  if (config.budget == 0) throw DomainError("budget must be positive");
  if (config.n < 2) throw DomainError("n must be at least 2");

  Runner runner(config, build_ring(config.ring));
  it->run(runner);

  SuiteReport report;
  report.config = config;
  report.records = std::move(runner.records);
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.level < b.level;
  });
  for (const auto& r : report.records) {
    switch (r.verdict) {
      case Verdict::Holds:
        ++report.passed;
        break;
      case Verdict::Fails:
        ++report.failed;
        break;
      case Verdict::Undecided:
        ++report.undecided;
        break;
      case Verdict::Vacuous:
        ++report.vacuous;
        break;
    }
  }
  return report;
}

namespace {

std::vector<std::pair<std::string, std::string>> config_fields(const SuiteConfig& c) {
  return {{"suite", c.suite},
          {"ring", c.ring},
          {"n", std::to_string(c.n)},
          {"levels", std::to_string(c.levels)},
          {"samples", std::to_string(c.samples)},
          {"seed", std::to_string(c.seed)},
          {"budget", std::to_string(c.budget)},
          {"depth", std::to_string(c.depth)},
          {"rmax", std::to_string(c.rmax)},
          {"smax", std::to_string(c.smax)},
          {"module", c.module},
          {"module2", c.module2}};
}

}  // namespace

std::string render_text(const SuiteReport& report, bool with_timing) {
  std::ostringstream out;
  out << "config";
  for (const auto& [k, v] : config_fields(report.config)) out << ' ' << format_field(k, v);
  out << '\n';
  for (const auto& r : report.records) out << format_record(r) << '\n';
  out << "summary " << format_field("passed", std::to_string(report.passed)) << ' '
      << format_field("failed", std::to_string(report.failed)) << ' '
      << format_field("undecided", std::to_string(report.undecided)) << ' '
      << format_field("vacuous", std::to_string(report.vacuous)) << ' '
      << format_field("exit", std::to_string(report.exit_code())) << '\n';
  if (with_timing) {
    for (const auto& r : report.records) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.elapsed_ms);
      out << "# elapsed " << format_field("check", r.check) << ' ' << format_field("level", std::to_string(r.level))
          << ' ' << format_field("ms", ms) << '\n';
    }
  }
  return out.str();
}

std::string report_body(const std::string& rendered) {
  std::istringstream in(rendered);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out += line + '\n';
  }
  return out;
}

std::string render_json(const SuiteReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json config;
  const SuiteConfig& c = report.config;
  config["suite"] = c.suite;
  config["ring"] = c.ring;
  config["n"] = c.n;
  config["levels"] = c.levels;
  config["samples"] = c.samples;
  config["seed"] = c.seed;
  config["budget"] = c.budget;
  config["depth"] = c.depth;
  config["rmax"] = c.rmax;
  config["smax"] = c.smax;
  config["module"] = c.module;
  config["module2"] = c.module2;
  j["config"] = config;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check;
    rec["ring"] = r.ring;
    if (r.n != 0) rec["n"] = r.n;
    if (r.level >= 0) rec["level"] = r.level;
    rec["verdict"] = to_string(r.verdict);
    rec["witness"] = r.witness;
    if (with_timing) rec["elapsed_ms"] = r.elapsed_ms;
    j["records"].push_back(rec);
  }
  j["summary"] = {{"passed", report.passed},
                  {"failed", report.failed},
                  {"undecided", report.undecided},
                  {"vacuous", report.vacuous},
                  {"exit", report.exit_code()}};
  return j.dump(2) + "\n";
}

}  // namespace matclose
