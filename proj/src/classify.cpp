#include "ideallab/classify.hpp"

#include <algorithm>
#include <functional>

namespace ideallab {

std::string status_str(Status s) {
  switch (s) {
    case Status::Proven:
      return "proven";
    case Status::Refuted:
      return "refuted";
    case Status::Unfalsified:
      return "unfalsified";
  }
  return "?";
}

std::string method_str(Method m) {
  switch (m) {
    case Method::Oracle:
      return "oracle";
    case Method::FastPath:
      return "fast-path";
    case Method::Certificate:
      return "certificate";
  }
  return "?";
}

std::string ScanLimits::describe() const {
  return "degree<=" + std::to_string(monloc_degree) + ",terms<=" +
         std::to_string(monloc_max_terms) + ",coeffs{0,1}";
}

// ---------------------------------------------------------------------------
// Valuation model: over Z-like quotients every predicate here depends only on
// the capped valuation vector of an element at the primes of the ring
// modulus, and every vector is realized, so universal statements reduce to a
// finite vector scan.  The zero vector is the unit classes; over Z and Z[1/s]
// (and products with such a factor) those classes still contain nonunits.
// ---------------------------------------------------------------------------

namespace {

struct LocalModel {
  std::vector<i64> primes;
  std::vector<int> caps;       // valuation cap per prime = its ring exponent
  std::vector<int> ideal_exp;  // membership threshold per prime
  bool zero_vec_has_nonunits = false;

  std::size_t count = 1;                // number of vectors
  std::vector<std::vector<int>> vecs;   // decoded vectors
  std::vector<bool> in_ideal, in_radical;

  void finish() {
    count = 1;
    for (int c : caps) count *= static_cast<std::size_t>(c) + 1;
    vecs.assign(count, std::vector<int>(caps.size(), 0));
    for (std::size_t id = 0; id < count; ++id) {
      std::size_t t = id;
      for (std::size_t i = 0; i < caps.size(); ++i) {
        vecs[id][i] = static_cast<int>(t % static_cast<std::size_t>(caps[i] + 1));
        t /= static_cast<std::size_t>(caps[i] + 1);
      }
    }
    in_ideal.assign(count, false);
    in_radical.assign(count, false);
    for (std::size_t id = 0; id < count; ++id) {
      bool mem = true, rad = true;
      for (std::size_t i = 0; i < caps.size(); ++i) {
        if (vecs[id][i] < ideal_exp[i]) mem = false;
        if (vecs[id][i] < std::min(ideal_exp[i], 1)) rad = false;
      }
      in_ideal[id] = mem;
      in_radical[id] = rad;
    }
  }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t id = 0, mult = 1;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      int v = std::min(vecs[a][i] + vecs[b][i], caps[i]);
      id += mult * static_cast<std::size_t>(v);
      mult *= static_cast<std::size_t>(caps[i] + 1);
    }
    return id;
  }

  bool nonunit_slot(std::size_t a) const { return a != 0 || zero_vec_has_nonunits; }
};

void model_append_modulus(LocalModel& m, i64 modulus) {
  for (const auto& [p, e] : factorize(modulus)) {
    m.primes.push_back(p);
    m.caps.push_back(e);
    m.ideal_exp.push_back(e);
  }
}

void model_append_zmod(LocalModel& m, i64 n, i64 d) {
  for (const auto& [p, e] : factorize(n)) {
    m.primes.push_back(p);
    m.caps.push_back(e);
    m.ideal_exp.push_back(d % p == 0 ? valuation(d, p) : 0);
  }
}

// nullopt when the quotient is not residue-decidable (zero modulus over Z).
std::optional<LocalModel> build_model(const Ideal& I) {
  LocalModel m;
  switch (I.ring().backend()) {
    case Backend::Int:
    case Backend::IntInv:
      if (I.modulus() == 0) return std::nullopt;
      model_append_modulus(m, I.modulus());
      m.zero_vec_has_nonunits = true;
      break;
    case Backend::ZMod:
      model_append_zmod(m, I.ring().param(), I.modulus());
      break;
    case Backend::Prod: {
      for (int c = 0; c < 2; ++c) {
        const RingHandle& comp = c == 0 ? I.ring().left() : I.ring().right();
        i64 cm = I.component_modulus(c);
        if (comp.backend() == Backend::ZMod) {
          model_append_zmod(m, comp.param(), cm);
        } else {
          if (cm == 0) return std::nullopt;
          if (cm > 1) model_append_modulus(m, cm);
          m.zero_vec_has_nonunits = true;
        }
      }
      break;
    }
    default:
      return std::nullopt;
  }
  m.finish();
  return m;
}

bool model_refutes_prime(const LocalModel& m) {
  for (std::size_t a = 0; a < m.count; ++a) {
    if (m.in_ideal[a]) continue;
    for (std::size_t b = 0; b < m.count; ++b) {
      if (m.in_ideal[b]) continue;
      if (m.in_ideal[m.add(a, b)]) return true;
    }
  }
  return false;
}

bool model_refutes_primary(const LocalModel& m) {
  for (std::size_t a = 0; a < m.count; ++a) {
    if (m.in_ideal[a]) continue;
    for (std::size_t b = 0; b < m.count; ++b) {
      if (m.in_radical[b]) continue;
      if (m.in_ideal[m.add(a, b)]) return true;
    }
  }
  return false;
}

bool model_refutes_one_abs(const LocalModel& m) {
  for (std::size_t a = 0; a < m.count; ++a) {
    if (!m.nonunit_slot(a)) continue;
    for (std::size_t b = 0; b < m.count; ++b) {
      if (!m.nonunit_slot(b)) continue;
      std::size_t ab = m.add(a, b);
      if (m.in_ideal[ab]) continue;
      for (std::size_t c = 0; c < m.count; ++c) {
        if (!m.nonunit_slot(c)) continue;
        if (m.in_radical[c]) continue;
        if (m.in_ideal[m.add(ab, c)]) return true;
      }
    }
  }
  return false;
}

bool model_refutes_two_abs_primary(const LocalModel& m) {
  for (std::size_t a = 0; a < m.count; ++a)
    for (std::size_t b = 0; b < m.count; ++b) {
      std::size_t ab = m.add(a, b);
      if (m.in_ideal[ab]) continue;
      for (std::size_t c = 0; c < m.count; ++c) {
        if (!m.in_ideal[m.add(ab, c)]) continue;
        if (m.in_radical[m.add(a, c)]) continue;
        if (m.in_radical[m.add(b, c)]) continue;
        return true;
      }
    }
  return false;
}

bool model_refutes_two_abs(const LocalModel& m) {
  for (std::size_t a = 0; a < m.count; ++a)
    for (std::size_t b = 0; b < m.count; ++b) {
      std::size_t ab = m.add(a, b);
      if (m.in_ideal[ab]) continue;
      for (std::size_t c = 0; c < m.count; ++c) {
        if (!m.in_ideal[m.add(ab, c)]) continue;
        if (m.in_ideal[m.add(a, c)]) continue;
        if (m.in_ideal[m.add(b, c)]) continue;
        return true;
      }
    }
  return false;
}

// ---------------------------------------------------------------------------
// Literal class scans, used to extract the canonical minimal witness once the
// model has decided "refuted".  Classes are scanned ascending, tuples in
// row-major order; nonunit-quantified spots report the canonical nonunit
// representative of the class, the rest report the class value itself.
// ---------------------------------------------------------------------------

struct ScanClass {
  Element plain;
  Element nonunit;
  bool has_nonunit = false;
};

i64 lift_int_nonunit(i64 r, i64 m) {
  i64 t = r;
  while (t == 1 || t == -1) t += m;
  return t;
}

std::vector<ScanClass> scan_classes(const Ideal& I) {
  const RingHandle& R = I.ring();
  std::vector<ScanClass> out;
  switch (R.backend()) {
    case Backend::ZMod: {
      for (const auto& e : ring_elements(R))
        out.push_back(ScanClass{e, e, !is_unit(R, e)});
      return out;
    }
    case Backend::Int: {
      i64 m = I.modulus();
      for (i64 r = 0; r < m; ++r)
        out.push_back(ScanClass{make_int(r), make_int(lift_int_nonunit(r, m)), true});
      return out;
    }
    case Backend::IntInv: {
      i64 m = I.modulus();
      for (i64 r = 0; r < m; ++r) {
        i64 t = r;
        while (is_unit(R, make_rat(R, Rat(t)))) t += m;
        out.push_back(ScanClass{make_rat(R, Rat(r)), make_rat(R, Rat(t)), true});
      }
      return out;
    }
    case Backend::Prod: {
      auto comp_residues = [&](int i) {
        const RingHandle& c = i == 0 ? R.left() : R.right();
        i64 span = c.backend() == Backend::ZMod ? c.param() : I.component_modulus(i);
        return span;
      };
      i64 lm = comp_residues(0), rm = comp_residues(1);
      bool l_int = R.left().backend() == Backend::Int;
      bool r_int = R.right().backend() == Backend::Int;
      for (i64 i = 0; i < lm; ++i) {
        for (i64 j = 0; j < rm; ++j) {
          Element plain = make_pair(R, i, j);
          ScanClass sc{plain, plain, false};
          if (!is_unit(R, plain)) {
            sc.nonunit = plain;
            sc.has_nonunit = true;
          } else if (r_int) {
            sc.nonunit = make_pair(R, i, lift_int_nonunit(j, rm));
            sc.has_nonunit = true;
          } else if (l_int) {
            sc.nonunit = make_pair(R, lift_int_nonunit(i, lm), j);
            sc.has_nonunit = true;
          }
          out.push_back(sc);
        }
      }
      return out;
    }
    default:
      throw domain_error("scan_classes: backend has no residue scan");
  }
}

// Stepped inner loop: indices c with plain[a]*plain[b]*plain[c] in I come in
// arithmetic progressions over Z and Z[1/s]; elsewhere the span is small and
// we walk every class.
i64 scan_step(const Ideal& I, const Element& d) {
  const Backend b = I.ring().backend();
  if (b == Backend::Int) {
    i64 m = I.modulus();
    return m / gcd_i64(d.a, m);
  }
  if (b == Backend::IntInv) {
    i64 m = I.modulus();
    i64 dv = d.q.num == 0 ? 0 : strip_primes_of(abs_i64(d.q.num), I.ring().param());
    return m / gcd_i64(dv, m);
  }
  return 1;
}

std::optional<std::vector<Element>> scan_prime_witness(const Ideal& I) {
  const RingHandle& R = I.ring();
  auto cls = scan_classes(I);
  for (const auto& a : cls) {
    if (contains(I, a.plain)) continue;
    i64 step = scan_step(I, a.plain);
    for (std::size_t j = 0; j < cls.size(); j += static_cast<std::size_t>(step)) {
      const auto& b = cls[j];
      if (contains(I, b.plain)) continue;
      if (contains(I, ring_mul(R, a.plain, b.plain)))
        return std::vector<Element>{a.plain, b.plain};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> scan_primary_witness(const Ideal& I) {
  const RingHandle& R = I.ring();
  auto cls = scan_classes(I);
  Ideal rad = radical(I);
  for (const auto& a : cls) {
    if (contains(I, a.plain)) continue;
    i64 step = scan_step(I, a.plain);
    for (std::size_t j = 0; j < cls.size(); j += static_cast<std::size_t>(step)) {
      const auto& b = cls[j];
      if (contains(rad, b.plain)) continue;
      if (contains(I, ring_mul(R, a.plain, b.plain)))
        return std::vector<Element>{a.plain, b.plain};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> scan_one_abs_witness(const Ideal& I) {
  const RingHandle& R = I.ring();
  auto cls = scan_classes(I);
  Ideal rad = radical(I);
  for (const auto& a : cls) {
    if (!a.has_nonunit) continue;
    for (const auto& b : cls) {
      if (!b.has_nonunit) continue;
      Element ab = ring_mul(R, a.plain, b.plain);
      if (contains(I, ab)) continue;
      i64 step = scan_step(I, ab);
      for (std::size_t k = 0; k < cls.size(); k += static_cast<std::size_t>(step)) {
        const auto& c = cls[k];
        if (!c.has_nonunit) continue;
        if (contains(rad, c.plain)) continue;
        if (contains(I, ring_mul(R, ab, c.plain)))
          return std::vector<Element>{a.nonunit, b.nonunit, c.nonunit};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> scan_two_abs_primary_witness(const Ideal& I) {
  const RingHandle& R = I.ring();
  auto cls = scan_classes(I);
  Ideal rad = radical(I);
  for (const auto& a : cls) {
    for (const auto& b : cls) {
      Element ab = ring_mul(R, a.plain, b.plain);
      if (contains(I, ab)) continue;
      i64 step = scan_step(I, ab);
      for (std::size_t k = 0; k < cls.size(); k += static_cast<std::size_t>(step)) {
        const auto& c = cls[k];
        if (!contains(I, ring_mul(R, ab, c.plain))) continue;
        if (contains(rad, ring_mul(R, a.plain, c.plain))) continue;
        if (contains(rad, ring_mul(R, b.plain, c.plain))) continue;
        return std::vector<Element>{a.plain, b.plain, c.plain};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> scan_two_abs_witness(const Ideal& I) {
  const RingHandle& R = I.ring();
  auto cls = scan_classes(I);
  for (const auto& a : cls) {
    for (const auto& b : cls) {
      Element ab = ring_mul(R, a.plain, b.plain);
      if (contains(I, ab)) continue;
      i64 step = scan_step(I, ab);
      for (std::size_t k = 0; k < cls.size(); k += static_cast<std::size_t>(step)) {
        const auto& c = cls[k];
        if (!contains(I, ring_mul(R, ab, c.plain))) continue;
        if (contains(I, ring_mul(R, a.plain, c.plain))) continue;
        if (contains(I, ring_mul(R, b.plain, c.plain))) continue;
        return std::vector<Element>{a.plain, b.plain, c.plain};
      }
    }
  }
  return std::nullopt;
}

// the witness scan only runs when the model decision is "refuted"
template <typename F>
Verdict from_scan(bool refuted, F witness_fn) {
  if (!refuted) return Verdict::proven(Method::Oracle);
  std::optional<std::vector<Element>> witness = witness_fn();
  if (!witness) throw error("internal: model refuted but the class scan found no witness");
  return Verdict::refuted(std::move(*witness), Method::Oracle);
}

// ---------------------------------------------------------------------------
// kxy: monomial criteria, certificates, bounded scans
// ---------------------------------------------------------------------------

bool monloc_is_prime_set(const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.degree() > 1) return false;
  return true;  // generated by a subset of {x, y}; the zero ideal is prime too
}

// primary iff every variable occurring in a generator has a pure power
// among the generators
std::optional<std::pair<Monomial, Monomial>> monloc_primary_counterexample(
    const std::vector<Monomial>& gens) {
  auto has_pure_x = std::any_of(gens.begin(), gens.end(),
                                [](const Monomial& g) { return g.dy == 0 && g.dx > 0; });
  auto has_pure_y = std::any_of(gens.begin(), gens.end(),
                                [](const Monomial& g) { return g.dx == 0 && g.dy > 0; });
  for (int var = 0; var < 2; ++var) {
    bool occurs = false;
    for (const auto& g : gens) occurs |= var == 0 ? g.dx > 0 : g.dy > 0;
    bool pure = var == 0 ? has_pure_x : has_pure_y;
    if (occurs && !pure) {
      Monomial v = var == 0 ? Monomial{1, 0} : Monomial{0, 1};
      for (const auto& g : gens) {
        if (v.divides(g)) return std::make_pair(g.quotient_by(v), v);
      }
    }
  }
  return std::nullopt;
}

Element mono_elem(const Monomial& m) { return make_polyfrac(Poly::monomial(m)); }

// all {0,1}-coefficient sums of distinct monomials, ordered by term count
// then by term indices
std::vector<Poly> bounded_polys(const ScanLimits& limits, bool allow_constant) {
  std::vector<Monomial> monos;
  for (int d = allow_constant ? 0 : 1; d <= limits.monloc_degree; ++d)
    for (int dx = d; dx >= 0; --dx) monos.push_back(Monomial{dx, d - dx});
  std::sort(monos.begin(), monos.end());
  std::vector<Poly> acc;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, int)> pick_exact = [&](std::size_t start, int left) {
    if (left == 0) {
      Poly p = Poly::zero();
      for (std::size_t i : pick) p = p + Poly::monomial(monos[i]);
      acc.push_back(p);
      return;
    }
    for (std::size_t i = start; i < monos.size(); ++i) {
      pick.push_back(i);
      pick_exact(i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (int terms = 1; terms <= limits.monloc_max_terms; ++terms) pick_exact(0, terms);
  return acc;
}

}  // namespace

std::vector<Poly> bounded_nonunit_polys(const ScanLimits& limits) {
  return bounded_polys(limits, false);
}

std::vector<Poly> bounded_all_polys(const ScanLimits& limits) {
  return bounded_polys(limits, true);
}

namespace {

// The scan families carry {0,1} coefficients, so products never cancel and a
// product of family polynomials lies in a monomial ideal exactly when every
// pairwise monomial product is divisible by a generator.  This keeps the
// triple scans allocation-free.
bool mono_in(const Ideal& I, const Poly& f) {
  for (const auto& [m, c] : f.terms) {
    bool covered = false;
    for (const auto& gen : I.generators())
      if (gen.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool mono_product_in(const Ideal& I, const Poly& f, const Poly& g) {
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      Monomial m = mf * mg;
      bool covered = false;
      for (const auto& gen : I.generators())
        if (gen.divides(m)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

bool mono_triple_in(const Ideal& I, const Poly& f, const Poly& g, const Poly& h) {
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms)
      for (const auto& [mh, ch] : h.terms) {
        Monomial m = mf * mg * mh;
        bool covered = false;
        for (const auto& gen : I.generators())
          if (gen.divides(m)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
  return true;
}

}  // namespace

Verdict one_absorbing_bounded_scan(const Ideal& I, const ScanLimits& limits) {
  if (I.ring().backend() != Backend::MonLoc)
    throw unsupported_error("one_absorbing_bounded_scan: kxy only");
  Ideal rad = radical(I);
  auto polys = bounded_nonunit_polys(limits);
  std::vector<bool> in_rad(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) in_rad[i] = mono_in(rad, polys[i]);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (mono_product_in(I, polys[i], polys[j])) continue;
      for (std::size_t k = 0; k < polys.size(); ++k) {
        if (in_rad[k]) continue;
        if (mono_triple_in(I, polys[i], polys[j], polys[k]))
          return Verdict::refuted(
              {make_polyfrac(polys[i]), make_polyfrac(polys[j]), make_polyfrac(polys[k])},
              Method::Oracle);
      }
    }
  }
  return Verdict::unfalsified(limits.describe());
}

namespace {

Verdict monloc_two_abs_scan(const Ideal& I, const ScanLimits& limits, bool primary_variant) {
  Ideal rad = radical(I);
  auto polys = bounded_all_polys(limits);
  const Ideal& side = primary_variant ? rad : I;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (mono_product_in(I, polys[i], polys[j])) continue;
      for (std::size_t k = 0; k < polys.size(); ++k) {
        if (!mono_triple_in(I, polys[i], polys[j], polys[k])) continue;
        if (mono_product_in(side, polys[i], polys[k])) continue;
        if (mono_product_in(side, polys[j], polys[k])) continue;
        return Verdict::refuted(
            {make_polyfrac(polys[i]), make_polyfrac(polys[j]), make_polyfrac(polys[k])},
            Method::Oracle);
      }
    }
  }
  return Verdict::unfalsified(limits.describe());
}

void require_proper(const Ideal& I, const char* op) {
  if (!I.is_proper()) throw domain_error(std::string(op) + ": ideal must be proper");
}

bool prod_has_zero_int_component(const Ideal& I) {
  for (int c = 0; c < 2; ++c) {
    const RingHandle& comp = c == 0 ? I.ring().left() : I.ring().right();
    if (comp.backend() == Backend::Int && I.component_modulus(c) == 0) return true;
  }
  return false;
}

}  // namespace

Verdict is_prime_ideal(const Ideal& I) {
  const RingHandle& R = I.ring();
  if (I.is_whole()) return Verdict::refuted({}, Method::FastPath);
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv: {
      if (I.modulus() == 0) return Verdict::proven(Method::FastPath);
      break;
    }
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (!k || *k == 1) return Verdict::proven(Method::FastPath);
      Element p = make_rat(R, Rat(R.param()));
      Element rest = make_rat(R, Rat(checked_pow(R.param(), *k - 1)));
      return Verdict::refuted({p, rest}, Method::FastPath);
    }
    case Backend::MonLoc: {
      const auto& gens = I.generators();
      if (monloc_is_prime_set(gens)) return Verdict::proven(Method::Certificate);
      for (const auto& g : gens) {
        if (g.degree() < 2) continue;
        Monomial v = g.dx > 0 ? Monomial{1, 0} : Monomial{0, 1};
        return Verdict::refuted({mono_elem(g.quotient_by(v)), mono_elem(v)},
                                Method::Certificate);
      }
      break;
    }
    case Backend::Prod: {
      if (prod_has_zero_int_component(I)) {
        Ideal c0 = I.component(0), c1 = I.component(1);
        if (c0.is_whole()) {
          Verdict v = is_prime_ideal(c1);
          if (v.is_proven()) return Verdict::proven(Method::FastPath);
          std::vector<Element> w;
          for (const auto& e : v.witness) w.push_back(make_pair(R, 1, e.a));
          return Verdict::refuted(std::move(w), Method::FastPath);
        }
        if (c1.is_whole()) {
          Verdict v = is_prime_ideal(c0);
          if (v.is_proven()) return Verdict::proven(Method::FastPath);
          std::vector<Element> w;
          for (const auto& e : v.witness) w.push_back(make_pair(R, e.a, 1));
          return Verdict::refuted(std::move(w), Method::FastPath);
        }
        return Verdict::refuted({make_pair(R, 0, 1), make_pair(R, 1, 0)}, Method::FastPath);
      }
      break;
    }
    default:
      break;
  }
  auto model = build_model(I);
  if (!model) throw unsupported_error("is_prime_ideal: backend not decidable here");
  return from_scan(model_refutes_prime(*model), [&] { return scan_prime_witness(I); });
}

Verdict is_maximal_ideal(const Ideal& I) {
  const RingHandle& R = I.ring();
  if (I.is_whole()) return Verdict::refuted({}, Method::FastPath);
  switch (R.backend()) {
    case Backend::ZMod: {
      i64 d = I.modulus();
      if (is_prime(d)) return Verdict::proven(Method::Oracle);
      return Verdict::refuted({make_zmod(R, smallest_prime_factor(d))}, Method::Oracle);
    }
    case Backend::Int: {
      i64 m = I.modulus();
      if (is_prime(m)) return Verdict::proven(Method::Oracle);
      return Verdict::refuted({make_int(m == 0 ? 2 : smallest_prime_factor(m))},
                              Method::Oracle);
    }
    case Backend::IntInv: {
      i64 m = I.modulus();
      if (is_prime(m)) return Verdict::proven(Method::Oracle);
      i64 w;
      if (m == 0) {
        // smallest prime surviving in Z[1/s]
        w = 2;
        while (!is_prime(w) || R.param() % w == 0) ++w;
      } else {
        w = smallest_prime_factor(m);
      }
      return Verdict::refuted({make_rat(R, Rat(w))}, Method::Oracle);
    }
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (k && *k == 1) return Verdict::proven(Method::FastPath);
      return Verdict::refuted({make_rat(R, Rat(R.param()))}, Method::FastPath);
    }
    case Backend::MonLoc: {
      const auto& gens = I.generators();
      if (gens.size() == 2 && gens[0] == Monomial{1, 0} && gens[1] == Monomial{0, 1})
        return Verdict::proven(Method::Certificate);
      Element z = contains(I, mono_elem(Monomial{1, 0})) ? mono_elem(Monomial{0, 1})
                                                         : mono_elem(Monomial{1, 0});
      return Verdict::refuted({z}, Method::Certificate);
    }
    case Backend::Prod: {
      Ideal c0 = I.component(0), c1 = I.component(1);
      bool w0 = c0.is_whole(), w1 = c1.is_whole();
      if (w0 && is_maximal_ideal(c1).is_proven()) return Verdict::proven(Method::Oracle);
      if (w1 && is_maximal_ideal(c0).is_proven()) return Verdict::proven(Method::Oracle);
      if (!w0 && !w1) return Verdict::refuted({make_pair(R, 0, 1)}, Method::Oracle);
      if (w0) {
        Verdict v = is_maximal_ideal(c1);
        return Verdict::refuted({make_pair(R, 0, v.witness.at(0).a)}, Method::Oracle);
      }
      Verdict v = is_maximal_ideal(c0);
      return Verdict::refuted({make_pair(R, v.witness.at(0).a, 0)}, Method::Oracle);
    }
  }
  throw domain_error("is_maximal_ideal: unknown backend");
}

Verdict is_primary(const Ideal& I) {
  require_proper(I, "is_primary");
  const RingHandle& R = I.ring();
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv:
      if (I.modulus() == 0) return Verdict::proven(Method::FastPath);
      break;
    case Backend::IntLoc:
      return Verdict::proven(Method::FastPath);
    case Backend::MonLoc: {
      auto ce = monloc_primary_counterexample(I.generators());
      if (!ce) return Verdict::proven(Method::Certificate);
      return Verdict::refuted({mono_elem(ce->first), mono_elem(ce->second)},
                              Method::Certificate);
    }
    case Backend::Prod:
      if (prod_has_zero_int_component(I)) {
        Ideal c0 = I.component(0), c1 = I.component(1);
        if (c0.is_whole()) {
          Verdict v = is_primary(c1);
          if (v.is_proven()) return Verdict::proven(Method::FastPath);
          return Verdict::refuted(
              {make_pair(R, 1, v.witness.at(0).a), make_pair(R, 1, v.witness.at(1).a)},
              Method::FastPath);
        }
        if (c1.is_whole()) {
          Verdict v = is_primary(c0);
          if (v.is_proven()) return Verdict::proven(Method::FastPath);
          return Verdict::refuted(
              {make_pair(R, v.witness.at(0).a, 1), make_pair(R, v.witness.at(1).a, 1)},
              Method::FastPath);
        }
        return Verdict::refuted({make_pair(R, 0, 1), make_pair(R, 1, 0)}, Method::FastPath);
      }
      break;
    default:
      break;
  }
  auto model = build_model(I);
  if (!model) throw unsupported_error("is_primary: backend not decidable here");
  return from_scan(model_refutes_primary(*model), [&] { return scan_primary_witness(I); });
}

Verdict is_one_absorbing_primary(const Ideal& I, const ScanLimits& limits) {
  require_proper(I, "is_one_absorbing_primary");
  const RingHandle& R = I.ring();
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv:
      if (I.modulus() == 0) return Verdict::proven(Method::FastPath);
      break;
    case Backend::IntLoc:
      // every proper ideal of the DVR is primary
      return Verdict::proven(Method::FastPath);
    case Backend::MonLoc: {
      if (is_primary(I).is_proven()) return Verdict::proven(Method::Certificate);
      Ideal maxideal = Ideal::monomial_ideal(R, {Monomial{1, 0}, Monomial{0, 1}});
      for (const Ideal& P :
           {Ideal::zero(R), Ideal::monomial_ideal(R, {Monomial{1, 0}}),
            Ideal::monomial_ideal(R, {Monomial{0, 1}}), maxideal}) {
        if (product(P, maxideal) == I) return Verdict::proven(Method::Certificate);
      }
      return one_absorbing_bounded_scan(I, limits);
    }
    case Backend::Prod:
      if (prod_has_zero_int_component(I)) return fast_one_absorbing(I);
      break;
    default:
      break;
  }
  auto model = build_model(I);
  if (!model) throw unsupported_error("is_one_absorbing_primary: backend not decidable here");
  return from_scan(model_refutes_one_abs(*model), [&] { return scan_one_abs_witness(I); });
}

Verdict is_two_absorbing_primary(const Ideal& I, const ScanLimits& limits) {
  require_proper(I, "is_two_absorbing_primary");
  const RingHandle& R = I.ring();
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv:
      if (I.modulus() == 0) return Verdict::proven(Method::FastPath);
      break;
    case Backend::IntLoc:
      return Verdict::proven(Method::FastPath);
    case Backend::MonLoc: {
      if (is_primary(I).is_proven() || is_one_absorbing_primary(I, limits).is_proven())
        return Verdict::proven(Method::Certificate);
      return monloc_two_abs_scan(I, limits, true);
    }
    case Backend::Prod:
      if (prod_has_zero_int_component(I))
        throw unsupported_error(
            "is_two_absorbing_primary: zero-modulus product components are not scannable");
      break;
    default:
      break;
  }
  auto model = build_model(I);
  if (!model) throw unsupported_error("is_two_absorbing_primary: backend not decidable here");
  return from_scan(model_refutes_two_abs_primary(*model), [&] { return scan_two_abs_primary_witness(I); });
}

Verdict is_two_absorbing(const Ideal& I, const ScanLimits& limits) {
  require_proper(I, "is_two_absorbing");
  const RingHandle& R = I.ring();
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv:
      if (I.modulus() == 0) return Verdict::proven(Method::FastPath);
      break;
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (!k || *k <= 2) return Verdict::proven(Method::FastPath);
      Element p = make_rat(R, Rat(R.param()));
      Element rest = make_rat(R, Rat(checked_pow(R.param(), *k - 2)));
      return Verdict::refuted({p, p, rest}, Method::FastPath);
    }
    case Backend::MonLoc: {
      if (is_prime_ideal(I).is_proven()) return Verdict::proven(Method::Certificate);
      return monloc_two_abs_scan(I, limits, false);
    }
    case Backend::Prod:
      if (prod_has_zero_int_component(I))
        throw unsupported_error(
            "is_two_absorbing: zero-modulus product components are not scannable");
      break;
    default:
      break;
  }
  auto model = build_model(I);
  if (!model) throw unsupported_error("is_two_absorbing: backend not decidable here");
  return from_scan(model_refutes_two_abs(*model), [&] { return scan_two_abs_witness(I); });
}

Verdict fast_one_absorbing(const Ideal& I) {
  const RingHandle& R = I.ring();
  require_proper(I, "fast_one_absorbing");
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv: {
      i64 m = I.modulus();
      if (m == 0 || is_prime_power(m)) return Verdict::proven(Method::FastPath);
      i64 p = smallest_prime_factor(m);
      int a = valuation(m, p);
      i64 mid = a >= 2 ? checked_pow(p, a - 1) : p;
      i64 w = m / checked_pow(p, a);
      auto el = [&](i64 v) {
        return R.backend() == Backend::Int ? make_int(v) : make_rat(R, Rat(v));
      };
      return Verdict::refuted({el(p), el(mid), el(w)}, Method::FastPath);
    }
    case Backend::IntLoc:
      return Verdict::proven(Method::FastPath);
    case Backend::Prod: {
      Ideal c0 = I.component(0), c1 = I.component(1);
      if (c0.is_whole()) {
        Verdict v = is_primary(c1);
        if (v.is_proven()) return Verdict::proven(Method::FastPath);
        return Verdict::refuted({make_pair(R, 1, v.witness.at(0).a), make_pair(R, 0, 1),
                                 make_pair(R, 1, v.witness.at(1).a)},
                                Method::FastPath);
      }
      if (c1.is_whole()) {
        Verdict v = is_primary(c0);
        if (v.is_proven()) return Verdict::proven(Method::FastPath);
        return Verdict::refuted({make_pair(R, v.witness.at(0).a, 1), make_pair(R, 1, 0),
                                 make_pair(R, v.witness.at(1).a, 1)},
                                Method::FastPath);
      }
      return Verdict::refuted({make_pair(R, 0, 1), make_pair(R, 0, 1), make_pair(R, 1, 0)},
                              Method::FastPath);
    }
    default:
      throw unsupported_error("fast_one_absorbing: Z, Z[1/s], Zloc and products only");
  }
}

ClassificationReport classify_report(const Ideal& I, const ScanLimits& limits) {
  require_proper(I, "classify_report");
  const RingHandle& R = I.ring();
  Verdict one_abs = is_one_absorbing_primary(I, limits);
  bool agreement = true;
  switch (R.backend()) {
    case Backend::Int:
    case Backend::IntInv:
    case Backend::IntLoc:
    case Backend::Prod:
      agreement = fast_one_absorbing(I).status == one_abs.status;
      break;
    default:
      break;
  }
  return ClassificationReport{R,
                              I,
                              radical(I),
                              is_prime_ideal(I),
                              is_maximal_ideal(I),
                              is_primary(I),
                              one_abs,
                              is_two_absorbing_primary(I, limits),
                              is_two_absorbing(I, limits),
                              agreement};
}

// ---------------------------------------------------------------------------
// Element-level notions
// ---------------------------------------------------------------------------

Verdict is_irreducible_element(const RingHandle& ring, const Element& x,
                               const ScanLimits& limits) {
  check_element(ring, x);
  if (ring_is_zero(ring, x) || is_unit(ring, x))
    throw domain_error("is_irreducible_element: argument must be a nonzero nonunit");
  switch (ring.backend()) {
    case Backend::ZMod:
    case Backend::Prod: {
      auto elems = ring_elements(ring);
      for (const auto& u : elems) {
        if (is_unit(ring, u)) continue;
        for (const auto& v : elems) {
          if (is_unit(ring, v)) continue;
          if (ring_eq(ring, ring_mul(ring, u, v), x))
            return Verdict::refuted({u, v}, Method::Oracle);
        }
      }
      return Verdict::proven(Method::Oracle);
    }
    case Backend::Int: {
      i64 n = abs_i64(x.a);
      if (is_prime(n)) return Verdict::proven(Method::FastPath);
      i64 d = smallest_prime_factor(n);
      return Verdict::refuted({make_int(d), make_int(x.a / d)}, Method::FastPath);
    }
    case Backend::IntLoc: {
      i64 p = ring.param();
      int v = valuation(x.q.num, p);
      if (v == 1) return Verdict::proven(Method::FastPath);
      return Verdict::refuted({make_rat(ring, Rat(p)), make_rat(ring, x.q / Rat(p))},
                              Method::FastPath);
    }
    case Backend::IntInv: {
      i64 core = strip_primes_of(abs_i64(x.q.num), ring.param());
      if (is_prime(core)) return Verdict::proven(Method::FastPath);
      i64 d = smallest_prime_factor(core);
      return Verdict::refuted({make_rat(ring, Rat(d)), make_rat(ring, x.q / Rat(d))},
                              Method::FastPath);
    }
    case Backend::MonLoc: {
      const Poly& f = x.f.num;
      for (const auto& d : bounded_nonunit_polys(limits)) {
        auto q = poly_divide_exact(f, d);
        if (!q) continue;
        if (q->constant_term().is_zero())
          return Verdict::refuted({make_polyfrac(d), make_polyfrac(*q, x.f.den)},
                                  Method::Oracle);
      }
      return Verdict::unfalsified(limits.describe());
    }
  }
  throw domain_error("is_irreducible_element: unknown backend");
}

Verdict is_prime_element(const RingHandle& ring, const Element& x) {
  check_element(ring, x);
  if (ring_is_zero(ring, x) || is_unit(ring, x))
    throw domain_error("is_prime_element: argument must be a nonzero nonunit");
  return is_prime_ideal(Ideal::principal(ring, x));
}

}  // namespace ideallab
