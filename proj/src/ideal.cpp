#include "ideallab/ideal.hpp"

#include <algorithm>

namespace ideallab {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && gens[j].divides(gens[i])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// generated ideal of m in Z/n is (gcd(m, n)); gcd(0, n) = n encodes (0)
i64 zmod_canonical(i64 m, i64 n) { return gcd_i64(m, n); }

}  // namespace

Ideal Ideal::whole(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return from_modulus(ring, 1);
    case Backend::IntLoc:
      return from_exponent(ring, 0);
    case Backend::MonLoc:
      return monomial_ideal(ring, {Monomial{0, 0}});
    case Backend::Prod:
      return pair_ideal(whole(ring.left()), whole(ring.right()));
  }
  throw domain_error("whole: unknown backend");
}

Ideal Ideal::zero(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      return from_modulus(ring, 0);
    case Backend::Int:
    case Backend::IntInv:
      return from_modulus(ring, 0);
    case Backend::IntLoc:
      return from_exponent(ring, std::nullopt);
    case Backend::MonLoc:
      return monomial_ideal(ring, {});
    case Backend::Prod:
      return pair_ideal(zero(ring.left()), zero(ring.right()));
  }
  throw domain_error("zero: unknown backend");
}

Ideal Ideal::from_modulus(const RingHandle& ring, i64 m) {
  Ideal I(ring);
  switch (ring.backend()) {
    case Backend::ZMod:
      I.m_ = zmod_canonical(m, ring.param());
      return I;
    case Backend::Int:
      I.m_ = abs_i64(m);
      return I;
    case Backend::IntInv:
      I.m_ = strip_primes_of(abs_i64(m), ring.param());
      return I;
    default:
      throw backend_mismatch("from_modulus: modulus ideals need Z, Z/n or Z[1/s]");
  }
}

Ideal Ideal::from_exponent(const RingHandle& ring, std::optional<i64> k) {
  if (ring.backend() != Backend::IntLoc)
    throw backend_mismatch("from_exponent: exponent ideals need Zloc");
  if (k && *k < 0) throw domain_error("from_exponent: exponent must be >= 0");
  Ideal I(ring);
  I.k_ = k;
  return I;
}

Ideal Ideal::monomial_ideal(const RingHandle& ring, std::vector<Monomial> gens) {
  if (ring.backend() != Backend::MonLoc)
    throw backend_mismatch("monomial_ideal: generator-set ideals need kxy");
  Ideal I(ring);
  I.gens_ = minimalize(std::move(gens));
  return I;
}

Ideal Ideal::pair_ideal(const Ideal& l, const Ideal& r) {
  Ideal I(RingHandle::product(l.ring(), r.ring()));
  I.comp_ = {l.modulus(), r.modulus()};
  return I;
}

Ideal Ideal::principal(const RingHandle& ring, const Element& x) {
  check_element(ring, x);
  switch (ring.backend()) {
    case Backend::ZMod:
    case Backend::Int:
      return from_modulus(ring, x.a);
    case Backend::IntInv:
      return from_modulus(ring, x.q.num == 0 ? 0 : strip_primes_of(abs_i64(x.q.num), ring.param()));
    case Backend::IntLoc:
      if (x.q.num == 0) return from_exponent(ring, std::nullopt);
      return from_exponent(ring, valuation(x.q.num, ring.param()));
    case Backend::Prod: {
      auto comp_elem = [](const RingHandle& c, i64 v) {
        return c.backend() == Backend::ZMod ? make_zmod(c, v) : make_int(v);
      };
      return pair_ideal(principal(ring.left(), comp_elem(ring.left(), x.a)),
                        principal(ring.right(), comp_elem(ring.right(), x.b)));
    }
    case Backend::MonLoc: {
      if (x.f.num.is_zero()) return monomial_ideal(ring, {});
      Monomial mc = x.f.num.monomial_content();
      Poly unit_part = x.f.num.divided_by_monomial(mc);
      if (unit_part.constant_term().is_zero())
        throw unsupported_error("principal: MonLoc element does not generate a monomial ideal");
      return monomial_ideal(ring, {mc});
    }
  }
  throw domain_error("principal: unknown backend");
}

i64 Ideal::modulus() const {
  switch (ring_.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return m_;
    default:
      throw backend_mismatch("modulus(): not a modulus-backed ideal");
  }
}

std::optional<i64> Ideal::exponent() const {
  if (ring_.backend() != Backend::IntLoc) throw backend_mismatch("exponent(): not a Zloc ideal");
  return k_;
}

const std::vector<Monomial>& Ideal::generators() const {
  if (ring_.backend() != Backend::MonLoc) throw backend_mismatch("generators(): not a kxy ideal");
  return gens_;
}

i64 Ideal::component_modulus(int i) const {
  if (ring_.backend() != Backend::Prod) throw backend_mismatch("component_modulus(): not a product");
  return comp_[static_cast<std::size_t>(i)];
}

Ideal Ideal::component(int i) const {
  const RingHandle& c = i == 0 ? ring_.left() : ring_.right();
  return from_modulus(c, component_modulus(i));
}

bool Ideal::is_proper() const {
  switch (ring_.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return m_ != 1;
    case Backend::IntLoc:
      return !k_ || *k_ >= 1;
    case Backend::MonLoc:
      return gens_.empty() || !gens_.front().is_one();
    case Backend::Prod:
      return comp_[0] != 1 || comp_[1] != 1;
  }
  throw domain_error("is_proper: unknown backend");
}

bool Ideal::is_zero_ideal() const {
  switch (ring_.backend()) {
    case Backend::ZMod:
      return m_ == ring_.param();
    case Backend::Int:
    case Backend::IntInv:
      return m_ == 0;
    case Backend::IntLoc:
      return !k_.has_value();
    case Backend::MonLoc:
      return gens_.empty();
    case Backend::Prod:
      return component(0).is_zero_ideal() && component(1).is_zero_ideal();
  }
  throw domain_error("is_zero_ideal: unknown backend");
}

bool Ideal::operator==(const Ideal& o) const {
  if (ring_ != o.ring_) return false;
  switch (ring_.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return m_ == o.m_;
    case Backend::IntLoc:
      return k_ == o.k_;
    case Backend::MonLoc:
      return gens_ == o.gens_;
    case Backend::Prod:
      return comp_ == o.comp_;
  }
  return false;
}

std::string Ideal::str() const {
  switch (ring_.backend()) {
    case Backend::ZMod:
      return "(" + std::to_string(m_ == ring_.param() ? 0 : m_) + ")";
    case Backend::Int:
    case Backend::IntInv:
      return "(" + std::to_string(m_) + ")";
    case Backend::IntLoc:
      if (!k_) return "(0)";
      if (*k_ == 0) return "(1)";
      if (*k_ == 1) return "p";
      return "p^" + std::to_string(*k_);
    case Backend::MonLoc: {
      if (gens_.empty()) return "(0)";
      if (gens_.front().is_one()) return "(1)";
      std::string s;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].str();
      }
      return s;
    }
    case Backend::Prod:
      return component(0).str() + "x" + component(1).str();
  }
  return "?";
}

bool contains(const Ideal& I, const Element& x) {
  check_element(I.ring(), x);
  switch (I.ring().backend()) {
    case Backend::ZMod:
      return x.a % I.modulus() == 0;
    case Backend::Int:
      if (I.modulus() == 0) return x.a == 0;
      return x.a % I.modulus() == 0;
    case Backend::IntInv:
      if (I.modulus() == 0) return x.q.num == 0;
      return x.q.num % I.modulus() == 0;
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (x.q.num == 0) return true;
      if (!k) return false;
      if (*k == 0) return true;
      return valuation(x.q.num, I.ring().param()) >= *k;
    }
    case Backend::Prod:
      return contains(I.component(0), I.ring().left().backend() == Backend::ZMod
                                          ? make_zmod(I.ring().left(), x.a)
                                          : make_int(x.a)) &&
             contains(I.component(1), I.ring().right().backend() == Backend::ZMod
                                          ? make_zmod(I.ring().right(), x.b)
                                          : make_int(x.b));
    case Backend::MonLoc: {
      for (const auto& [mono, c] : x.f.num.terms) {
        bool covered = false;
        for (const auto& g : I.generators())
          if (g.divides(mono)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      return true;
    }
  }
  throw domain_error("contains: unknown backend");
}

Ideal radical(const Ideal& I) {
  switch (I.ring().backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return Ideal::from_modulus(I.ring(), radical_int(I.modulus()));
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (!k) return I;
      return Ideal::from_exponent(I.ring(), *k == 0 ? 0 : 1);
    }
    case Backend::Prod:
      return Ideal::pair_ideal(radical(I.component(0)), radical(I.component(1)));
    case Backend::MonLoc: {
      std::vector<Monomial> gens;
      for (const auto& g : I.generators()) gens.push_back(g.squarefree());
      return Ideal::monomial_ideal(I.ring(), std::move(gens));
    }
  }
  throw domain_error("radical: unknown backend");
}

bool radical_contains(const Ideal& I, const Element& x) { return contains(radical(I), x); }

bool radical_contains_by_power_search(const Ideal& I, const Element& x) {
  if (!I.ring().is_finite())
    throw domain_error("radical_contains_by_power_search: finite backends only");
  Element p = x;
  i64 n = I.ring().size();
  for (i64 e = 1; e <= n; ++e) {
    if (contains(I, p)) return true;
    p = ring_mul(I.ring(), p, x);
  }
  return false;
}

namespace {

// Extract w with c = unit * w for a MonLoc element; nullopt when c == 0.
std::optional<Monomial> monomial_part(const Element& c) {
  if (c.f.num.is_zero()) return std::nullopt;
  Monomial mc = c.f.num.monomial_content();
  if (c.f.num.divided_by_monomial(mc).constant_term().is_zero())
    throw unsupported_error("MonLoc colon divisor must be a unit times a monomial");
  return mc;
}

}  // namespace

Ideal colon(const Ideal& I, const Element& c) {
  check_element(I.ring(), c);
  switch (I.ring().backend()) {
    case Backend::ZMod:
      return Ideal::from_modulus(I.ring(), I.modulus() / gcd_i64(I.modulus(), c.a));
    case Backend::Int: {
      i64 m = I.modulus();
      if (c.a == 0) return Ideal::whole(I.ring());  // 0 lies in every mZ
      if (m == 0) return I;
      return Ideal::from_modulus(I.ring(), m / gcd_i64(m, c.a));
    }
    case Backend::IntInv: {
      i64 m = I.modulus();
      if (c.q.num == 0) return Ideal::whole(I.ring());
      if (m == 0) return I;
      i64 cv = strip_primes_of(abs_i64(c.q.num), I.ring().param());
      return Ideal::from_modulus(I.ring(), m / gcd_i64(m, cv));
    }
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (c.q.num == 0) return Ideal::whole(I.ring());
      if (!k) return I;
      i64 v = valuation(c.q.num, I.ring().param());
      return Ideal::from_exponent(I.ring(), std::max<i64>(*k - v, 0));
    }
    case Backend::Prod: {
      Element cl = I.ring().left().backend() == Backend::ZMod ? make_zmod(I.ring().left(), c.a)
                                                              : make_int(c.a);
      Element cr = I.ring().right().backend() == Backend::ZMod ? make_zmod(I.ring().right(), c.b)
                                                               : make_int(c.b);
      return Ideal::pair_ideal(colon(I.component(0), cl), colon(I.component(1), cr));
    }
    case Backend::MonLoc: {
      auto w = monomial_part(c);
      if (!w) return Ideal::whole(I.ring());
      std::vector<Monomial> gens;
      for (const auto& g : I.generators()) gens.push_back(g.quotient_by(g.gcd(*w)));
      return Ideal::monomial_ideal(I.ring(), std::move(gens));
    }
  }
  throw domain_error("colon: unknown backend");
}

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw backend_mismatch("ideal operation across different rings");
}

i64 zmod_power_modulus(i64 d, i64 e, i64 n) {
  // gcd(d^e, n) via valuations, avoiding the large power
  i64 out = 1;
  for (const auto& [p, vn] : factorize(n)) {
    int vd = d % p == 0 ? valuation(d, p) : 0;
    i64 v = std::min<i64>(static_cast<i64>(vd) * e, vn);
    out = checked_mul(out, checked_pow(p, v));
  }
  return out;
}

}  // namespace

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const RingHandle& R = a.ring();
  switch (R.backend()) {
    case Backend::ZMod:
      return Ideal::from_modulus(R, gcd_i64(checked_mul(a.modulus(), b.modulus()), R.param()));
    case Backend::Int:
    case Backend::IntInv:
      return Ideal::from_modulus(R, checked_mul(a.modulus(), b.modulus()));
    case Backend::IntLoc: {
      auto ka = a.exponent(), kb = b.exponent();
      if (!ka || !kb) return Ideal::zero(R);
      return Ideal::from_exponent(R, *ka + *kb);
    }
    case Backend::Prod:
      return Ideal::pair_ideal(product(a.component(0), b.component(0)),
                               product(a.component(1), b.component(1)));
    case Backend::MonLoc: {
      std::vector<Monomial> gens;
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g * h);
      return Ideal::monomial_ideal(R, std::move(gens));
    }
  }
  throw domain_error("product: unknown backend");
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const RingHandle& R = a.ring();
  switch (R.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return Ideal::from_modulus(R, lcm_i64(a.modulus(), b.modulus()));
    case Backend::IntLoc: {
      auto ka = a.exponent(), kb = b.exponent();
      if (!ka || !kb) return Ideal::zero(R);
      return Ideal::from_exponent(R, std::max(*ka, *kb));
    }
    case Backend::Prod:
      return Ideal::pair_ideal(intersect(a.component(0), b.component(0)),
                               intersect(a.component(1), b.component(1)));
    case Backend::MonLoc: {
      if (a.generators().empty() || b.generators().empty())
        return Ideal::zero(R);
      std::vector<Monomial> gens;
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
      return Ideal::monomial_ideal(R, std::move(gens));
    }
  }
  throw domain_error("intersect: unknown backend");
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const RingHandle& R = a.ring();
  switch (R.backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv:
      return Ideal::from_modulus(R, gcd_i64(a.modulus(), b.modulus()));
    case Backend::IntLoc: {
      auto ka = a.exponent(), kb = b.exponent();
      if (!ka) return b;
      if (!kb) return a;
      return Ideal::from_exponent(R, std::min(*ka, *kb));
    }
    case Backend::Prod:
      return Ideal::pair_ideal(sum(a.component(0), b.component(0)),
                               sum(a.component(1), b.component(1)));
    case Backend::MonLoc: {
      std::vector<Monomial> gens = a.generators();
      gens.insert(gens.end(), b.generators().begin(), b.generators().end());
      return Ideal::monomial_ideal(R, std::move(gens));
    }
  }
  throw domain_error("sum: unknown backend");
}

Ideal power(const Ideal& a, i64 n) {
  if (n < 1) throw domain_error("power: exponent must be >= 1");
  const RingHandle& R = a.ring();
  if (R.backend() == Backend::ZMod)
    return Ideal::from_modulus(R, zmod_power_modulus(a.modulus(), n, R.param()));
  Ideal out = a;
  for (i64 i = 1; i < n; ++i) out = product(out, a);
  return out;
}

bool subset(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  switch (a.ring().backend()) {
    case Backend::ZMod:
    case Backend::Int:
    case Backend::IntInv: {
      i64 mb = b.modulus();
      if (mb == 0) return a.modulus() == 0;
      return a.modulus() % mb == 0;
    }
    case Backend::IntLoc: {
      auto ka = a.exponent(), kb = b.exponent();
      if (!ka) return true;
      if (!kb) return false;
      return *ka >= *kb;
    }
    case Backend::Prod:
      return subset(a.component(0), b.component(0)) && subset(a.component(1), b.component(1));
    case Backend::MonLoc: {
      for (const auto& g : a.generators()) {
        bool covered = false;
        for (const auto& h : b.generators())
          if (h.divides(g)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      return true;
    }
  }
  throw domain_error("subset: unknown backend");
}

bool in_zdiv(const Ideal& I, const Element& r) {
  if (!I.is_proper()) throw domain_error("in_zdiv: ideal must be proper");
  check_element(I.ring(), r);
  switch (I.ring().backend()) {
    case Backend::ZMod:
    case Backend::Prod: {
      for (const auto& s : ring_elements(I.ring())) {
        if (contains(I, s)) continue;
        if (contains(I, ring_mul(I.ring(), r, s))) return true;
      }
      return false;
    }
    case Backend::Int: {
      i64 m = I.modulus();
      if (m == 0) return r.a == 0;
      return gcd_i64(r.a, m) > 1;
    }
    case Backend::IntInv: {
      i64 m = I.modulus();
      if (m == 0) return r.q.num == 0;
      i64 rv = r.q.num == 0 ? 0 : strip_primes_of(abs_i64(r.q.num), I.ring().param());
      return gcd_i64(rv, m) > 1;
    }
    case Backend::IntLoc: {
      auto k = I.exponent();
      if (!k) return r.q.num == 0;
      return r.q.num % I.ring().param() == 0;
    }
    case Backend::MonLoc:
      throw unsupported_error("in_zdiv: not supported on kxy");
  }
  throw domain_error("in_zdiv: unknown backend");
}

namespace {

void antichains_rec(const std::vector<Monomial>& monos, std::size_t i, std::vector<Monomial>& cur,
                    std::vector<std::vector<Monomial>>& out) {
  if (i == monos.size()) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  antichains_rec(monos, i + 1, cur, out);
  for (const auto& m : cur)
    if (m.divides(monos[i]) || monos[i].divides(m)) return;
  cur.push_back(monos[i]);
  antichains_rec(monos, i + 1, cur, out);
  cur.pop_back();
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const IdealFamily& family) {
  const RingHandle& R = family.ring;
  std::vector<Ideal> out;
  switch (R.backend()) {
    case Backend::ZMod:
      for (i64 d : divisors_of(R.param())) out.push_back(Ideal::from_modulus(R, d));
      return out;
    case Backend::Int: {
      if (!family.int_range) throw domain_error("enumerate_ideals: unbounded family over Z");
      auto [lo, hi] = *family.int_range;
      for (i64 m = lo; m <= hi; ++m) out.push_back(Ideal::from_modulus(R, m));
      return out;
    }
    case Backend::Prod: {
      IdealFamily lf{R.left(), family.int_range, family.monloc_degree};
      IdealFamily rf{R.right(), family.int_range, family.monloc_degree};
      auto ls = enumerate_ideals(lf);
      auto rs = enumerate_ideals(rf);
      for (const auto& a : ls)
        for (const auto& b : rs) out.push_back(Ideal::pair_ideal(a, b));
      return out;
    }
    case Backend::MonLoc: {
      std::vector<Monomial> monos;
      for (int d = 0; d <= family.monloc_degree; ++d)
        for (int dx = d; dx >= 0; --dx) monos.push_back(Monomial{dx, d - dx});
      std::sort(monos.begin(), monos.end());
      std::vector<std::vector<Monomial>> sets;
      std::vector<Monomial> cur;
      antichains_rec(monos, 0, cur, sets);
      std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
      for (auto& s : sets) out.push_back(Ideal::monomial_ideal(R, std::move(s)));
      return out;
    }
    default:
      throw domain_error("enumerate_ideals: unbounded family on this backend");
  }
}

}  // namespace ideallab
