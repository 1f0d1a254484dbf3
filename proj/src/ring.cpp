#include "ideallab/ring.hpp"

#include <algorithm>
#include <functional>

namespace ideallab {

RingHandle RingHandle::z_mod(i64 n) {
  if (n < 2) throw domain_error("Z/n requires n >= 2");
  RingHandle r;
  r.backend_ = Backend::ZMod;
  r.n_ = n;
  return r;
}

RingHandle RingHandle::integers() {
  RingHandle r;
  r.backend_ = Backend::Int;
  return r;
}

RingHandle RingHandle::z_loc(i64 p) {
  if (!is_prime(p)) throw domain_error("Zloc parameter must be prime");
  RingHandle r;
  r.backend_ = Backend::IntLoc;
  r.n_ = p;
  return r;
}

RingHandle RingHandle::z_inv(i64 s) {
  if (s < 2) throw domain_error("Zinv parameter must be >= 2");
  RingHandle r;
  r.backend_ = Backend::IntInv;
  r.n_ = s;
  return r;
}

RingHandle RingHandle::mon_loc() {
  RingHandle r;
  r.backend_ = Backend::MonLoc;
  return r;
}

RingHandle RingHandle::product(const RingHandle& l, const RingHandle& r) {
  auto component_ok = [](const RingHandle& c) {
    return c.backend() == Backend::ZMod || c.backend() == Backend::Int;
  };
  if (!component_ok(l) || !component_ok(r))
    throw domain_error("product components must each be Z or Z/n");
  RingHandle p;
  p.backend_ = Backend::Prod;
  p.left_ = std::make_shared<RingHandle>(l);
  p.right_ = std::make_shared<RingHandle>(r);
  return p;
}

const RingHandle& RingHandle::left() const {
  if (backend_ != Backend::Prod) throw domain_error("left(): not a product ring");
  return *left_;
}

const RingHandle& RingHandle::right() const {
  if (backend_ != Backend::Prod) throw domain_error("right(): not a product ring");
  return *right_;
}

bool RingHandle::is_finite() const {
  switch (backend_) {
    case Backend::ZMod:
      return true;
    case Backend::Prod:
      return left().is_finite() && right().is_finite();
    default:
      return false;
  }
}

i64 RingHandle::size() const {
  if (!is_finite()) throw domain_error("size() of an infinite ring");
  if (backend_ == Backend::ZMod) return n_;
  return checked_mul(left().size(), right().size());
}

bool RingHandle::operator==(const RingHandle& o) const {
  if (backend_ != o.backend_ || n_ != o.n_) return false;
  if (backend_ == Backend::Prod) return left() == o.left() && right() == o.right();
  return true;
}

std::string RingHandle::str() const {
  switch (backend_) {
    case Backend::ZMod:
      return "Z/" + std::to_string(n_);
    case Backend::Int:
      return "Z";
    case Backend::IntLoc:
      return "Zloc:" + std::to_string(n_);
    case Backend::IntInv:
      return "Zinv:" + std::to_string(n_);
    case Backend::MonLoc:
      return "kxy";
    case Backend::Prod:
      return left().str() + "x" + right().str();
  }
  return "?";
}

Element make_int(i64 v) {
  Element e;
  e.tag = Backend::Int;
  e.a = v;
  return e;
}

Element make_zmod(const RingHandle& ring, i64 v) {
  if (ring.backend() != Backend::ZMod) throw backend_mismatch("make_zmod: ring is not Z/n");
  Element e;
  e.tag = Backend::ZMod;
  e.a = floor_mod(v, ring.param());
  return e;
}

namespace {

i64 reduce_component(const RingHandle& comp, i64 v) {
  return comp.backend() == Backend::ZMod ? floor_mod(v, comp.param()) : v;
}

}  // namespace

Element make_pair(const RingHandle& ring, i64 x, i64 y) {
  if (ring.backend() != Backend::Prod) throw backend_mismatch("make_pair: ring is not a product");
  Element e;
  e.tag = Backend::Prod;
  e.a = reduce_component(ring.left(), x);
  e.b = reduce_component(ring.right(), y);
  return e;
}

Element make_rat(const RingHandle& ring, const Rat& q) {
  Element e;
  e.tag = ring.backend();
  if (ring.backend() == Backend::IntLoc) {
    if (q.den % ring.param() == 0)
      throw domain_error("element denominator divisible by the localized prime");
  } else if (ring.backend() == Backend::IntInv) {
    if (!is_smooth_over(q.den, ring.param()))
      throw domain_error("element denominator must invert inside Z[1/s]");
  } else {
    throw backend_mismatch("make_rat: ring is not Zloc/Zinv");
  }
  e.q = q;
  return e;
}

Element make_polyfrac(const Poly& num, const Poly& den) {
  if (den.constant_term().is_zero())
    throw domain_error("MonLoc denominator must have a nonzero constant term");
  Element e;
  e.tag = Backend::MonLoc;
  e.f = PolyFrac{num, den};
  return e;
}

void check_element(const RingHandle& ring, const Element& x) {
  if (x.tag != ring.backend()) throw backend_mismatch("element does not belong to this ring");
}

Element ring_zero(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      return make_zmod(ring, 0);
    case Backend::Int:
      return make_int(0);
    case Backend::Prod:
      return make_pair(ring, 0, 0);
    case Backend::IntLoc:
    case Backend::IntInv:
      return make_rat(ring, Rat(0));
    case Backend::MonLoc:
      return make_polyfrac(Poly::zero());
  }
  throw domain_error("ring_zero: unknown backend");
}

Element ring_one(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      return make_zmod(ring, 1);
    case Backend::Int:
      return make_int(1);
    case Backend::Prod:
      return make_pair(ring, 1, 1);
    case Backend::IntLoc:
    case Backend::IntInv:
      return make_rat(ring, Rat(1));
    case Backend::MonLoc:
      return make_polyfrac(Poly::constant(Rat(1)));
  }
  throw domain_error("ring_one: unknown backend");
}

Element ring_add(const RingHandle& ring, const Element& x, const Element& y) {
  check_element(ring, x);
  check_element(ring, y);
  switch (ring.backend()) {
    case Backend::ZMod:
      return make_zmod(ring, checked_add(x.a, y.a));
    case Backend::Int:
      return make_int(checked_add(x.a, y.a));
    case Backend::Prod:
      return make_pair(ring, checked_add(x.a, y.a), checked_add(x.b, y.b));
    case Backend::IntLoc:
    case Backend::IntInv:
      return make_rat(ring, x.q + y.q);
    case Backend::MonLoc:
      return make_polyfrac(x.f.num * y.f.den + y.f.num * x.f.den, x.f.den * y.f.den);
  }
  throw domain_error("ring_add: unknown backend");
}

Element ring_mul(const RingHandle& ring, const Element& x, const Element& y) {
  check_element(ring, x);
  check_element(ring, y);
  switch (ring.backend()) {
    case Backend::ZMod:
      return make_zmod(ring, checked_mul(x.a, y.a));
    case Backend::Int:
      return make_int(checked_mul(x.a, y.a));
    case Backend::Prod:
      return make_pair(ring, checked_mul(x.a, y.a), checked_mul(x.b, y.b));
    case Backend::IntLoc:
    case Backend::IntInv:
      return make_rat(ring, x.q * y.q);
    case Backend::MonLoc:
      return make_polyfrac(x.f.num * y.f.num, x.f.den * y.f.den);
  }
  throw domain_error("ring_mul: unknown backend");
}

Element ring_neg(const RingHandle& ring, const Element& x) {
  check_element(ring, x);
  switch (ring.backend()) {
    case Backend::ZMod:
      return make_zmod(ring, checked_neg(x.a));
    case Backend::Int:
      return make_int(checked_neg(x.a));
    case Backend::Prod:
      return make_pair(ring, checked_neg(x.a), checked_neg(x.b));
    case Backend::IntLoc:
    case Backend::IntInv:
      return make_rat(ring, -x.q);
    case Backend::MonLoc:
      return make_polyfrac(Poly::zero() - x.f.num, x.f.den);
  }
  throw domain_error("ring_neg: unknown backend");
}

bool ring_eq(const RingHandle& ring, const Element& x, const Element& y) {
  check_element(ring, x);
  check_element(ring, y);
  switch (ring.backend()) {
    case Backend::ZMod:
    case Backend::Int:
      return x.a == y.a;
    case Backend::Prod:
      return x.a == y.a && x.b == y.b;
    case Backend::IntLoc:
    case Backend::IntInv:
      return x.q == y.q;
    case Backend::MonLoc:
      return x.f.num * y.f.den == y.f.num * x.f.den;
  }
  throw domain_error("ring_eq: unknown backend");
}

bool ring_is_zero(const RingHandle& ring, const Element& x) {
  return ring_eq(ring, x, ring_zero(ring));
}

bool ring_divides(const RingHandle& ring, const Element& d, const Element& x) {
  check_element(ring, d);
  check_element(ring, x);
  switch (ring.backend()) {
    case Backend::ZMod: {
      // multiples of d mod n are exactly the multiples of gcd(d, n)
      i64 g = gcd_i64(d.a, ring.param());
      return x.a % g == 0;
    }
    case Backend::Int:
      if (d.a == 0) return x.a == 0;
      return x.a % d.a == 0;
    case Backend::Prod: {
      auto comp_div = [](const RingHandle& c, i64 dv, i64 xv) {
        if (c.backend() == Backend::ZMod) {
          i64 g = gcd_i64(dv, c.param());
          return xv % g == 0;
        }
        if (dv == 0) return xv == 0;
        return xv % dv == 0;
      };
      return comp_div(ring.left(), d.a, x.a) && comp_div(ring.right(), d.b, x.b);
    }
    default:
      throw unsupported_error("ring_divides: supported on finite backends and Z");
  }
}

std::string element_str(const RingHandle& ring, const Element& x) {
  switch (ring.backend()) {
    case Backend::ZMod:
    case Backend::Int:
      return std::to_string(x.a);
    case Backend::Prod:
      return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
    case Backend::IntLoc:
    case Backend::IntInv:
      return x.q.str();
    case Backend::MonLoc:
      if (x.f.den == Poly::constant(Rat(1))) return x.f.num.str();
      return "(" + x.f.num.str() + ")/(" + x.f.den.str() + ")";
  }
  return "?";
}

std::vector<Element> ring_elements(const RingHandle& ring) {
  if (!ring.is_finite()) throw domain_error("ring_elements: infinite ring");
  std::vector<Element> out;
  if (ring.backend() == Backend::ZMod) {
    out.reserve(static_cast<std::size_t>(ring.param()));
    for (i64 v = 0; v < ring.param(); ++v) out.push_back(make_zmod(ring, v));
    return out;
  }
  i64 ln = ring.left().param(), rn = ring.right().param();
  for (i64 i = 0; i < ln; ++i)
    for (i64 j = 0; j < rn; ++j) out.push_back(make_pair(ring, i, j));
  return out;
}

bool is_unit(const RingHandle& ring, const Element& x) {
  check_element(ring, x);
  switch (ring.backend()) {
    case Backend::ZMod:
      return gcd_i64(x.a, ring.param()) == 1;
    case Backend::Int:
      return x.a == 1 || x.a == -1;
    case Backend::Prod: {
      auto comp_unit = [](const RingHandle& c, i64 v) {
        if (c.backend() == Backend::ZMod) return gcd_i64(v, c.param()) == 1;
        return v == 1 || v == -1;
      };
      return comp_unit(ring.left(), x.a) && comp_unit(ring.right(), x.b);
    }
    case Backend::IntLoc:
      return x.q.num != 0 && x.q.num % ring.param() != 0;
    case Backend::IntInv:
      return x.q.num != 0 && strip_primes_of(abs_i64(x.q.num), ring.param()) == 1;
    case Backend::MonLoc:
      return !x.f.num.constant_term().is_zero();
  }
  throw domain_error("is_unit: unknown backend");
}

bool quasilocal_by_l0_scan(const RingHandle& ring) {
  auto elems = ring_elements(ring);
  std::vector<Element> units, nonunits;
  for (const auto& e : elems) (is_unit(ring, e) ? units : nonunits).push_back(e);
  for (const auto& w : nonunits)
    for (const auto& u : units)
      if (!is_unit(ring, ring_add(ring, w, u))) return false;
  return true;
}

bool nonunits_closed_under_addition(const RingHandle& ring) {
  auto elems = ring_elements(ring);
  std::vector<Element> nonunits;
  for (const auto& e : elems)
    if (!is_unit(ring, e)) nonunits.push_back(e);
  for (const auto& a : nonunits)
    for (const auto& b : nonunits)
      if (is_unit(ring, ring_add(ring, a, b))) return false;
  return true;
}

bool is_quasilocal(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      return quasilocal_by_l0_scan(ring);
    case Backend::Prod:
      if (ring.is_finite()) return quasilocal_by_l0_scan(ring);
      return false;
    case Backend::Int:
    case Backend::IntInv:
      return false;
    case Backend::IntLoc:
    case Backend::MonLoc:
      return true;
  }
  throw domain_error("is_quasilocal: unknown backend");
}

namespace {

// Prime ideals of a finite backend as membership predicates.
std::vector<std::function<bool(const Element&)>> finite_prime_ideals(const RingHandle& ring);

}  // namespace

bool is_divided(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      break;
    case Backend::Prod:
      if (!ring.is_finite()) return false;
      break;
    case Backend::IntLoc:
      return true;
    default:
      return false;
  }
  auto elems = ring_elements(ring);
  for (const auto& in_p : finite_prime_ideals(ring)) {
    for (const auto& x : elems) {
      if (in_p(x)) continue;
      for (const auto& p : elems) {
        if (!in_p(p)) continue;
        if (!ring_divides(ring, x, p)) return false;
      }
    }
  }
  return true;
}

bool is_chained(const RingHandle& ring) {
  switch (ring.backend()) {
    case Backend::ZMod:
      break;
    case Backend::Prod:
      if (!ring.is_finite()) return false;
      break;
    case Backend::IntLoc:
      return true;
    default:
      return false;
  }
  auto elems = ring_elements(ring);
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (!ring_divides(ring, x, y) && !ring_divides(ring, y, x)) return false;
  return true;
}

namespace {

std::vector<std::function<bool(const Element&)>> finite_prime_ideals(const RingHandle& ring) {
  std::vector<std::function<bool(const Element&)>> out;
  if (ring.backend() == Backend::ZMod) {
    for (const auto& [p, e] : factorize(ring.param())) {
      i64 q = p;
      out.push_back([q](const Element& x) { return x.a % q == 0; });
    }
    return out;
  }
  for (const auto& [p, e] : factorize(ring.left().param())) {
    i64 q = p;
    out.push_back([q](const Element& x) { return x.a % q == 0; });
  }
  for (const auto& [p, e] : factorize(ring.right().param())) {
    i64 q = p;
    out.push_back([q](const Element& x) { return x.b % q == 0; });
  }
  return out;
}

}  // namespace

namespace {

Element class_value(const RingHandle& ring, i64 r) {
  if (ring.backend() == Backend::Int) return make_int(r);
  return make_rat(ring, Rat(r));
}

}  // namespace

ResidueSystem residue_system_mod(const RingHandle& ring, i64 modulus) {
  if (ring.backend() != Backend::Int && ring.backend() != Backend::IntInv)
    throw domain_error("residue_system_mod: Z or Z[1/s] only");
  if (modulus < 1) throw domain_error("residue_system_mod: modulus must be >= 1");
  ResidueSystem rs{ring, "(" + std::to_string(modulus) + ")", {}};
  rs.classes.reserve(static_cast<std::size_t>(modulus));
  for (i64 r = 0; r < modulus; ++r) {
    i64 t = r;
    while (is_unit(ring, class_value(ring, t))) t += modulus;
    rs.classes.push_back(ResidueClass{class_value(ring, r), class_value(ring, t), true});
  }
  return rs;
}

ResidueSystem residue_system_finite(const RingHandle& ring) {
  ResidueSystem rs{ring, "elements", {}};
  for (const auto& e : ring_elements(ring)) {
    bool nonunit = !is_unit(ring, e);
    rs.classes.push_back(ResidueClass{e, e, nonunit});
  }
  return rs;
}

}  // namespace ideallab
