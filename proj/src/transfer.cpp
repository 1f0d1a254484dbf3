#include "ideallab/transfer.hpp"

#include "ideallab/parse.hpp"

namespace ideallab {

std::string RingHom::str() const {
  switch (kind) {
    case HomKind::QuotientIntToZMod:
    case HomKind::QuotientZModToZMod:
      return "q:" + source.str() + "->" + target.str();
    case HomKind::Proj1:
      return "proj1:" + source.str();
    case HomKind::Proj2:
      return "proj2:" + source.str();
    case HomKind::Identity:
      return "id:" + source.str();
  }
  return "?";
}

RingHom make_quotient_hom(const RingHandle& source, const RingHandle& target) {
  if (source.backend() == Backend::Int && target.backend() == Backend::ZMod) {
    return RingHom{HomKind::QuotientIntToZMod, source, target,
                   Ideal::from_modulus(source, target.param()), true};
  }
  if (source.backend() == Backend::ZMod && target.backend() == Backend::ZMod) {
    if (source.param() % target.param() != 0)
      throw domain_error("quotient Z/n -> Z/d requires d | n");
    return RingHom{HomKind::QuotientZModToZMod, source, target,
                   Ideal::from_modulus(source, target.param()), true};
  }
  throw domain_error("unsupported quotient homomorphism");
}

RingHom make_projection_hom(const RingHandle& prod, int comp) {
  if (prod.backend() != Backend::Prod) throw domain_error("projection source must be a product");
  if (comp != 1 && comp != 2) throw domain_error("projection component must be 1 or 2");
  const RingHandle& target = comp == 1 ? prod.left() : prod.right();
  Ideal kernel = comp == 1 ? Ideal::pair_ideal(Ideal::zero(prod.left()), Ideal::whole(prod.right()))
                           : Ideal::pair_ideal(Ideal::whole(prod.left()), Ideal::zero(prod.right()));
  return RingHom{comp == 1 ? HomKind::Proj1 : HomKind::Proj2, prod, target, kernel, true};
}

RingHom make_identity_hom(const RingHandle& ring) {
  return RingHom{HomKind::Identity, ring, ring, Ideal::zero(ring), true};
}

RingHom parse_hom(const std::string& spec) {
  if (spec.rfind("q:", 0) == 0) {
    std::size_t arrow = spec.find("->");
    if (arrow == std::string::npos) throw parse_error("quotient spec must look like q:A->B");
    return make_quotient_hom(parse_ring(spec.substr(2, arrow - 2)),
                             parse_ring(spec.substr(arrow + 2)));
  }
  if (spec.rfind("proj1:", 0) == 0) return make_projection_hom(parse_ring(spec.substr(6)), 1);
  if (spec.rfind("proj2:", 0) == 0) return make_projection_hom(parse_ring(spec.substr(6)), 2);
  if (spec.rfind("id:", 0) == 0) return make_identity_hom(parse_ring(spec.substr(3)));
  throw parse_error("unrecognized homomorphism spec '" + spec + "'");
}

Element apply_hom(const RingHom& f, const Element& x) {
  check_element(f.source, x);
  switch (f.kind) {
    case HomKind::QuotientIntToZMod:
    case HomKind::QuotientZModToZMod:
      return make_zmod(f.target, x.a);
    case HomKind::Proj1:
      return f.target.backend() == Backend::ZMod ? make_zmod(f.target, x.a) : make_int(x.a);
    case HomKind::Proj2:
      return f.target.backend() == Backend::ZMod ? make_zmod(f.target, x.b) : make_int(x.b);
    case HomKind::Identity:
      return x;
  }
  throw domain_error("apply_hom: unknown kind");
}

HomHypotheses check_hom_hypotheses(const RingHom& f) {
  HomHypotheses h;
  h.identity_ok = ring_eq(f.target, apply_hom(f, ring_one(f.source)), ring_one(f.target));
  if (!is_quasilocal(f.target)) {
    h.nonunit_preserving = true;
    h.notes = "target not quasilocal; nonunit condition vacuous";
    return h;
  }
  if (f.source.is_finite()) {
    for (const auto& e : ring_elements(f.source)) {
      if (is_unit(f.source, e)) continue;
      if (is_unit(f.target, apply_hom(f, e))) {
        h.nonunit_preserving = false;
        h.failing_nonunit = e;
        h.notes = element_str(f.source, e) + " is a nonunit of " + f.source.str() +
                  " mapping to a unit of " + f.target.str();
        return h;
      }
    }
    h.notes = "exhaustive over " + f.source.str();
    return h;
  }
  if (f.kind == HomKind::QuotientIntToZMod) {
    // nonunit integers ascending until every residue class of the target has
    // been seen; membership in the target unit group only depends on the class
    i64 n = f.target.param();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    i64 covered = 0;
    for (i64 t = 0; covered < n; ++t) {
      if (t == 1) continue;
      Element e = make_int(t);
      if (is_unit(f.target, apply_hom(f, e))) {
        h.nonunit_preserving = false;
        h.failing_nonunit = e;
        h.notes = std::to_string(t) + " is a nonunit of Z mapping to a unit of " +
                  f.target.str();
        return h;
      }
      std::size_t cls = static_cast<std::size_t>(floor_mod(t, n));
      if (!seen[cls]) {
        seen[cls] = true;
        ++covered;
      }
    }
    h.notes = "residue scan over " + f.target.str();
    return h;
  }
  if (f.kind == HomKind::Identity) {
    h.notes = "identity map";
    return h;
  }
  // projection with an infinite factor onto a quasilocal component: the other
  // factor supplies a nonunit mapping to 1
  Element w = f.kind == HomKind::Proj1 ? make_pair(f.source, 1, 0) : make_pair(f.source, 0, 1);
  h.nonunit_preserving = false;
  h.failing_nonunit = w;
  h.notes = element_str(f.source, w) + " is a nonunit of " + f.source.str() +
            " mapping to a unit of " + f.target.str();
  return h;
}

Ideal preimage_ideal(const RingHom& f, const Ideal& J) {
  if (J.ring() != f.target) throw backend_mismatch("preimage_ideal: ideal not in the target");
  switch (f.kind) {
    case HomKind::QuotientIntToZMod: {
      i64 d = J.modulus();  // (d) pulls back to dZ; the zero ideal is d = n
      return Ideal::from_modulus(f.source, d);
    }
    case HomKind::QuotientZModToZMod:
      return Ideal::from_modulus(f.source, J.modulus());
    case HomKind::Proj1:
      return Ideal::pair_ideal(J, Ideal::whole(f.source.right()));
    case HomKind::Proj2:
      return Ideal::pair_ideal(Ideal::whole(f.source.left()), J);
    case HomKind::Identity:
      return J;
  }
  throw domain_error("preimage_ideal: unknown kind");
}

Ideal image_ideal(const RingHom& f, const Ideal& I) {
  if (I.ring() != f.source) throw backend_mismatch("image_ideal: ideal not in the source");
  if (!f.surjective) throw domain_error("image_ideal: homomorphism is not surjective");
  if (!subset(f.kernel, I))
    throw domain_error("image_ideal: kernel " + f.kernel.str() + " is not contained in " +
                       I.str());
  switch (f.kind) {
    case HomKind::QuotientIntToZMod:
    case HomKind::QuotientZModToZMod:
      return Ideal::from_modulus(f.target, I.modulus());
    case HomKind::Proj1:
      return I.component(0);
    case HomKind::Proj2:
      return I.component(1);
    case HomKind::Identity:
      return I;
  }
  throw domain_error("image_ideal: unknown kind");
}

std::string LocalizationSpec::str() const {
  if (kind == MultSetKind::PowersOf) return "S=" + std::to_string(param) + "^k";
  return "S=comp(" + std::to_string(param) + ")";
}

LocalizationSpec powers_of(i64 s) {
  return LocalizationSpec{MultSetKind::PowersOf, s, RingHandle::integers(),
                          RingHandle::z_inv(s)};
}

LocalizationSpec complement_of_prime(i64 p) {
  return LocalizationSpec{MultSetKind::ComplementOfPrime, p, RingHandle::integers(),
                          RingHandle::z_loc(p)};
}

LocalizationSpec parse_localization(const std::string& spec) {
  if (spec.rfind("S=", 0) != 0) throw parse_error("localization spec must start with S=");
  std::string body = spec.substr(2);
  if (body.rfind("comp(", 0) == 0 && body.back() == ')') {
    i64 p = std::stoll(body.substr(5, body.size() - 6));
    return complement_of_prime(p);
  }
  std::size_t caret = body.find("^k");
  if (caret != std::string::npos && caret + 2 == body.size())
    return powers_of(std::stoll(body.substr(0, caret)));
  throw parse_error("unrecognized localization spec '" + spec + "'");
}

LocalizationResult localize(const LocalizationSpec& spec, const Ideal& I) {
  if (I.ring().backend() != Backend::Int)
    throw backend_mismatch("localize: source ideal must live in Z");
  if (!I.is_proper()) throw domain_error("localize: ideal must be proper");
  i64 m = I.modulus();
  if (spec.kind == MultSetKind::PowersOf) {
    Ideal ext = Ideal::from_modulus(spec.target, m);
    // some power of s lands in mZ exactly when m is s-smooth
    bool disjoint = m == 0 || strip_primes_of(m, spec.param) != 1;
    bool zdiv_disjoint = !in_zdiv(I, make_int(spec.param));
    return LocalizationResult{ext, disjoint, zdiv_disjoint};
  }
  i64 p = spec.param;
  Ideal ext = m == 0 ? Ideal::from_exponent(spec.target, std::nullopt)
                     : Ideal::from_exponent(spec.target, valuation(m, p));
  bool disjoint = m == 0 || m % p == 0;
  // s in Z_I(Z) iff gcd(s, m) > 1, so the complement of pZ avoids Z_I(Z)
  // exactly when m has no prime factor other than p
  bool zdiv_disjoint = m == 0 || strip_primes_of(m, p) == 1;
  return LocalizationResult{ext, disjoint, zdiv_disjoint};
}

}  // namespace ideallab
