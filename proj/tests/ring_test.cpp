#include <doctest.h>

#include "ideallab/classify.hpp"
#include "ideallab/parse.hpp"

using namespace ideallab;

namespace {

Element kxy_elem(const std::string& num, const std::string& den = "1") {
  return make_polyfrac(parse_poly(num), parse_poly(den));
}

// tiny deterministic generator for randomized closure checks
struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  i64 next(i64 lo, i64 hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<i64>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("units per backend") {
  RingHandle z12 = RingHandle::z_mod(12);
  CHECK(is_unit(z12, make_zmod(z12, 5)));
  CHECK_FALSE(is_unit(z12, make_zmod(z12, 4)));
  CHECK_FALSE(is_unit(z12, make_zmod(z12, 0)));

  RingHandle Z = RingHandle::integers();
  CHECK_FALSE(is_unit(Z, make_int(2)));
  CHECK(is_unit(Z, make_int(-1)));

  RingHandle K = RingHandle::mon_loc();
  CHECK(is_unit(K, kxy_elem("1+x")));
  CHECK_FALSE(is_unit(K, kxy_elem("x")));
  CHECK(is_unit(K, kxy_elem("2")));

  RingHandle zloc = RingHandle::z_loc(5);
  CHECK(is_unit(zloc, make_rat(zloc, Rat(3, 7))));
  CHECK_FALSE(is_unit(zloc, make_rat(zloc, Rat(10, 3))));

  RingHandle zinv = RingHandle::z_inv(2);
  CHECK(is_unit(zinv, make_rat(zinv, Rat(8))));
  CHECK(is_unit(zinv, make_rat(zinv, Rat(1, 4))));
  CHECK_FALSE(is_unit(zinv, make_rat(zinv, Rat(6))));

  RingHandle prod = RingHandle::product(RingHandle::z_mod(4), RingHandle::z_mod(9));
  CHECK(is_unit(prod, make_pair(prod, 1, 2)));
  CHECK_FALSE(is_unit(prod, make_pair(prod, 2, 2)));

  CHECK_THROWS_AS(is_unit(Z, make_zmod(z12, 1)), backend_mismatch);
}

TEST_CASE("quasilocal detection") {
  CHECK(is_quasilocal(RingHandle::z_mod(8)));
  CHECK_FALSE(is_quasilocal(RingHandle::z_mod(12)));
  CHECK_FALSE(is_quasilocal(RingHandle::integers()));
  CHECK_FALSE(is_quasilocal(RingHandle::z_inv(2)));
  CHECK(is_quasilocal(RingHandle::z_loc(5)));
  CHECK(is_quasilocal(RingHandle::mon_loc()));
  CHECK_FALSE(is_quasilocal(RingHandle::product(RingHandle::integers(), RingHandle::integers())));
  CHECK_FALSE(is_quasilocal(RingHandle::product(RingHandle::z_mod(4), RingHandle::z_mod(9))));

  // independent route: Z/n has a unique maximal ideal exactly for prime powers,
  // and the criterion must agree with nonunit closure under addition
  for (i64 n = 2; n <= 60; ++n) {
    RingHandle R = RingHandle::z_mod(n);
    bool scan = quasilocal_by_l0_scan(R);
    CHECK_MESSAGE(scan == is_prime_power(n), "n=", n);
    CHECK_MESSAGE(scan == nonunits_closed_under_addition(R), "n=", n);
  }
}

TEST_CASE("divided and chained") {
  CHECK(is_divided(RingHandle::z_mod(8)));
  CHECK(is_chained(RingHandle::z_mod(8)));
  CHECK_FALSE(is_divided(RingHandle::z_mod(12)));
  CHECK_FALSE(is_chained(RingHandle::z_mod(12)));
  CHECK(is_divided(RingHandle::z_loc(5)));
  CHECK(is_chained(RingHandle::z_loc(5)));
  CHECK_FALSE(is_divided(RingHandle::integers()));
  CHECK_FALSE(is_chained(RingHandle::mon_loc()));
  // 2 and 3 do not divide each other mod 12
  RingHandle z12 = RingHandle::z_mod(12);
  CHECK_FALSE(ring_divides(z12, make_zmod(z12, 2), make_zmod(z12, 3)));
  CHECK_FALSE(ring_divides(z12, make_zmod(z12, 3), make_zmod(z12, 2)));
  for (i64 n = 2; n <= 40; ++n) {
    RingHandle R = RingHandle::z_mod(n);
    CHECK_MESSAGE(is_chained(R) == is_prime_power(n), "n=", n);
    CHECK_MESSAGE(is_divided(R) == is_prime_power(n), "n=", n);
  }
  CHECK_FALSE(is_divided(RingHandle::product(RingHandle::z_mod(4), RingHandle::z_mod(9))));
}

TEST_CASE("irreducible elements") {
  RingHandle Z = RingHandle::integers();
  CHECK(is_irreducible_element(Z, make_int(7)).is_proven());
  Verdict v = is_irreducible_element(Z, make_int(12));
  CHECK(v.is_refuted());
  CHECK(v.witness[0].a == 2);
  CHECK(v.witness[1].a == 6);

  RingHandle z12 = RingHandle::z_mod(12);
  Verdict w = is_irreducible_element(z12, make_zmod(z12, 4));
  CHECK(w.is_refuted());
  CHECK(w.witness[0].a == 2);
  CHECK(w.witness[1].a == 2);

  RingHandle K = RingHandle::mon_loc();
  Verdict u = is_irreducible_element(K, kxy_elem("x"));
  CHECK(u.status == Status::Unfalsified);
  CHECK(u.bound.has_value());
  Verdict r = is_irreducible_element(K, kxy_elem("x^2"));
  CHECK(r.is_refuted());
  CHECK(ring_eq(K, r.witness[0], kxy_elem("x")));

  RingHandle zloc = RingHandle::z_loc(5);
  CHECK(is_irreducible_element(zloc, make_rat(zloc, Rat(5))).is_proven());
  CHECK(is_irreducible_element(zloc, make_rat(zloc, Rat(25, 2))).is_refuted());

  RingHandle zinv = RingHandle::z_inv(2);
  CHECK(is_irreducible_element(zinv, make_rat(zinv, Rat(12))).is_proven());  // 12 ~ 3 there
  CHECK(is_irreducible_element(zinv, make_rat(zinv, Rat(45))).is_refuted());

  CHECK_THROWS_AS(is_irreducible_element(Z, make_int(1)), domain_error);
  CHECK_THROWS_AS(is_irreducible_element(Z, make_int(0)), domain_error);
}

TEST_CASE("prime elements") {
  RingHandle Z = RingHandle::integers();
  CHECK(is_prime_element(Z, make_int(5)).is_proven());
  CHECK(is_prime_element(Z, make_int(6)).is_refuted());

  RingHandle z12 = RingHandle::z_mod(12);
  CHECK(is_prime_element(z12, make_zmod(z12, 2)).is_proven());
  // independent oracle: no pair outside (2) multiplies into (2)
  {
    bool refuted = false;
    for (i64 a = 0; a < 12 && !refuted; ++a)
      for (i64 b = 0; b < 12 && !refuted; ++b)
        if (a % 2 != 0 && b % 2 != 0 && (a * b) % 2 == 0) refuted = true;
    CHECK_FALSE(refuted);
  }

  RingHandle K = RingHandle::mon_loc();
  Verdict v = is_prime_element(K, kxy_elem("x"));
  CHECK(v.is_proven());
  CHECK(v.method == Method::Certificate);
  CHECK(is_prime_element(K, kxy_elem("x^2")).is_refuted());
}

TEST_CASE("prime implies irreducible on quasilocal finite backends") {
  for (i64 n : {4, 8, 9, 16, 25, 27, 49}) {
    RingHandle R = RingHandle::z_mod(n);
    for (const auto& x : ring_elements(R)) {
      if (ring_is_zero(R, x) || is_unit(R, x)) continue;
      if (is_prime_element(R, x).is_proven())
        CHECK_MESSAGE(is_irreducible_element(R, x).is_proven(), "n=", n, " x=", x.a);
    }
  }
}

TEST_CASE("unit group closure") {
  for (i64 n : {6, 8, 12, 30}) {
    RingHandle R = RingHandle::z_mod(n);
    auto elems = ring_elements(R);
    for (const auto& a : elems)
      for (const auto& b : elems) {
        Element p = ring_mul(R, a, b);
        if (is_unit(R, a) && is_unit(R, b)) CHECK(is_unit(R, p));
        if (is_unit(R, a) && !is_unit(R, b)) CHECK_FALSE(is_unit(R, p));
      }
  }
  Lcg rng;
  RingHandle zloc = RingHandle::z_loc(3);
  RingHandle zinv = RingHandle::z_inv(6);
  for (int i = 0; i < 200; ++i) {
    Rat a(rng.next(-50, 50), rng.next(1, 20));
    Rat b(rng.next(-50, 50), rng.next(1, 20));
    // sanitize denominators per backend
    Rat al(a.num, a.den % 3 == 0 ? a.den + 1 : a.den);
    Rat bl(b.num, b.den % 3 == 0 ? b.den + 1 : b.den);
    Element xl = make_rat(zloc, al), yl = make_rat(zloc, bl);
    if (is_unit(zloc, xl) && is_unit(zloc, yl)) CHECK(is_unit(zloc, ring_mul(zloc, xl, yl)));
    if (is_unit(zloc, xl) && !is_unit(zloc, yl) && !ring_is_zero(zloc, yl))
      CHECK_FALSE(is_unit(zloc, ring_mul(zloc, xl, yl)));
    Element xi = make_rat(zinv, Rat(a.num, 1)), yi = make_rat(zinv, Rat(b.num, 1));
    if (is_unit(zinv, xi) && !is_unit(zinv, yi) && !ring_is_zero(zinv, yi))
      CHECK_FALSE(is_unit(zinv, ring_mul(zinv, xi, yi)));
  }
  RingHandle K = RingHandle::mon_loc();
  std::vector<Element> kxy_units = {kxy_elem("1+x"), kxy_elem("2"), kxy_elem("1+x*y")};
  std::vector<Element> kxy_nonunits = {kxy_elem("x"), kxy_elem("x+y"), kxy_elem("y^2")};
  for (const auto& u : kxy_units)
    for (const auto& v : kxy_units) CHECK(is_unit(K, ring_mul(K, u, v)));
  for (const auto& u : kxy_units)
    for (const auto& w : kxy_nonunits) CHECK_FALSE(is_unit(K, ring_mul(K, u, w)));
}

TEST_CASE("residue systems over Z") {
  RingHandle Z = RingHandle::integers();
  ResidueSystem rs = residue_system_mod(Z, 12);
  REQUIRE(rs.classes.size() == 12);
  for (i64 r = 0; r < 12; ++r) {
    const auto& cls = rs.classes[static_cast<std::size_t>(r)];
    CHECK(cls.value.a == r);
    CHECK(cls.has_nonunit);
    CHECK_FALSE(is_unit(Z, cls.nonunit_rep));
    CHECK(floor_mod(cls.nonunit_rep.a, 12) == r);
    CHECK(cls.nonunit_rep.a == (r == 1 ? 13 : r));
  }
  ResidueSystem rs2 = residue_system_mod(Z, 2);
  CHECK(rs2.classes[1].nonunit_rep.a == 3);

  RingHandle zinv = RingHandle::z_inv(2);
  ResidueSystem rs3 = residue_system_mod(zinv, 3);
  CHECK(rs3.classes[1].nonunit_rep.q == Rat(7));  // 1 and 4 are units of Z[1/2]
  CHECK(rs3.classes[2].nonunit_rep.q == Rat(5));  // 2 is a unit of Z[1/2]
}

TEST_CASE("residue systems on finite backends") {
  RingHandle z12 = RingHandle::z_mod(12);
  ResidueSystem rs = residue_system_finite(z12);
  REQUIRE(rs.classes.size() == 12);
  for (const auto& cls : rs.classes)
    CHECK(cls.has_nonunit == !is_unit(z12, cls.value));
}

TEST_CASE("kxy equality by cross multiplication") {
  RingHandle K = RingHandle::mon_loc();
  Lcg rng;
  std::vector<std::string> nums = {"x", "x+y", "x^2", "x*y+y^2", "1+x", "y"};
  std::vector<std::string> dens = {"1", "1+x", "1+y", "2+x*y", "1+x+y"};
  for (int i = 0; i < 100; ++i) {
    const auto& f = nums[static_cast<std::size_t>(rng.next(0, 5))];
    const auto& g = dens[static_cast<std::size_t>(rng.next(0, 4))];
    const auto& h = dens[static_cast<std::size_t>(rng.next(0, 4))];
    Element a = kxy_elem(f, g);
    // the same fraction amplified by a unit
    Element b = make_polyfrac(parse_poly(f) * parse_poly(h), parse_poly(g) * parse_poly(h));
    CHECK(ring_eq(K, a, b));
    CHECK(ring_eq(K, b, a));
    // transitivity against a third amplification
    Element c = make_polyfrac(parse_poly(f) * parse_poly(h) * parse_poly(h),
                              parse_poly(g) * parse_poly(h) * parse_poly(h));
    if (ring_eq(K, a, b) && ring_eq(K, b, c)) CHECK(ring_eq(K, a, c));
  }
  CHECK_FALSE(ring_eq(K, kxy_elem("x"), kxy_elem("y")));
}

TEST_CASE("element literal round trip") {
  RingHandle Z = RingHandle::integers();
  RingHandle z12 = RingHandle::z_mod(12);
  RingHandle prod = RingHandle::product(z12, Z);
  RingHandle zloc = RingHandle::z_loc(5);
  RingHandle K = RingHandle::mon_loc();
  std::vector<std::pair<RingHandle, std::string>> cases = {
      {Z, "-42"},         {z12, "7"},          {prod, "(3,-9)"},
      {zloc, "10/3"},     {zloc, "0"},         {RingHandle::z_inv(2), "7/8"},
      {K, "x^2+x*y"},     {K, "x^3-2*y"},      {K, "1"}};
  for (const auto& [R, s] : cases) {
    Element e = parse_element(R, s);
    CHECK(ring_eq(R, parse_element(R, element_str(R, e)), e));
  }
  CHECK_THROWS_AS(parse_element(zloc, "1/5"), domain_error);
  CHECK_THROWS_AS(parse_element(K, "x^"), parse_error);
  CHECK_THROWS_AS(parse_element(prod, "3"), parse_error);
}

TEST_CASE("ring spec round trip") {
  for (const std::string& s :
       {"Z", "Z/12", "Z/4xZ/9", "ZxZ", "ZxZ/9", "Z/4xZ", "Zloc:5", "Zinv:2", "kxy"}) {
    RingHandle R = parse_ring(s);
    CHECK(R.str() == s);
    CHECK(parse_ring(R.str()) == R);
  }
  CHECK_THROWS_AS(parse_ring("Z/1"), domain_error);
  CHECK_THROWS_AS(parse_ring("Zloc:4"), domain_error);
  CHECK_THROWS_AS(parse_ring("Q"), parse_error);
  CHECK_THROWS_AS(parse_ring("kxyxkxy"), parse_error);
}
