#include "ideallab/poly.hpp"

#include <algorithm>
#include <map>

namespace ideallab {

Monomial Monomial::quotient_by(const Monomial& o) const {
  if (!o.divides(*this)) throw domain_error("monomial quotient: not divisible");
  return {dx - o.dx, dy - o.dy};
}

Monomial Monomial::gcd(const Monomial& o) const {
  return {std::min(dx, o.dx), std::min(dy, o.dy)};
}

Monomial Monomial::lcm(const Monomial& o) const {
  return {std::max(dx, o.dx), std::max(dy, o.dy)};
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  if (dx > 0) {
    s += "x";
    if (dx > 1) s += "^" + std::to_string(dx);
  }
  if (dy > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (dy > 1) s += "^" + std::to_string(dy);
  }
  return s;
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (!c.is_zero()) p.terms.emplace_back(Monomial{0, 0}, c);
  return p;
}

Poly Poly::monomial(Monomial m, Rat c) {
  Poly p;
  if (!c.is_zero()) p.terms.emplace_back(m, c);
  return p;
}

Rat Poly::constant_term() const {
  if (!terms.empty() && terms.front().first.is_one()) return terms.front().second;
  return Rat(0);
}

int Poly::total_degree() const {
  if (terms.empty()) return -1;
  return terms.back().first.degree();
}

namespace {

Poly from_term_map(const std::map<Monomial, Rat>& m) {
  Poly p;
  for (const auto& [mono, c] : m) {
    if (!c.is_zero()) p.terms.emplace_back(mono, c);
  }
  return p;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  std::map<Monomial, Rat> acc;
  for (const auto& [m, c] : terms) acc[m] = c;
  for (const auto& [m, c] : o.terms) {
    auto it = acc.find(m);
    if (it == acc.end())
      acc[m] = c;
    else
      it->second = it->second + c;
  }
  return from_term_map(acc);
}

Poly Poly::operator-(const Poly& o) const {
  std::map<Monomial, Rat> acc;
  for (const auto& [m, c] : terms) acc[m] = c;
  for (const auto& [m, c] : o.terms) {
    auto it = acc.find(m);
    if (it == acc.end())
      acc[m] = -c;
    else
      it->second = it->second - c;
  }
  return from_term_map(acc);
}

Poly Poly::operator*(const Poly& o) const {
  std::map<Monomial, Rat> acc;
  for (const auto& [m1, c1] : terms) {
    for (const auto& [m2, c2] : o.terms) {
      Monomial m = m1 * m2;
      Rat c = c1 * c2;
      auto it = acc.find(m);
      if (it == acc.end())
        acc[m] = c;
      else
        it->second = it->second + c;
    }
  }
  return from_term_map(acc);
}

Monomial Poly::monomial_content() const {
  if (terms.empty()) throw domain_error("monomial content of zero polynomial");
  Monomial g = terms.front().first;
  for (const auto& [m, c] : terms) g = g.gcd(m);
  return g;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
  Poly p;
  for (const auto& [mono, c] : terms) p.terms.emplace_back(mono.quotient_by(m), c);
  return p;
}

Rat Poly::content() const {
  if (terms.empty()) throw domain_error("content of zero polynomial");
  i64 gn = 0, ld = 1;
  for (const auto& [m, c] : terms) {
    gn = gcd_i64(gn, c.num);
    ld = lcm_i64(ld, c.den);
  }
  return Rat(gn, ld);
}

Poly Poly::normalized_associate() const {
  if (terms.empty()) return *this;
  Rat c = content();
  if (terms.back().second.num < 0) c = -c;
  Poly p;
  for (const auto& [m, coeff] : terms) p.terms.emplace_back(m, coeff / c);
  return p;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    Rat a = c;
    if (i == 0) {
      if (a.num < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.num < 0 ? "-" : "+";
      if (a.num < 0) a = -a;
    }
    if (m.is_one()) {
      s += a.str();
    } else {
      if (!(a.num == 1 && a.den == 1)) s += a.str() + "*";
      s += m.str();
    }
  }
  return s;
}

std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) return std::nullopt;
  Poly r = f;
  Poly q = Poly::zero();
  const auto& glt = g.terms.back();
  while (!r.is_zero()) {
    const auto& rlt = r.terms.back();
    if (!glt.first.divides(rlt.first)) return std::nullopt;
    Poly t = Poly::monomial(rlt.first.quotient_by(glt.first), rlt.second / glt.second);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

}  // namespace ideallab
