#include "ideallab/parse.hpp"

#include <cctype>

namespace ideallab {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

i64 parse_int_token(const std::string& s, const std::string& what) {
  if (s.empty()) throw parse_error("expected an integer in " + what);
  std::size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (...) {
    throw parse_error("bad integer '" + s + "' in " + what);
  }
  if (pos != s.size()) throw parse_error("trailing characters after integer '" + s + "'");
  return v;
}

std::optional<RingHandle> try_parse_component(const std::string& s) {
  if (s == "Z") return RingHandle::integers();
  if (s.rfind("Z/", 0) == 0) return RingHandle::z_mod(parse_int_token(s.substr(2), "ring spec"));
  return std::nullopt;
}

// ---- polynomial parser: poly := ['-'] term (('+'|'-') term)*,
//      term := factor ('*' factor)*, factor := INT | x|y ['^' INT]

struct PolyParser {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  i64 integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) throw parse_error("expected a number at '" + src.substr(start) + "'");
    return parse_int_token(src.substr(start, pos - start), "polynomial");
  }

  Poly factor() {
    char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos;
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      Monomial m = c == 'x' ? Monomial{e, 0} : Monomial{0, e};
      return Poly::monomial(m);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(Rat(integer()));
    throw parse_error(std::string("unexpected token '") + c + "' in polynomial");
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly poly() {
    bool neg = eat('-');
    Poly p = term();
    if (neg) p = Poly::zero() - p;
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    skip_ws();
    if (pos != src.size())
      throw parse_error("trailing characters in polynomial '" + src.substr(pos) + "'");
    return p;
  }
};

Rat parse_rat(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int_token(s, "rational"));
  return Rat(parse_int_token(s.substr(0, slash), "rational numerator"),
             parse_int_token(s.substr(slash + 1), "rational denominator"));
}

}  // namespace

Poly parse_poly(const std::string& spec) {
  PolyParser p{trimmed(spec)};
  return p.poly();
}

RingHandle parse_ring(const std::string& raw) {
  std::string spec = trimmed(raw);
  if (spec.empty()) throw parse_error("empty ring spec");
  if (spec == "kxy") return RingHandle::mon_loc();
  if (spec.rfind("Zloc:", 0) == 0)
    return RingHandle::z_loc(parse_int_token(spec.substr(5), "ring spec"));
  if (spec.rfind("Zinv:", 0) == 0)
    return RingHandle::z_inv(parse_int_token(spec.substr(5), "ring spec"));
  // product: split at an 'x' where both sides are Z or Z/n
  for (std::size_t i = 1; i + 1 < spec.size(); ++i) {
    if (spec[i] != 'x') continue;
    auto l = try_parse_component(spec.substr(0, i));
    auto r = try_parse_component(spec.substr(i + 1));
    if (l && r) return RingHandle::product(*l, *r);
  }
  if (auto c = try_parse_component(spec)) return *c;
  throw parse_error("unrecognized ring spec '" + spec + "'");
}

Element parse_element(const RingHandle& ring, const std::string& raw) {
  std::string spec = trimmed(raw);
  if (spec.empty()) throw parse_error("empty element literal");
  switch (ring.backend()) {
    case Backend::Int:
      return make_int(parse_int_token(spec, "element"));
    case Backend::ZMod:
      return make_zmod(ring, parse_int_token(spec, "element"));
    case Backend::Prod: {
      if (spec.front() != '(' || spec.back() != ')')
        throw parse_error("product element literal must look like (a,b)");
      std::string body = spec.substr(1, spec.size() - 2);
      std::size_t comma = body.find(',');
      if (comma == std::string::npos) throw parse_error("missing comma in pair literal");
      return make_pair(ring, parse_int_token(trimmed(body.substr(0, comma)), "pair"),
                       parse_int_token(trimmed(body.substr(comma + 1)), "pair"));
    }
    case Backend::IntLoc:
    case Backend::IntInv:
      if (spec == "p" && ring.backend() == Backend::IntLoc)
        return make_rat(ring, Rat(ring.param()));
      return make_rat(ring, parse_rat(spec));
    case Backend::MonLoc:
      return make_polyfrac(parse_poly(spec));
  }
  throw parse_error("unknown ring backend");
}

Ideal parse_ideal(const RingHandle& ring, const std::string& raw) {
  std::string spec = trimmed(raw);
  if (spec.empty()) throw parse_error("empty ideal literal");
  auto parenthesized = [&](const std::string& s) -> std::optional<i64> {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
      return parse_int_token(trimmed(s.substr(1, s.size() - 2)), "ideal literal");
    return std::nullopt;
  };
  switch (ring.backend()) {
    case Backend::Int:
    case Backend::IntInv: {
      auto m = parenthesized(spec);
      if (!m) m = parse_int_token(spec, "ideal literal");
      return Ideal::from_modulus(ring, *m);
    }
    case Backend::ZMod: {
      auto m = parenthesized(spec);
      if (!m) m = parse_int_token(spec, "ideal literal");
      return Ideal::from_modulus(ring, *m);
    }
    case Backend::IntLoc: {
      if (auto m = parenthesized(spec)) {
        if (*m == 0) return Ideal::zero(ring);
        if (*m == 1) return Ideal::whole(ring);
        return Ideal::principal(ring, make_rat(ring, Rat(*m)));
      }
      if (spec == "p") return Ideal::from_exponent(ring, 1);
      if (spec.rfind("p^", 0) == 0)
        return Ideal::from_exponent(ring, parse_int_token(spec.substr(2), "exponent"));
      throw parse_error("Zloc ideal literal must be (0), (1), p or p^k");
    }
    case Backend::Prod: {
      std::size_t split = std::string::npos;
      int depth = 0;
      for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == '(') ++depth;
        if (spec[i] == ')') --depth;
        if (spec[i] == 'x' && depth == 0) {
          split = i;
          break;
        }
      }
      if (split == std::string::npos)
        throw parse_error("product ideal literal must look like (a)x(b)");
      Ideal l = parse_ideal(ring.left(), spec.substr(0, split));
      Ideal r = parse_ideal(ring.right(), spec.substr(split + 1));
      return Ideal::pair_ideal(l, r);
    }
    case Backend::MonLoc: {
      if (spec == "(0)") return Ideal::zero(ring);
      if (spec == "(1)") return Ideal::whole(ring);
      std::vector<Monomial> gens;
      std::size_t start = 0;
      while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string piece = comma == std::string::npos ? spec.substr(start)
                                                       : spec.substr(start, comma - start);
        Poly p = parse_poly(piece);
        if (p.is_zero() || !p.is_single_term() || !(p.terms[0].second == Rat(1)))
          throw parse_error("kxy ideal generators must be monomials: '" + piece + "'");
        gens.push_back(p.terms[0].first);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return Ideal::monomial_ideal(ring, std::move(gens));
    }
  }
  throw parse_error("unknown ring backend");
}

}  // namespace ideallab
