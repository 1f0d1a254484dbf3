#include "ideallab/numeric.hpp"

#include <algorithm>
#include <limits>

namespace ideallab {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("add");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("sub");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("mul");
  return r;
}

i64 checked_neg(i64 a) {
  if (a == std::numeric_limits<i64>::min()) throw arithmetic_overflow("neg");
  return -a;
}

i64 checked_pow(i64 base, i64 exp) {
  if (exp < 0) throw domain_error("checked_pow: negative exponent");
  i64 r = 1;
  for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

i64 abs_i64(i64 a) {
  if (a == std::numeric_limits<i64>::min()) throw arithmetic_overflow("abs");
  return a < 0 ? -a : a;
}

i64 gcd_i64(i64 a, i64 b) {
  a = abs_i64(a);
  b = abs_i64(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(abs_i64(a) / gcd_i64(a, b), abs_i64(b));
}

i64 floor_mod(i64 a, i64 m) {
  if (m <= 0) throw domain_error("floor_mod: modulus must be positive");
  i64 r = a % m;
  if (r < 0) r += m;
  return r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<u128>(static_cast<u64>(a)) * static_cast<u64>(b) %
                          static_cast<u64>(m));
}

i64 pow_mod(i64 a, i64 e, i64 m) {
  i64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  i64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

i64 pollard_rho(i64 n) {
  if (n % 2 == 0) return 2;
  for (i64 c = 1;; ++c) {
    i64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mul_mod(x, x, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      y = (mul_mod(y, y, n) + c) % n;
      d = gcd_i64(x - y, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(i64 n, std::vector<i64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  i64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw domain_error("factorize: argument must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<i64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.emplace_back(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  return out;
}

i64 radical_int(i64 n) {
  n = abs_i64(n);
  if (n == 0) return 0;
  i64 r = 1;
  for (const auto& [p, e] : factorize(n)) r = checked_mul(r, p);
  return r;
}

bool is_prime_power(i64 n, i64* base, int* exp) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (base) *base = f[0].first;
  if (exp) *exp = f[0].second;
  return true;
}

int valuation(i64 n, i64 p) {
  n = abs_i64(n);
  if (n == 0) throw domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 strip_primes_of(i64 n, i64 s) {
  if (n < 0) throw domain_error("strip_primes_of: negative argument");
  if (n == 0) return 0;
  for (const auto& [p, e] : factorize(s)) {
    while (n % p == 0) n /= p;
  }
  return n;
}

bool is_smooth_over(i64 n, i64 s) {
  if (n < 1) throw domain_error("is_smooth_over: argument must be >= 1");
  return strip_primes_of(n, s) == 1;
}

std::vector<i64> divisors_of(i64 n) {
  if (n < 1) throw domain_error("divisors_of: argument must be >= 1");
  std::vector<i64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t sz = out.size();
    i64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk = checked_mul(pk, p);
      for (std::size_t j = 0; j < sz; ++j) out.push_back(checked_mul(out[j], pk));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 smallest_prime_factor(i64 n) {
  if (n < 2) throw domain_error("smallest_prime_factor: argument must be >= 2");
  return factorize(n).front().first;
}

}  // namespace ideallab
