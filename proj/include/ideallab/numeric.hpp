#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ideallab {

using i64 = std::int64_t;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact-arithmetic guard: engine values live in int64 and every product or
// sum that could wrap goes through a checked op.  Wraparound would silently
// corrupt witnesses, so we abort instead.
struct arithmetic_overflow : error {
  explicit arithmetic_overflow(const std::string& op)
      : error("arithmetic overflow in " + op) {}
};

struct backend_mismatch : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

struct unsupported_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_neg(i64 a);
i64 checked_pow(i64 base, i64 exp);

i64 abs_i64(i64 a);

// gcd(a, 0) = |a|; always nonnegative.
i64 gcd_i64(i64 a, i64 b);
// lcm with the zero convention lcm(0, x) = 0.
i64 lcm_i64(i64 a, i64 b);
// Representative of a mod m in [0, m); m > 0.
i64 floor_mod(i64 a, i64 m);

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 a, i64 e, i64 m);

bool is_prime(i64 n);

// Prime factorization of n >= 1, sorted by prime.  Trial division up to 1e6,
// then Pollard rho with fixed increments so witnesses are reproducible.
std::vector<std::pair<i64, int>> factorize(i64 n);

// Product of the distinct prime factors; radical_int(0) = 0, radical_int(1) = 1.
i64 radical_int(i64 n);

// n = p^k with k >= 1?  n >= 2 required.
bool is_prime_power(i64 n, i64* base = nullptr, int* exp = nullptr);

// Largest exponent e with p^e | n; n != 0.
int valuation(i64 n, i64 p);

// Remove from n >= 0 every prime factor that divides s.
i64 strip_primes_of(i64 n, i64 s);

// Every prime factor of n divides s (true for n = 1).
bool is_smooth_over(i64 n, i64 s);

std::vector<i64> divisors_of(i64 n);  // n >= 1, ascending

i64 smallest_prime_factor(i64 n);  // n >= 2

}  // namespace ideallab
