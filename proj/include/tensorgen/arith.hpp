#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace tensorgen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Result type of p-adic valuations.
using Valuation = long long;

// Base-p digit string, least significant digit first. Every digit lies in
// [0, p); the most significant digit is nonzero except for the value 0,
// whose digit string is {0}.
struct BasePDigits {
  long long p = 0;
  std::vector<long long> digit;

  // Reconstructs the represented value.
  long long value() const;
};

// Binomial coefficient C(n, k), with C(n, k) == 0 whenever k < 0 or k > n.
// Exact for all inputs; n may be negative only in the sense that the result
// is then 0 (the polynomial extension is not modeled).
Integer binomial(long long n, long long k);

// Largest e >= 0 with p^e dividing w. Requires w != 0 (the valuation of 0
// is infinite) and p >= 2; throws std::invalid_argument otherwise.
Valuation valuation(const Integer& w, long long p);

// Base-p digits of n >= 0, least significant first.
BasePDigits digits(long long n, long long p);

// Number of carries when adding a and b (both >= 0) in base p.
long long carry_count(long long a, long long b, long long p);

// nu_p(C(n, k)) computed by carry counting (Kummer's theorem).
// Requires 0 <= k <= n so that the binomial coefficient is nonzero.
Valuation binomial_valuation(long long n, long long k, long long p);

// C(n, k) mod p for prime p, by Lucas' theorem on base-p digits.
// Never forms the full binomial coefficient, so it stays cheap for large n.
long long binomial_mod_p(long long n, long long k, long long p);

// Quotient a / b where b must divide a exactly.
// Throws std::logic_error on a nonzero remainder.
Integer exact_div(const Integer& a, const Integer& b);

// Deterministic trial-division primality test for small moduli.
bool is_prime(long long p);

}  // namespace tensorgen
