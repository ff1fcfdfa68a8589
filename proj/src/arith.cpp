#include "tensorgen/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tensorgen {

namespace {

void require_prime_base(long long p, const char* who) {
  if (p < 2) {
    throw std::invalid_argument(std::string(who) + ": base must be >= 2");
  }
}

// (a * b) mod p without overflow for p up to 2^62.
long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
      static_cast<unsigned __int128>(p));
}

long long powmod(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for 0 <= b <= a < p, p prime. Since b < p, every divisor
// in the falling-factorial quotient is invertible mod p.
long long small_binomial_mod_p(long long a, long long b, long long p) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long num = 1, den = 1;
  for (long long i = 1; i <= b; ++i) {
    num = mulmod(num, (a - b + i) % p, p);
    den = mulmod(den, i % p, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

long long BasePDigits::value() const {
  long long v = 0;
  for (auto it = digit.rbegin(); it != digit.rend(); ++it) {
    v = v * p + *it;
  }
  return v;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Valuation valuation(const Integer& w, long long p) {
  require_prime_base(p, "valuation");
  if (w == 0) {
    throw std::invalid_argument("valuation: undefined for 0");
  }
  Integer a = w < 0 ? Integer(-w) : w;
  Integer q, rem;
  Valuation v = 0;
  for (;;) {
    divide_qr(a, Integer(p), q, rem);
    if (rem != 0) return v;
    a = q;
    ++v;
  }
}

BasePDigits digits(long long n, long long p) {
  require_prime_base(p, "digits");
  if (n < 0) throw std::invalid_argument("digits: negative value");
  BasePDigits d;
  d.p = p;
  if (n == 0) {
    d.digit = {0};
    return d;
  }
  while (n > 0) {
    d.digit.push_back(n % p);
    n /= p;
  }
  return d;
}

long long carry_count(long long a, long long b, long long p) {
  require_prime_base(p, "carry_count");
  if (a < 0 || b < 0) throw std::invalid_argument("carry_count: negative");
  long long carries = 0, carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    long long s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

Valuation binomial_valuation(long long n, long long k, long long p) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("binomial_valuation: requires 0 <= k <= n");
  }
  return carry_count(k, n - k, p);
}

long long binomial_mod_p(long long n, long long k, long long p) {
  require_prime_base(p, "binomial_mod_p");
  if (k < 0 || k > n) return 0;
  long long r = 1;
  while (n > 0 || k > 0) {
    long long nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    r = mulmod(r, small_binomial_mod_p(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::logic_error("exact_div: division by zero");
  Integer q, r;
  divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_div: inexact division");
  return q;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace tensorgen
