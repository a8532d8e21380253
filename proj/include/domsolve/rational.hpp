// Copyright 2026 The domsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMSOLVE_RATIONAL_HPP_
#define DOMSOLVE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace domsolve {

// GMP values are always canonical: gcd(num, den) = 1 and den > 0.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (2n - 1)!! = 1 * 3 * ... * (2n - 1); equals 1 for n = 0.
inline BigInt odd_double_factorial(unsigned long n) {
  if (n == 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
  return r;
}

inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline BigInt power(const BigInt& base, unsigned long k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

inline BigRational power(const BigRational& base, unsigned long k) {
  BigRational r(power(BigInt(base.get_num()), k), power(BigInt(base.get_den()), k));
  r.canonicalize();
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Generalized harmonic number sum_{k=1}^n 1/k^order.
inline BigRational harmonic(unsigned long n, unsigned long order = 1) {
  BigRational h = 0;
  for (unsigned long k = 1; k <= n; ++k) h += BigRational(1, power(BigInt(k), order));
  return h;
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

// Nearest double, ties to even. (mpq_get_d truncates.) Results in the
// subnormal range may be off by one unit.
inline double to_double(const BigRational& q) {
  if (sgn(q) == 0) return 0.0;
  BigInt a = abs(q.get_num()), b = q.get_den();
  const long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  // Scale so the quotient carries 55 or 56 bits.
  const long s = 55 - e;
  if (s >= 0) {
    a <<= static_cast<unsigned long>(s);
  } else {
    b <<= static_cast<unsigned long>(-s);
  }
  BigInt quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const long drop = static_cast<long>(mpz_sizeinbase(quo.get_mpz_t(), 2)) - 53;
  BigInt low = quo & ((BigInt(1) << static_cast<unsigned long>(drop)) - 1);
  quo >>= static_cast<unsigned long>(drop);
  const BigInt half = BigInt(1) << static_cast<unsigned long>(drop - 1);
  if (low > half || (low == half && (sgn(rem) != 0 || mpz_odd_p(quo.get_mpz_t())))) ++quo;
  const double r = std::ldexp(quo.get_d(), static_cast<int>(drop - s));
  return sgn(q) < 0 ? -r : r;
}

}  // namespace domsolve

#endif  // DOMSOLVE_RATIONAL_HPP_
