#pragma once

// Exact scalars. BigInt and BigRat are GMP's C++ classes; every BigRat that
// leaves this library is in canonical form (lowest terms, positive
// denominator, zero stored as 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctred {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);
inline BigRat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

/// Parses "p/q" or "p".
BigRat parse_rat(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

BigInt factorial(long n);
/// n(n-2)...1 for odd n >= 1, with (-1)!! = 1.
BigInt double_factorial(long n);
/// C(n,k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);
/// x(x+1)...(x+m-1).
BigRat rising(const BigRat& x, long m);

/// base^e for any integer e; base must be nonzero when e < 0.
BigRat pow(const BigRat& base, long e);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace ctred
