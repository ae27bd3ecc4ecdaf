#include "ctred/exact.hpp"

namespace ctred {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat parse_rat(const std::string& text) {
  BigRat q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("parse_rat: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt double_factorial(long n) {
  if (n == -1) return 1;
  if (n < 0 || n % 2 == 0) throw std::domain_error("double_factorial: argument must be odd and >= -1");
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper argument");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigRat rising(const BigRat& x, long m) {
  if (m < 0) throw std::domain_error("rising: negative length");
  BigRat r = 1;
  BigRat t = x;
  for (long i = 0; i < m; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

BigRat pow(const BigRat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow: zero to a negative power");
    BigRat inv = 1 / base;
    return pow(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rat(num, den);
}

}  // namespace ctred
