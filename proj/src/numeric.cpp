#include "cogrowth/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace cogrowth {

double log_int(const Int& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("log_int: value must be positive");
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_rat(const Rat& v) {
  if (sgn(v) <= 0) throw std::invalid_argument("log_rat: value must be positive");
  return log_int(v.get_num()) - log_int(v.get_den());
}

double nth_root(const Int& v, std::size_t n) {
  if (n == 0) throw std::invalid_argument("nth_root: n must be positive");
  return std::exp(log_int(v) / static_cast<double>(n));
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) {
  Rat c(v);
  c.canonicalize();
  return c.get_str();
}

}  // namespace cogrowth
