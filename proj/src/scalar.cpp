#include "fracdim/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

#include "fracdim/error.hpp"

namespace fracdim {

namespace {

bool is_integer_text(std::string_view text, bool allow_sign) {
  if (!text.empty() && allow_sign && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double log_of_mpz(const mpz_class& z) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Scalar out(p, q);
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

double to_double(const Scalar& value) { return value.get_d(); }

double log_of(const Scalar& value) {
  if (sgn(value) <= 0) return -INFINITY;
  return log_of_mpz(value.get_num()) - log_of_mpz(value.get_den());
}

Scalar pow_int(const Scalar& base, long exponent) {
  Scalar result = 1;
  Scalar b = exponent >= 0 ? base : Scalar(1) / base;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Scalar midpoint(const Scalar& a, const Scalar& b) { return (a + b) / 2; }

Scalar inverse_power(unsigned long n, double alpha, int bits) {
  if (n == 0) throw Error(ErrorCode::NonPositiveScale, "inverse_power of 0");
  double whole = std::floor(alpha);
  if (alpha == whole && alpha >= 0 && alpha < 1e6) {
    return pow_int(Scalar(mpz_class(n)), -static_cast<long>(whole));
  }
  mpfr_t v;
  mpfr_init2(v, bits + 64);
  mpfr_set_ui(v, n, MPFR_RNDN);
  mpfr_t a;
  mpfr_init2(a, bits + 64);
  mpfr_set_d(a, -alpha, MPFR_RNDN);
  mpfr_pow(v, v, a, MPFR_RNDN);
  mpfr_mul_2si(v, v, bits, MPFR_RNDN);
  mpfr_round(v, v);
  mpz_class scaled;
  mpfr_get_z(scaled.get_mpz_t(), v, MPFR_RNDN);
  mpfr_clear(v);
  mpfr_clear(a);
  Scalar out(scaled);
  out /= pow_int(Scalar(2), bits);
  return out;
}

Scalar round_to_dyadic(double value, int bits) {
  mpfr_t v;
  mpfr_init2(v, 128);
  mpfr_set_d(v, value, MPFR_RNDN);
  mpfr_mul_2si(v, v, bits, MPFR_RNDN);
  mpfr_round(v, v);
  mpz_class scaled;
  mpfr_get_z(scaled.get_mpz_t(), v, MPFR_RNDN);
  mpfr_clear(v);
  Scalar out(scaled);
  out /= pow_int(Scalar(2), bits);
  return out;
}

}  // namespace fracdim
