#include "symdis/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace symdis {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + s + "'");
  };
  if (s.empty()) return fail();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) return fail();
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
    if (!valid_integer_token(ip) || fp.empty() || !valid_integer_token(fp) ||
        fp[0] == '-' || fp[0] == '+')
      return fail();
    Integer scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Integer whole(ip);
    Integer frac(fp);
    Integer num = abs(whole) * scale + frac;
    if (neg || whole < 0) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  if (!valid_integer_token(s)) return fail();
  return Rational(Integer(s));
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int sig_digits) {
  if (q == 0) return "0";
  // 512-bit mantissa is plenty for 12 significant decimal digits.
  mpf_class f(q, 512);
  char* buf = nullptr;
  gmp_asprintf(&buf, "%.*Fg", sig_digits, f.get_mpf_t());
  std::string out(buf);
  std::free(buf);
  return out;
}

Rational pow_rational(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  out.canonicalize();
  return out;
}

long double log_rational(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("log of nonpositive rational");
  // Split as ln(num) - ln(den); each piece via mpz -> double with a
  // power-of-two exponent so magnitudes beyond double range stay exact.
  auto log_mpz = [](const Integer& z) -> long double {
    long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(static_cast<long double>(d)) +
           static_cast<long double>(exp2) * 0.6931471805599453094L;
  };
  return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

}  // namespace symdis
