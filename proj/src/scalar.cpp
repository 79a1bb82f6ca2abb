#include "extq/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace extq {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Scalar::Scalar(long num, long den) : Scalar(mpz_class(num), mpz_class(den)) {}

Scalar::Scalar(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(const mpq_class &q) : q_(q) {
  if (q_.get_den() == 0)
    throw DivisionByZero();
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return Scalar(n, d);
}

std::string Scalar::to_decimal(int digits) const {
  if (digits < 0)
    digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = ::abs(q_.get_num()) * scale;
  mpz_class den = q_.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  mpz_class scaled = (2 * num + den) / (2 * den);
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(q_) < 0 && scaled != 0)
    s.insert(0, "-");
  return s;
}

mpz_class Scalar::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  return Scalar(mpq_class(1) / q_);
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

bool Scalar::is_canonical() const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q_.get_den() > 0 && g == 1;
}

Scalar pow(const Scalar &base, unsigned long exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Scalar(n, d);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.str(); }

Step::Step(Scalar h) : h_(std::move(h)) {
  if (h_.is_zero())
    throw DivisionByZero();
  inv_ = h_.inverse();
}

} // namespace extq
