#ifndef EXTQ_SCALAR_HPP
#define EXTQ_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace extq {

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Exact rational number, always in lowest terms with a positive denominator.
// Plays the role of the scalar ring R = T(1).
class Scalar {
public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I v)  // NOLINT: implicit from integers
      : q_(std::is_signed_v<I> ? mpq_class(static_cast<long>(v))
                               : mpq_class(static_cast<unsigned long>(v))) {}
  Scalar(long num, long den);
  Scalar(const mpz_class &num, const mpz_class &den);
  explicit Scalar(const mpq_class &q);

  // Accepts "p" or "p/q" with an optional leading '-'.
  static Scalar parse(std::string_view text);

  std::string str() const { return q_.get_str(); }

  // Decimal approximation with `digits` fractional digits, rounded half away
  // from zero.
  std::string to_decimal(int digits) const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class &raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Largest integer <= this.
  mpz_class floor() const;

  Scalar abs() const { return Scalar(::abs(q_)); }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  Scalar &operator+=(const Scalar &o) { q_ += o.q_; return *this; }
  Scalar &operator-=(const Scalar &o) { q_ -= o.q_; return *this; }
  Scalar &operator*=(const Scalar &o) { q_ *= o.q_; return *this; }
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Audit hook used by tests: lowest terms and positive denominator.
  bool is_canonical() const;

private:
  mpq_class q_;
};

Scalar pow(const Scalar &base, unsigned long exponent);

std::ostream &operator<<(std::ostream &os, const Scalar &s);

// The step h of the finite-difference model; never zero.
class Step {
public:
  explicit Step(Scalar h);
  const Scalar &h() const { return h_; }
  const Scalar &inverse() const { return inv_; }

  friend bool operator==(const Step &, const Step &) = default;

private:
  Scalar h_;
  Scalar inv_;
};

} // namespace extq

#endif
