#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lieco {

// Exact rational number backed by GMP. Always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  // Accepts "p" or "p/q" with optional leading sign; throws
  // std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element a + b*i of the Gaussian rationals Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  template <std::integral T>
  GaussRational(T value) : re_(value) {}  // NOLINT(implicit)
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  // Throws std::domain_error on division by zero.
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) {
    return a += b;
  }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) {
    return a -= b;
  }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) {
    return a *= b;
  }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

  // "3", "-1/2", "i", "-2/3*i", "(1 + 2*i)".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace lieco
