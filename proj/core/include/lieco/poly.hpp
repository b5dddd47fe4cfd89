#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lieco/rational.hpp"

namespace lieco {

// Exponent vector over the coordinates x0..x_{2n}.
using Exponent = std::vector<std::uint32_t>;

// Graded lexicographic order, largest first: higher total degree precedes,
// ties broken lexicographically with x0 > x1 > ... .
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial in x0..x_{2n} with coefficients in Q(i). Zero
// coefficients are never stored, so structural equality is value equality.
class Poly {
 public:
  using TermMap = std::map<Exponent, GaussRational, GradedLexGreater>;

  explicit Poly(int n);
  Poly(int n, GaussRational constant);

  static Poly variable(int n, int index);
  static Poly monomial(int n, Exponent exponent, GaussRational coefficient);

  int half_dim() const { return n_; }
  int num_vars() const { return 2 * n_ + 1; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero when absent).
  GaussRational constant_term() const;
  // Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned exponent) const;

  // d/dx_index; throws std::out_of_range unless 0 <= index <= 2n.
  Poly partial(int index) const;

  // True iff the polynomial does not depend on x0.
  bool is_basic() const;

  // Exact substitution; throws std::invalid_argument on a length mismatch.
  GaussRational eval(std::span<const Rational> point) const;

  // Canonical text, e.g. "x1**2*x2 - 1/2*x0 + 3". Reparses to the same value.
  std::string str() const;

 private:
  void check_same_space(const Poly& o) const;
  void add_term(const Exponent& e, const GaussRational& c);

  int n_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace lieco
