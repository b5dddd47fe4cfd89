#pragma once

#include <string>
#include <vector>

#include "lieco/contact.hpp"

namespace lieco {

// Scaling of o(f) relative to the contact lift f^:
//   times_ih:    o(f) = ih * f^
//   inverse_ih:  o(f) = f^ / (ih), which on weight h acts as f - (i/h) ham(f).
enum class Normalization { times_ih, inverse_ih };

std::string to_string(Normalization n);
// Accepts "times-ih" and "inverse-ih"; throws std::invalid_argument otherwise.
Normalization parse_normalization(const std::string& s);

// First-order differential operator  zeroth + sum_i first[i] * d/dx_i  on
// functions of x0..x_{2n}.
struct PreqOp {
  int n = 1;
  Poly zeroth{1};
  std::vector<Poly> first;

  explicit PreqOp(int n);
  static PreqOp identity(int n);
  static PreqOp multiplication(const Poly& p);
  static PreqOp from_vector(const MultiVec& x);

  bool is_zero() const;
  friend PreqOp operator+(const PreqOp& a, const PreqOp& b);
  friend PreqOp operator-(const PreqOp& a, const PreqOp& b);
  friend PreqOp operator*(const GaussRational& c, const PreqOp& a);
  friend bool operator==(const PreqOp&, const PreqOp&) = default;
};

std::string to_string(const PreqOp& op);

// p * E_h with p independent of x0; E_h is a formal symbol with
// d/dx0 E_h = ih E_h.
struct WaveFn {
  Rational h;
  Poly p;
  // Throws std::invalid_argument for h = 0 or p depending on x0.
  WaveFn(Rational h, Poly p);
  friend bool operator==(const WaveFn&, const WaveFn&) = default;
};

// The scalar c with o(f) = c * f^.
GaussRational lift_scale(const Rational& h, Normalization norm);

// o(f). Throws std::invalid_argument unless f is basic and h != 0.
PreqOp lift(const ContactSpace& m, const Poly& f, const Rational& h,
            Normalization norm = Normalization::inverse_ih);

// The operator restricted to weight h: d/dx0 replaced by multiplication by
// ih. Coefficients must not depend on x0.
PreqOp on_weight(const PreqOp& op, const Rational& h);

// Throws std::invalid_argument if the result would depend on x0.
WaveFn apply(const PreqOp& op, const WaveFn& psi);

// AB - BA. The second-order parts cancel; a logic_error signals otherwise.
PreqOp commutator(const PreqOp& a, const PreqOp& b);

// inverse_ih: ih [o(f), o(g)] - o({f,g});
// times_ih:   (1/(ih)) [o(f), o(g)] - o({f,g}).
PreqOp homomorphism_defect(const ContactSpace& m, const Poly& f, const Poly& g,
                           const Rational& h,
                           Normalization norm = Normalization::inverse_ih);

}  // namespace lieco
