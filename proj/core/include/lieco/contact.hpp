#pragma once

#include <optional>
#include <utility>

#include "lieco/exterior.hpp"

namespace lieco {

// The standard contact structure on R^{2n+1} in Darboux coordinates:
//   alpha = dx0 + sum_i x_{2i-1} dx_{2i},   omega = d alpha,
//   eta   = Dx0,
//   mu    = sum_i Dx_{2i-1} ^ (Dx_{2i} - x_{2i-1} Dx0).
class ContactSpace {
 public:
  // Throws std::invalid_argument for n < 1 and std::logic_error if any of
  // the structural identities fails to hold.
  explicit ContactSpace(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  const Form& alpha() const { return alpha_; }
  const Form& omega() const { return omega_; }
  const MultiVec& eta() const { return eta_; }
  const MultiVec& mu() const { return mu_; }
  // alpha ^ omega^n.
  const Form& volume() const { return volume_; }

  Poly x(int i) const { return Poly::variable(n_, i); }
  Poly constant(GaussRational c) const { return Poly(n_, std::move(c)); }

 private:
  int n_;
  Form alpha_;
  Form omega_;
  MultiVec eta_;
  MultiVec mu_;
  Form volume_;
};

ContactSpace make_contact(int n);

// {f, g} = (df ^ dg)(mu).
Poly poisson(const ContactSpace& m, const Poly& f, const Poly& g);

// {{f,g},h} + {{g,h},f} + {{h,f},g}.
Poly jacobiator(const ContactSpace& m, const Poly& f, const Poly& g,
                const Poly& h);

// The same cyclic sum obtained from the bivector alone:
// -(1/2) (df ^ dg ^ dh)([mu, mu]) for the bracket convention of schouten().
Poly jacobiator_from_bivector(const ContactSpace& m, const Poly& f,
                              const Poly& g, const Poly& h);

// mu~(df); always horizontal.
MultiVec ham(const ContactSpace& m, const Poly& f);

// f * eta + ham(f).
MultiVec hat(const ContactSpace& m, const Poly& f);

struct ContactClass {
  enum class Kind { automorphism, transformation, none };
  Kind kind;
  // The multiplier phi with L_X alpha = phi * alpha (zero for automorphisms,
  // empty for Kind::none).
  std::optional<Poly> multiplier;
};

ContactClass contact_class(const ContactSpace& m, const MultiVec& x);

// [eta, w] = 0.
bool is_invariant(const ContactSpace& m, const MultiVec& w);

// Element of V_B = V_I / (eta ^ V_I), stored as its unique representative
// without any Dx0 factor.
class BasicClass {
 public:
  const MultiVec& rep() const { return rep_; }
  int degree() const { return rep_.degree(); }
  friend bool operator==(const BasicClass&, const BasicClass&) = default;

 private:
  friend BasicClass basic_normal_form(const ContactSpace&, const MultiVec&);
  explicit BasicClass(MultiVec rep) : rep_(std::move(rep)) {}
  MultiVec rep_;
};

// Drops every term with a Dx0 factor. Throws std::invalid_argument when w is
// not invariant.
BasicClass basic_normal_form(const ContactSpace& m, const MultiVec& w);

// Induced coboundary [mu, .] on basic classes.
BasicClass delta_mu(const ContactSpace& m, const BasicClass& c);

// Class of w -> (^omega~)(w), landing in basic forms.
Form iso_to_basic_forms(const ContactSpace& m, const BasicClass& c);

// Inverse of iso_to_basic_forms: (-1)^k basic_normal_form(sharp(mu, theta))
// for a k-form theta. Throws std::invalid_argument when theta is not basic.
BasicClass iso_from_basic_forms(const ContactSpace& m, const Form& theta);

// i_eta theta = 0 and L_eta theta = 0.
bool is_basic_form(const ContactSpace& m, const Form& theta);

// For an infinitesimal contact automorphism X returns
//   (L_X(alpha ^ omega^n),  X(f) * V - d(i_X(f * V))),  V = alpha ^ omega^n,
// both of which vanish. Throws std::invalid_argument if X is not an
// automorphism.
std::pair<Form, Form> volume_identities(const ContactSpace& m, const Poly& f,
                                        const MultiVec& x);

}  // namespace lieco
