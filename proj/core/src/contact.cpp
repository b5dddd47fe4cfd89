#include "lieco/contact.hpp"

#include <stdexcept>

namespace lieco {

namespace {

void check_space(const ContactSpace& m, int n, const char* what) {
  if (m.n() != n) {
    throw std::invalid_argument(std::string(what) +
                                ": operand lives in dimension n=" +
                                std::to_string(n) + ", space has n=" +
                                std::to_string(m.n()));
  }
}

Form df(const Poly& f) { return d(Form::scalar(f)); }

}  // namespace

ContactSpace::ContactSpace(int n)
    : n_(n), alpha_(n, 1), omega_(n, 2), eta_(n, 1), mu_(n, 2), volume_(n, 0) {
  if (n < 1) {
    throw std::invalid_argument("contact space needs n >= 1, got " +
                                std::to_string(n));
  }
  alpha_ = Form::basis(n, 0);
  for (int i = 1; i <= n; ++i) {
    alpha_ += Form::basis(n, 2 * i) * x(2 * i - 1);
    mu_ += wedge(MultiVec::basis(n, 2 * i - 1),
                 MultiVec::basis(n, 2 * i) -
                     MultiVec::basis(n, 0) * x(2 * i - 1));
  }
  omega_ = d(alpha_);
  eta_ = MultiVec::basis(n, 0);
  volume_ = wedge(alpha_, wedge_power(omega_, static_cast<unsigned>(n)));

  const Poly one(n, GaussRational(1));
  if (interior(eta_, alpha_).as_scalar() != one) {
    throw std::logic_error("contact: i_eta alpha != 1");
  }
  if (!interior(eta_, omega_).is_zero()) {
    throw std::logic_error("contact: i_eta omega != 0");
  }
  if (flat(omega_, mu_) != omega_) {
    throw std::logic_error("contact: flat(omega, mu) != omega");
  }
  if (!contract_tilde(mu_, alpha_).is_zero()) {
    throw std::logic_error("contact: mu is not in ^2 ker alpha");
  }
  if (volume_.is_zero()) {
    throw std::logic_error("contact: alpha ^ omega^n vanishes");
  }
}

ContactSpace make_contact(int n) { return ContactSpace(n); }

Poly poisson(const ContactSpace& m, const Poly& f, const Poly& g) {
  check_space(m, f.half_dim(), "poisson");
  return pair(wedge(df(f), df(g)), m.mu());
}

Poly jacobiator(const ContactSpace& m, const Poly& f, const Poly& g,
                const Poly& h) {
  return poisson(m, poisson(m, f, g), h) + poisson(m, poisson(m, g, h), f) +
         poisson(m, poisson(m, h, f), g);
}

Poly jacobiator_from_bivector(const ContactSpace& m, const Poly& f,
                              const Poly& g, const Poly& h) {
  check_space(m, f.half_dim(), "jacobiator_from_bivector");
  const MultiVec mumu = schouten(m.mu(), m.mu());
  const Form triple = wedge(wedge(df(f), df(g)), df(h));
  return pair(triple, mumu) * GaussRational(Rational(-1, 2));
}

MultiVec ham(const ContactSpace& m, const Poly& f) {
  check_space(m, f.half_dim(), "ham");
  return sharp(m.mu(), df(f));
}

MultiVec hat(const ContactSpace& m, const Poly& f) {
  return m.eta() * f + ham(m, f);
}

ContactClass contact_class(const ContactSpace& m, const MultiVec& x) {
  check_space(m, x.half_dim(), "contact_class");
  const Form lie = lie_form(x, m.alpha());
  if (lie.is_zero()) {
    return {ContactClass::Kind::automorphism, Poly(m.n())};
  }
  // L_X alpha = phi * alpha forces phi = i_eta(L_X alpha) since i_eta alpha=1.
  Poly phi = interior(m.eta(), lie).as_scalar();
  if ((lie - m.alpha() * phi).is_zero()) {
    return {ContactClass::Kind::transformation, std::move(phi)};
  }
  return {ContactClass::Kind::none, std::nullopt};
}

bool is_invariant(const ContactSpace& m, const MultiVec& w) {
  check_space(m, w.half_dim(), "is_invariant");
  return schouten(m.eta(), w).is_zero();
}

BasicClass basic_normal_form(const ContactSpace& m, const MultiVec& w) {
  if (!is_invariant(m, w)) {
    throw std::invalid_argument("basic_normal_form: " + to_string(w) +
                                " is not invariant ([eta, w] != 0)");
  }
  MultiVec rep(m.n(), w.degree());
  for (const auto& [idx, p] : w.components()) {
    if (!idx.empty() && idx.front() == 0) continue;
    rep.add(idx, p);
  }
  return BasicClass(std::move(rep));
}

BasicClass delta_mu(const ContactSpace& m, const BasicClass& c) {
  return basic_normal_form(m, schouten(m.mu(), c.rep()));
}

Form iso_to_basic_forms(const ContactSpace& m, const BasicClass& c) {
  return flat(m.omega(), c.rep());
}

bool is_basic_form(const ContactSpace& m, const Form& theta) {
  return interior(m.eta(), theta).is_zero() &&
         lie_form(m.eta(), theta).is_zero();
}

BasicClass iso_from_basic_forms(const ContactSpace& m, const Form& theta) {
  if (!is_basic_form(m, theta)) {
    throw std::invalid_argument("iso_from_basic_forms: " + to_string(theta) +
                                " is not a basic form");
  }
  // sharp(mu, flat(omega, X)) = -X on vectors, hence the sign per degree.
  MultiVec w = sharp(m.mu(), theta);
  if (theta.degree() % 2 == 1) w = -w;
  return basic_normal_form(m, w);
}

std::pair<Form, Form> volume_identities(const ContactSpace& m, const Poly& f,
                                        const MultiVec& x) {
  if (contact_class(m, x).kind != ContactClass::Kind::automorphism) {
    throw std::invalid_argument(
        "volume_identities: " + to_string(x) +
        " is not an infinitesimal contact automorphism");
  }
  const Form& vol = m.volume();
  Form invariance = lie_form(x, vol);
  Form exactness = vol * apply_vector(x, f) - d(interior(x, vol * f));
  return {std::move(invariance), std::move(exactness)};
}

}  // namespace lieco
