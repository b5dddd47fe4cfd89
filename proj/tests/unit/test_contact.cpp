#include "helpers.hpp"

#include "lieco/contact.hpp"
#include "lieco/sampling.hpp"

using namespace lieco;
using namespace testing;

namespace {

// {f,g} from the coordinate formula.
Poly poisson_oracle(int n, const Poly& f, const Poly& g) {
  Poly out(n);
  for (int i = 1; i <= n; ++i) {
    const int a = 2 * i - 1, b = 2 * i;
    out += f.partial(a) * g.partial(b) - f.partial(b) * g.partial(a);
    out += x(a, n) * (f.partial(0) * g.partial(a) - f.partial(a) * g.partial(0));
  }
  return out;
}

// ham(f) from the coordinate formula.
MultiVec ham_oracle(int n, const Poly& f) {
  MultiVec out(n, 1);
  for (int i = 1; i <= n; ++i) {
    const int a = 2 * i - 1, b = 2 * i;
    out.add({a}, x(a, n) * f.partial(0) - f.partial(b));
    out.add({b}, f.partial(a));
    out.add({0}, -(x(a, n) * f.partial(a)));
  }
  return out;
}

}  // namespace

TEST_CASE("make_contact structure for n = 1") {
  const ContactSpace m = make_contact(1);
  CHECK(m.alpha() == F("dx0 + x1*dx2"));
  CHECK(m.omega() == F("dx1^dx2"));
  CHECK(m.eta() == V("Dx0"));
  CHECK(m.mu() == V("Dx1^Dx2 - x1*Dx1^Dx0"));
  CHECK(m.volume() == F("dx0^dx1^dx2"));
  CHECK_THROWS_AS(make_contact(0), std::invalid_argument);
}

TEST_CASE("structural identities for n = 1, 2, 3") {
  for (int n = 1; n <= 3; ++n) {
    const ContactSpace m(n);
    const MultiVec eta[1] = {m.eta()};
    CHECK(evaluate(m.alpha(), eta) == c(1, 1, n));
    CHECK(interior(m.eta(), m.omega()).is_zero());
    CHECK(contract_tilde(m.mu(), m.alpha()).is_zero());
    CHECK(schouten(m.eta(), m.mu()).is_zero());
    CHECK(pair(m.volume(), wedge(m.eta(), [&] {
            MultiVec top = MultiVec::scalar(c(1, 1, n));
            for (int i = 1; i <= n; ++i) {
              top = wedge(top, wedge(MultiVec::basis(n, 2 * i - 1), MultiVec::basis(n, 2 * i)));
            }
            return top;
          }())) != Poly(n));
  }
}

TEST_CASE("poisson examples") {
  const ContactSpace m(1);
  CHECK(poisson(m, x(1), x(2)) == c(1));
  CHECK(poisson(m, x(2), x(1)) == c(-1));
  CHECK(poisson(m, x(0), x(1)) == x(1));
  CHECK(poisson(m, x(1), x(2)) == poisson_oracle(1, x(1), x(2)));
  CHECK(poisson(m, x(0), x(1)) == poisson_oracle(1, x(0), x(1)));
}

TEST_CASE("jacobiator of coordinate functions") {
  const ContactSpace m(1);
  // {x0,x1} = x1, {x1,x2} = 1, {x2,x0} = 0, so the cyclic sum is
  // {x1,x2} + {1,x0} + {0,x1} = 1.
  CHECK(jacobiator(m, x(0), x(1), x(2)) == c(1));
  CHECK(jacobiator_from_bivector(m, x(0), x(1), x(2)) == c(1));
  CHECK(jacobiator(m, x(1), x(2), x(1) * x(2)).is_zero());
}

TEST_CASE("ham and hat examples") {
  const ContactSpace m(1);
  CHECK(ham(m, x(1)) == V("-x1*Dx0 + Dx2"));
  CHECK(ham(m, x(2)) == V("-Dx1"));
  CHECK(ham(m, x(0)) == V("x1*Dx1"));
  CHECK(hat(m, x(0)) == V("x0*Dx0 + x1*Dx1"));
  CHECK(hat(m, x(1)) == V("Dx2"));
  CHECK(hat(m, c(1)) == m.eta());
  for (const char* f : {"x0", "x1", "x2", "x0*x1 + x2**2"}) {
    CHECK(ham(m, P(f)) == ham_oracle(1, P(f)));
  }
}

TEST_CASE("contact_class examples") {
  const ContactSpace m(1);
  const ContactClass a = contact_class(m, V("Dx0"));
  CHECK(a.kind == ContactClass::Kind::automorphism);
  REQUIRE(a.multiplier);
  CHECK(a.multiplier->is_zero());
  const ContactClass t = contact_class(m, hat(m, x(0)));
  CHECK(t.kind == ContactClass::Kind::transformation);
  REQUIRE(t.multiplier);
  CHECK(*t.multiplier == c(1));
  CHECK(lie_form(hat(m, x(0)), m.alpha()) == *t.multiplier * m.alpha());
  CHECK(contact_class(m, V("Dx1")).kind == ContactClass::Kind::none);
  CHECK_FALSE(contact_class(m, V("Dx1")).multiplier);
}

TEST_CASE("invariance and basic normal form") {
  const ContactSpace m(1);
  CHECK(is_invariant(m, m.mu()));
  CHECK(is_invariant(m, V("x1*Dx0^Dx2")));
  CHECK_FALSE(is_invariant(m, V("x0*Dx1")));
  CHECK(basic_normal_form(m, m.mu()).rep() == V("Dx1^Dx2"));
  CHECK(basic_normal_form(m, V("x1*Dx0^Dx2")).rep().is_zero());
  CHECK(basic_normal_form(m, V("x1*Dx1 + Dx0")).rep() == V("x1*Dx1"));
  CHECK_THROWS_AS(basic_normal_form(m, V("x0*Dx1")), std::invalid_argument);
}

TEST_CASE("delta_mu and iso examples") {
  const ContactSpace m(1);
  CHECK(delta_mu(m, basic_normal_form(m, V("x1*Dx1"))).rep() == V("Dx1^Dx2"));
  CHECK(delta_mu(m, basic_normal_form(m, V("x2*Dx1"))).rep().is_zero());
  CHECK(iso_to_basic_forms(m, basic_normal_form(m, m.mu())) == m.omega());
  CHECK(iso_to_basic_forms(m, basic_normal_form(m, V("Dx1"))) == F("dx2"));
  CHECK(iso_from_basic_forms(m, F("dx2")) == basic_normal_form(m, V("Dx1")));
  CHECK(is_basic_form(m, m.omega()));
  CHECK_FALSE(is_basic_form(m, m.alpha()));
  CHECK_THROWS_AS(iso_from_basic_forms(m, m.alpha()), std::invalid_argument);
}

TEST_CASE("volume identities example") {
  const ContactSpace m(1);
  const auto [lie_v, exact] = volume_identities(m, x(1) * x(2), hat(m, x(1) * x(1)));
  CHECK(lie_v.is_zero());
  CHECK(exact.is_zero());
  CHECK_THROWS_AS(volume_identities(m, x(1), hat(m, x(0))), std::invalid_argument);
}

TEST_CASE("property: brackets against coordinate oracles") {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(500 + n);
    const ContactSpace m(n);
    for (int k = 0; k < 100; ++k) {
      const Poly f = s.poly(n, 3), g = s.poly(n, 3), h = s.poly(n, 2);
      CHECK(poisson(m, f, g) == poisson_oracle(n, f, g));
      CHECK(ham(m, f) == ham_oracle(n, f));
      CHECK(hat(m, f) == f * m.eta() + ham_oracle(n, f));
      // Independent cyclic sum from the oracle bracket.
      const Poly jac = poisson_oracle(n, poisson_oracle(n, f, g), h) +
                       poisson_oracle(n, poisson_oracle(n, g, h), f) +
                       poisson_oracle(n, poisson_oracle(n, h, f), g);
      CHECK(jacobiator(m, f, g, h) == jac);
      CHECK(jacobiator_from_bivector(m, f, g, h) == jac);
    }
  }
}

TEST_CASE("property: contact algebra on basic functions") {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(600 + n);
    const ContactSpace m(n);
    for (int k = 0; k < 100; ++k) {
      const Poly f = s.basic_poly(n, 3), g = s.basic_poly(n, 3), h = s.basic_poly(n, 2);
      CHECK(poisson(m, f, g) == -poisson(m, g, f));
      CHECK(poisson(m, f, g * h) == g * poisson(m, f, h) + poisson(m, f, g) * h);
      CHECK(jacobiator(m, f, g, h).is_zero());
      CHECK(schouten(hat(m, f), hat(m, g)) == hat(m, poisson(m, f, g)));
      CHECK(contact_class(m, hat(m, f)).kind == ContactClass::Kind::automorphism);
      const Poly any = s.nonbasic_poly(n, 3);
      CHECK(lie_form(hat(m, any), m.alpha()) == any.partial(0) * m.alpha());
      CHECK(contact_class(m, hat(m, any)).kind == ContactClass::Kind::transformation);
      CHECK(flat(m.omega(), ham(m, f)) == -d(Form::scalar(f)));
    }
  }
}

TEST_CASE("property: basic complex") {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(700 + n);
    const ContactSpace m(n);
    for (int k = 0; k < 100; ++k) {
      const MultiVec w = s.invariant_multivec(n, k % (2 * n + 1), 3);
      const BasicClass cl = basic_normal_form(m, w);
      CHECK(delta_mu(m, delta_mu(m, cl)).rep().is_zero());
      const Form img = iso_to_basic_forms(m, cl);
      CHECK(is_basic_form(m, img));
      CHECK(d(img) == iso_to_basic_forms(m, delta_mu(m, cl)));
      CHECK(iso_from_basic_forms(m, img) == cl);
      const Poly f = s.basic_poly(n, 3);
      const auto [lie_v, exact] = volume_identities(m, s.basic_poly(n, 2), hat(m, f));
      CHECK(lie_v.is_zero());
      CHECK(exact.is_zero());
    }
  }
}
