#include "helpers.hpp"

#include <algorithm>
#include <numeric>

#include "lieco/contact.hpp"
#include "lieco/sampling.hpp"

using namespace lieco;
using namespace testing;

namespace {

// det(delta_{i_a j_b}) by the permutation expansion.
int basis_pairing(const IndexTuple& i, const IndexTuple& j) {
  const std::size_t k = i.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  int total = 0;
  do {
    bool hit = true;
    for (std::size_t a = 0; a < k && hit; ++a) hit = i[a] == j[perm[a]];
    if (!hit) continue;
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    }
    total += inversions % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Poly pair_oracle(const Form& beta, const MultiVec& w) {
  Poly out(beta.half_dim());
  for (const auto& [i, p] : beta.components()) {
    for (const auto& [j, q] : w.components()) {
      out += p * q * GaussRational(basis_pairing(i, j));
    }
  }
  return out;
}

// All strictly increasing tuples of length k in 0..dim-1.
std::vector<IndexTuple> tuples(int dim, int k) {
  std::vector<IndexTuple> out;
  std::vector<bool> mask(static_cast<std::size_t>(dim), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    IndexTuple t;
    for (int a = 0; a < dim; ++a) {
      if (mask[static_cast<std::size_t>(a)]) t.push_back(a);
    }
    out.push_back(t);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// The multivector determined by pair(lambda, result) = pair(beta ^ lambda, w)
// on basis forms lambda.
MultiVec contract_oracle(const MultiVec& w, const Form& beta) {
  const int n = w.half_dim();
  const int k = w.degree() - beta.degree();
  MultiVec out(n, k);
  for (const auto& t : tuples(2 * n + 1, k)) {
    out.add(t, pair_oracle(wedge(beta, Form::basis(n, t)), w));
  }
  return out;
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(F("dx1"), F("dx2")) == Form::basis(1, IndexTuple{1, 2}));
  CHECK(wedge(F("dx1"), F("dx1")).is_zero());
  CHECK(wedge(V("Dx1^Dx2"), V("Dx0")) == MultiVec::basis(1, IndexTuple{0, 1, 2}));
  CHECK(Form::basis(1, IndexTuple{2, 1}) == -Form::basis(1, IndexTuple{1, 2}));
}

TEST_CASE("pair examples") {
  const MultiVec mu = V("Dx1^(Dx2 - x1*Dx0)");
  CHECK(pair(F("dx1^dx2"), V("Dx1^Dx2")) == c(1));
  CHECK(pair(F("dx1^dx2"), mu) == c(1));
  CHECK(pair(Form::scalar(x(1)), MultiVec::scalar(x(2))) == x(1) * x(2));
  CHECK_THROWS_AS(pair(F("dx1"), V("Dx1^Dx2")), std::invalid_argument);
  CHECK(pair(F("dx1^dx2"), mu) == pair_oracle(F("dx1^dx2"), mu));
}

TEST_CASE("contract_tilde examples") {
  CHECK(contract_tilde(V("Dx1^Dx2"), F("dx1")) == V("Dx2"));
  CHECK(contract_tilde(V("Dx1^Dx2"), F("dx1")) == contract_oracle(V("Dx1^Dx2"), F("dx1")));
  const MultiVec w = V("x1*Dx0^Dx2 + Dx1^Dx2");
  CHECK(contract_tilde(w, Form::scalar(c(1))) == w);
  CHECK_THROWS_AS(contract_tilde(V("Dx1"), F("dx1^dx2")), std::invalid_argument);
}

TEST_CASE("contract_tilde of [mu,mu] with omega") {
  // With the bracket fixed by the vector-field and Leibniz conventions,
  // [mu,mu] = 2 Dx2^Dx1^Dx0 and contracting omega gives -2 eta.
  const ContactSpace m(1);
  const MultiVec mm = schouten(m.mu(), m.mu());
  CHECK(contract_tilde(mm, m.omega()) == contract_oracle(mm, m.omega()));
  CHECK(contract_tilde(mm, m.omega()) == c(-2) * m.eta());
}

TEST_CASE("d examples") {
  CHECK(d(Form::scalar(x(0))) == F("dx0"));
  CHECK(d(F("dx0 + x1*dx2")) == F("dx1^dx2"));
  CHECK(d(F("x1*dx2 + x2*dx1")).is_zero());
  CHECK(d(F("dx0^dx1^dx2")).is_zero());
}

TEST_CASE("interior examples") {
  CHECK(interior(V("Dx0"), F("dx0 + x1*dx2")) == Form::scalar(c(1)));
  CHECK(interior(V("Dx0"), F("dx1^dx2")).is_zero());
  CHECK(interior(V("Dx1"), F("dx1^dx2")) == F("dx2"));
  CHECK(interior(V("Dx1"), Form::scalar(x(1))).is_zero());
}

TEST_CASE("lie_form examples") {
  const Form alpha = F("dx0 + x1*dx2");
  CHECK(lie_form(V("Dx1"), alpha) == F("dx2"));
  CHECK(lie_form(V("Dx0"), alpha).is_zero());
  Sampler s(3);
  for (int k = 0; k < 50; ++k) {
    const Poly f = s.poly(1, 2);
    const MultiVec X = s.multivec(1, 1, 2);
    const Form t = s.form(1, 1 + k % 2, 2);
    CHECK(lie_form(f * X, t) == f * lie_form(X, t) + wedge(d(Form::scalar(f)), interior(X, t)));
  }
}

TEST_CASE("schouten examples") {
  CHECK(schouten(V("Dx1"), V("x1*Dx2")) == V("Dx2"));
  const MultiVec mu = V("Dx1^Dx2 - x1*Dx1^Dx0");
  CHECK(schouten(V("Dx0"), mu).is_zero());
  // Independent value of [mu,mu] for n = 1 (hand computation in odd
  // variables, cross-checked symbolically): 2 Dx2^Dx1^Dx0.
  CHECK(schouten(mu, mu) == c(2) * V("Dx2^Dx1^Dx0"));
}

TEST_CASE("[mu,mu] from the Jacobiator of coordinate functions") {
  // {f,g} computed from the explicit coordinate formula; the components of
  // [mu,mu] are -2 times the cyclic sums on coordinate triples.
  for (int n = 1; n <= 2; ++n) {
    const ContactSpace m(n);
    auto br = [&](const Poly& f, const Poly& g) {
      Poly out(n);
      for (int i = 1; i <= n; ++i) {
        const int a = 2 * i - 1, b = 2 * i;
        out += f.partial(a) * g.partial(b) - f.partial(b) * g.partial(a);
        out += x(a, n) * (f.partial(0) * g.partial(a) - f.partial(a) * g.partial(0));
      }
      return out;
    };
    const MultiVec mm = schouten(m.mu(), m.mu());
    for (const auto& t : tuples(2 * n + 1, 3)) {
      const Poly a = x(t[0], n), b = x(t[1], n), cc = x(t[2], n);
      const Poly jac = br(br(a, b), cc) + br(br(b, cc), a) + br(br(cc, a), b);
      CHECK(mm.coefficient(t) == c(-2, 1, n) * jac);
    }
  }
}

TEST_CASE("flat examples") {
  const Form omega = F("dx1^dx2");
  CHECK(flat(omega, V("Dx1")) == F("dx2"));
  CHECK(flat(omega, V("Dx2")) == -F("dx1"));
  CHECK(flat(omega, V("Dx0")).is_zero());
  CHECK(flat(omega, V("Dx1^Dx2 - x1*Dx1^Dx0")) == omega);
  CHECK(flat(omega, MultiVec::scalar(c(1))) == Form::scalar(c(1)));
}

TEST_CASE("sharp examples") {
  const MultiVec mu = V("Dx1^Dx2 - x1*Dx1^Dx0");
  // Oracle: coefficient of Dx_j in sharp(mu, gamma) is (gamma ^ dx_j)(mu).
  auto oracle = [&](const Form& gamma) {
    MultiVec out(1, 1);
    for (int j = 0; j < 3; ++j) out.add({j}, pair(wedge(gamma, Form::basis(1, j)), mu));
    return out;
  };
  CHECK(sharp(mu, F("dx2")) == V("-Dx1"));
  CHECK(sharp(mu, F("dx1")) == V("Dx2 - x1*Dx0"));
  CHECK(sharp(mu, F("dx2")) == oracle(F("dx2")));
  CHECK(sharp(mu, F("dx0 + x2*dx1")) == oracle(F("dx0 + x2*dx1")));
  CHECK(sharp(mu, Form::scalar(c(1))) == MultiVec::scalar(c(1)));
}

TEST_CASE("property: exterior calculus identities") {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(200 + n);
    const ContactSpace m(n);
    for (int k = 0; k < 100; ++k) {
      const Form a = s.form(n, k % 3, 3), b = s.form(n, (k / 3) % 3, 3);
      const MultiVec X = s.multivec(n, 1, 2), Y = s.multivec(n, 1, 2);
      CHECK(d(d(a)).is_zero());
      const int sa = a.degree() % 2 == 0 ? 1 : -1;
      CHECK(interior(X, wedge(a, b)) ==
            wedge(interior(X, a), b) + c(sa, 1, n) * wedge(a, interior(X, b)));
      CHECK(lie_form(X, interior(Y, b)) - interior(Y, lie_form(X, b)) ==
            interior(schouten(X, Y), b));
      CHECK(lie_form(X, lie_form(Y, b)) - lie_form(Y, lie_form(X, b)) ==
            lie_form(schouten(X, Y), b));
      // Pairing agrees with the permutation-expansion oracle.
      const MultiVec w = s.multivec(n, a.degree(), 2);
      CHECK(pair(a, w) == pair_oracle(a, w));
      // Contraction satisfies its defining relation.
      const MultiVec big = s.multivec(n, 3, 2);
      const Form beta = s.form(n, k % 4, 2);
      CHECK(contract_tilde(big, beta) == contract_oracle(big, beta));
      // flat and sharp are algebra maps.
      const MultiVec u = s.multivec(n, k % 3, 2), v = s.multivec(n, (k / 3) % 3, 2);
      CHECK(flat(m.omega(), wedge(u, v)) == wedge(flat(m.omega(), u), flat(m.omega(), v)));
      CHECK(sharp(m.mu(), wedge(a, b)) == wedge(sharp(m.mu(), a), sharp(m.mu(), b)));
    }
  }
}

TEST_CASE("property: Schouten bracket identities") {
  Sampler s(31);
  const int n = 1;
  auto sg = [](int e) { return c(e % 2 == 0 ? 1 : -1); };
  for (int k = 0; k < 100; ++k) {
    const MultiVec u = s.multivec(n, k % 3, 2), v = s.multivec(n, (k / 3) % 3, 2),
                   w = s.multivec(n, 1 + (k / 9) % 2, 2, 2);
    const int a = u.degree(), b = v.degree(), cdeg = w.degree();
    CHECK(schouten(u, v) == -sg((a - 1) * (b - 1)) * schouten(v, u));
    CHECK(schouten(u, wedge(v, w)) ==
          wedge(schouten(u, v), w) + sg((a + 1) * b) * wedge(v, schouten(u, w)));
    const MultiVec jac = sg((a - 1) * (cdeg - 1)) * schouten(u, schouten(v, w)) +
                         sg((b - 1) * (a - 1)) * schouten(v, schouten(w, u)) +
                         sg((cdeg - 1) * (b - 1)) * schouten(w, schouten(u, v));
    CHECK(jac.is_zero());
    const MultiVec X = s.multivec(n, 1, 2);
    const Poly f = s.poly(n, 3);
    CHECK(schouten(X, MultiVec::scalar(f)) == MultiVec::scalar(apply_vector(X, f)));
  }
}

TEST_CASE("property: Koszul expansion of d is tensorial") {
  Sampler s(41);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 2;
    const Form w = s.form(n, 1, 3);
    const MultiVec X = s.multivec(n, 1, 2), Y = s.multivec(n, 1, 2);
    const Poly f = s.poly(n, 2);
    auto koszul = [&](const MultiVec& A, const MultiVec& B) {
      return apply_vector(A, pair(w, B)) - apply_vector(B, pair(w, A)) - pair(w, schouten(A, B));
    };
    CHECK(koszul(f * X, Y) - f * koszul(X, Y) == Poly(n));
    const MultiVec xy[2] = {X, Y};
    CHECK(koszul(X, Y) == evaluate(d(w), xy));
  }
}

TEST_CASE("kind and degree errors") {
  CHECK_THROWS_AS(Form(1, 1) + F("dx1^dx2") + F("dx1"), std::invalid_argument);
  CHECK_THROWS_AS(Form::basis(1, 3), std::out_of_range);
  CHECK_THROWS_AS(interior(V("Dx1^Dx2"), F("dx1")), std::invalid_argument);
}
