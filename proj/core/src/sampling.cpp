#include "lieco/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace lieco {

int Sampler::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::coefficient() { return Rational(uniform(-3, 3)); }

Rational Sampler::nonzero_coefficient() {
  int c = 0;
  while (c == 0) c = uniform(-3, 3);
  return Rational(c);
}

Exponent Sampler::monomial(int n, int max_degree, bool allow_x0) {
  const int vars = 2 * n + 1;
  Exponent e(static_cast<std::size_t>(vars), 0);
  const int deg = uniform(0, max_degree);
  for (int k = 0; k < deg; ++k) e[uniform(allow_x0 ? 0 : 1, vars - 1)] += 1;
  return e;
}

Poly Sampler::poly(int n, int max_degree, int max_terms) {
  Poly p(n);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    p += Poly::monomial(n, monomial(n, max_degree, true), coefficient());
  }
  return p;
}

Poly Sampler::basic_poly(int n, int max_degree, int max_terms) {
  Poly p(n);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    p += Poly::monomial(n, monomial(n, max_degree, false), coefficient());
  }
  return p;
}

Poly Sampler::nonbasic_poly(int n, int max_degree, int max_terms) {
  Poly p = poly(n, max_degree, max_terms);
  if (p.is_basic() && max_degree >= 1) {
    Exponent e = monomial(n, max_degree - 1, true);
    e[0] += 1;
    p += Poly::monomial(n, e, nonzero_coefficient());
  }
  return p;
}

template <class G>
G Sampler::graded(int n, int degree, int max_degree, int max_terms, bool basic,
                  bool skip_zero_index) {
  const int vars = 2 * n + 1;
  const int lo = skip_zero_index ? 1 : 0;
  G g(n, degree);
  if (degree > vars - lo) return g;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> pool(static_cast<std::size_t>(vars - lo));
    std::iota(pool.begin(), pool.end(), lo);
    std::shuffle(pool.begin(), pool.end(), rng_);
    IndexTuple idx(pool.begin(), pool.begin() + degree);
    std::sort(idx.begin(), idx.end());
    g.add(idx, basic ? basic_poly(n, max_degree, 2) : poly(n, max_degree, 2));
  }
  return g;
}

Form Sampler::form(int n, int degree, int max_degree, int max_terms) {
  return graded<Form>(n, degree, max_degree, max_terms, false, false);
}

MultiVec Sampler::multivec(int n, int degree, int max_degree, int max_terms) {
  return graded<MultiVec>(n, degree, max_degree, max_terms, false, false);
}

MultiVec Sampler::basic_multivec(int n, int degree, int max_degree,
                                 int max_terms) {
  return graded<MultiVec>(n, degree, max_degree, max_terms, true, true);
}

MultiVec Sampler::invariant_multivec(int n, int degree, int max_degree,
                                     int max_terms) {
  return graded<MultiVec>(n, degree, max_degree, max_terms, true, false);
}

Vec Sampler::vec(std::size_t dim) {
  Vec v(dim);
  for (auto& x : v) x = coefficient();
  return v;
}

Chain Sampler::chain(std::size_t dim, int degree) {
  Chain c(degree);
  for (const auto& t : combinations(dim, degree)) c.add(t, coefficient());
  return c;
}

Cochain Sampler::cochain(std::size_t dim, int degree, std::size_t rank) {
  Cochain c(degree, rank);
  for (const auto& t : combinations(dim, degree)) c.add(t, vec(rank));
  return c;
}

LieAlgebra Sampler::solvable4() {
  // m[k][j]: coefficient of e_{k+1} in D(e_{j+1}), ideal indices 1..3.
  Vec m[3] = {Vec(3), Vec(3), Vec(3)};
  const bool heis = uniform(0, 1) == 1;
  if (heis) {
    // Derivations of [e2,e3] = e4: D(e4) = (trace on span{e2,e3}) e4.
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 2; ++j) m[k][j] = coefficient();
    }
    m[2][2] = m[0][0] + m[1][1];
  } else {
    for (auto& row : m) row = vec(3);
  }
  std::vector<Bracket> brackets;
  for (std::size_t j = 0; j < 3; ++j) {
    Vec c(4);
    for (std::size_t k = 0; k < 3; ++k) c[k + 1] = m[k][j];
    if (!is_zero(c)) brackets.push_back({0, j + 1, c});
  }
  if (heis) brackets.push_back({1, 2, {0, 0, 0, 1}});
  return LieAlgebra({"e1", "e2", "e3", "e4"}, brackets);
}

}  // namespace lieco
