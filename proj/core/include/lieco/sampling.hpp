#pragma once

#include <cstdint>
#include <random>

#include "lieco/contact.hpp"
#include "lieco/liealg.hpp"

namespace lieco {

// Seeded generators for property checks. Coefficients are uniform in
// {-3..3}, monomial degrees uniform in 0..max_degree.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  Rational coefficient();
  Rational nonzero_coefficient();

  Poly poly(int n, int max_degree, int max_terms = 4);
  // No x0 dependence.
  Poly basic_poly(int n, int max_degree, int max_terms = 4);
  // Guaranteed to depend on x0 (max_degree >= 1).
  Poly nonbasic_poly(int n, int max_degree, int max_terms = 4);

  Form form(int n, int degree, int max_degree, int max_terms = 3);
  MultiVec multivec(int n, int degree, int max_degree, int max_terms = 3);
  // Basic coefficients and no Dx0 factor.
  MultiVec basic_multivec(int n, int degree, int max_degree, int max_terms = 3);
  // Basic coefficients, Dx0 factors allowed.
  MultiVec invariant_multivec(int n, int degree, int max_degree,
                              int max_terms = 3);

  Vec vec(std::size_t dim);
  Chain chain(std::size_t dim, int degree);
  Cochain cochain(std::size_t dim, int degree, std::size_t rank);

  // Four-dimensional solvable algebra: e1 acting by a random derivation on
  // either the abelian ideal span{e2,e3,e4} or a Heisenberg ideal
  // [e2,e3] = e4.
  LieAlgebra solvable4();

 private:
  Exponent monomial(int n, int max_degree, bool allow_x0);
  template <class G>
  G graded(int n, int degree, int max_degree, int max_terms, bool basic,
           bool skip_zero_index);

  std::mt19937_64 rng_;
};

}  // namespace lieco
