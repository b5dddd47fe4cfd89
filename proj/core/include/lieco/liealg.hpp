#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieco/exterior.hpp"
#include "lieco/linalg.hpp"

namespace lieco {

// [e_i, e_j] = sum_k coeffs[k] e_k, stored for i < j.
struct Bracket {
  std::size_t i;
  std::size_t j;
  Vec coeffs;
};

// Raised when the Jacobi identity fails on a basis triple.
class JacobiError : public std::invalid_argument {
 public:
  JacobiError(std::size_t i, std::size_t j, std::size_t k,
              const std::string& message)
      : std::invalid_argument(message), triple_{i, j, k} {}
  std::array<std::size_t, 3> triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

// Finite-dimensional Lie algebra over Q given by structure constants. The
// Jacobi identity is checked at construction.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> names,
             const std::vector<Bracket>& brackets);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  // [e_i, e_j] for any i, j.
  const Vec& structure(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vec bracket(const Vec& x, const Vec& y) const;
  std::vector<Bracket> nonzero_brackets() const;

 private:
  std::vector<std::string> names_;
  std::vector<Vec> table_;
};

// Re-checks the Jacobi identity on every basis triple; throws JacobiError
// naming the first violating triple.
void validate(const LieAlgebra& lie);

namespace algebras {
// [e1,e2] = e3.
LieAlgebra heisenberg3();
// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
LieAlgebra abelian(std::size_t dim);
// [e1,e2] = e2.
LieAlgebra affine2();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
}  // namespace algebras

// Ideal V of L spanned by linearly independent vectors (L coordinates).
class Ideal {
 public:
  // Throws std::invalid_argument if the vectors are dependent or [L, V] is
  // not contained in V (the message names the violating pair).
  Ideal(LieAlgebra parent, std::vector<Vec> basis);

  const LieAlgebra& parent() const { return parent_; }
  const std::vector<Vec>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  // Coordinates of x in the ideal basis, if x lies in V.
  std::optional<Vec> coordinates(const Vec& x) const;
  Vec embed(const Vec& ideal_coords) const;

  // V with its own structure constants in the ideal basis.
  LieAlgebra as_algebra() const;

  // Standard basis vectors e_j (j ascending) spanning a complement K of V:
  // the non-pivot columns of the echelon form of the basis.
  const std::vector<std::size_t>& complement() const { return complement_; }

  // x = v + k with v in V (ideal coordinates) and k in K (complement
  // coordinates).
  std::pair<Vec, Vec> split(const Vec& x) const;

 private:
  LieAlgebra parent_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> complement_;
};

// Finite-dimensional representation rho: L -> gl(rank) over Q.
class LieModule {
 public:
  // Throws std::invalid_argument unless rho([e_i,e_j]) = [rho(e_i),rho(e_j)].
  LieModule(LieAlgebra algebra, std::size_t rank, std::vector<Matrix> rho);

  static LieModule trivial(const LieAlgebra& lie, std::size_t rank = 1);
  static LieModule adjoint(const LieAlgebra& lie);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t rank() const { return rank_; }
  const Matrix& action(std::size_t i) const { return rho_[i]; }
  Vec act(const Vec& x, const Vec& s) const;

 private:
  LieAlgebra algebra_;
  std::size_t rank_;
  std::vector<Matrix> rho_;
};

// All increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> combinations(std::size_t n, int k);

// Alternating module-valued k-cochain, stored on increasing basis tuples.
class Cochain {
 public:
  Cochain(int degree, std::size_t rank) : degree_(degree), rank_(rank) {}

  int degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  const std::map<IndexTuple, Vec>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  // Adds to the value on an increasing tuple.
  void add(const IndexTuple& idx, const Vec& value);
  // Value on an arbitrary tuple of basis indices (alternating extension).
  Vec value(const IndexTuple& idx) const;
  // Multilinear evaluation on algebra elements.
  Vec evaluate(std::span<const Vec> args) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);

 private:
  int degree_;
  std::size_t rank_;
  std::map<IndexTuple, Vec> comps_;
};

// Chevalley-Eilenberg differential (Koszul formula) with coefficients in S.
Cochain ce_d(const LieModule& s, const Cochain& omega);

// Insertion of an algebra element into the first slot.
Cochain interior(const Vec& v, const Cochain& omega);

// Element of the k-th exterior power of a Lie algebra, over Q.
class Chain {
 public:
  explicit Chain(int degree) : degree_(degree) {}
  // The basis element e_{i1} ^ ... ^ e_{ik} (any order; sign applied).
  static Chain basis(IndexTuple idx);
  static Chain vector(const Vec& v);
  static Chain scalar(const Rational& c);

  int degree() const { return degree_; }
  const std::map<IndexTuple, Rational>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  void add(const IndexTuple& idx, const Rational& c);

  friend bool operator==(const Chain& a, const Chain& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend Chain operator+(const Chain& a, const Chain& b);
  friend Chain operator-(const Chain& a, const Chain& b);
  friend Chain operator*(const Rational& c, const Chain& a);

 private:
  int degree_;
  std::map<IndexTuple, Rational> comps_;
};

Chain wedge(const Chain& a, const Chain& b);

// delta(x1^...^xm) = sum_{i<j} (-1)^{i+j} [xi,xj] ^ ...^ (xi, xj omitted);
// zero in degrees 0 and 1.
Chain boundary(const LieAlgebra& g, const Chain& u);

// [u, v] := delta(u)^v + (-1)^m u^delta(v) - delta(u^v), m = deg u.
Chain schouten_chain(const LieAlgebra& g, const Chain& u, const Chain& v);

std::string to_string(const LieAlgebra& g, const Chain& c);

// Chain of the ideal (ideal basis) pushed into the exterior algebra of L, and
// the inverse where defined.
Chain embed_chain(const Ideal& v, const Chain& c);
std::optional<Chain> pullback_chain(const Ideal& v, const Chain& c);

// Matrix of delta: ^k -> ^(k-1) in the lexicographic tuple bases.
Matrix boundary_matrix(const LieAlgebra& g, int k);
// Matrix of ce_d: C^k -> C^(k+1); column index = tuple_index * rank + slot.
Matrix ce_matrix(const LieModule& s, int k);

struct HomologyResult {
  int degree = 0;
  std::size_t generators = 0;   // dim of the algebra
  std::size_t ambient_dim = 0;  // dim of ^k
  std::size_t dimension = 0;
  std::vector<Chain> representatives;
  std::vector<Vec> boundary_basis;
  std::vector<Vec> representative_vectors;

  // Coordinates of the class of a cycle in the representative basis.
  // Throws std::invalid_argument if the chain is not a cycle.
  Vec class_coordinates(const Chain& cycle) const;
  bool is_boundary(const Chain& c) const;
};

HomologyResult homology(const LieAlgebra& g, int k);

struct CohomologyResult {
  int degree = 0;
  std::size_t generators = 0;  // dim of the algebra
  std::size_t dimension = 0;
  std::vector<Cochain> basis;
  std::vector<Vec> coboundary_basis;
  std::vector<Vec> basis_vectors;
  std::size_t rank = 0;  // module rank

  // Throws std::invalid_argument if the cochain is not a cocycle.
  Vec class_coordinates(const Cochain& cocycle) const;
};

CohomologyResult cohomology(const LieModule& s, int k);

// dim H^k computed only from fraction-free ranks (independent of rref).
std::size_t cohomology_dimension_bareiss(const LieModule& s, int k);

struct H1Module {
  LieAlgebra quotient;       // L / V on the complement basis
  LieModule module;          // induced L/V-action on H_V = H_1(V)
  LieModule parent_module;   // L-action on H_V
  HomologyResult h1;         // H_1(V) with V in its ideal basis

  // Class in H_V of an element of V given in ideal coordinates.
  Vec hv_coordinates(const Vec& ideal_coords) const;
};

H1Module h1_module(const Ideal& v);

// Linear map alpha: L -> V with alpha|V = id; row i is alpha(e_i) in ideal
// coordinates.
using Projection = Matrix;

Projection default_projection(const Ideal& v);
Projection random_projection(const Ideal& v, std::mt19937_64& rng);
// Throws std::invalid_argument unless p is a projection onto V.
void check_projection(const Ideal& v, const Projection& p);
// Reads rows alpha(e_i) in L coordinates.
Projection projection_from_parent_rows(const Ideal& v,
                                       const std::vector<Vec>& rows);

struct CharClass {
  std::size_t h2_dimension = 0;
  Vec coordinates;
  Cochain representative{2, 0};  // 2-cocycle on L/V with values in H_V
  Cochain d_alpha{2, 0};         // d(alpha~) on L
  bool is_zero() const { return lieco::is_zero(coordinates); }
};

CharClass char_class(const Ideal& v);
CharClass char_class(const Ideal& v, const Projection& p);

// R(X, Y) = -alpha([X - alpha X, Y - alpha Y]), V-valued (ideal coordinates).
Cochain curvature(const Ideal& v, const Projection& p);
bool kernel_is_subalgebra(const Ideal& v, const Projection& p);

}  // namespace lieco
