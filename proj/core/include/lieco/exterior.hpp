#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieco/poly.hpp"

namespace lieco {

// Strictly increasing list of coordinate indices, e.g. {0, 2} for dx0^dx2.
using IndexTuple = std::vector<int>;

// Sorts a tuple of distinct indices, returning the sorted tuple and the sign
// of the sorting permutation; nullopt if an index repeats.
std::optional<std::pair<IndexTuple, int>> sort_with_sign(IndexTuple indices);

enum class GradedKind { form, multivector };

// Homogeneous element of the exterior algebra over Poly in the coordinates
// x0..x_{2n}: a differential form (basis dx_I) or a multivector field
// (basis Dx_I = d/dx_{i1} ^ ... ^ d/dx_{ik}). Zero components are dropped, so
// the zero element of any degree compares equal to zero of any other degree.
template <GradedKind Kind>
class Graded {
 public:
  using ComponentMap = std::map<IndexTuple, Poly>;

  Graded(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || degree < 0) {
      throw std::invalid_argument("Graded: negative dimension or degree");
    }
  }

  // Degree-0 element carrying a function.
  static Graded scalar(Poly p) {
    Graded g(p.half_dim(), 0);
    g.add(IndexTuple{}, std::move(p));
    return g;
  }

  // dx_i or Dx_i.
  static Graded basis(int n, int index) {
    return basis(n, IndexTuple{index});
  }

  // The basis element for an arbitrary tuple of distinct indices, with the
  // sign of the sorting permutation applied (zero if an index repeats).
  static Graded basis(int n, IndexTuple indices) {
    const int deg = static_cast<int>(indices.size());
    Graded g(n, deg);
    for (int i : indices) g.check_index(i);
    if (auto sorted = sort_with_sign(std::move(indices))) {
      g.add(std::move(sorted->first), Poly(n, GaussRational(sorted->second)));
    }
    return g;
  }

  int half_dim() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  int degree() const { return degree_; }
  const ComponentMap& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  // Coefficient of the basis element for a strictly increasing tuple.
  Poly coefficient(const IndexTuple& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Poly(n_) : it->second;
  }

  // Value of a degree-0 element.
  Poly as_scalar() const {
    if (degree_ != 0 && !is_zero()) {
      throw std::invalid_argument("as_scalar: element has degree " +
                                  std::to_string(degree_));
    }
    return coefficient(IndexTuple{});
  }

  // Adds p * basis(idx) for a strictly increasing tuple of the right length.
  void add(IndexTuple idx, Poly p) {
    if (p.half_dim() != n_) {
      throw std::invalid_argument("Graded: coefficient dimension mismatch");
    }
    if (static_cast<int>(idx.size()) != degree_) {
      throw std::invalid_argument("Graded: tuple length differs from degree");
    }
    if (p.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(std::move(idx), p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  Graded operator-() const {
    Graded r(*this);
    for (auto& [idx, p] : r.comps_) p = -p;
    return r;
  }

  Graded& operator+=(const Graded& o) {
    merge_degree(o);
    for (const auto& [idx, p] : o.comps_) add(idx, p);
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    merge_degree(o);
    for (const auto& [idx, p] : o.comps_) add(idx, -p);
    return *this;
  }
  Graded& operator*=(const Poly& f) {
    if (f.half_dim() != n_) {
      throw std::invalid_argument("Graded: coefficient dimension mismatch");
    }
    ComponentMap out;
    for (auto& [idx, p] : comps_) {
      Poly q = p * f;
      if (!q.is_zero()) out.emplace(idx, std::move(q));
    }
    comps_ = std::move(out);
    return *this;
  }
  Graded& operator*=(const GaussRational& c) {
    return *this *= Poly(n_, c);
  }

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(Graded a, const Poly& f) { return a *= f; }
  friend Graded operator*(const Poly& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const GaussRational& c) { return a *= c; }
  friend Graded operator*(const GaussRational& c, Graded a) { return a *= c; }

  friend bool operator==(const Graded& a, const Graded& b) {
    if (a.n_ != b.n_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }

  // Coefficient-wise d/dx_i.
  Graded partial(int i) const {
    Graded r(n_, degree_);
    for (const auto& [idx, p] : comps_) r.add(idx, p.partial(i));
    return r;
  }

  // True iff every coefficient is independent of x0.
  bool has_basic_coefficients() const {
    for (const auto& [idx, p] : comps_) {
      if (!p.is_basic()) return false;
    }
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= dim()) {
      throw std::out_of_range("basis index " + std::to_string(i) +
                              " out of range for n=" + std::to_string(n_));
    }
  }
  void merge_degree(const Graded& o) {
    if (o.n_ != n_) {
      throw std::invalid_argument("Graded: dimension mismatch");
    }
    if (o.degree_ == degree_ || o.is_zero()) return;
    if (is_zero()) {
      degree_ = o.degree_;
      return;
    }
    throw std::invalid_argument("Graded: cannot add degree " +
                                std::to_string(degree_) + " and degree " +
                                std::to_string(o.degree_));
  }

  int n_;
  int degree_;
  ComponentMap comps_;
};

using Form = Graded<GradedKind::form>;
using MultiVec = Graded<GradedKind::multivector>;

// Canonical text such as "dx0 + x1*dx2" or "Dx1^Dx2 - x1*Dx0^Dx1".
std::string to_string(const Form& f);
std::string to_string(const MultiVec& w);

// Graded-commutative exterior product. Mixing a form with a multivector does
// not type-check.
Form wedge(const Form& a, const Form& b);
MultiVec wedge(const MultiVec& a, const MultiVec& b);

// k-th exterior power (k >= 0).
Form wedge_power(const Form& a, unsigned k);

// Full contraction <dx_I, Dx_J> = det(delta_{i_a j_b}); degrees must agree.
Poly pair(const Form& beta, const MultiVec& w);

// Evaluates a k-form on k vector fields: pair(theta, X1^...^Xk).
Poly evaluate(const Form& theta, std::span<const MultiVec> vectors);

// The (m-k)-vector w~(beta) with pair(lambda, w~(beta)) = pair(beta^lambda, w)
// for every (m-k)-form lambda; requires k <= m.
MultiVec contract_tilde(const MultiVec& w, const Form& beta);

// Exterior derivative in coordinates.
Form d(const Form& theta);

// Interior product i_X by a vector field (degree-1 multivector).
Form interior(const MultiVec& x, const Form& theta);

// Lie derivative of a form: i_X d + d i_X.
Form lie_form(const MultiVec& x, const Form& theta);

// X(f) for a vector field X.
Poly apply_vector(const MultiVec& x, const Poly& f);

// Schouten-Nijenhuis bracket; restricts to the Lie bracket of vector fields
// and to [X, f] = X(f). Satisfies
//   [u, v^w] = [u,v]^w + (-1)^{(|u|+1)|v|} v^[u,w].
MultiVec schouten(const MultiVec& u, const MultiVec& v);

// Algebra map induced by w -> i_w(omega2) on vectors, w~(u)(v) = omega2(u,v).
Form flat(const Form& omega2, const MultiVec& w);

// Algebra map induced by gamma -> mu2~(gamma) on 1-forms, with
// theta(mu2~(gamma)) = (gamma ^ theta)(mu2).
MultiVec sharp(const MultiVec& mu2, const Form& theta);

}  // namespace lieco
