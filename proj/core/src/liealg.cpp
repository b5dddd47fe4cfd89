#include "lieco/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace lieco {

namespace {

std::string tuple_name(const std::vector<std::string>& names,
                       std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += names[i];
    first = false;
  }
  return s + ")";
}

std::map<IndexTuple, std::size_t> tuple_positions(std::size_t n, int k) {
  std::map<IndexTuple, std::size_t> pos;
  const auto all = combinations(n, k);
  for (std::size_t i = 0; i < all.size(); ++i) pos.emplace(all[i], i);
  return pos;
}

Vec chain_to_vec(const Chain& c, std::size_t n) {
  const auto pos = tuple_positions(n, c.degree());
  Vec v(pos.size());
  for (const auto& [idx, x] : c.components()) v[pos.at(idx)] = x;
  return v;
}

Chain vec_to_chain(const Vec& v, std::size_t n, int k) {
  const auto all = combinations(n, k);
  Chain c(k);
  for (std::size_t i = 0; i < all.size(); ++i) c.add(all[i], v[i]);
  return c;
}

Vec cochain_to_vec(const Cochain& c, std::size_t n) {
  const auto pos = tuple_positions(n, c.degree());
  Vec v(pos.size() * c.rank());
  for (const auto& [idx, val] : c.components()) {
    const std::size_t base = pos.at(idx) * c.rank();
    for (std::size_t s = 0; s < c.rank(); ++s) v[base + s] = val[s];
  }
  return v;
}

Cochain vec_to_cochain(const Vec& v, std::size_t n, int k, std::size_t rank) {
  const auto all = combinations(n, k);
  Cochain c(k, rank);
  for (std::size_t i = 0; i < all.size(); ++i) {
    c.add(all[i], Vec(v.begin() + static_cast<std::ptrdiff_t>(i * rank),
                      v.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank)));
  }
  return c;
}

// Basis of the span of the columns of m.
std::vector<Vec> column_space_basis(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return {};
  const Echelon e = rref(m.transpose());
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

Vec tail(const Vec& v, std::size_t from) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
}

Vec apply_projection(const Projection& p, const Vec& x) {
  return p.transpose().apply(x);
}

}  // namespace

// ---------------------------------------------------------------- algebras

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       const std::vector<Bracket>& brackets)
    : names_(std::move(names)) {
  const std::size_t n = dim();
  table_.assign(n * n, Vec(n));
  std::vector<bool> seen(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= b.j || b.j >= n) {
      throw std::invalid_argument("bracket indices must satisfy i < j < dim (got " +
                                  std::to_string(b.i) + ", " +
                                  std::to_string(b.j) + ")");
    }
    if (b.coeffs.size() != n) {
      throw std::invalid_argument("bracket coefficient vector must have length " +
                                  std::to_string(n));
    }
    if (seen[b.i * n + b.j]) {
      throw std::invalid_argument("duplicate bracket for " +
                                  tuple_name(names_, {b.i, b.j}));
    }
    seen[b.i * n + b.j] = true;
    table_[b.i * n + b.j] = b.coeffs;
    table_[b.j * n + b.i] = Rational(-1) * b.coeffs;
  }
  validate(*this);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw std::invalid_argument("bracket: vector length differs from dim");
  }
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational c = x[i] * y[j];
      const Vec& s = structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!s[k].is_zero()) r[k] += c * s[k];
      }
    }
  }
  return r;
}

std::vector<Bracket> LieAlgebra::nonzero_brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!is_zero(structure(i, j))) out.push_back({i, j, structure(i, j)});
    }
  }
  return out;
}

void validate(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit_vector(n, i), ej = unit_vector(n, j),
                  ek = unit_vector(n, k);
        const Vec jac = lie.bracket(lie.structure(i, j), ek) +
                        lie.bracket(lie.structure(j, k), ei) +
                        lie.bracket(lie.structure(k, i), ej);
        if (!is_zero(jac)) {
          throw JacobiError(i, j, k,
                            "Jacobi identity fails on " +
                                tuple_name(lie.names(), {i, j, k}));
        }
      }
    }
  }
}

namespace algebras {

LieAlgebra heisenberg3() {
  return LieAlgebra({"e1", "e2", "e3"}, {{0, 1, {0, 0, 1}}});
}

LieAlgebra sl2() {
  return LieAlgebra({"h", "e", "f"},
                    {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}});
}

LieAlgebra abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), {});
}

LieAlgebra affine2() { return LieAlgebra({"e1", "e2"}, {{0, 1, {0, 1}}}); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.names();
  for (const auto& s : b.names()) names.push_back(s + "'");
  std::vector<Bracket> brackets;
  for (const auto& br : a.nonzero_brackets()) {
    Vec c(n);
    std::copy(br.coeffs.begin(), br.coeffs.end(), c.begin());
    brackets.push_back({br.i, br.j, c});
  }
  for (const auto& br : b.nonzero_brackets()) {
    Vec c(n);
    std::copy(br.coeffs.begin(), br.coeffs.end(),
              c.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    brackets.push_back({br.i + a.dim(), br.j + a.dim(), c});
  }
  return LieAlgebra(std::move(names), brackets);
}

}  // namespace algebras

// ------------------------------------------------------------------ ideals

Ideal::Ideal(LieAlgebra parent, std::vector<Vec> basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  const std::size_t n = parent_.dim();
  for (const auto& v : basis_) {
    if (v.size() != n) {
      throw std::invalid_argument("ideal basis vector has length " +
                                  std::to_string(v.size()) + ", expected " +
                                  std::to_string(n));
    }
  }
  const Echelon e = rref(Matrix::from_rows(basis_, n));
  if (e.rank() != basis_.size()) {
    throw std::invalid_argument("ideal basis vectors are linearly dependent");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Vec br = parent_.bracket(unit_vector(n, i), basis_[b]);
      if (!coordinates(br)) {
        throw std::invalid_argument("not an ideal: [" + parent_.names()[i] +
                                    ", v" + std::to_string(b + 1) +
                                    "] leaves the subspace");
      }
    }
  }
  std::vector<bool> pivot(n, false);
  for (auto p : e.pivots) pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivot[j]) complement_.push_back(j);
  }
}

std::optional<Vec> Ideal::coordinates(const Vec& x) const {
  return solve_in_span(basis_, x);
}

Vec Ideal::embed(const Vec& c) const {
  Vec x(parent_.dim());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (!c[b].is_zero()) x = x + c[b] * basis_[b];
  }
  return x;
}

LieAlgebra Ideal::as_algebra() const {
  std::vector<std::string> names;
  for (std::size_t b = 0; b < dim(); ++b) names.push_back("v" + std::to_string(b + 1));
  std::vector<Bracket> brackets;
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = a + 1; b < dim(); ++b) {
      const Vec c = *coordinates(parent_.bracket(basis_[a], basis_[b]));
      if (!is_zero(c)) brackets.push_back({a, b, c});
    }
  }
  return LieAlgebra(std::move(names), brackets);
}

std::pair<Vec, Vec> Ideal::split(const Vec& x) const {
  std::vector<Vec> rows = basis_;
  for (auto j : complement_) rows.push_back(unit_vector(parent_.dim(), j));
  const Vec c = *solve_in_span(rows, x);
  return {Vec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(dim())),
          tail(c, dim())};
}

// ----------------------------------------------------------------- modules

LieModule::LieModule(LieAlgebra algebra, std::size_t rank,
                     std::vector<Matrix> rho)
    : algebra_(std::move(algebra)), rank_(rank), rho_(std::move(rho)) {
  const std::size_t n = algebra_.dim();
  if (rho_.size() != n) {
    throw std::invalid_argument("module needs one matrix per basis element");
  }
  for (const auto& m : rho_) {
    if (m.rows() != rank_ || m.cols() != rank_) {
      throw std::invalid_argument("module matrix has wrong shape");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(rank_, rank_);
      const Vec& c = algebra_.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t r = 0; r < rank_; ++r) {
          for (std::size_t s = 0; s < rank_; ++s) {
            lhs.at(r, s) += c[k] * rho_[k].at(r, s);
          }
        }
      }
      const Matrix rhs = rho_[i] * rho_[j] - rho_[j] * rho_[i];
      if (!(lhs == rhs)) {
        throw std::invalid_argument(
            "not a representation: rho([" + algebra_.names()[i] + "," +
            algebra_.names()[j] + "]) != [rho(" + algebra_.names()[i] +
            "), rho(" + algebra_.names()[j] + ")]");
      }
    }
  }
}

LieModule LieModule::trivial(const LieAlgebra& lie, std::size_t rank) {
  return LieModule(lie, rank, std::vector<Matrix>(lie.dim(), Matrix(rank, rank)));
}

LieModule LieModule::adjoint(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) m.at(k, j) = lie.structure(i, j)[k];
    }
    rho.push_back(std::move(m));
  }
  return LieModule(lie, n, std::move(rho));
}

Vec LieModule::act(const Vec& x, const Vec& s) const {
  Vec r(rank_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) r = r + x[i] * rho_[i].apply(s);
  }
  return r;
}

// ---------------------------------------------------------------- cochains

std::vector<IndexTuple> combinations(std::size_t n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || static_cast<std::size_t>(k) > n) return out;
  IndexTuple cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == static_cast<int>(n) - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void Cochain::add(const IndexTuple& idx, const Vec& value) {
  if (static_cast<int>(idx.size()) != degree_ || value.size() != rank_) {
    throw std::invalid_argument("Cochain::add: shape mismatch");
  }
  if (lieco::is_zero(value)) return;
  auto [it, inserted] = comps_.try_emplace(idx, value);
  if (!inserted) {
    it->second = it->second + value;
    if (lieco::is_zero(it->second)) comps_.erase(it);
  }
}

Vec Cochain::value(const IndexTuple& idx) const {
  auto sorted = sort_with_sign(idx);
  if (!sorted) return Vec(rank_);
  auto it = comps_.find(sorted->first);
  if (it == comps_.end()) return Vec(rank_);
  return sorted->second > 0 ? it->second : Rational(-1) * it->second;
}

Vec Cochain::evaluate(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != degree_) {
    throw std::invalid_argument("Cochain::evaluate: wrong number of arguments");
  }
  Vec total(rank_);
  IndexTuple idx(args.size());
  // Expand multilinearly over the nonzero coordinates of every argument.
  auto rec = [&](auto&& self, std::size_t slot, const Rational& weight) -> void {
    if (slot == args.size()) {
      const Vec v = value(idx);
      if (!lieco::is_zero(v)) total = total + weight * v;
      return;
    }
    for (std::size_t i = 0; i < args[slot].size(); ++i) {
      if (args[slot][i].is_zero()) continue;
      idx[slot] = static_cast<int>(i);
      self(self, slot + 1, weight * args[slot][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  Cochain r = a;
  for (const auto& [idx, v] : b.comps_) r.add(idx, v);
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  Cochain r = a;
  for (const auto& [idx, v] : b.comps_) r.add(idx, Rational(-1) * v);
  return r;
}

Cochain ce_d(const LieModule& s, const Cochain& omega) {
  if (omega.rank() != s.rank()) {
    throw std::invalid_argument("ce_d: cochain rank differs from module rank");
  }
  const LieAlgebra& g = s.algebra();
  const std::size_t n = g.dim();
  const int k = omega.degree();
  Cochain r(k + 1, s.rank());
  for (const auto& t : combinations(n, k + 1)) {
    Vec acc(s.rank());
    for (int a = 0; a <= k; ++a) {
      IndexTuple rest = t;
      rest.erase(rest.begin() + a);
      const Vec val = omega.value(rest);
      if (lieco::is_zero(val)) continue;
      const Vec moved = s.action(static_cast<std::size_t>(t[a])).apply(val);
      acc = a % 2 == 0 ? acc + moved : acc - moved;
    }
    for (int a = 0; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        const Vec& br = g.structure(t[a], t[b]);
        IndexTuple rest;
        for (int c = 0; c <= k; ++c) {
          if (c != a && c != b) rest.push_back(t[c]);
        }
        IndexTuple args(1);
        args.insert(args.end(), rest.begin(), rest.end());
        for (std::size_t m = 0; m < n; ++m) {
          if (br[m].is_zero()) continue;
          args[0] = static_cast<int>(m);
          const Vec val = omega.value(args);
          if (lieco::is_zero(val)) continue;
          const Rational coeff = (a + b) % 2 == 0 ? br[m] : -br[m];
          acc = acc + coeff * val;
        }
      }
    }
    r.add(t, acc);
  }
  return r;
}

Cochain interior(const Vec& v, const Cochain& omega) {
  if (omega.degree() < 1) {
    throw std::invalid_argument("interior: cochain of degree 0");
  }
  Cochain r(omega.degree() - 1, omega.rank());
  for (const auto& j : combinations(v.size(), omega.degree() - 1)) {
    Vec acc(omega.rank());
    IndexTuple args(1);
    args.insert(args.end(), j.begin(), j.end());
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (v[m].is_zero()) continue;
      args[0] = static_cast<int>(m);
      const Vec val = omega.value(args);
      if (!lieco::is_zero(val)) acc = acc + v[m] * val;
    }
    r.add(j, acc);
  }
  return r;
}

// ------------------------------------------------------------------ chains

Chain Chain::basis(IndexTuple idx) {
  Chain c(static_cast<int>(idx.size()));
  if (auto sorted = sort_with_sign(std::move(idx))) {
    c.add(sorted->first, Rational(sorted->second));
  }
  return c;
}

Chain Chain::vector(const Vec& v) {
  Chain c(1);
  for (std::size_t i = 0; i < v.size(); ++i) c.add({static_cast<int>(i)}, v[i]);
  return c;
}

Chain Chain::scalar(const Rational& x) {
  Chain c(0);
  c.add({}, x);
  return c;
}

void Chain::add(const IndexTuple& idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != degree_) {
    throw std::invalid_argument("Chain::add: tuple length differs from degree");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Chain operator+(const Chain& a, const Chain& b) {
  Chain r = a.is_zero() ? Chain(b.degree_) : a;
  if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_) {
    throw std::invalid_argument("Chain: cannot add different degrees");
  }
  for (const auto& [idx, c] : b.comps_) r.add(idx, c);
  return r;
}

Chain operator-(const Chain& a, const Chain& b) {
  return a + Rational(-1) * b;
}

Chain operator*(const Rational& x, const Chain& a) {
  Chain r(a.degree_);
  for (const auto& [idx, c] : a.comps_) r.add(idx, x * c);
  return r;
}

Chain wedge(const Chain& a, const Chain& b) {
  Chain r(a.degree() + b.degree());
  for (const auto& [ia, ca] : a.components()) {
    for (const auto& [ib, cb] : b.components()) {
      IndexTuple joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      auto sorted = sort_with_sign(std::move(joined));
      if (!sorted) continue;
      const Rational c = ca * cb;
      r.add(sorted->first, sorted->second > 0 ? c : -c);
    }
  }
  return r;
}

Chain boundary(const LieAlgebra& g, const Chain& u) {
  const int m = u.degree();
  Chain r(std::max(m - 1, 0));
  if (m <= 1) return r;
  for (const auto& [t, coeff] : u.components()) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const Vec& br = g.structure(t[a], t[b]);
        IndexTuple rest;
        for (int c = 0; c < m; ++c) {
          if (c != a && c != b) rest.push_back(t[c]);
        }
        for (std::size_t k = 0; k < g.dim(); ++k) {
          if (br[k].is_zero()) continue;
          IndexTuple idx{static_cast<int>(k)};
          idx.insert(idx.end(), rest.begin(), rest.end());
          auto sorted = sort_with_sign(std::move(idx));
          if (!sorted) continue;
          Rational c = coeff * br[k];
          if (((a + b) % 2 != 0) != (sorted->second < 0)) c = -c;
          r.add(sorted->first, c);
        }
      }
    }
  }
  return r;
}

Chain schouten_chain(const LieAlgebra& g, const Chain& u, const Chain& v) {
  const Rational sign = u.degree() % 2 == 0 ? Rational(1) : Rational(-1);
  Chain r = wedge(boundary(g, u), v) + sign * wedge(u, boundary(g, v));
  return r - boundary(g, wedge(u, v));
}

std::string to_string(const LieAlgebra& g, const Chain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, x] : c.components()) {
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "^";
      basis += g.names()[idx[k]];
    }
    const bool negative = x.sign() < 0;
    const Rational mag = negative ? -x : x;
    std::string term;
    if (basis.empty()) {
      term = mag.str();
    } else if (mag.is_one()) {
      term = basis;
    } else {
      term = mag.str() + "*" + basis;
    }
    if (first) {
      os << (negative ? "-" : "") << term;
    } else {
      os << (negative ? " - " : " + ") << term;
    }
    first = false;
  }
  return os.str();
}

Chain embed_chain(const Ideal& v, const Chain& c) {
  Chain r(c.degree());
  for (const auto& [idx, x] : c.components()) {
    Chain term = Chain::scalar(x);
    for (int i : idx) {
      term = wedge(term, Chain::vector(v.embed(unit_vector(v.dim(), i))));
    }
    r = r + term;
  }
  return r;
}

std::optional<Chain> pullback_chain(const Ideal& v, const Chain& c) {
  const int k = c.degree();
  const std::size_t n = v.parent().dim();
  std::vector<Vec> images;
  const auto tuples = combinations(v.dim(), k);
  for (const auto& t : tuples) {
    images.push_back(chain_to_vec(embed_chain(v, Chain::basis(t)), n));
  }
  const Vec target = chain_to_vec(c, n);
  if (images.empty()) {
    if (is_zero(target)) return Chain(k);
    return std::nullopt;
  }
  auto coords = solve_in_span(images, target);
  if (!coords) return std::nullopt;
  return vec_to_chain(*coords, v.dim(), k);
}

// ------------------------------------------------------- (co)homology

Matrix boundary_matrix(const LieAlgebra& g, int k) {
  const std::size_t n = g.dim();
  const auto cols = combinations(n, k);
  const auto row_pos = tuple_positions(n, k - 1);
  Matrix m(row_pos.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Chain img = boundary(g, Chain::basis(cols[c]));
    for (const auto& [idx, x] : img.components()) m.at(row_pos.at(idx), c) = x;
  }
  return m;
}

Matrix ce_matrix(const LieModule& s, int k) {
  const std::size_t n = s.algebra().dim();
  const std::size_t r = s.rank();
  const auto cols = combinations(n, k);
  const std::size_t rows = combinations(n, k + 1).size() * r;
  Matrix m(rows, cols.size() * r);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t slot = 0; slot < r; ++slot) {
      Cochain e(k, r);
      e.add(cols[c], unit_vector(r, slot));
      const Vec img = cochain_to_vec(ce_d(s, e), n);
      for (std::size_t i = 0; i < rows; ++i) m.at(i, c * r + slot) = img[i];
    }
  }
  return m;
}

Vec HomologyResult::class_coordinates(const Chain& cycle) const {
  if (cycle.degree() != degree && !cycle.is_zero()) {
    throw std::invalid_argument("class_coordinates: chain has wrong degree");
  }
  const Vec v =
      cycle.is_zero() ? Vec(ambient_dim) : chain_to_vec(cycle, generators);
  std::vector<Vec> rows = boundary_basis;
  rows.insert(rows.end(), representative_vectors.begin(),
              representative_vectors.end());
  auto c = solve_in_span(rows, v);
  if (!c) throw std::invalid_argument("class_coordinates: not a cycle");
  return tail(*c, boundary_basis.size());
}

bool HomologyResult::is_boundary(const Chain& c) const {
  const Vec v = c.is_zero() ? Vec(ambient_dim) : chain_to_vec(c, generators);
  return solve_in_span(boundary_basis, v).has_value();
}

HomologyResult homology(const LieAlgebra& g, int k) {
  const std::size_t n = g.dim();
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw std::out_of_range("homology degree out of range");
  }
  HomologyResult h;
  h.degree = k;
  h.generators = n;
  h.ambient_dim = combinations(n, k).size();
  const std::vector<Vec> cycles = nullspace(boundary_matrix(g, k));
  h.boundary_basis = column_space_basis(boundary_matrix(g, k + 1));
  h.representative_vectors = extend_basis(h.boundary_basis, cycles);
  h.dimension = h.representative_vectors.size();
  if (h.dimension + h.boundary_basis.size() != cycles.size()) {
    throw std::logic_error("homology: inconsistent ranks");
  }
  for (const auto& v : h.representative_vectors) {
    h.representatives.push_back(vec_to_chain(v, n, k));
  }
  return h;
}

Vec CohomologyResult::class_coordinates(const Cochain& cocycle) const {
  if (cocycle.degree() != degree || cocycle.rank() != rank) {
    throw std::invalid_argument("class_coordinates: cochain has wrong shape");
  }
  std::vector<Vec> rows = coboundary_basis;
  rows.insert(rows.end(), basis_vectors.begin(), basis_vectors.end());
  auto c = solve_in_span(rows, cochain_to_vec(cocycle, generators));
  if (!c) throw std::invalid_argument("class_coordinates: not a cocycle");
  return tail(*c, coboundary_basis.size());
}

CohomologyResult cohomology(const LieModule& s, int k) {
  const std::size_t n = s.algebra().dim();
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw std::out_of_range("cohomology degree out of range");
  }
  CohomologyResult h;
  h.degree = k;
  h.generators = n;
  h.rank = s.rank();
  const std::vector<Vec> cocycles = nullspace(ce_matrix(s, k));
  if (k > 0) h.coboundary_basis = column_space_basis(ce_matrix(s, k - 1));
  h.basis_vectors = extend_basis(h.coboundary_basis, cocycles);
  h.dimension = h.basis_vectors.size();
  for (const auto& v : h.basis_vectors) {
    h.basis.push_back(vec_to_cochain(v, n, k, s.rank()));
  }
  if (h.dimension != cohomology_dimension_bareiss(s, k)) {
    throw std::logic_error("cohomology: elimination strategies disagree");
  }
  return h;
}

std::size_t cohomology_dimension_bareiss(const LieModule& s, int k) {
  const Matrix dk = ce_matrix(s, k);
  const std::size_t cochains = dk.cols();
  const std::size_t rank_k = dk.rows() == 0 ? 0 : bareiss_rank(dk);
  std::size_t rank_prev = 0;
  if (k > 0) {
    const Matrix dp = ce_matrix(s, k - 1);
    rank_prev = dp.rows() == 0 || dp.cols() == 0 ? 0 : bareiss_rank(dp);
  }
  return cochains - rank_k - rank_prev;
}

// ------------------------------------------------- ideal characteristics

Vec H1Module::hv_coordinates(const Vec& ideal_coords) const {
  return h1.class_coordinates(Chain::vector(ideal_coords));
}

H1Module h1_module(const Ideal& v) {
  const LieAlgebra& lie = v.parent();
  const std::size_t n = lie.dim();
  HomologyResult h1 = homology(v.as_algebra(), 1);
  const std::size_t r = h1.dimension;

  auto hv = [&](const Vec& ideal_coords) {
    return h1.class_coordinates(Chain::vector(ideal_coords));
  };

  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(r, r);
    for (std::size_t b = 0; b < r; ++b) {
      const Vec rep = v.embed(h1.representative_vectors[b]);
      const Vec moved = lie.bracket(unit_vector(n, i), rep);
      const Vec col = hv(*v.coordinates(moved));
      for (std::size_t a = 0; a < r; ++a) m.at(a, b) = col[a];
    }
    rho.push_back(std::move(m));
  }
  LieModule parent_module(lie, r, rho);

  // V itself must act trivially on H_1(V).
  for (const auto& basis_vec : v.basis()) {
    for (std::size_t b = 0; b < r; ++b) {
      if (!is_zero(parent_module.act(basis_vec, unit_vector(r, b)))) {
        throw std::logic_error("h1_module: ideal acts nontrivially on H_1");
      }
    }
  }

  const auto& comp = v.complement();
  std::vector<std::string> names;
  for (auto j : comp) names.push_back(lie.names()[j]);
  std::vector<Bracket> brackets;
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      const Vec br = lie.bracket(unit_vector(n, comp[a]), unit_vector(n, comp[b]));
      Vec k = v.split(br).second;
      if (!is_zero(k)) brackets.push_back({a, b, std::move(k)});
    }
  }
  LieAlgebra quotient(std::move(names), brackets);
  std::vector<Matrix> qrho;
  for (auto j : comp) qrho.push_back(rho[j]);
  LieModule module(quotient, r, std::move(qrho));
  return H1Module{std::move(quotient), std::move(module),
                  std::move(parent_module), std::move(h1)};
}

Projection default_projection(const Ideal& v) {
  const std::size_t n = v.parent().dim();
  Projection p(n, v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const Vec part = v.split(unit_vector(n, i)).first;
    for (std::size_t b = 0; b < v.dim(); ++b) p.at(i, b) = part[b];
  }
  return p;
}

Projection random_projection(const Ideal& v, std::mt19937_64& rng) {
  const std::size_t n = v.parent().dim();
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Vec> shift(v.complement().size(), Vec(v.dim()));
  for (auto& s : shift) {
    for (auto& x : s) x = coeff(rng);
  }
  Projection p(n, v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    auto [part, rest] = v.split(unit_vector(n, i));
    for (std::size_t a = 0; a < rest.size(); ++a) {
      if (!rest[a].is_zero()) part = part + rest[a] * shift[a];
    }
    for (std::size_t b = 0; b < v.dim(); ++b) p.at(i, b) = part[b];
  }
  return p;
}

void check_projection(const Ideal& v, const Projection& p) {
  if (p.rows() != v.parent().dim() || p.cols() != v.dim()) {
    throw std::invalid_argument("projection has wrong shape");
  }
  for (std::size_t b = 0; b < v.dim(); ++b) {
    if (apply_projection(p, v.basis()[b]) != unit_vector(v.dim(), b)) {
      throw std::invalid_argument("projection does not fix basis vector v" +
                                  std::to_string(b + 1) + " of the ideal");
    }
  }
}

Projection projection_from_parent_rows(const Ideal& v,
                                       const std::vector<Vec>& rows) {
  const std::size_t n = v.parent().dim();
  if (rows.size() != n) {
    throw std::invalid_argument("projection needs " + std::to_string(n) +
                                " rows");
  }
  Projection p(n, v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = v.coordinates(rows[i]);
    if (!c) {
      throw std::invalid_argument("projection row " + std::to_string(i) +
                                  " does not lie in the ideal");
    }
    for (std::size_t b = 0; b < v.dim(); ++b) p.at(i, b) = (*c)[b];
  }
  check_projection(v, p);
  return p;
}

CharClass char_class(const Ideal& v) {
  return char_class(v, default_projection(v));
}

CharClass char_class(const Ideal& v, const Projection& p) {
  check_projection(v, p);
  const H1Module h = h1_module(v);
  const std::size_t n = v.parent().dim();
  const std::size_t r = h.h1.dimension;

  Cochain alpha_tilde(1, r);
  for (std::size_t i = 0; i < n; ++i) {
    alpha_tilde.add({static_cast<int>(i)}, h.hv_coordinates(p.row(i)));
  }
  Cochain d_alpha = ce_d(h.parent_module, alpha_tilde);
  for (const auto& basis_vec : v.basis()) {
    if (!interior(basis_vec, d_alpha).is_zero()) {
      throw std::logic_error("char_class: i_v(d alpha~) != 0");
    }
  }

  const auto& comp = v.complement();
  Cochain rep(2, r);
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      rep.add({static_cast<int>(a), static_cast<int>(b)},
              d_alpha.value({static_cast<int>(comp[a]), static_cast<int>(comp[b])}));
    }
  }

  CharClass out;
  out.d_alpha = std::move(d_alpha);
  if (comp.size() < 2 || r == 0) {
    out.h2_dimension = 0;
    out.representative = std::move(rep);
    return out;
  }
  const CohomologyResult h2 = cohomology(h.module, 2);
  out.h2_dimension = h2.dimension;
  out.coordinates = h2.class_coordinates(rep);
  out.representative = std::move(rep);
  return out;
}

Cochain curvature(const Ideal& v, const Projection& p) {
  check_projection(v, p);
  const LieAlgebra& lie = v.parent();
  const std::size_t n = lie.dim();
  auto horizontal = [&](std::size_t i) {
    return unit_vector(n, i) - v.embed(p.row(i));
  };
  Cochain r(2, v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec br = lie.bracket(horizontal(i), horizontal(j));
      r.add({static_cast<int>(i), static_cast<int>(j)},
            Rational(-1) * apply_projection(p, br));
    }
  }
  return r;
}

bool kernel_is_subalgebra(const Ideal& v, const Projection& p) {
  check_projection(v, p);
  const std::vector<Vec> kernel = nullspace(p.transpose());
  for (std::size_t a = 0; a < kernel.size(); ++a) {
    for (std::size_t b = a + 1; b < kernel.size(); ++b) {
      const Vec br = v.parent().bracket(kernel[a], kernel[b]);
      if (!is_zero(apply_projection(p, br))) return false;
    }
  }
  return true;
}

}  // namespace lieco
