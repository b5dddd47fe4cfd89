#include "lieco/exterior.hpp"

#include <algorithm>

namespace lieco {

std::optional<std::pair<IndexTuple, int>> sort_with_sign(IndexTuple indices) {
  int sign = 1;
  // Insertion sort; the tuples are short.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return std::nullopt;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return std::make_pair(std::move(indices), sign);
}

namespace {

// Merges two increasing tuples into basis(I)^basis(J) = sign * basis(K).
std::optional<std::pair<IndexTuple, int>> merge(const IndexTuple& a,
                                                const IndexTuple& b) {
  IndexTuple out;
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the remaining a-elements.
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

template <GradedKind K>
void check_same_space(const Graded<K>& a, const Graded<K>& b) {
  if (a.half_dim() != b.half_dim()) {
    throw std::invalid_argument("exterior: dimension mismatch");
  }
}

template <GradedKind K>
Graded<K> wedge_impl(const Graded<K>& a, const Graded<K>& b) {
  check_same_space(a, b);
  const int n = a.half_dim();
  Graded<K> r(n, a.degree() + b.degree());
  for (const auto& [ia, pa] : a.components()) {
    for (const auto& [ib, pb] : b.components()) {
      auto m = merge(ia, ib);
      if (!m) continue;
      Poly c = pa * pb;
      if (m->second < 0) c = -c;
      r.add(std::move(m->first), std::move(c));
    }
  }
  return r;
}

// Odd derivative with respect to the generator `index`: the left derivative
// moves it to the front, the right derivative to the back.
template <GradedKind K>
Graded<K> odd_derivative(const Graded<K>& g, int index, bool from_left) {
  const int k = g.degree();
  Graded<K> r(g.half_dim(), std::max(k - 1, 0));
  if (k == 0) return r;
  for (const auto& [idx, p] : g.components()) {
    auto it = std::find(idx.begin(), idx.end(), index);
    if (it == idx.end()) continue;
    const int pos = static_cast<int>(it - idx.begin());
    const int swaps = from_left ? pos : k - 1 - pos;
    IndexTuple rest = idx;
    rest.erase(rest.begin() + pos);
    r.add(std::move(rest), swaps % 2 == 0 ? p : -p);
  }
  return r;
}

template <GradedKind K>
std::string to_string_impl(const Graded<K>& g, const char* prefix) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, p] : g.components()) {
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += '^';
      basis += prefix + std::to_string(idx[k]);
    }
    std::string term;
    if (idx.empty()) {
      term = p.str();
    } else if (p == Poly(p.half_dim(), GaussRational(1))) {
      term = basis;
    } else if (p == Poly(p.half_dim(), GaussRational(-1))) {
      term = "-" + basis;
    } else if (p.size() == 1) {
      term = p.str() + "*" + basis;
    } else {
      term = "(" + p.str() + ")*" + basis;
    }
    if (first) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

void require_vector(const MultiVec& x, const char* what) {
  if (x.degree() != 1 && !x.is_zero()) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a vector field, got degree " +
                                std::to_string(x.degree()));
  }
}

}  // namespace

std::string to_string(const Form& f) { return to_string_impl(f, "dx"); }
std::string to_string(const MultiVec& w) { return to_string_impl(w, "Dx"); }

Form wedge(const Form& a, const Form& b) { return wedge_impl(a, b); }
MultiVec wedge(const MultiVec& a, const MultiVec& b) {
  return wedge_impl(a, b);
}

Form wedge_power(const Form& a, unsigned k) {
  Form r = Form::scalar(Poly(a.half_dim(), GaussRational(1)));
  for (unsigned i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

Poly pair(const Form& beta, const MultiVec& w) {
  if (beta.half_dim() != w.half_dim()) {
    throw std::invalid_argument("pair: dimension mismatch");
  }
  Poly sum(beta.half_dim());
  if (beta.is_zero() || w.is_zero()) return sum;
  if (beta.degree() != w.degree()) {
    throw std::invalid_argument("pair: degree mismatch (" +
                                std::to_string(beta.degree()) + " vs " +
                                std::to_string(w.degree()) + ")");
  }
  for (const auto& [idx, p] : beta.components()) {
    auto it = w.components().find(idx);
    if (it != w.components().end()) sum += p * it->second;
  }
  return sum;
}

Poly evaluate(const Form& theta, std::span<const MultiVec> vectors) {
  MultiVec w = MultiVec::scalar(Poly(theta.half_dim(), GaussRational(1)));
  for (const auto& x : vectors) {
    require_vector(x, "evaluate");
    w = wedge(w, x);
  }
  return pair(theta, w);
}

MultiVec contract_tilde(const MultiVec& w, const Form& beta) {
  if (w.half_dim() != beta.half_dim()) {
    throw std::invalid_argument("contract_tilde: dimension mismatch");
  }
  if (beta.degree() > w.degree()) {
    throw std::invalid_argument("contract_tilde: form degree " +
                                std::to_string(beta.degree()) +
                                " exceeds multivector degree " +
                                std::to_string(w.degree()));
  }
  MultiVec r(w.half_dim(), w.degree() - beta.degree());
  for (const auto& [ib, pb] : beta.components()) {
    for (const auto& [iw, pw] : w.components()) {
      if (!std::includes(iw.begin(), iw.end(), ib.begin(), ib.end())) continue;
      IndexTuple rest;
      std::set_difference(iw.begin(), iw.end(), ib.begin(), ib.end(),
                          std::back_inserter(rest));
      const int sign = merge(ib, rest)->second;
      Poly c = pb * pw;
      r.add(std::move(rest), sign > 0 ? std::move(c) : -c);
    }
  }
  return r;
}

Form d(const Form& theta) {
  const int n = theta.half_dim();
  Form r(n, theta.degree() + 1);
  for (const auto& [idx, p] : theta.components()) {
    for (int i = 0; i < theta.dim(); ++i) {
      if (std::binary_search(idx.begin(), idx.end(), i)) continue;
      Poly dp = p.partial(i);
      if (dp.is_zero()) continue;
      auto m = merge(IndexTuple{i}, idx);
      r.add(std::move(m->first), m->second > 0 ? std::move(dp) : -dp);
    }
  }
  return r;
}

Form interior(const MultiVec& x, const Form& theta) {
  require_vector(x, "interior");
  if (x.half_dim() != theta.half_dim()) {
    throw std::invalid_argument("interior: dimension mismatch");
  }
  Form r(theta.half_dim(), std::max(theta.degree() - 1, 0));
  if (theta.degree() == 0) return r;
  for (const auto& [idx, a] : x.components()) {
    r += odd_derivative(theta, idx[0], true) * a;
  }
  return r;
}

Form lie_form(const MultiVec& x, const Form& theta) {
  return interior(x, d(theta)) + d(interior(x, theta));
}

Poly apply_vector(const MultiVec& x, const Poly& f) {
  require_vector(x, "apply_vector");
  Poly r(f.half_dim());
  for (const auto& [idx, a] : x.components()) r += a * f.partial(idx[0]);
  return r;
}

MultiVec schouten(const MultiVec& u, const MultiVec& v) {
  check_same_space(u, v);
  MultiVec r(u.half_dim(), std::max(u.degree() + v.degree() - 1, 0));
  if (u.degree() + v.degree() == 0) return r;
  for (int i = 0; i < u.dim(); ++i) {
    r += wedge(odd_derivative(u, i, false), v.partial(i));
    r -= wedge(u.partial(i), odd_derivative(v, i, true));
  }
  return r;
}

Form flat(const Form& omega2, const MultiVec& w) {
  if (omega2.degree() != 2 && !omega2.is_zero()) {
    throw std::invalid_argument("flat: expected a 2-form");
  }
  const int n = w.half_dim();
  std::vector<Form> images;
  for (int j = 0; j < w.dim(); ++j) {
    images.push_back(interior(MultiVec::basis(n, j), omega2));
  }
  Form r(n, w.degree());
  for (const auto& [idx, p] : w.components()) {
    Form term = Form::scalar(p);
    for (int j : idx) term = wedge(term, images[j]);
    r += term;
  }
  return r;
}

MultiVec sharp(const MultiVec& mu2, const Form& theta) {
  if (mu2.degree() != 2 && !mu2.is_zero()) {
    throw std::invalid_argument("sharp: expected a bivector");
  }
  const int n = theta.half_dim();
  std::vector<MultiVec> images;
  for (int j = 0; j < theta.dim(); ++j) {
    images.push_back(contract_tilde(mu2, Form::basis(n, j)));
  }
  MultiVec r(n, theta.degree());
  for (const auto& [idx, p] : theta.components()) {
    MultiVec term = MultiVec::scalar(p);
    for (int j : idx) term = wedge(term, images[j]);
    r += term;
  }
  return r;
}

}  // namespace lieco
