#include "lieco/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lieco {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return b < a;
}

Poly::Poly(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Poly: negative half-dimension");
}

Poly::Poly(int n, GaussRational constant) : Poly(n) {
  if (!constant.is_zero()) {
    terms_.emplace(Exponent(num_vars(), 0), std::move(constant));
  }
}

Poly Poly::variable(int n, int index) {
  Poly p(n);
  if (index < 0 || index >= p.num_vars()) {
    throw std::out_of_range("coordinate x" + std::to_string(index) +
                            " out of range for n=" + std::to_string(n));
  }
  Exponent e(p.num_vars(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), GaussRational(1));
  return p;
}

Poly Poly::monomial(int n, Exponent exponent, GaussRational coefficient) {
  Poly p(n);
  if (static_cast<int>(exponent.size()) != p.num_vars()) {
    throw std::invalid_argument("Poly::monomial: exponent length mismatch");
  }
  if (!coefficient.is_zero()) {
    p.terms_.emplace(std::move(exponent), std::move(coefficient));
  }
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

GaussRational Poly::constant_term() const {
  auto it = terms_.find(Exponent(num_vars(), 0));
  return it == terms_.end() ? GaussRational() : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

void Poly::check_same_space(const Poly& o) const {
  if (n_ != o.n_) {
    throw std::invalid_argument("Poly: dimension mismatch (n=" +
                                std::to_string(n_) + " vs n=" +
                                std::to_string(o.n_) + ")");
  }
}

void Poly::add_term(const Exponent& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_space(b);
  Poly r(a.n_);
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(n_, GaussRational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::partial(int index) const {
  if (index < 0 || index >= num_vars()) {
    throw std::out_of_range("partial: coordinate x" + std::to_string(index) +
                            " out of range for n=" + std::to_string(n_));
  }
  Poly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    --d[index];
    r.add_term(d, c * GaussRational(static_cast<long>(e[index])));
  }
  return r;
}

bool Poly::is_basic() const {
  for (const auto& [e, c] : terms_) {
    if (e[0] != 0) return false;
  }
  return true;
}

GaussRational Poly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars()) {
    throw std::invalid_argument("eval: expected " +
                                std::to_string(num_vars()) +
                                " coordinates, got " +
                                std::to_string(point.size()));
  }
  GaussRational sum;
  for (const auto& [e, c] : terms_) {
    Rational m(1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (std::uint32_t p = 0; p < e[k]; ++p) m *= point[k];
    }
    sum += c * GaussRational(m);
  }
  return sum;
}

namespace {

std::string monomial_str(const Exponent& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(k);
    if (e[k] > 1) s += "**" + std::to_string(e[k]);
  }
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_str(e);
    // A coefficient whose only nonzero part is negative is printed as a
    // subtraction of its magnitude.
    const bool negative = c.is_real() ? c.re().sign() < 0
                                      : (c.re().is_zero() && c.im().sign() < 0);
    const GaussRational mag = negative ? -c : c;
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace lieco
