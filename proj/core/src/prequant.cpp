#include "lieco/prequant.hpp"

#include <sstream>
#include <stdexcept>

namespace lieco {

namespace {

GaussRational ih(const Rational& h) { return GaussRational(Rational(0), h); }

void check_same_n(const PreqOp& a, const PreqOp& b) {
  if (a.n != b.n) throw std::invalid_argument("operators on different spaces");
}

}  // namespace

std::string to_string(Normalization n) {
  return n == Normalization::times_ih ? "times-ih" : "inverse-ih";
}

Normalization parse_normalization(const std::string& s) {
  if (s == "times-ih") return Normalization::times_ih;
  if (s == "inverse-ih") return Normalization::inverse_ih;
  throw std::invalid_argument("unknown normalization '" + s + "'");
}

PreqOp::PreqOp(int n) : n(n), zeroth(n), first(2 * n + 1, Poly(n)) {}

PreqOp PreqOp::identity(int n) {
  PreqOp op(n);
  op.zeroth = Poly(n, GaussRational(1));
  return op;
}

PreqOp PreqOp::multiplication(const Poly& p) {
  PreqOp op(p.half_dim());
  op.zeroth = p;
  return op;
}

PreqOp PreqOp::from_vector(const MultiVec& x) {
  if (x.degree() != 1 && !x.is_zero()) {
    throw std::invalid_argument("from_vector: expected a vector field");
  }
  PreqOp op(x.half_dim());
  for (const auto& [idx, c] : x.components()) op.first[idx[0]] = c;
  return op;
}

bool PreqOp::is_zero() const {
  if (!zeroth.is_zero()) return false;
  for (const auto& c : first) {
    if (!c.is_zero()) return false;
  }
  return true;
}

PreqOp operator+(const PreqOp& a, const PreqOp& b) {
  check_same_n(a, b);
  PreqOp r = a;
  r.zeroth += b.zeroth;
  for (std::size_t i = 0; i < r.first.size(); ++i) r.first[i] += b.first[i];
  return r;
}

PreqOp operator-(const PreqOp& a, const PreqOp& b) {
  return a + GaussRational(-1) * b;
}

PreqOp operator*(const GaussRational& c, const PreqOp& a) {
  PreqOp r = a;
  r.zeroth *= c;
  for (auto& p : r.first) p *= c;
  return r;
}

std::string to_string(const PreqOp& op) {
  std::ostringstream os;
  bool any = false;
  if (!op.zeroth.is_zero()) {
    os << op.zeroth.str();
    any = true;
  }
  for (std::size_t i = 0; i < op.first.size(); ++i) {
    const Poly& c = op.first[i];
    if (c.is_zero()) continue;
    if (any) os << " + ";
    os << "(" << c.str() << ")*d/dx" << i;
    any = true;
  }
  return any ? os.str() : "0";
}

WaveFn::WaveFn(Rational h_, Poly p_) : h(std::move(h_)), p(std::move(p_)) {
  if (h.is_zero()) throw std::invalid_argument("weight h must be nonzero");
  if (!p.is_basic()) {
    throw std::invalid_argument("wave function coefficient depends on x0");
  }
}

GaussRational lift_scale(const Rational& h, Normalization norm) {
  if (h.is_zero()) throw std::invalid_argument("weight h must be nonzero");
  return norm == Normalization::times_ih ? ih(h) : GaussRational(1) / ih(h);
}

PreqOp lift(const ContactSpace& m, const Poly& f, const Rational& h,
            Normalization norm) {
  if (!f.is_basic()) {
    throw std::invalid_argument("lift: f depends on x0: " + f.str());
  }
  return lift_scale(h, norm) * PreqOp::from_vector(hat(m, f));
}

PreqOp on_weight(const PreqOp& op, const Rational& h) {
  PreqOp r = op;
  r.zeroth += op.first[0] * ih(h);
  r.first[0] = Poly(op.n);
  return r;
}

WaveFn apply(const PreqOp& op, const WaveFn& psi) {
  if (op.n != psi.p.half_dim()) {
    throw std::invalid_argument("apply: operator and function differ in n");
  }
  const PreqOp w = on_weight(op, psi.h);
  Poly out = w.zeroth * psi.p;
  for (std::size_t i = 1; i < w.first.size(); ++i) {
    if (!w.first[i].is_zero()) out += w.first[i] * psi.p.partial(static_cast<int>(i));
  }
  if (!out.is_basic()) {
    throw std::invalid_argument("apply: result depends on x0");
  }
  return WaveFn(psi.h, std::move(out));
}

PreqOp commutator(const PreqOp& a, const PreqOp& b) {
  check_same_n(a, b);
  const int vars = 2 * a.n + 1;
  // Second-order symbol a_i b_j - b_j a_i on d_i d_j; must vanish.
  for (int i = 0; i < vars; ++i) {
    for (int j = 0; j < vars; ++j) {
      const Poly s = a.first[i] * b.first[j] + a.first[j] * b.first[i] -
                     b.first[j] * a.first[i] - b.first[i] * a.first[j];
      if (!s.is_zero()) {
        throw std::logic_error("commutator: second-order terms do not cancel");
      }
    }
  }
  PreqOp r(a.n);
  for (int i = 0; i < vars; ++i) {
    if (!a.first[i].is_zero()) r.zeroth += a.first[i] * b.zeroth.partial(i);
    if (!b.first[i].is_zero()) r.zeroth -= b.first[i] * a.zeroth.partial(i);
  }
  for (int j = 0; j < vars; ++j) {
    for (int i = 0; i < vars; ++i) {
      if (!a.first[i].is_zero()) r.first[j] += a.first[i] * b.first[j].partial(i);
      if (!b.first[i].is_zero()) r.first[j] -= b.first[i] * a.first[j].partial(i);
    }
  }
  return r;
}

PreqOp homomorphism_defect(const ContactSpace& m, const Poly& f, const Poly& g,
                           const Rational& h, Normalization norm) {
  const PreqOp bracket = commutator(lift(m, f, h, norm), lift(m, g, h, norm));
  const GaussRational rescale =
      norm == Normalization::inverse_ih ? ih(h) : GaussRational(1) / ih(h);
  return rescale * bracket - lift(m, poisson(m, f, g), h, norm);
}

}  // namespace lieco
