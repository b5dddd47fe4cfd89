#pragma once

#include <doctest.h>

#include <ostream>
#include <string>

#include "lieco/expr.hpp"
#include "lieco/exterior.hpp"

namespace testing {

inline lieco::Poly P(const std::string& s, int n = 1) { return lieco::parse_poly(s, n); }
inline lieco::Form F(const std::string& s, int n = 1) { return lieco::parse_form(s, n); }
inline lieco::MultiVec V(const std::string& s, int n = 1) { return lieco::parse_multivec(s, n); }

inline lieco::Poly x(int i, int n = 1) { return lieco::Poly::variable(n, i); }
inline lieco::Poly c(long v, int n = 1) { return lieco::Poly(n, lieco::GaussRational(v)); }
inline lieco::Poly c(long p, long q, int n) {
  return lieco::Poly(n, lieco::GaussRational(lieco::Rational(p, q)));
}

}  // namespace testing

namespace lieco {
inline std::ostream& operator<<(std::ostream& os, const Form& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const MultiVec& w) { return os << to_string(w); }
}  // namespace lieco
