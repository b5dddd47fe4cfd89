#include "lieco/expr.hpp"

#include <cctype>
#include <limits>

namespace lieco {

namespace {

template <class T>
constexpr bool is_graded_v = !std::is_same_v<T, Poly>;

class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  Value run() {
    Value v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return normalize(std::move(v));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  Value sum() {
    Value acc = product();
    while (true) {
      const std::size_t at = (skip_ws(), pos_);
      if (accept("+")) {
        acc = add(acc, product(), at, false);
      } else if (accept("-")) {
        acc = add(acc, product(), at, true);
      } else {
        return acc;
      }
    }
  }

  Value product() {
    Value acc = unary();
    while (true) {
      const std::size_t at = (skip_ws(), pos_);
      if (peek("**")) return acc;
      if (accept("*")) {
        acc = multiply(acc, unary(), at);
      } else if (accept("^")) {
        acc = wedge_values(acc, unary(), at);
      } else if (accept("/")) {
        acc = divide(acc, unary(), at);
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept("-")) {
      return std::visit([](auto v) -> Value { return -v; }, unary());
    }
    return power();
  }

  Value power() {
    Value base = atom();
    const std::size_t at = (skip_ws(), pos_);
    if (!accept("**")) return base;
    skip_ws();
    const std::size_t exp_at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("exponent must be a non-negative integer literal");
    }
    const unsigned long e = read_index(exp_at);
    if (!std::holds_alternative<Poly>(base)) {
      fail_at(at, "'**' applies only to scalars");
    }
    Value r = std::get<Poly>(base).pow(static_cast<unsigned>(e));
    if (peek("**")) fail("chained '**' is not supported; use parentheses");
    return r;
  }

  unsigned long read_index(std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail_at(at, "expected a decimal index");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 9) fail_at(at, "number too large");
    return std::stoul(digits);
  }

  int coordinate(std::size_t at) {
    const unsigned long k = read_index(at);
    if (k > static_cast<unsigned long>(2 * n_)) {
      fail_at(at, "coordinate index " + std::to_string(k) +
                      " out of range for n=" + std::to_string(n_));
    }
    return static_cast<int>(k);
  }

  Value atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = sum();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(n_, GaussRational(Rational::parse(std::string(s_.substr(start, pos_ - start)))));
    }
    if (accept("dx")) return Form::basis(n_, coordinate(at));
    if (accept("Dx")) return MultiVec::basis(n_, coordinate(at));
    if (accept("x")) return Poly::variable(n_, coordinate(at));
    if (c == 'i' && (pos_ + 1 >= s_.size() ||
                     !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return Poly(n_, GaussRational::i());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Value add(const Value& a, const Value& b, std::size_t at, bool subtract) {
    return std::visit(
        [&](const auto& x, const auto& y) -> Value {
          using X = std::decay_t<decltype(x)>;
          using Y = std::decay_t<decltype(y)>;
          if constexpr (std::is_same_v<X, Y>) {
            if constexpr (is_graded_v<X>) {
              if (x.degree() != y.degree() && !x.is_zero() && !y.is_zero()) {
                fail_at(at, "cannot add terms of degree " +
                                std::to_string(x.degree()) + " and " +
                                std::to_string(y.degree()));
              }
            }
            return subtract ? x - y : x + y;
          } else {
            // A zero scalar can be added to anything.
            if constexpr (std::is_same_v<X, Poly>) {
              if (x.is_zero()) return subtract ? Value(-y) : Value(y);
            }
            if constexpr (std::is_same_v<Y, Poly>) {
              if (y.is_zero()) return x;
            }
            fail_at(at, std::string("kind mismatch: cannot add ") + kind_name(a) +
                            " and " + kind_name(b));
          }
        },
        a, b);
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) {
    if (std::holds_alternative<Poly>(a)) {
      const Poly& p = std::get<Poly>(a);
      return std::visit([&](const auto& y) -> Value { return p * y; }, b);
    }
    if (std::holds_alternative<Poly>(b)) {
      const Poly& p = std::get<Poly>(b);
      return std::visit([&](const auto& x) -> Value { return x * p; }, a);
    }
    fail_at(at, std::string("'*' needs a scalar operand; got ") + kind_name(a) +
                    " and " + kind_name(b) + " (use '^' to wedge)");
  }

  Value wedge_values(const Value& a, const Value& b, std::size_t at) {
    if (std::holds_alternative<Poly>(a) || std::holds_alternative<Poly>(b)) {
      return multiply(a, b, at);
    }
    if (std::holds_alternative<Form>(a) && std::holds_alternative<Form>(b)) {
      return wedge(std::get<Form>(a), std::get<Form>(b));
    }
    if (std::holds_alternative<MultiVec>(a) && std::holds_alternative<MultiVec>(b)) {
      return wedge(std::get<MultiVec>(a), std::get<MultiVec>(b));
    }
    fail_at(at, std::string("kind mismatch: cannot wedge ") + kind_name(a) +
                    " with " + kind_name(b));
  }

  Value divide(const Value& a, const Value& b, std::size_t at) {
    if (!std::holds_alternative<Poly>(b) || !std::get<Poly>(b).is_constant() ||
        std::get<Poly>(b).is_zero()) {
      fail_at(at, "division only by a nonzero constant");
    }
    const GaussRational inv = GaussRational(1) / std::get<Poly>(b).constant_term();
    return std::visit([&](const auto& x) -> Value { return x * inv; }, a);
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

template <class T>
T expect_kind(Value v, std::string_view text) {
  if (auto* p = std::get_if<T>(&v)) return std::move(*p);
  if constexpr (!std::is_same_v<T, Poly>) {
    if (auto* p = std::get_if<Poly>(&v)) {
      return T::scalar(std::move(*p));
    }
  }
  const char* want = std::is_same_v<T, Form> ? "form" : "multivector";
  throw ParseError(0, std::string("expected a ") + want + ", got a " +
                          kind_name(v) + " in '" + std::string(text) + "'");
}

}  // namespace

const char* kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "function";
    case 1: return "form";
    default: return "multivector";
  }
}

Value normalize(Value v) {
  if (auto* f = std::get_if<Form>(&v)) {
    if (f->degree() == 0 || f->is_zero()) return f->is_zero() ? Poly(f->half_dim()) : f->as_scalar();
  }
  if (auto* w = std::get_if<MultiVec>(&v)) {
    if (w->degree() == 0 || w->is_zero()) return w->is_zero() ? Poly(w->half_dim()) : w->as_scalar();
  }
  return v;
}

bool values_equal(const Value& a, const Value& b) {
  const Value x = normalize(a), y = normalize(b);
  if (x.index() != y.index()) return false;
  return std::visit(
      [&](const auto& u) {
        using U = std::decay_t<decltype(u)>;
        return u == std::get<U>(y);
      },
      x);
}

Value parse(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return Parser(text, n).run();
}

Poly parse_poly(std::string_view text, int n) {
  Value v = parse(text, n);
  if (auto* p = std::get_if<Poly>(&v)) return std::move(*p);
  throw ParseError(0, std::string("expected a function, got a ") + kind_name(v));
}

Form parse_form(std::string_view text, int n) {
  return expect_kind<Form>(parse(text, n), text);
}

MultiVec parse_multivec(std::string_view text, int n) {
  return expect_kind<MultiVec>(parse(text, n), text);
}

std::string format(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Poly>) {
          return x.str();
        } else {
          return to_string(x);
        }
      },
      v);
}

}  // namespace lieco
