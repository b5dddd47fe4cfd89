#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lieco/exterior.hpp"

namespace lieco {

// Scalars are always held as Poly; degree-0 forms and multivectors collapse
// to Poly.
using Value = std::variant<Poly, Form, MultiVec>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument(message + " at position " +
                              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, loosest binding first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '^' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('**' unary)?          (exponent: integer literal)
//   atom    := integer | 'i' | x<k> | dx<k> | Dx<k> | '(' sum ')'
// Coordinates range over 0..2n.
Value parse(std::string_view text, int n);
Poly parse_poly(std::string_view text, int n);
Form parse_form(std::string_view text, int n);
MultiVec parse_multivec(std::string_view text, int n);

std::string format(const Value& v);
Value normalize(Value v);
bool values_equal(const Value& a, const Value& b);

const char* kind_name(const Value& v);

}  // namespace lieco
