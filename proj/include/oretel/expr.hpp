#ifndef ORETEL_EXPR_HPP
#define ORETEL_EXPR_HPP

#include <string>

#include "oretel/ore.hpp"

namespace oretel {

// Expression grammar shared by the CLI and the file formats:
//   integers, parameter symbols, x, y, + - * / ^, parentheses;
//   ^ only with nonnegative integer exponents; whitespace insignificant.
// Operator expressions additionally use the noncommutative tokens Dx, Dy.

RatFunc parse_scalar(const std::string& text, const FieldSpec& field,
                     int line_offset = 0);
OreOperator parse_operator(const std::string& text, const FieldSpec& field,
                           const OreSpec& spec, int line_offset = 0);

// Canonical printing: explicit '*', '^' with exponent >= 2, terms in
// descending graded-lex order. parse(print(v)) == v bit-exactly.
std::string print_rational(const Rational& r);
std::string print_poly(const Poly& p, const FieldSpec& field);
std::string print_ratfunc(const RatFunc& f, const FieldSpec& field);
std::string print_operator(const OreOperator& op, const FieldSpec& field);

} // namespace oretel

#endif
