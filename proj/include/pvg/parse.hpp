#pragma once

#include <optional>
#include <string>

#include "pvg/diffeq.hpp"
#include "pvg/realalg.hpp"

namespace pvg {

// Grammar (whitespace insensitive):
//   equation := "x'" '=' expr
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ['^' ['-'] integer]
//   base     := integer | 't' | 'x' | '(' expr ')'
// The unknown x may appear anywhere but only linearly: x times x, x under a
// power other than 1, and x in a denominator are all rejected. A right side
// containing x yields a homogeneous equation, an x-free one a quadrature;
// `forced` overrides the detection, and forcing homogeneous on an x-free
// right side reads the whole expression as the coefficient of x.
// Throws SyntaxError (with position), UnsupportedOrder for x'' and beyond,
// UnsupportedInput for nonlinear or affine right sides and absurd exponents.
LinearODE parse_equation(const std::string& text,
                         std::optional<LinearODE::Kind> forced = std::nullopt);

// Placement of t against the constants:
//   cut   := 't' '->' ('+inf' | '-inf' | value '+' | value '-')
//   value := ['-'] (rational | 'root' '(' poly ',' '[' rational ',' rational ']' ')')
// where rational is integer ['/' integer] and poly is an x-free polynomial
// expression; the bracket interval must isolate exactly one root of it.
// Inverse of Cut::str().
Cut parse_cut(const std::string& text);

} // namespace pvg
