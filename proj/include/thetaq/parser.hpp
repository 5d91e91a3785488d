#pragma once

#include <string>

#include "thetaq/expr.hpp"

namespace thetaq {

// Parses the small expression grammar used by the CLI:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := '-' atom | '(' expr ')' | rational | call
//   call   := theta[e,d](arg) | dtheta[e,d](arg) | eta(arg) | Theta3(arg)
//           | zeta(n,k) | wsum[k](arg) | dsum[variant,filter,weight,twist,c0](arg)
//   arg    := tau | rational '*' tau | tau '/' integer
//
// Characteristics use rationals (never decimals). Errors carry the column.
ExprPtr parse_expr(const std::string& text);

} // namespace thetaq
