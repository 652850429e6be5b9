#pragma once

#include "g2sc/mpoly.hpp"

#include <memory>
#include <string_view>

namespace g2sc {

/** Expression tree produced by the parser before expansion. */
struct PolyExpr {
    enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow };
    Kind kind = Kind::Number;
    Rat number;
    Var variable = Var::x1;
    unsigned exponent = 0;
    std::unique_ptr<PolyExpr> lhs, rhs;

    MPoly evaluate() const;
};

/**
 * Grammar:
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor (['*'] factor | '/' integer)*
 *   factor := atom ['^' integer]
 *   atom   := integer | variable | '(' expr ')' | '-' factor
 * Throws SyntaxError (with byte offset) or UnknownVariable.
 */
std::unique_ptr<PolyExpr> parse_expr(std::string_view text);
MPoly parse_poly(std::string_view text);

}  // namespace g2sc
