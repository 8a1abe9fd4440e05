#pragma once

// Unit expressions: integer polynomials in the period generator `a`
// (eta_0 of a PeriodField), and their signatures over all embeddings of
// the full real cyclotomic field.

#include "cycsig/circsig.hpp"
#include "cycsig/period_field.hpp"
#include "cycsig/polynomial.hpp"

#include <string>
#include <string_view>

namespace cycsig {

struct UnitExpr {
    std::string source;
    IntPolynomial poly;
};

/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' digits)?
///   primary := digits | 'a' | '(' expr ')'
/// Throws SyntaxError (with offset) or ZeroExpression.
UnitExpr parse_unit_expr(std::string_view text);

/// Signs of e at every embedding b in embedding_set order. One certified
/// sign per root; each embedding inherits the sign of its coset's root.
/// Throws VanishesAtRoot.
SignVector expr_signature(const UnitExpr& e, const PeriodField& pf, const Modulus& mod);

} // namespace cycsig
