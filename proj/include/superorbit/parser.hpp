#pragma once

#include "superorbit/ring.hpp"

#include <memory>
#include <string>
#include <vector>

namespace superorbit {

/**
 * Expression AST for the text grammar:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | atom ('^' nat)?
 *   atom   := rational | generator | '(' expr ')'
 *   rational  := nat ('/' nat)?
 *   generator := name matching a ring generator (default "x<i>" even,
 *                "t<i>" odd; Unicode xi/theta prefixes normalize to t)
 */
struct Expr {
    enum class Kind { Number, Gen, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    Rational value;               // Number
    std::string name;             // Gen
    int exponent = 0;             // Pow
    std::vector<std::unique_ptr<Expr>> kids;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses text into an AST.  Throws ParseError with line/column.
ExprPtr parse_expression(const std::string& text);

/// Resolves generator names against `sig` and evaluates the AST.
/// Odd generators raised to powers > 1 fold to zero.
SuperPolynomial elaborate(const Expr& e, const SigPtr& sig);

/// parse + elaborate in one step.
SuperPolynomial parse_poly(const std::string& text, const SigPtr& sig);

/// Canonical text form, one term per map entry:
///   - terms joined with " + " / " - ",
///   - coefficient omitted when +/-1 on a non-constant monomial,
///   - factors joined with "*", exponents as "^k" for k >= 2.
/// parse_poly(to_text(p), p.sig()) == p.
std::string to_text(const SuperPolynomial& p);

/// Single monomial in the same convention (no coefficient).
std::string monomial_text(const Monomial& m, const RingSignature& sig);

} // namespace superorbit
