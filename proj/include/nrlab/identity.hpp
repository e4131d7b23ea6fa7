#pragma once

// Small expression language for element identities over a near-ring
// with a distinguished map d. Grammar, in precedence order:
//
//   identity := expr "=" expr | expr "in Z"
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := "0" | "x" | "y" | "z"
//             | "-" factor
//             | "d" "(" expr ")"
//             | "[" expr "," expr "]"          Lie bracket
//             | "(" expr "o" expr ")"          Jordan product
//             | "(" expr ")"
//
// Whitespace is insignificant. "in Z" asserts membership in the
// multiplicative center.

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrlab/derivations.hpp"
#include "nrlab/near_ring.hpp"

namespace nrlab {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Zero, Var, Neg, Deriv, Add, Sub, Mul, Lie, Jordan };
    Kind kind;
    int var = -1;   // 0,1,2 for x,y,z when kind == Var
    ExprPtr lhs;    // sole child for Neg/Deriv
    ExprPtr rhs;
};

struct Identity {
    enum class Kind { Equation, CenterMembership };
    Kind kind;
    ExprPtr lhs;
    ExprPtr rhs;              // null for CenterMembership
    std::vector<int> vars;    // distinct variables used, ascending
};

struct ParseError : std::runtime_error {
    std::size_t position; // byte offset into the source string
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// Throws ParseError with a byte-accurate position on malformed input.
Identity parse_identity(const std::string& source);

// Canonical rendering; parse(to_string(parse(s))) reproduces the AST.
std::string to_string(const Expr& e);
std::string to_string(const Identity& id);

// Variable bindings for x, y, z by index.
using Env = std::array<Element, 3>;

Element eval_expr(const NearRing& n, const DerivationMap& d, const Expr& e, const Env& env);

// Checks the identity over all assignments of its variables. For a
// CenterMembership identity a precomputed center mask may be supplied
// to avoid recomputation inside sweeps.
struct IdentityFailure {
    Env env;
    Element lhs_value;
    Element rhs_value; // meaningless for CenterMembership
};
std::optional<IdentityFailure>
identity_violation(const NearRing& n, const DerivationMap& d, const Identity& id,
                   const std::vector<bool>* center = nullptr);

bool holds_for_all(const NearRing& n, const DerivationMap& d, const Identity& id,
                   const std::vector<bool>* center = nullptr);

} // namespace nrlab
