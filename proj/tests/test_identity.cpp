#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "nrlab/identity.hpp"

using namespace nrlab;

namespace {

std::size_t error_position(const std::string& source) {
    try {
        parse_identity(source);
    } catch (const ParseError& e) {
        return e.position;
    }
    FAIL("expected a parse error for: ", source);
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("parsing recognizes the identity shapes") {
    const Identity product_rule = parse_identity("d(x*y) = x*d(y) + d(x)*y");
    CHECK(product_rule.kind == Identity::Kind::Equation);
    CHECK(product_rule.vars == std::vector<int>{0, 1});
    CHECK(product_rule.lhs->kind == Expr::Kind::Deriv);
    CHECK(product_rule.rhs->kind == Expr::Kind::Add);

    const Identity membership = parse_identity("d(x) in Z");
    CHECK(membership.kind == Identity::Kind::CenterMembership);
    CHECK(membership.rhs == nullptr);
    CHECK(membership.vars == std::vector<int>{0});

    const Identity bracket = parse_identity("[d(x),y] = [d(x),d(y)]");
    CHECK(bracket.lhs->kind == Expr::Kind::Lie);

    const Identity jordan_id = parse_identity("(x o y) = (y o x)");
    CHECK(jordan_id.lhs->kind == Expr::Kind::Jordan);
    CHECK(jordan_id.vars == std::vector<int>{0, 1});

    const Identity closed = parse_identity("0 = 0");
    CHECK(closed.vars.empty());
}

TEST_CASE("parse errors carry byte-accurate positions") {
    CHECK(error_position("d(x**y) = 0") == 4);
    CHECK(error_position("") == 0);
    CHECK(error_position("q") == 0);
    CHECK(error_position("x + ") == 4);
    CHECK(error_position("x = y = z") == 6);
    CHECK(error_position("x in Q") == 5);
    CHECK(error_position("(x o y") == 6);
    CHECK(error_position("xx = 0") == 0);
    CHECK(error_position("d2(x) = 0") == 0);
    CHECK(error_position("01 = 0") == 1);
    CHECK(error_position("x y = 0") == 2);
}

TEST_CASE("printer respects precedence and round-trips") {
    auto reprint = [](const std::string& s) { return to_string(parse_identity(s)); };
    CHECK(reprint("x*(y+z) = 0") == "x*(y + z) = 0");
    CHECK(reprint("x*y+z = 0") == "x*y + z = 0");
    CHECK(reprint("-(x+y) = 0") == "-(x + y) = 0");
    CHECK(reprint("-x*y = 0") == "-x*y = 0");
    CHECK(reprint("x - (y + z) = 0") == "x - (y + z) = 0");
    CHECK(reprint("x - y + z = 0") == "x - y + z = 0");
    CHECK(reprint("(x o y)*z = 0") == "(x o y)*z = 0");
    CHECK(reprint("[x+y,z] in Z") == "[x + y,z] in Z");
    CHECK(reprint("d(x)*d(y) = d(x*y)") == "d(x)*d(y) = d(x*y)");
}

TEST_CASE("evaluation matches the table operations") {
    const NearRing z3 = fixtures::z3_ring();
    const DerivationMap zero_d = {0, 0, 0};
    const Identity jordan_id = parse_identity("(x o y) = 0");
    CHECK(eval_expr(z3, zero_d, *jordan_id.lhs, {1, 2, 0}) == 1); // 1*2 + 2*1 mod 3

    const NearRing z2z = fixtures::z2_zero();
    const DerivationMap d = {0, 1};
    CHECK(holds_for_all(z2z, d, parse_identity("d(x*y) = 0")));

    const Identity sub_id = parse_identity("x - y = 0");
    CHECK(eval_expr(z3, zero_d, *sub_id.lhs, {1, 2, 0}) == 2); // 1 + (-2) = 1 + 1
}

TEST_CASE("violation search walks environments in order") {
    const NearRing s3 = fixtures::s3_zero();
    const DerivationMap zero_d(6, 0);
    const auto bad = identity_violation(s3, zero_d, parse_identity("x + y = y + x"));
    REQUIRE(bad.has_value());
    CHECK(bad->env == Env{1, 2, 0});
    CHECK(bad->lhs_value == 4);
    CHECK(bad->rhs_value == 3);

    CHECK(holds_for_all(fixtures::z3_ring(), {0, 0, 0}, parse_identity("x + y = y + x")));
}

TEST_CASE("center membership uses the mask, supplied or computed") {
    const NearRing rp = fixtures::z2_rproj();
    const DerivationMap zero_d = {0, 0};
    const Identity member = parse_identity("x in Z");

    const auto computed = identity_violation(rp, zero_d, member);
    REQUIRE(computed.has_value());
    CHECK(computed->env[0] == 0); // even 0 is non-central here
    CHECK(computed->lhs_value == 0);

    const std::vector<bool> mask = center_mask(rp);
    const auto supplied = identity_violation(rp, zero_d, member, &mask);
    REQUIRE(supplied.has_value());
    CHECK(supplied->env == computed->env);

    const NearRing z3 = fixtures::z3_ring();
    CHECK(holds_for_all(z3, {0, 0, 0}, parse_identity("x in Z")));
}

TEST_CASE("absent variables stay pinned at zero") {
    const NearRing z2z = fixtures::z2_zero();
    const auto bad = identity_violation(z2z, {0, 1}, parse_identity("d(x) = 0"));
    REQUIRE(bad.has_value());
    CHECK(bad->env == Env{1, 0, 0});
    CHECK(bad->lhs_value == 1);
}

TEST_CASE("random expressions survive print-parse-print and evaluate identically") {
    std::mt19937 rng(12345);
    const NearRing z4 = fixtures::z4_ring();
    const DerivationMap d = {0, 0, 2, 0};

    auto gen = [&](auto&& self, int depth) -> ExprPtr {
        auto node = [&](Expr::Kind k, ExprPtr lhs, ExprPtr rhs = nullptr, int var = -1) {
            auto e = std::make_shared<Expr>();
            e->kind = k;
            e->var = var;
            e->lhs = std::move(lhs);
            e->rhs = std::move(rhs);
            return ExprPtr(std::move(e));
        };
        const int leaf = std::uniform_int_distribution<int>(0, 3)(rng);
        if (depth == 0 || leaf == 0) {
            if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
                return node(Expr::Kind::Zero, nullptr);
            return node(Expr::Kind::Var, nullptr, nullptr,
                        std::uniform_int_distribution<int>(0, 2)(rng));
        }
        switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
            case 0: return node(Expr::Kind::Neg, self(self, depth - 1));
            case 1: return node(Expr::Kind::Deriv, self(self, depth - 1));
            case 2: return node(Expr::Kind::Add, self(self, depth - 1), self(self, depth - 1));
            case 3: return node(Expr::Kind::Sub, self(self, depth - 1), self(self, depth - 1));
            case 4: return node(Expr::Kind::Mul, self(self, depth - 1), self(self, depth - 1));
            case 5: return node(Expr::Kind::Lie, self(self, depth - 1), self(self, depth - 1));
            default:
                return node(Expr::Kind::Jordan, self(self, depth - 1), self(self, depth - 1));
        }
    };

    for (int round = 0; round < 300; ++round) {
        const ExprPtr expr = gen(gen, 4);
        const std::string printed = to_string(*expr);
        const Identity reparsed = parse_identity(printed + " = 0");
        CHECK(to_string(*reparsed.lhs) == printed);
        for (Element x = 0; x < 4; ++x)
            for (Element y = 0; y < 4; ++y)
                for (Element z = 0; z < 4; ++z) {
                    const Env env{x, y, z};
                    CHECK(eval_expr(z4, d, *expr, env) ==
                          eval_expr(z4, d, *reparsed.lhs, env));
                }
    }
}
