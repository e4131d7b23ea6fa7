#include "nrlab/identity.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace nrlab {

namespace {

ExprPtr make(Expr::Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr, int var = -1) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->var = var;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    Identity parse() {
        ExprPtr lhs = parse_expr();
        skip_ws();
        Identity id;
        if (peek() == '=') {
            ++pos_;
            id.kind = Identity::Kind::Equation;
            id.lhs = std::move(lhs);
            id.rhs = parse_expr();
            skip_ws();
            if (pos_ != src_.size()) fail("unexpected trailing input");
        } else if (match_word("in")) {
            skip_ws();
            if (!match_word("Z")) fail("expected Z after in");
            id.kind = Identity::Kind::CenterMembership;
            id.lhs = std::move(lhs);
            skip_ws();
            if (pos_ != src_.size()) fail("unexpected trailing input");
        } else if (pos_ == src_.size()) {
            fail("expected = or in Z");
        } else {
            fail("unexpected character");
        }
        collect_vars(id);
        return id;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool is_word_char(std::size_t i) const {
        return i < src_.size() && std::isalnum(static_cast<unsigned char>(src_[i]));
    }

    // Matches a whole identifier so "in" does not swallow a leading
    // prefix of something longer.
    bool match_word(const char* w) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(w);
        if (src_.compare(pos_, len, w) != 0) return false;
        if (is_word_char(pos_ + len)) return false;
        pos_ += len;
        return true;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                e = make(Expr::Kind::Add, std::move(e), parse_term());
            } else if (c == '-') {
                ++pos_;
                e = make(Expr::Kind::Sub, std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (peek() == '*') {
            ++pos_;
            e = make(Expr::Kind::Mul, std::move(e), parse_factor());
        }
        return e;
    }

    ExprPtr parse_factor() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '0') {
            ++pos_;
            if (is_word_char(pos_)) fail("unexpected character after 0");
            return make(Expr::Kind::Zero);
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            if (is_word_char(pos_ + 1)) fail("unknown identifier");
            ++pos_;
            return make(Expr::Kind::Var, nullptr, nullptr, c - 'x');
        }
        if (c == '-') {
            ++pos_;
            return make(Expr::Kind::Neg, parse_factor());
        }
        if (c == 'd') {
            if (is_word_char(pos_ + 1)) fail("unknown identifier");
            ++pos_;
            expect('(');
            ExprPtr inner = parse_expr();
            expect(')');
            return make(Expr::Kind::Deriv, std::move(inner));
        }
        if (c == '[') {
            ++pos_;
            ExprPtr a = parse_expr();
            expect(',');
            ExprPtr b = parse_expr();
            expect(']');
            return make(Expr::Kind::Lie, std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr a = parse_expr();
            if (match_word("o")) {
                ExprPtr b = parse_expr();
                expect(')');
                return make(Expr::Kind::Jordan, std::move(a), std::move(b));
            }
            expect(')');
            return a;
        }
        fail("expected a factor");
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected ") + c);
        ++pos_;
    }

    static void collect_vars_rec(const ExprPtr& e, std::set<int>& vars) {
        if (!e) return;
        if (e->kind == Expr::Kind::Var) vars.insert(e->var);
        collect_vars_rec(e->lhs, vars);
        collect_vars_rec(e->rhs, vars);
    }

    static void collect_vars(Identity& id) {
        std::set<int> vars;
        collect_vars_rec(id.lhs, vars);
        collect_vars_rec(id.rhs, vars);
        id.vars.assign(vars.begin(), vars.end());
    }
};

// Printer precedence levels: expr sums bind loosest, then products,
// then factors. Children get parentheses when their level is looser
// than the slot they appear in.
enum class Level { Sum, Product, Factor };

Level level_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return Level::Sum;
        case Expr::Kind::Mul: return Level::Product;
        default: return Level::Factor;
    }
}

void print(const Expr& e, Level slot, std::ostream& os) {
    const Level mine = level_of(e);
    const bool parens = static_cast<int>(mine) < static_cast<int>(slot);
    if (parens) os << "(";
    switch (e.kind) {
        case Expr::Kind::Zero: os << "0"; break;
        case Expr::Kind::Var: os << static_cast<char>('x' + e.var); break;
        case Expr::Kind::Neg:
            os << "-";
            print(*e.lhs, Level::Factor, os);
            break;
        case Expr::Kind::Deriv:
            os << "d(";
            print(*e.lhs, Level::Sum, os);
            os << ")";
            break;
        case Expr::Kind::Add:
            print(*e.lhs, Level::Sum, os);
            os << " + ";
            print(*e.rhs, Level::Product, os);
            break;
        case Expr::Kind::Sub:
            print(*e.lhs, Level::Sum, os);
            os << " - ";
            print(*e.rhs, Level::Product, os);
            break;
        case Expr::Kind::Mul:
            print(*e.lhs, Level::Product, os);
            os << "*";
            print(*e.rhs, Level::Factor, os);
            break;
        case Expr::Kind::Lie:
            os << "[";
            print(*e.lhs, Level::Sum, os);
            os << ",";
            print(*e.rhs, Level::Sum, os);
            os << "]";
            break;
        case Expr::Kind::Jordan:
            // Always parenthesized, so never needs the outer pair.
            os << "(";
            print(*e.lhs, Level::Sum, os);
            os << " o ";
            print(*e.rhs, Level::Sum, os);
            os << ")";
            break;
    }
    if (parens) os << ")";
}

} // namespace

Identity parse_identity(const std::string& source) { return Parser(source).parse(); }

std::string to_string(const Expr& e) {
    std::ostringstream os;
    print(e, Level::Sum, os);
    return os.str();
}

std::string to_string(const Identity& id) {
    std::ostringstream os;
    print(*id.lhs, Level::Sum, os);
    if (id.kind == Identity::Kind::Equation) {
        os << " = ";
        print(*id.rhs, Level::Sum, os);
    } else {
        os << " in Z";
    }
    return os.str();
}

Element eval_expr(const NearRing& n, const DerivationMap& d, const Expr& e, const Env& env) {
    switch (e.kind) {
        case Expr::Kind::Zero: return 0;
        case Expr::Kind::Var: return env[static_cast<std::size_t>(e.var)];
        case Expr::Kind::Neg: return n.neg(eval_expr(n, d, *e.lhs, env));
        case Expr::Kind::Deriv:
            return d[static_cast<std::size_t>(eval_expr(n, d, *e.lhs, env))];
        case Expr::Kind::Add:
            return n.add(eval_expr(n, d, *e.lhs, env), eval_expr(n, d, *e.rhs, env));
        case Expr::Kind::Sub:
            return n.sub(eval_expr(n, d, *e.lhs, env), eval_expr(n, d, *e.rhs, env));
        case Expr::Kind::Mul:
            return n.mul(eval_expr(n, d, *e.lhs, env), eval_expr(n, d, *e.rhs, env));
        case Expr::Kind::Lie:
            return lie(n, eval_expr(n, d, *e.lhs, env), eval_expr(n, d, *e.rhs, env));
        case Expr::Kind::Jordan:
            return jordan(n, eval_expr(n, d, *e.lhs, env), eval_expr(n, d, *e.rhs, env));
    }
    return 0; // unreachable
}

std::optional<IdentityFailure>
identity_violation(const NearRing& n, const DerivationMap& d, const Identity& id,
                   const std::vector<bool>* center) {
    std::vector<bool> local_center;
    if (id.kind == Identity::Kind::CenterMembership && !center) {
        local_center = center_mask(n);
        center = &local_center;
    }

    // Iterate only over variables appearing in the identity; absent
    // variables stay pinned at 0 so a closed identity checks once.
    Env env{0, 0, 0};
    auto assign = [&](auto&& self, std::size_t vi) -> std::optional<IdentityFailure> {
        if (vi == id.vars.size()) {
            Element l = eval_expr(n, d, *id.lhs, env);
            if (id.kind == Identity::Kind::Equation) {
                Element r = eval_expr(n, d, *id.rhs, env);
                if (l != r) return IdentityFailure{env, l, r};
            } else if (!(*center)[static_cast<std::size_t>(l)]) {
                return IdentityFailure{env, l, 0};
            }
            return std::nullopt;
        }
        const auto slot = static_cast<std::size_t>(id.vars[vi]);
        for (Element v = 0; v < n.order; ++v) {
            env[slot] = v;
            if (auto bad = self(self, vi + 1)) return bad;
        }
        env[slot] = 0;
        return std::nullopt;
    };
    return assign(assign, 0);
}

bool holds_for_all(const NearRing& n, const DerivationMap& d, const Identity& id,
                   const std::vector<bool>* center) {
    return !identity_violation(n, d, id, center).has_value();
}

} // namespace nrlab
