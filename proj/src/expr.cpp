#include "gq/expr.hpp"

#include <cctype>
#include <cstdio>
#include <functional>

#include "gq/error.hpp"

namespace gq {

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
    enum class T { end, integer, floating, ident, blockset, punct };
    T type = T::end;
    std::string raw;      // source slice
    BigInt int_value;     // integer payload
    double float_value = 0.0;
    BlockSet set;         // blockset payload
    std::size_t pos = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            bool is_float = false;
            if (j < n && src[j] == '.' && j + 1 < n &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                is_float = true;
                ++j;
                while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            // Exponent part; only when it cannot be the asymptotic symbol e.
            if (j < n && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    is_float = true;
                    ++k;
                    while (k < n && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                    j = k;
                }
            }
            if (j < n && src[j] == '~') {
                is_float = true;
                ++j;
            }
            t.raw = src.substr(i, j - i);
            if (is_float) {
                t.type = Token::T::floating;
                std::string num = t.raw;
                if (!num.empty() && num.back() == '~') num.pop_back();
                t.float_value = std::stod(num);
            } else {
                t.type = Token::T::integer;
                t.int_value = BigInt(t.raw);
            }
            i = j;
            out.push_back(std::move(t));
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < n && ident_char(src[j])) ++j;
            std::string name = src.substr(i, j - i);
            if (name == "pre" && j < n && src[j] == '=') {
                // Block set literal: pre=<bits>;per=<bits>
                std::size_t k = j + 1;
                while (k < n && (src[k] == '0' || src[k] == '1')) ++k;
                if (k + 4 < n && src.substr(k, 5) == ";per=") {
                    k += 5;
                    std::size_t bits = k;
                    while (k < n && (src[k] == '0' || src[k] == '1')) ++k;
                    if (k > bits) {
                        t.type = Token::T::blockset;
                        t.raw = src.substr(i, k - i);
                        t.set = BlockSet::parse(t.raw);
                        i = k;
                        out.push_back(std::move(t));
                        continue;
                    }
                }
                throw Error(ErrKind::ParseError, "malformed block set literal").at_position(i);
            }
            if (j < n && src[j] == '?') ++j;  // names like idem?
            t.type = Token::T::ident;
            t.raw = src.substr(i, j - i);
            i = j;
            out.push_back(std::move(t));
            continue;
        }
        if (c == '=' && i + 1 < n && src[i + 1] == '=') {
            t.type = Token::T::punct;
            t.raw = "==";
            i += 2;
            out.push_back(std::move(t));
            continue;
        }
        if (std::string("+-*/(){}|:,^=").find(c) != std::string::npos) {
            t.type = Token::T::punct;
            t.raw = std::string(1, c);
            ++i;
            out.push_back(std::move(t));
            continue;
        }
        throw Error(ErrKind::ParseError, std::string("unexpected character '") + c + "'")
            .at_position(i);
    }
    Token end;
    end.type = Token::T::end;
    end.pos = n;
    out.push_back(std::move(end));
    return out;
}

// ---------------------------------------------------------------------------
// Parser

ExprPtr mk(Expr e) { return std::make_shared<Expr>(std::move(e)); }

struct Parser {
    const std::vector<Token>& ts;
    std::size_t p = 0;

    const Token& peek() const { return ts[p]; }
    const Token& get() { return ts[p++]; }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw Error(ErrKind::ParseError, msg + " at offset " + std::to_string(pos))
            .at_position(pos);
    }

    bool at_punct(const char* s) const {
        return peek().type == Token::T::punct && peek().raw == s;
    }
    void expect_punct(const char* s) {
        if (!at_punct(s)) fail(std::string("expected '") + s + "'", peek().pos);
        get();
    }
    bool at_ident(const char* s) const {
        return peek().type == Token::T::ident && peek().raw == s;
    }

    std::size_t end_of_last() const { return ts[p - 1].pos + ts[p - 1].raw.size(); }

    Rat signed_rational() {
        bool neg = false;
        if (at_punct("-")) {
            get();
            neg = true;
        }
        if (peek().type != Token::T::integer) fail("expected an integer", peek().pos);
        BigInt num = get().int_value;
        BigInt den = 1;
        if (at_punct("/")) {
            get();
            if (peek().type != Token::T::integer) fail("expected a denominator", peek().pos);
            den = get().int_value;
            if (den == 0) fail("zero denominator", ts[p - 1].pos);
        }
        Rat r(num, den);
        return neg ? -r : r;
    }

    Rat exponent_literal() {
        if (at_punct("(")) {
            get();
            Rat r = signed_rational();
            expect_punct(")");
            return r;
        }
        return signed_rational();
    }

    ExprPtr primary() {
        const Token& t = peek();
        std::size_t begin = t.pos;
        if (t.type == Token::T::integer) {
            get();
            Expr e{};
            e.kind = Expr::Kind::number;
            e.number = Rat(t.int_value);
            e.begin = begin;
            e.end = end_of_last();
            return mk(std::move(e));
        }
        if (t.type == Token::T::floating) {
            get();
            Expr e{};
            e.kind = Expr::Kind::floating;
            e.floating = t.float_value;
            e.begin = begin;
            e.end = end_of_last();
            return mk(std::move(e));
        }
        if (t.type == Token::T::ident) {
            if (t.raw == "e") {
                get();
                Rat r(1);
                if (at_punct("^")) {
                    get();
                    r = exponent_literal();
                }
                Expr e{};
                e.kind = Expr::Kind::eps_power;
                e.number = r;
                e.begin = begin;
                e.end = end_of_last();
                return mk(std::move(e));
            }
            if (t.raw == "O") {
                get();
                expect_punct("(");
                if (!at_ident("e")) fail("O-term must contain e^<order>", peek().pos);
                get();
                expect_punct("^");
                Rat r = exponent_literal();
                expect_punct(")");
                Expr e{};
                e.kind = Expr::Kind::o_term;
                e.number = r;
                e.begin = begin;
                e.end = end_of_last();
                return mk(std::move(e));
            }
            if (t.raw == "chi") {
                get();
                expect_punct("(");
                if (peek().type != Token::T::blockset)
                    fail("chi needs a block set literal pre=..;per=..", peek().pos);
                BlockSet s = get().set;
                expect_punct(")");
                Expr e{};
                e.kind = Expr::Kind::chi;
                e.set = std::move(s);
                e.begin = begin;
                e.end = end_of_last();
                return mk(std::move(e));
            }
            get();
            if (at_punct("(")) {
                get();
                std::vector<ExprPtr> args;
                if (!at_punct(")")) {
                    args.push_back(expr());
                    while (at_punct(",")) {
                        get();
                        args.push_back(expr());
                    }
                }
                expect_punct(")");
                Expr e{};
                e.kind = Expr::Kind::call;
                e.name = t.raw;
                e.args = std::move(args);
                e.begin = begin;
                e.end = end_of_last();
                return mk(std::move(e));
            }
            Expr e{};
            e.kind = Expr::Kind::var;
            e.name = t.raw;
            e.begin = begin;
            e.end = end_of_last();
            return mk(std::move(e));
        }
        if (at_punct("(")) {
            get();
            ExprPtr inner = expr();
            expect_punct(")");
            return inner;
        }
        if (at_punct("{")) {
            get();
            Expr e{};
            e.kind = Expr::Kind::braced;
            for (;;) {
                if (peek().type != Token::T::blockset)
                    fail("branch must start with a block set literal", peek().pos);
                BlockSet s = get().set;
                expect_punct(":");
                e.branches.emplace_back(std::move(s), expr());
                if (at_punct("|")) {
                    get();
                    continue;
                }
                break;
            }
            expect_punct("}");
            e.begin = begin;
            e.end = end_of_last();
            return mk(std::move(e));
        }
        fail("expected an expression", t.pos);
    }

    ExprPtr unary() {
        if (at_punct("-")) {
            std::size_t begin = peek().pos;
            get();
            Expr e{};
            e.kind = Expr::Kind::unary_minus;
            e.args.push_back(unary());
            e.begin = begin;
            e.end = e.args.front()->end;
            return mk(std::move(e));
        }
        return primary();
    }

    ExprPtr term() {
        ExprPtr left = unary();
        for (;;) {
            if (at_punct("*") || at_punct("/")) {
                char op = get().raw[0];
                ExprPtr right = unary();
                Expr e{};
                e.kind = Expr::Kind::binary;
                e.op = op;
                e.begin = left->begin;
                e.end = right->end;
                e.args = {std::move(left), std::move(right)};
                left = mk(std::move(e));
                continue;
            }
            // Juxtaposition (2k, (3/4)i) multiplies.
            if (peek().type == Token::T::ident) {
                ExprPtr right = unary();
                Expr e{};
                e.kind = Expr::Kind::binary;
                e.op = '*';
                e.begin = left->begin;
                e.end = right->end;
                e.args = {std::move(left), std::move(right)};
                left = mk(std::move(e));
                continue;
            }
            return left;
        }
    }

    ExprPtr additive() {
        ExprPtr left = term();
        while (at_punct("+") || at_punct("-")) {
            char op = get().raw[0];
            ExprPtr right = term();
            Expr e{};
            e.kind = Expr::Kind::binary;
            e.op = op;
            e.begin = left->begin;
            e.end = right->end;
            e.args = {std::move(left), std::move(right)};
            left = mk(std::move(e));
        }
        return left;
    }

    ExprPtr expr() {
        ExprPtr left = additive();
        if (at_punct("==")) {
            get();
            ExprPtr right = additive();
            Expr e{};
            e.kind = Expr::Kind::binary;
            e.op = '=';
            e.begin = left->begin;
            e.end = right->end;
            e.args = {std::move(left), std::move(right)};
            return mk(std::move(e));
        }
        return left;
    }
};

const char* kReserved[] = {"e", "i", "j", "k", "O", "chi", "let"};

bool reserved_name(const std::string& n) {
    for (const char* r : kReserved)
        if (n == r) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Evaluation

std::string snippet(const std::string& src, const Expr& e) {
    if (e.begin >= src.size() || e.end <= e.begin) return "...";
    return src.substr(e.begin, e.end - e.begin);
}

[[noreturn]] void eval_fail(const std::string& msg, const std::string& src, const Expr& e) {
    throw Error(ErrKind::EvalError, msg + " in `" + snippet(src, e) + "`");
}

GenQuaternion to_quat(const Value& v, const std::string& src, const Expr& e) {
    if (const auto* s = std::get_if<GenScalar>(&v)) return GenQuaternion::from_scalar(*s);
    if (const auto* q = std::get_if<GenQuaternion>(&v)) return *q;
    eval_fail("expected a scalar or quaternion", src, e);
}

const GenScalar& to_scalar(const Value& v, const std::string& src, const Expr& e) {
    if (const auto* s = std::get_if<GenScalar>(&v)) return *s;
    eval_fail("expected a scalar", src, e);
}

std::optional<Rat> as_constant(const GenScalar& x) {
    if (x.is_exact_zero()) return Rat(0);
    if (x.branches().size() != 1) return std::nullopt;
    const PuiseuxGerm& g = x.branches().front().germ;
    if (!g.is_exact() || g.terms().size() != 1) return std::nullopt;
    const GermTerm& t = g.terms().front();
    if (!t.exp.is_zero() || t.coeff.is_approx()) return std::nullopt;
    return t.coeff.exact();
}

bool holds_quat(const Value& v) { return std::holds_alternative<GenQuaternion>(v); }

Value eval_node(const ExprPtr& node, const Env& env, const EvalConfig& cfg,
                const std::string& src);

Value eval_binary(const Expr& e, const Env& env, const EvalConfig& cfg, const std::string& src) {
    Value lhs = eval_node(e.args[0], env, cfg, src);
    Value rhs = eval_node(e.args[1], env, cfg, src);
    if (e.op == '=') {
        if (const auto* lb = std::get_if<bool>(&lhs)) {
            const auto* rb = std::get_if<bool>(&rhs);
            if (!rb) eval_fail("cannot compare a boolean with a non-boolean", src, e);
            return *lb == *rb;
        }
        if (const auto* ls = std::get_if<BlockSet>(&lhs)) {
            const auto* rs = std::get_if<BlockSet>(&rhs);
            if (!rs) eval_fail("cannot compare a block set with a non-set", src, e);
            return *ls == *rs;
        }
        if (holds_quat(lhs) || holds_quat(rhs))
            return to_quat(lhs, src, e).equals(to_quat(rhs, src, e));
        return to_scalar(lhs, src, e).equals(to_scalar(rhs, src, e));
    }
    bool quat = holds_quat(lhs) || holds_quat(rhs);
    switch (e.op) {
        case '+':
            if (quat) return to_quat(lhs, src, e) + to_quat(rhs, src, e);
            return to_scalar(lhs, src, e) + to_scalar(rhs, src, e);
        case '-':
            if (quat) return to_quat(lhs, src, e) - to_quat(rhs, src, e);
            return to_scalar(lhs, src, e) - to_scalar(rhs, src, e);
        case '*':
            if (quat) return to_quat(lhs, src, e) * to_quat(rhs, src, e);
            return to_scalar(lhs, src, e) * to_scalar(rhs, src, e);
        case '/': {
            // Sugar for multiplication by the inverse at the configured order.
            if (holds_quat(rhs)) {
                GenQuaternion inv = std::get<GenQuaternion>(rhs).invert(cfg.order);
                return to_quat(lhs, src, e) * inv;
            }
            GenScalar inv = to_scalar(rhs, src, e).invert(cfg.order);
            if (quat) return to_quat(lhs, src, e) * GenQuaternion::from_scalar(inv);
            return to_scalar(lhs, src, e) * inv;
        }
        default: eval_fail("unknown operator", src, e);
    }
}

std::vector<GenQuaternion> gen_list(const std::vector<Value>& vals, std::size_t from,
                                    const std::string& src, const Expr& e) {
    std::vector<GenQuaternion> gens;
    for (std::size_t i = from; i < vals.size(); ++i) gens.push_back(to_quat(vals[i], src, e));
    return gens;
}

Value eval_call(const Expr& e, const Env& env, const EvalConfig& cfg, const std::string& src) {
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval_node(a, env, cfg, src));
    const std::string& f = e.name;
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            eval_fail(f + " takes " + std::to_string(n) + " argument(s)", src, e);
    };

    if (f == "alpha") {
        need(1);
        auto r = as_constant(to_scalar(args[0], src, e));
        if (!r) eval_fail("alpha needs an exact rational argument", src, e);
        return GenScalar::alpha(*r);
    }
    if (f == "V") {
        need(1);
        if (holds_quat(args[0])) return ValuationResult{std::get<GenQuaternion>(args[0]).valuation()};
        return ValuationResult{to_scalar(args[0], src, e).valuation()};
    }
    if (f == "sharpnorm") {
        need(1);
        if (holds_quat(args[0])) return std::get<GenQuaternion>(args[0]).sharp_norm();
        return to_scalar(args[0], src, e).sharp_norm();
    }
    if (f == "d") {
        need(2);
        return to_quat(args[0], src, e).metric_d(to_quat(args[1], src, e));
    }
    if (f == "norm") {
        need(1);
        if (holds_quat(args[0])) return std::get<GenQuaternion>(args[0]).norm(cfg.order);
        return to_scalar(args[0], src, e).abs();
    }
    if (f == "normsq") {
        need(1);
        return to_quat(args[0], src, e).normsq();
    }
    if (f == "conj") {
        need(1);
        return to_quat(args[0], src, e).conj();
    }
    if (f == "shadow") {
        need(1);
        if (holds_quat(args[0])) return ShadowResult{std::get<GenQuaternion>(args[0]).shadow()};
        auto s = to_scalar(args[0], src, e).shadow();
        if (!s) return ShadowResult{std::nullopt};
        return ShadowResult{std::array<Rat, 4>{*s, Rat(0), Rat(0), Rat(0)}};
    }
    if (f == "sqrt") {
        need(1);
        return to_scalar(args[0], src, e).sqrt(cfg.order);
    }
    if (f == "abs") {
        need(1);
        return to_scalar(args[0], src, e).abs();
    }
    if (f == "invert") {
        need(1);
        if (holds_quat(args[0])) return std::get<GenQuaternion>(args[0]).invert(cfg.order);
        return to_scalar(args[0], src, e).invert(cfg.order);
    }
    if (f == "idem?") {
        need(1);
        if (holds_quat(args[0])) return IdemResult{std::get<GenQuaternion>(args[0]).as_idempotent()};
        return IdemResult{to_scalar(args[0], src, e).as_idempotent()};
    }
    if (f == "annihilator") {
        need(1);
        if (holds_quat(args[0]))
            return std::get<GenQuaternion>(args[0]).zero_divisor_witness().to_scalar();
        return to_scalar(args[0], src, e).annihilator_idempotent().to_scalar();
    }
    if (f == "exchange") {
        need(1);
        if (holds_quat(args[0]))
            return std::get<GenQuaternion>(args[0]).exchange_idempotent().to_scalar();
        return to_scalar(args[0], src, e).exchange_idempotent().to_scalar();
    }
    if (f == "polar") {
        need(1);
        auto [theta, n] = to_quat(args[0], src, e).polar(cfg.order);
        return PolarValue{std::move(theta), std::move(n)};
    }
    if (f == "bezout") {
        if (args.empty()) eval_fail("bezout needs at least one generator", src, e);
        return FgIdeal::span(gen_list(args, 0, src, e)).principal();
    }
    if (f == "member") {
        if (args.size() < 2) eval_fail("member needs an element and generators", src, e);
        FgIdeal ideal = FgIdeal::span(gen_list(args, 1, src, e));
        return ideal.contains_element(to_quat(args[0], src, e));
    }
    if (f == "essential") {
        if (args.empty()) eval_fail("essential needs at least one generator", src, e);
        return FgIdeal::span(gen_list(args, 0, src, e)).is_essential();
    }
    if (f == "oracle") {
        need(1);
        if (holds_quat(args[0])) {
            const auto& q = std::get<GenQuaternion>(args[0]);
            return check_unit_threshold(q, scale_witness_exponent(q));
        }
        const GenScalar& x = to_scalar(args[0], src, e);
        return check_unit_threshold(x, scale_witness_exponent(x));
    }
    eval_fail("unknown function " + f, src, e);
}

Value eval_node(const ExprPtr& node, const Env& env, const EvalConfig& cfg,
                const std::string& src) {
    const Expr& e = *node;
    try {
        switch (e.kind) {
            case Expr::Kind::number: return GenScalar::constant(e.number);
            case Expr::Kind::floating:
                return GenScalar(PuiseuxGerm::make({{Rat(0), Coeff::approximate(e.floating)}},
                                                   std::nullopt));
            case Expr::Kind::eps_power: return GenScalar::alpha(e.number);
            case Expr::Kind::o_term: return GenScalar(PuiseuxGerm::o_term(e.number));
            case Expr::Kind::chi: return GenScalar::chi(e.set);
            case Expr::Kind::braced: {
                // Assemble the piecewise scalar sum chi_A * x_A; each branch
                // expression must itself be a scalar.
                std::vector<ScalarBranch> parts;
                for (const auto& [set, sub] : e.branches) {
                    Value v = eval_node(sub, env, cfg, src);
                    const GenScalar& s = to_scalar(v, src, *sub);
                    // Restrict s to the branch set: the germ of s on each
                    // piece of the set.
                    for (const auto& b : s.branches()) {
                        BlockSet piece = b.set.intersect(set);
                        if (!piece.is_empty()) parts.push_back({std::move(piece), b.germ});
                    }
                }
                return GenScalar::piecewise(std::move(parts));
            }
            case Expr::Kind::var: {
                if (e.name == "i") return GenQuaternion::unit_i();
                if (e.name == "j") return GenQuaternion::unit_j();
                if (e.name == "k") return GenQuaternion::unit_k();
                auto it = env.find(e.name);
                if (it == env.end()) eval_fail("unbound name " + e.name, src, e);
                return it->second;
            }
            case Expr::Kind::unary_minus: {
                Value v = eval_node(e.args[0], env, cfg, src);
                if (holds_quat(v)) return -std::get<GenQuaternion>(v);
                return -to_scalar(v, src, e);
            }
            case Expr::Kind::binary: return eval_binary(e, env, cfg, src);
            case Expr::Kind::call: return eval_call(e, env, cfg, src);
        }
        eval_fail("unreachable expression kind", src, e);
    } catch (Error& err) {
        if (err.kind() == ErrKind::EvalError || err.kind() == ErrKind::ParseError) throw;
        throw Error(ErrKind::EvalError,
                    std::string(err.what()) + " (while evaluating `" + snippet(src, e) + "`)")
            .wrapping(err.kind());
    }
}

}  // namespace

Statement parse_statement(const std::string& text) {
    std::vector<Token> ts = lex(text);
    Parser parser{ts};
    Statement st;
    st.source = text;
    if (parser.peek().type == Token::T::ident && parser.peek().raw == "let") {
        parser.get();
        if (parser.peek().type != Token::T::ident)
            parser.fail("let needs a name", parser.peek().pos);
        std::string name = parser.get().raw;
        if (reserved_name(name)) parser.fail("name '" + name + "' is reserved", parser.ts[parser.p - 1].pos);
        parser.expect_punct("=");
        st.let_name = std::move(name);
    }
    st.expr = parser.expr();
    if (parser.peek().type != Token::T::end)
        parser.fail("unexpected trailing input", parser.peek().pos);
    return st;
}

Value evaluate(const ExprPtr& e, const Env& env, const EvalConfig& cfg, const std::string& source) {
    return eval_node(e, env, cfg, source);
}

Value run_statement(const Statement& st, Env& env, const EvalConfig& cfg) {
    Value v = eval_node(st.expr, env, cfg, st.source);
    if (st.let_name) env[*st.let_name] = v;
    return v;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string double_text(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string classical_text(const std::array<Rat, 4>& a) {
    GenQuaternion q(GenScalar::constant(a[0]), GenScalar::constant(a[1]),
                    GenScalar::constant(a[2]), GenScalar::constant(a[3]));
    return q.to_string();
}

}  // namespace

std::string print_value(const Value& v) {
    struct Printer {
        std::string operator()(const GenScalar& s) const { return s.to_string(); }
        std::string operator()(const GenQuaternion& q) const { return q.to_string(); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(double d) const { return double_text(d); }
        std::string operator()(const ValuationResult& r) const {
            return r.v ? r.v->to_string() : "+inf";
        }
        std::string operator()(const BlockSet& s) const { return s.to_string(); }
        std::string operator()(const FgIdeal& i) const { return i.to_string(); }
        std::string operator()(const PolarValue& p) const {
            return "(theta = " + p.theta.to_string() + ", n = " + p.n.to_string() + ")";
        }
        std::string operator()(const ShadowResult& s) const {
            return s.a ? classical_text(*s.a) : "None";
        }
        std::string operator()(const IdemResult& r) const {
            return r.set ? r.set->to_string() : "NotIdempotent";
        }
        std::string operator()(const OracleReport& r) const {
            std::string s = std::string(verdict_name(r.verdict)) + " (" + r.decision +
                            ", margin " + double_text(r.margin);
            if (r.counterexample)
                s += ", counterexample eps=" + double_text(r.counterexample->eps) +
                     " value=" + double_text(r.counterexample->value);
            return s + ")";
        }
    };
    return std::visit(Printer{}, v);
}

}  // namespace gq
