#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gq/ideal.hpp"
#include "gq/oracle.hpp"

namespace gq {

struct EvalConfig {
    Rat order = Rat(8);  // truncation order used by /, invert, sqrt, polar, ...
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression AST. Quaternion multiplication is noncommutative, so no
/// reordering or simplification happens at parse time; `a/b` is sugar for
/// a * invert(b) at the configured order.
struct Expr {
    enum class Kind {
        number,       // integer literal
        floating,     // approx literal (1.25 or 1.25~)
        eps_power,    // e^r
        o_term,       // O(e^r)
        chi,          // chi(pre=..;per=..)
        braced,       // {set : expr | set : expr ...}
        var,          // binding or basis unit i/j/k
        unary_minus,  // -x
        binary,       // + - * / =(equality)
        call,         // name(args)
    };

    Kind kind;
    Rat number;       // number / eps_power / o_term payload
    double floating = 0.0;
    BlockSet set;     // chi payload
    std::string name;  // var / call payload
    char op = 0;       // binary payload; '=' stands for ==
    std::vector<ExprPtr> args;
    std::vector<std::pair<BlockSet, ExprPtr>> branches;  // braced payload
    std::size_t begin = 0, end = 0;  // byte span in the source text
};

struct Statement {
    std::optional<std::string> let_name;  // set for `let name = expr`
    ExprPtr expr;
    std::string source;
};

/// Throws Error(ParseError) with a byte position on malformed input.
Statement parse_statement(const std::string& text);

struct ValuationResult {
    std::optional<Rat> v;  // nullopt = +infinity
};
struct PolarValue {
    GenQuaternion theta;
    GenScalar n;
};
struct ShadowResult {
    std::optional<std::array<Rat, 4>> a;
};
struct IdemResult {
    std::optional<BlockSet> set;
};

using Value = std::variant<GenScalar, GenQuaternion, bool, double, ValuationResult, BlockSet,
                           FgIdeal, PolarValue, ShadowResult, IdemResult, OracleReport>;

using Env = std::map<std::string, Value>;

/// Evaluates, binding `let` results into env. Library errors surface as
/// Error(EvalError) carrying the inner kind and the offending subexpression.
Value run_statement(const Statement& st, Env& env, const EvalConfig& cfg);

Value evaluate(const ExprPtr& e, const Env& env, const EvalConfig& cfg, const std::string& source);

/// Canonical text; parse . print is the identity on canonical forms.
std::string print_value(const Value& v);

}  // namespace gq
