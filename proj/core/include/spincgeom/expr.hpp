#pragma once

// Small recursive-descent parser for immersion chart expressions in the
// variables u and v.  Supported: + - * / ^ (right associative), unary minus,
// parentheses, numeric literals, and the functions
//   sin cos tan exp log sqrt sinh cosh tanh.
// Precedence, tightest first: ^ , unary minus, * /, + -.
// Parse failures throw ParseError carrying the byte offset of the offending
// token; evaluation follows IEEE semantics and never throws.

#include <memory>
#include <stdexcept>
#include <string>

namespace spincgeom {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind;
    double value = 0.0;     // Num
    int var = 0;            // Var: 0 = u, 1 = v
    std::string func;       // Call
    ExprPtr a, b;           // children

    double eval(double u, double v) const;
    // Extended-precision evaluation, used where downstream finite differences
    // would otherwise amplify double-precision rounding of the chart.
    long double eval_ld(long double u, long double v) const;
    std::string to_string() const;  // fully parenthesized round-trip form
};

ExprPtr parse_expr(const std::string& src);

ExprPtr make_num(double v);
ExprPtr make_var(int var);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b);
ExprPtr make_call(const std::string& f, ExprPtr a);

}  // namespace spincgeom
