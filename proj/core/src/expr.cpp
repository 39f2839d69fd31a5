#include "spincgeom/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace spincgeom {

namespace {

using Fn = double (*)(double);
using FnLd = long double (*)(long double);

const std::map<std::string, Fn>& functions() {
    static const std::map<std::string, Fn> fns = {
        {"sin", std::sin},   {"cos", std::cos},   {"tan", std::tan},
        {"exp", std::exp},   {"log", std::log},   {"sqrt", std::sqrt},
        {"sinh", std::sinh}, {"cosh", std::cosh}, {"tanh", std::tanh},
    };
    return fns;
}

const std::map<std::string, FnLd>& functions_ld() {
    static const std::map<std::string, FnLd> fns = {
        {"sin", static_cast<FnLd>(std::sin)},   {"cos", static_cast<FnLd>(std::cos)},
        {"tan", static_cast<FnLd>(std::tan)},   {"exp", static_cast<FnLd>(std::exp)},
        {"log", static_cast<FnLd>(std::log)},   {"sqrt", static_cast<FnLd>(std::sqrt)},
        {"sinh", static_cast<FnLd>(std::sinh)}, {"cosh", static_cast<FnLd>(std::cosh)},
        {"tanh", static_cast<FnLd>(std::tanh)},
    };
    return fns;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError(pos_, "unexpected trailing input '" + rest_preview() + "'");
        return e;
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;

    std::string rest_preview() const {
        return src_.substr(pos_, std::min<std::size_t>(8, src_.size() - pos_));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprPtr sum() {
        ExprPtr e = product();
        while (true) {
            if (eat('+'))
                e = make_bin(Expr::Kind::Add, e, product());
            else if (eat('-'))
                e = make_bin(Expr::Kind::Sub, e, product());
            else
                return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (true) {
            if (eat('*'))
                e = make_bin(Expr::Kind::Mul, e, unary());
            else if (eat('/'))
                e = make_bin(Expr::Kind::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (eat('-')) return make_neg(unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (eat('^')) return make_bin(Expr::Kind::Pow, base, unary());
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprPtr number() {
        std::size_t start = pos_;
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError(start, "invalid numeric literal");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_num(v);
    }

    ExprPtr name() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string id = src_.substr(start, pos_ - start);
        if (id == "u") return make_var(0);
        if (id == "v") return make_var(1);
        auto it = functions().find(id);
        if (it == functions().end()) throw ParseError(start, "unknown identifier '" + id + "'");
        if (!eat('(')) throw ParseError(pos_, "expected '(' after function '" + id + "'");
        ExprPtr arg = sum();
        if (!eat(')')) throw ParseError(pos_, "expected ')' closing call of '" + id + "'");
        return make_call(id, arg);
    }
};

}  // namespace

double Expr::eval(double u, double v) const {
    switch (kind) {
        case Kind::Num: return value;
        case Kind::Var: return var == 0 ? u : v;
        case Kind::Neg: return -a->eval(u, v);
        case Kind::Add: return a->eval(u, v) + b->eval(u, v);
        case Kind::Sub: return a->eval(u, v) - b->eval(u, v);
        case Kind::Mul: return a->eval(u, v) * b->eval(u, v);
        case Kind::Div: return a->eval(u, v) / b->eval(u, v);
        case Kind::Pow: return std::pow(a->eval(u, v), b->eval(u, v));
        case Kind::Call: return functions().at(func)(a->eval(u, v));
    }
    return 0.0;
}

long double Expr::eval_ld(long double u, long double v) const {
    switch (kind) {
        case Kind::Num: return value;
        case Kind::Var: return var == 0 ? u : v;
        case Kind::Neg: return -a->eval_ld(u, v);
        case Kind::Add: return a->eval_ld(u, v) + b->eval_ld(u, v);
        case Kind::Sub: return a->eval_ld(u, v) - b->eval_ld(u, v);
        case Kind::Mul: return a->eval_ld(u, v) * b->eval_ld(u, v);
        case Kind::Div: return a->eval_ld(u, v) / b->eval_ld(u, v);
        case Kind::Pow: return std::pow(a->eval_ld(u, v), b->eval_ld(u, v));
        case Kind::Call: return functions_ld().at(func)(a->eval_ld(u, v));
    }
    return 0.0L;
}

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::Num: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", value);
            std::string s(buf);
            // Negative literals are re-emitted as unary minus so the
            // round-trip stays within the grammar.
            if (!s.empty() && s[0] == '-') return "(-" + s.substr(1) + ")";
            return s;
        }
        case Kind::Var: return var == 0 ? "u" : "v";
        case Kind::Neg: return "(-" + a->to_string() + ")";
        case Kind::Add: return "(" + a->to_string() + "+" + b->to_string() + ")";
        case Kind::Sub: return "(" + a->to_string() + "-" + b->to_string() + ")";
        case Kind::Mul: return "(" + a->to_string() + "*" + b->to_string() + ")";
        case Kind::Div: return "(" + a->to_string() + "/" + b->to_string() + ")";
        case Kind::Pow: return "(" + a->to_string() + "^" + b->to_string() + ")";
        case Kind::Call: return func + "(" + a->to_string() + ")";
    }
    return "";
}

namespace {
ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
}  // namespace

ExprPtr make_num(double v) {
    Expr e;
    e.kind = Expr::Kind::Num;
    e.value = v;
    return node(std::move(e));
}

ExprPtr make_var(int var) {
    Expr e;
    e.kind = Expr::Kind::Var;
    e.var = var;
    return node(std::move(e));
}

ExprPtr make_neg(ExprPtr a) {
    Expr e;
    e.kind = Expr::Kind::Neg;
    e.a = std::move(a);
    return node(std::move(e));
}

ExprPtr make_bin(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = k;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_call(const std::string& f, ExprPtr a) {
    if (functions().find(f) == functions().end())
        throw std::invalid_argument("make_call: unknown function " + f);
    Expr e;
    e.kind = Expr::Kind::Call;
    e.func = f;
    e.a = std::move(a);
    return node(std::move(e));
}

ExprPtr parse_expr(const std::string& src) { return Parser(src).run(); }

}  // namespace spincgeom
