#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gforge/error.hpp"
#include "gforge/field.hpp"

namespace gforge::detail {

// Expression tree shared by the commutative and the skew polynomial readers.
struct Expr {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind = Kind::Number;
    Integer number;
    std::string symbol;
    long exponent = 0;
    std::unique_ptr<Expr> lhs, rhs;
    int line = 1, column = 1;
};

std::unique_ptr<Expr> parse_expression(std::string_view text);

// Folds the tree bottom-up. `Algebra` supplies number, symbol, add, sub, mul,
// div, neg and pow on its value type.
template <class Algebra>
auto evaluate(const Expr& e, Algebra& alg) -> decltype(alg.number(e.number, e)) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return alg.number(e.number, e);
        case K::Symbol: return alg.symbol(e.symbol, e);
        case K::Neg: return alg.neg(evaluate(*e.lhs, alg));
        case K::Pow: return alg.pow(evaluate(*e.lhs, alg), e.exponent, e);
        case K::Add: return alg.add(evaluate(*e.lhs, alg), evaluate(*e.rhs, alg));
        case K::Sub: return alg.sub(evaluate(*e.lhs, alg), evaluate(*e.rhs, alg));
        case K::Mul: return alg.mul(evaluate(*e.lhs, alg), evaluate(*e.rhs, alg));
        case K::Div: return alg.div(evaluate(*e.lhs, alg), evaluate(*e.rhs, alg), e);
    }
    throw ParseError("unreachable expression node", e.line, e.column);
}

}  // namespace gforge::detail
