#include "gforge/text.hpp"

#include <cctype>
#include <optional>

#include "expr.hpp"

namespace gforge {

namespace detail {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<Expr> run() {
        skip_space();
        if (at_end()) fail("empty expression");
        auto e = parse_sum();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(msg, line, column);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::unique_ptr<Expr> node(Expr::Kind kind) const {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        int line = 1, column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        e->line = line;
        e->column = column;
        return e;
    }

    std::unique_ptr<Expr> binary(Expr::Kind kind, std::unique_ptr<Expr> l, std::unique_ptr<Expr> r) const {
        auto e = node(kind);
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    std::unique_ptr<Expr> parse_sum() {
        auto lhs = parse_product();
        for (;;) {
            if (accept('+'))
                lhs = binary(Expr::Kind::Add, std::move(lhs), parse_product());
            else if (accept('-'))
                lhs = binary(Expr::Kind::Sub, std::move(lhs), parse_product());
            else
                return lhs;
        }
    }

    std::unique_ptr<Expr> parse_product() {
        auto lhs = parse_unary();
        for (;;) {
            if (accept('*'))
                lhs = binary(Expr::Kind::Mul, std::move(lhs), parse_unary());
            else if (accept('/'))
                lhs = binary(Expr::Kind::Div, std::move(lhs), parse_unary());
            else
                return lhs;
        }
    }

    std::unique_ptr<Expr> parse_unary() {
        if (accept('-')) {
            auto e = node(Expr::Kind::Neg);
            e->lhs = parse_unary();
            return e;
        }
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    std::unique_ptr<Expr> parse_power() {
        auto base = parse_atom();
        if (!accept('^')) return base;
        skip_space();
        bool negative = false;
        if (!at_end() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer exponent");
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        auto e = node(Expr::Kind::Pow);
        e->lhs = std::move(base);
        e->exponent = negative ? -value : value;
        return e;
    }

    std::unique_ptr<Expr> parse_atom() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = node(Expr::Kind::Number);
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            e->number = Integer(std::string(text_.substr(start, pos_ - start)));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto e = node(Expr::Kind::Symbol);
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            e->symbol = std::string(text_.substr(start, pos_ - start));
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace detail

namespace {

// Elements of k[T][Y] under evaluation: T-polynomials indexed by Y-degree.
struct Bivariate {
    std::vector<UniPoly> c;
};

void trim(Bivariate& b) {
    while (!b.c.empty() && b.c.back().is_zero()) b.c.pop_back();
}

struct BivariateAlgebra {
    Field field;

    Bivariate constant(const FieldElem& e) const {
        Bivariate b{{UniPoly::constant(e)}};
        trim(b);
        return b;
    }

    Bivariate number(const Integer& n, const detail::Expr&) const { return constant(field.from_integer(n)); }

    Bivariate symbol(const std::string& s, const detail::Expr& e) const {
        if (s == "Y") return Bivariate{{UniPoly(field), UniPoly::constant(field.one())}};
        if (s == "T") return Bivariate{{UniPoly::x(field)}};
        if (s == "g" && field.is_finite()) return constant(field.generator());
        throw ParseError("unknown symbol '" + s + "' over " + field.name(), e.line, e.column);
    }

    Bivariate add(Bivariate a, const Bivariate& b) const {
        if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), UniPoly(field));
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
        trim(a);
        return a;
    }

    Bivariate neg(Bivariate a) const {
        for (auto& x : a.c) x = -x;
        return a;
    }

    Bivariate sub(Bivariate a, const Bivariate& b) const { return add(std::move(a), neg(b)); }

    Bivariate mul(const Bivariate& a, const Bivariate& b) const {
        if (a.c.empty() || b.c.empty()) return {};
        Bivariate out{std::vector<UniPoly>(a.c.size() + b.c.size() - 1, UniPoly(field))};
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
        trim(out);
        return out;
    }

    std::optional<FieldElem> as_constant(const Bivariate& b) const {
        if (b.c.empty()) return field.zero();
        if (b.c.size() == 1 && b.c[0].degree() <= 0) return b.c[0].coeff(0);
        return std::nullopt;
    }

    Bivariate div(const Bivariate& a, const Bivariate& b, const detail::Expr& e) const {
        auto d = as_constant(b);
        if (!d) throw ParseError("division is only defined by constants", e.line, e.column);
        if (d->is_zero()) throw ParseError("division by zero", e.line, e.column);
        return mul(a, constant(d->inverse()));
    }

    Bivariate pow(const Bivariate& a, long exponent, const detail::Expr& e) const {
        if (exponent < 0) {
            auto d = as_constant(a);
            if (!d || d->is_zero()) throw ParseError("negative powers need a nonzero constant base", e.line, e.column);
            return constant(d->pow(static_cast<long long>(exponent)));
        }
        Bivariate out = constant(field.one());
        Bivariate base = a;
        for (long n = exponent; n > 0; n >>= 1) {
            if (n & 1) out = mul(out, base);
            if (n > 1) base = mul(base, base);
        }
        return out;
    }
};

Bivariate evaluate_text(std::string_view text, const Field& field) {
    auto expr = detail::parse_expression(text);
    BivariateAlgebra alg{field};
    return detail::evaluate(*expr, alg);
}

}  // namespace

FieldElem parse_element(std::string_view text, const Field& field) {
    auto b = evaluate_text(text, field);
    if (b.c.empty()) return field.zero();
    if (b.c.size() == 1 && b.c[0].degree() <= 0) return b.c[0].coeff(0);
    throw ParseError("expected a constant, got '" + std::string(text) + "'", 1, 1);
}

UniPoly parse_unipoly(std::string_view text, const Field& field, char var) {
    auto b = evaluate_text(text, field);
    if (var == 'T') {
        if (b.c.size() > 1) throw ParseError("Y must not occur in a polynomial in T", 1, 1);
        return b.c.empty() ? UniPoly(field) : b.c[0];
    }
    std::vector<FieldElem> out;
    for (const auto& c : b.c) {
        if (c.degree() > 0) throw ParseError("T must not occur in a polynomial in Y", 1, 1);
        out.push_back(c.coeff(0));
    }
    return UniPoly(field, std::move(out));
}

std::vector<UniPoly> parse_bivariate(std::string_view text, const Field& field) {
    return evaluate_text(text, field).c;
}

ParamPoly parse_parampoly(std::string_view text, const Field& field) {
    return ParamPoly(field, evaluate_text(text, field).c);
}

}  // namespace gforge
