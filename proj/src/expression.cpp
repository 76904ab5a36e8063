#include "orthoieq/expression.hpp"

#include "orthoieq/errors.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace orthoieq {

struct Expression::Node {
    Kind kind;
    Rational value;
    Function fn = Function::Exp;
    std::optional<Expression> lhs;
    std::optional<Expression> rhs;
    bool has_x = false;
};

Expression Expression::number(Rational value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Number;
    node->value = std::move(value);
    return Expression(std::move(node));
}

Expression Expression::pi() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Pi;
    return Expression(std::move(node));
}

Expression Expression::variable() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Variable;
    node->has_x = true;
    return Expression(std::move(node));
}

Expression Expression::negate(Expression operand) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Negate;
    node->has_x = operand.depends_on_x();
    node->lhs = std::move(operand);
    return Expression(std::move(node));
}

Expression Expression::binary(Kind kind, Expression lhs, Expression rhs) {
    if (kind != Kind::Add && kind != Kind::Subtract && kind != Kind::Multiply && kind != Kind::Divide &&
        kind != Kind::Power) {
        throw std::invalid_argument("Expression::binary: not a binary operator");
    }
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->has_x = lhs.depends_on_x() || rhs.depends_on_x();
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return Expression(std::move(node));
}

Expression Expression::call(Function fn, Expression argument) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Call;
    node->fn = fn;
    node->has_x = argument.depends_on_x();
    node->lhs = std::move(argument);
    return Expression(std::move(node));
}

Expression::Kind Expression::kind() const { return node_->kind; }

const Rational& Expression::value() const {
    if (node_->kind != Kind::Number) throw std::logic_error("Expression::value on a non-literal");
    return node_->value;
}

Expression::Function Expression::function() const { return node_->fn; }

const Expression& Expression::lhs() const { return node_->lhs.value(); }

const Expression& Expression::rhs() const { return node_->rhs.value(); }

bool Expression::depends_on_x() const { return node_->has_x; }

bool operator==(const Expression& a, const Expression& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expression::Kind::Number: return x.value == y.value;
        case Expression::Kind::Pi:
        case Expression::Kind::Variable: return true;
        case Expression::Kind::Negate: return *x.lhs == *y.lhs;
        case Expression::Kind::Call: return x.fn == y.fn && *x.lhs == *y.lhs;
        default: return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
    }
}

const char* function_name(Expression::Function fn) {
    switch (fn) {
        case Expression::Function::Exp: return "exp";
        case Expression::Function::Log: return "log";
        case Expression::Function::Sqrt: return "sqrt";
        case Expression::Function::Sin: return "sin";
        case Expression::Function::Cos: return "cos";
        case Expression::Function::Gamma: return "gamma";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse() {
        skip_space();
        if (pos_ >= text_.size()) fail("empty expression");
        Expression e = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("syntax error: " + what, pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expression expr() {
        Expression lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expression::binary(Expression::Kind::Add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = Expression::binary(Expression::Kind::Subtract, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expression term() {
        Expression lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = Expression::binary(Expression::Kind::Multiply, std::move(lhs), factor());
            } else if (accept('/')) {
                lhs = Expression::binary(Expression::Kind::Divide, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    Expression factor() {
        Expression base = unary();
        if (accept('^')) return Expression::binary(Expression::Kind::Power, std::move(base), factor());
        return base;
    }

    Expression unary() {
        if (accept('-')) return Expression::negate(atom());
        return atom();
    }

    Expression atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (accept('(')) {
            Expression inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expression number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        std::string literal(text_.substr(start, pos_ - start));
        try {
            return Expression::number(parse_rational(literal));
        } catch (const ConfigError&) {
            pos_ = start;
            fail("malformed number '" + literal + "'");
        }
    }

    Expression identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "x") return Expression::variable();
        if (name == "pi") return Expression::pi();

        static const std::pair<const char*, Expression::Function> kFunctions[] = {
            {"exp", Expression::Function::Exp},   {"log", Expression::Function::Log},
            {"sqrt", Expression::Function::Sqrt}, {"sin", Expression::Function::Sin},
            {"cos", Expression::Function::Cos},   {"gamma", Expression::Function::Gamma},
        };
        for (const auto& [fname, fn] : kFunctions) {
            if (name == fname) {
                expect('(');
                Expression arg = expr();
                expect(')');
                return Expression::call(fn, std::move(arg));
            }
        }
        throw UnknownIdentifierError("unknown identifier '" + name + "'", start + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::optional<std::string> exact_decimal(const Rational& q) {
    Integer den = bmp::denominator(q);
    unsigned shift = 0;
    Rational scaled = bmp::abs(q);
    while (bmp::denominator(scaled) != 1) {
        if (++shift > 4096) return std::nullopt;
        scaled *= 10;
    }
    (void)den;
    std::string digits = bmp::numerator(scaled).str();
    if (shift > 0) {
        if (digits.size() <= shift) digits.insert(0, shift - digits.size() + 1, '0');
        digits.insert(digits.size() - shift, ".");
    }
    return digits;
}

bool is_atomic(const Expression& e) {
    switch (e.kind()) {
        case Expression::Kind::Pi:
        case Expression::Kind::Variable:
        case Expression::Kind::Call: return true;
        case Expression::Kind::Number: return e.value() >= 0 && exact_decimal(e.value()).has_value();
        default: return false;
    }
}

std::string print_atom(const Expression& e) {
    std::string s = print(e);
    return is_atomic(e) ? s : "(" + s + ")";
}

const char* operator_symbol(Expression::Kind kind) {
    switch (kind) {
        case Expression::Kind::Add: return "+";
        case Expression::Kind::Subtract: return "-";
        case Expression::Kind::Multiply: return "*";
        case Expression::Kind::Divide: return "/";
        case Expression::Kind::Power: return "^";
        default: return "?";
    }
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind()) {
        case K::Number: {
            const Rational& q = e.value();
            if (auto dec = exact_decimal(q); dec && q >= 0) return *dec;
            std::string body = bmp::numerator(bmp::abs(q)).str() + "/" + bmp::denominator(q).str();
            return q < 0 ? "-(" + body + ")" : body;
        }
        case K::Pi: return "pi";
        case K::Variable: return "x";
        case K::Negate: return "-" + print_atom(e.lhs());
        case K::Call: return std::string(function_name(e.function())) + "(" + print(e.lhs()) + ")";
        default: return print_atom(e.lhs()) + operator_symbol(e.kind()) + print_atom(e.rhs());
    }
}

namespace {

bool is_literal(const Expression& e, const Rational& q) {
    return e.kind() == Expression::Kind::Number && e.value() == q;
}

Real evaluate_at(const Expression& e, const EvalPoint& p) {
    using K = Expression::Kind;
    switch (e.kind()) {
        case K::Number: return Real(e.value());
        case K::Pi: return pi();
        case K::Variable: return p.x;
        case K::Negate: return -evaluate_at(e.lhs(), p);
        case K::Add: return evaluate_at(e.lhs(), p) + evaluate_at(e.rhs(), p);
        case K::Subtract:
            if (p.to_beta && p.beta && e.rhs().kind() == K::Variable && is_literal(e.lhs(), *p.beta)) {
                return *p.to_beta;
            }
            if (p.from_alpha && p.alpha && e.lhs().kind() == K::Variable && is_literal(e.rhs(), *p.alpha)) {
                return *p.from_alpha;
            }
            return evaluate_at(e.lhs(), p) - evaluate_at(e.rhs(), p);
        case K::Multiply: return evaluate_at(e.lhs(), p) * evaluate_at(e.rhs(), p);
        case K::Divide: return evaluate_at(e.lhs(), p) / evaluate_at(e.rhs(), p);
        case K::Power: {
            const Expression& ex = e.rhs();
            if (ex.kind() == K::Number && bmp::denominator(ex.value()) == 1 &&
                bmp::abs(bmp::numerator(ex.value())) < 1000000) {
                return bmp::pow(evaluate_at(e.lhs(), p), bmp::numerator(ex.value()).convert_to<int>());
            }
            return bmp::pow(evaluate_at(e.lhs(), p), evaluate_at(ex, p));
        }
        case K::Call: {
            Real v = evaluate_at(e.lhs(), p);
            switch (e.function()) {
                case Expression::Function::Exp: return bmp::exp(v);
                case Expression::Function::Log: return bmp::log(v);
                case Expression::Function::Sqrt: return bmp::sqrt(v);
                case Expression::Function::Sin: return bmp::sin(v);
                case Expression::Function::Cos: return bmp::cos(v);
                case Expression::Function::Gamma: return bmp::tgamma(v);
            }
        }
    }
    throw std::logic_error("evaluate: unhandled node");
}

}  // namespace

Real evaluate(const Expression& e, const Real& x) {
    EvalPoint p;
    p.x = x;
    return evaluate_at(e, p);
}

Real evaluate(const Expression& e, const EvalPoint& point) { return evaluate_at(e, point); }

std::optional<Real> constant_value(const Expression& e) {
    if (e.depends_on_x()) return std::nullopt;
    return evaluate(e, Real(0));
}

std::optional<Polynomial<Rational>> to_polynomial(const Expression& e) {
    using K = Expression::Kind;
    using P = Polynomial<Rational>;
    switch (e.kind()) {
        case K::Number: return P::constant(e.value());
        case K::Variable: return P::monomial(1);
        case K::Pi:
        case K::Call: return std::nullopt;
        case K::Negate: {
            auto p = to_polynomial(e.lhs());
            if (!p) return std::nullopt;
            return *p * Rational(-1);
        }
        case K::Add:
        case K::Subtract:
        case K::Multiply: {
            auto a = to_polynomial(e.lhs());
            auto b = to_polynomial(e.rhs());
            if (!a || !b) return std::nullopt;
            if (e.kind() == K::Add) return (*a + *b).trimmed();
            if (e.kind() == K::Subtract) return (*a - *b).trimmed();
            return (*a * *b).trimmed();
        }
        case K::Divide: {
            auto a = to_polynomial(e.lhs());
            auto b = to_polynomial(e.rhs());
            if (!a || !b || b->trimmed().degree() != 0 || (*b)[0] == 0) return std::nullopt;
            return *a * Rational(1 / (*b)[0]);
        }
        case K::Power: {
            auto base = to_polynomial(e.lhs());
            auto ex = to_polynomial(e.rhs());
            if (!base || !ex || ex->trimmed().degree() != 0) return std::nullopt;
            const Rational k = (*ex)[0];
            if (bmp::denominator(k) != 1 || k < 0 || k > 4096) return std::nullopt;
            P result = P::constant(Rational(1));
            for (long i = 0; i < bmp::numerator(k).convert_to<long>(); ++i) result = result * *base;
            return result.trimmed();
        }
    }
    return std::nullopt;
}

}  // namespace orthoieq
