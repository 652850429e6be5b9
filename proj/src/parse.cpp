#include "g2sc/parse.hpp"

#include "g2sc/errors.hpp"

#include <cctype>

namespace g2sc {

MPoly PolyExpr::evaluate() const {
    switch (kind) {
    case Kind::Number: return MPoly(number);
    case Kind::Variable: return MPoly::var(variable);
    case Kind::Add: return lhs->evaluate() + rhs->evaluate();
    case Kind::Sub: return lhs->evaluate() - rhs->evaluate();
    case Kind::Mul: return lhs->evaluate() * rhs->evaluate();
    case Kind::Neg: return -lhs->evaluate();
    case Kind::Pow: return lhs->evaluate().pow(exponent);
    }
    return MPoly();
}

namespace {

using Node = std::unique_ptr<PolyExpr>;

Node make(PolyExpr::Kind k, Node l = nullptr, Node r = nullptr) {
    auto n = std::make_unique<PolyExpr>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Node parse() {
        skip();
        if (pos_ == s_.size()) throw SyntaxError("empty expression", pos_);
        Node n = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return n;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected integer", start);
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    Node expr() {
        Node n;
        if (peek('-')) {
            ++pos_;
            n = make(PolyExpr::Kind::Neg, term());
        } else {
            if (peek('+')) ++pos_;
            n = term();
        }
        while (true) {
            if (peek('+')) {
                ++pos_;
                n = make(PolyExpr::Kind::Add, std::move(n), term());
            } else if (peek('-')) {
                ++pos_;
                n = make(PolyExpr::Kind::Sub, std::move(n), term());
            } else {
                return n;
            }
        }
    }

    Node term() {
        Node n = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                n = make(PolyExpr::Kind::Mul, std::move(n), factor());
            } else if (peek('/')) {
                std::size_t at = pos_++;
                Int den = integer();
                if (den == 0) throw SyntaxError("division by zero", at);
                auto k = make(PolyExpr::Kind::Number);
                k->number = Rat(Int(1), den);
                n = make(PolyExpr::Kind::Mul, std::move(n), std::move(k));
            } else if (starts_atom()) {
                n = make(PolyExpr::Kind::Mul, std::move(n), factor());
            } else {
                return n;
            }
        }
    }

    Node factor() {
        Node base = atom();
        if (peek('^')) {
            ++pos_;
            std::size_t at = pos_;
            Int e = integer();
            if (e > 4096) throw SyntaxError("exponent too large", at);
            auto p = make(PolyExpr::Kind::Pow, std::move(base));
            p->exponent = e.convert_to<unsigned>();
            return p;
        }
        return base;
    }

    Node atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Node n = expr();
            if (!peek(')')) throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return n;
        }
        if (c == '-') {
            ++pos_;
            return make(PolyExpr::Kind::Neg, factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = make(PolyExpr::Kind::Number);
            n->number = Rat(integer());
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            auto x = var_from_name(name);
            if (!x)
                throw UnknownVariable("unknown variable '" + std::string(name) + "' at offset " +
                                      std::to_string(start));
            auto n = make(PolyExpr::Kind::Variable);
            n->variable = *x;
            return n;
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }
};

}  // namespace

std::unique_ptr<PolyExpr> parse_expr(std::string_view text) { return Parser(text).parse(); }

MPoly parse_poly(std::string_view text) { return parse_expr(text)->evaluate(); }

}  // namespace g2sc
