#include "superorbit/parser.hpp"

#include <cctype>
#include <sstream>

namespace superorbit {

namespace {

struct Token {
    enum class Kind { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
                digits += advance();
            return {Token::Kind::Number, digits, line, col};
        }
        if (std::isalpha((unsigned char)c) || (unsigned char)c >= 0x80) {
            std::string name;
            // leading letter run (ASCII or UTF-8), then digit run
            while (pos_ < src_.size() &&
                   (std::isalpha((unsigned char)src_[pos_]) || (unsigned char)src_[pos_] >= 0x80))
                name += advance();
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
                name += advance();
            return {Token::Kind::Name, normalize_name(name), line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
        return c;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) advance();
    }
    // Unicode odd-generator prefixes normalize to the ASCII form.
    static std::string normalize_name(const std::string& name) {
        static const char* kXi = "\xce\xbe";      // small xi
        static const char* kTheta = "\xce\xb8";   // small theta
        for (const char* prefix : {kXi, kTheta}) {
            size_t n = std::string(prefix).size();
            if (name.size() > n && name.compare(0, n, prefix) == 0)
                return "t" + name.substr(n);
        }
        return name;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { bump(); }

    ExprPtr parse() {
        ExprPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    void bump() { tok_ = lex_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (tok_.kind != k)
            throw ParseError(std::string("expected ") + what, tok_.line, tok_.column);
    }

    static ExprPtr make(Expr::Kind k) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool add = tok_.kind == Token::Kind::Plus;
            bump();
            ExprPtr rhs = term();
            auto node = make(add ? Expr::Kind::Add : Expr::Kind::Sub);
            node->kids.push_back(std::move(lhs));
            node->kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (tok_.kind == Token::Kind::Star) {
            bump();
            ExprPtr rhs = factor();
            auto node = make(Expr::Kind::Mul);
            node->kids.push_back(std::move(lhs));
            node->kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr factor() {
        if (tok_.kind == Token::Kind::Minus) {
            bump();
            auto node = make(Expr::Kind::Neg);
            node->kids.push_back(factor());
            return node;
        }
        ExprPtr base = atom();
        if (tok_.kind == Token::Kind::Caret) {
            bump();
            expect(Token::Kind::Number, "a non-negative integer exponent");
            auto node = make(Expr::Kind::Pow);
            node->exponent = std::stoi(tok_.text);
            bump();
            node->kids.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprPtr atom() {
        if (tok_.kind == Token::Kind::Number) {
            std::string num = tok_.text;
            bump();
            if (tok_.kind == Token::Kind::Slash) {
                bump();
                expect(Token::Kind::Number, "a denominator");
                num += "/" + tok_.text;
                bump();
            }
            auto node = make(Expr::Kind::Number);
            node->value = rat_from_string(num);
            return node;
        }
        if (tok_.kind == Token::Kind::Name) {
            auto node = make(Expr::Kind::Gen);
            node->name = tok_.text;
            bump();
            return node;
        }
        if (tok_.kind == Token::Kind::LParen) {
            bump();
            ExprPtr inner = expr();
            expect(Token::Kind::RParen, "')'");
            bump();
            return inner;
        }
        throw ParseError("expected a number, generator or '('", tok_.line, tok_.column);
    }

    Lexer lex_;
    Token tok_;
};

} // namespace

ExprPtr parse_expression(const std::string& text) {
    return Parser(text).parse();
}

SuperPolynomial elaborate(const Expr& e, const SigPtr& sig) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return sp_constant(sig, e.value);
        case Expr::Kind::Gen: {
            auto hit = sig->find_name(e.name);
            if (!hit) throw ParseError("unknown generator '" + e.name + "'", 0, 0);
            return hit->first ? sp_even(sig, hit->second) : sp_odd(sig, hit->second);
        }
        case Expr::Kind::Neg:
            return -elaborate(*e.kids[0], sig);
        case Expr::Kind::Add:
            return elaborate(*e.kids[0], sig) + elaborate(*e.kids[1], sig);
        case Expr::Kind::Sub:
            return elaborate(*e.kids[0], sig) - elaborate(*e.kids[1], sig);
        case Expr::Kind::Mul:
            return elaborate(*e.kids[0], sig) * elaborate(*e.kids[1], sig);
        case Expr::Kind::Pow:
            return elaborate(*e.kids[0], sig).pow(e.exponent);
    }
    throw Error("corrupt expression node");
}

SuperPolynomial parse_poly(const std::string& text, const SigPtr& sig) {
    return elaborate(*parse_expression(text), sig);
}

std::string monomial_text(const Monomial& m, const RingSignature& sig) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    for (int i = 0; i < sig.even_count(); ++i) {
        if (m.even_exp[i] == 0) continue;
        sep();
        os << sig.even_name(i);
        if (m.even_exp[i] > 1) os << "^" << m.even_exp[i];
    }
    for (int idx : m.odd_idx) {
        sep();
        os << sig.odd_name(idx);
    }
    return os.str();
}

std::string to_text(const SuperPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        std::string mono = monomial_text(m, *p.sig());
        if (mono.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << rat_to_string(a) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

} // namespace superorbit
