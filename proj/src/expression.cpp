#include "llg/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace llg {

namespace {

struct Token {
    enum class Kind { Num, Ident, Op, LParen, RParen, End };
    Kind kind;
    double num = 0.0;
    std::string ident;
    char op = 0;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_ = Token{};
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + i_;
            char* end = nullptr;
            tok_.num = std::strtod(begin, &end);
            if (end == begin)
                raise(Errc::ExprParse, "bad numeric literal at position " + std::to_string(i_));
            i_ += static_cast<std::size_t>(end - begin);
            tok_.kind = Token::Kind::Num;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.ident = s_.substr(i_, j - i_);
            tok_.kind = Token::Kind::Ident;
            i_ = j;
            return;
        }
        if (c == '(') {
            tok_.kind = Token::Kind::LParen;
            ++i_;
            return;
        }
        if (c == ')') {
            tok_.kind = Token::Kind::RParen;
            ++i_;
            return;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
            tok_.kind = Token::Kind::Op;
            tok_.op = c;
            ++i_;
            return;
        }
        raise(Errc::ExprParse,
              std::string("unexpected character '") + c + "' at position " + std::to_string(i_));
    }
};

class Parser {
  public:
    Parser(const std::string& text, std::vector<ExprNode>& nodes) : lex_(text), nodes_(nodes) {}

    int run() {
        const int root = sum();
        if (lex_.peek().kind != Token::Kind::End)
            raise(Errc::ExprParse,
                  "trailing input at position " + std::to_string(lex_.peek().pos));
        return root;
    }

  private:
    Lexer lex_;
    std::vector<ExprNode>& nodes_;

    int add(ExprNode n) {
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    int sum() {
        int lhs = product();
        while (lex_.peek().kind == Token::Kind::Op &&
               (lex_.peek().op == '+' || lex_.peek().op == '-')) {
            const char op = lex_.take().op;
            const int rhs = product();
            ExprNode n;
            n.kind = op == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
            n.a = lhs;
            n.b = rhs;
            lhs = add(n);
        }
        return lhs;
    }

    int product() {
        int lhs = unary();
        while (lex_.peek().kind == Token::Kind::Op &&
               (lex_.peek().op == '*' || lex_.peek().op == '/')) {
            const char op = lex_.take().op;
            const int rhs = unary();
            ExprNode n;
            n.kind = op == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div;
            n.a = lhs;
            n.b = rhs;
            lhs = add(n);
        }
        return lhs;
    }

    int unary() {
        if (lex_.peek().kind == Token::Kind::Op && lex_.peek().op == '-') {
            lex_.take();
            ExprNode n;
            n.kind = ExprNode::Kind::Neg;
            n.a = unary();
            return add(n);
        }
        return power();
    }

    int power() {
        const int base = atom();
        if (lex_.peek().kind == Token::Kind::Op && lex_.peek().op == '^') {
            lex_.take();
            // Right associative; the exponent may carry its own unary minus.
            ExprNode n;
            n.kind = ExprNode::Kind::Pow;
            n.a = base;
            n.b = unary();
            return add(n);
        }
        return base;
    }

    int atom() {
        const Token t = lex_.take();
        switch (t.kind) {
        case Token::Kind::Num: {
            ExprNode n;
            n.kind = ExprNode::Kind::Lit;
            n.lit = t.num;
            return add(n);
        }
        case Token::Kind::Ident: {
            if (t.ident == "u1") {
                ExprNode n;
                n.kind = ExprNode::Kind::U1;
                return add(n);
            }
            if (t.ident == "u2") {
                ExprNode n;
                n.kind = ExprNode::Kind::U2;
                return add(n);
            }
            ExprNode n;
            n.kind = ExprNode::Kind::Fun;
            if (t.ident == "sin") n.fn = ExprNode::Fn::Sin;
            else if (t.ident == "cos") n.fn = ExprNode::Fn::Cos;
            else if (t.ident == "tan") n.fn = ExprNode::Fn::Tan;
            else if (t.ident == "sinh") n.fn = ExprNode::Fn::Sinh;
            else if (t.ident == "cosh") n.fn = ExprNode::Fn::Cosh;
            else if (t.ident == "tanh") n.fn = ExprNode::Fn::Tanh;
            else if (t.ident == "exp") n.fn = ExprNode::Fn::Exp;
            else if (t.ident == "log") n.fn = ExprNode::Fn::Log;
            else if (t.ident == "sqrt") n.fn = ExprNode::Fn::Sqrt;
            else if (t.ident == "atan") n.fn = ExprNode::Fn::Atan;
            else
                raise(Errc::ExprParse, "unknown identifier '" + t.ident + "' at position " +
                                           std::to_string(t.pos));
            if (lex_.peek().kind != Token::Kind::LParen)
                raise(Errc::ExprParse, "expected '(' after '" + t.ident + "'");
            lex_.take();
            n.a = sum();
            if (lex_.peek().kind != Token::Kind::RParen)
                raise(Errc::ExprParse, "expected ')' closing '" + t.ident + "'");
            lex_.take();
            return add(n);
        }
        case Token::Kind::LParen: {
            const int e = sum();
            if (lex_.peek().kind != Token::Kind::RParen)
                raise(Errc::ExprParse, "expected ')' at position " +
                                           std::to_string(lex_.peek().pos));
            lex_.take();
            return e;
        }
        default:
            raise(Errc::ExprParse,
                  "unexpected token at position " + std::to_string(t.pos));
        }
    }
};

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.text_ = text;
    Parser p(text, e.nodes_);
    e.root_ = p.run();
    return e;
}

template <class T> T Expression::eval_node(int i, const T& u1, const T& u2) const {
    using std::atan;
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::log;
    using std::pow;
    using std::sin;
    using std::sinh;
    using std::sqrt;
    using std::tan;
    using std::tanh;
    const ExprNode& n = nodes_[static_cast<std::size_t>(i)];
    switch (n.kind) {
    case ExprNode::Kind::Lit: return T(n.lit);
    case ExprNode::Kind::U1: return u1;
    case ExprNode::Kind::U2: return u2;
    case ExprNode::Kind::Add: return eval_node(n.a, u1, u2) + eval_node(n.b, u1, u2);
    case ExprNode::Kind::Sub: return eval_node(n.a, u1, u2) - eval_node(n.b, u1, u2);
    case ExprNode::Kind::Mul: return eval_node(n.a, u1, u2) * eval_node(n.b, u1, u2);
    case ExprNode::Kind::Div: return eval_node(n.a, u1, u2) / eval_node(n.b, u1, u2);
    case ExprNode::Kind::Pow: return pow(eval_node(n.a, u1, u2), eval_node(n.b, u1, u2));
    case ExprNode::Kind::Neg: return -eval_node(n.a, u1, u2);
    case ExprNode::Kind::Fun: {
        const T x = eval_node(n.a, u1, u2);
        switch (n.fn) {
        case ExprNode::Fn::Sin: return sin(x);
        case ExprNode::Fn::Cos: return cos(x);
        case ExprNode::Fn::Tan: return tan(x);
        case ExprNode::Fn::Sinh: return sinh(x);
        case ExprNode::Fn::Cosh: return cosh(x);
        case ExprNode::Fn::Tanh: return tanh(x);
        case ExprNode::Fn::Exp: return exp(x);
        case ExprNode::Fn::Log: return log(x);
        case ExprNode::Fn::Sqrt: return sqrt(x);
        case ExprNode::Fn::Atan: return atan(x);
        }
        raise(Errc::ExprParse, "corrupt expression node");
    }
    }
    raise(Errc::ExprParse, "corrupt expression node");
}

double Expression::eval(double u1, double u2) const {
    if (root_ < 0) raise(Errc::ExprParse, "evaluating empty expression");
    return eval_node<double>(root_, u1, u2);
}

Taylor Expression::eval_taylor(double u1, double u2) const {
    if (root_ < 0) raise(Errc::ExprParse, "evaluating empty expression");
    return eval_node<Taylor>(root_, Taylor::var1(u1), Taylor::var2(u2));
}

} // namespace llg
