#pragma once

// Arithmetic expressions in u1 and u2: literals, + - * / ^, unary minus,
// parentheses, and the unary functions sin cos tan sinh cosh tanh exp log
// sqrt atan. '^' binds tighter than unary minus and associates to the right.
// Parsed once into a flat node vector; evaluated over plain doubles or over
// degree-4 Taylor series with the same code path.

#include <string>
#include <vector>

#include "llg/taylor.hpp"

namespace llg {

struct ExprNode {
    enum class Kind { Lit, U1, U2, Add, Sub, Mul, Div, Pow, Neg, Fun };
    enum class Fn { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Atan };
    Kind kind;
    int a = -1;
    int b = -1;
    double lit = 0.0;
    Fn fn = Fn::Sin;
};

class Expression {
  public:
    Expression() = default;

    // Raises ExprParse on malformed input.
    static Expression parse(const std::string& text);

    double eval(double u1, double u2) const;
    Taylor eval_taylor(double u1, double u2) const;

    const std::string& text() const { return text_; }
    bool empty() const { return nodes_.empty(); }

  private:
    std::vector<ExprNode> nodes_;
    int root_ = -1;
    std::string text_;

    template <class T> T eval_node(int i, const T& u1, const T& u2) const;
};

} // namespace llg
