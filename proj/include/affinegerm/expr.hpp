#pragma once

#include "affinegerm/errors.hpp"
#include "affinegerm/forms.hpp"

#include <string>
#include <vector>

namespace ag {

// Error with a 1-based source position inside the parsed text.
class SourceError : public Error {
public:
    SourceError(ErrorKind kind, const std::string& what, int line, int column)
        : Error(kind, what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Result of evaluating an expression: a polynomial in z with jet
// coefficients, or a 1-form in dx, dy.
struct Expression {
    enum class Kind { Function, Form } kind = Kind::Function;
    std::vector<TransJet> poly;  // coefficient of z^k; size >= 1 for functions
    Form1 form;

    bool is_zero() const;
    int z_degree() const { return static_cast<int>(poly.size()) - 1; }
};

// Grammar: sums and products of numbers (integers, i), x, y, z, dx, dy,
// log(y) and parentheses; '^' takes an integer, or a parenthesized constant
// when the base is y.  Floating literals and x-poles are rejected.
// `line` is the line number reported in errors.
Expression parse_expression(const std::string& text, int order, int line = 1);

// Typed wrappers; a literal 0 is accepted as the zero form.
TransJet parse_function(const std::string& text, int order, int line = 1);
Form1 parse_form(const std::string& text, int order, int line = 1);
std::vector<TransJet> parse_polynomial(const std::string& text, int order, int line = 1);

// Canonical text, re-readable by the parser.
std::string print(const TransJet& f);
std::string print(const Form1& w);
std::string print(const Form2& w);
std::string print_polynomial(const std::vector<TransJet>& p);

}  // namespace ag
