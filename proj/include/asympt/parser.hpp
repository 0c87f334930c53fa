#pragma once

#include <stdexcept>
#include <string>

#include "asympt/mapping.hpp"

namespace asympt {

// Diagnostic for malformed mapping text; positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_, column_;
    std::string message_;
};

// Mapping file format:
//   # comment
//   dim <n>
//   F<j> = <expr>        one line per j = 1..n, any order
// Expressions use + - * ^ with integer exponents, rational literals a/b,
// the imaginary unit i, variables x1..xn and parentheses.
PolynomialMapping parse_mapping(const std::string& text);

// Canonical text with components in order; parse_mapping(render_mapping(f)) == f.
std::string render_mapping(const PolynomialMapping& f);

} // namespace asympt
