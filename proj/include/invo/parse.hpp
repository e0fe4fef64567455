#pragma once

#include "invo/module_element.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace invo {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column)
    {
    }
    int line;
    int column;
};

// Polynomial expressions over Q with + - * ^, parentheses, rational
// constants (3/4) and implicit products such as 2x or 3(x+y).  For rank > 1
// the text must be a tuple (f_1, ..., f_m).  line/column offsets only affect
// error messages.
ModuleElement parseElement(const std::string& text, const std::vector<std::string>& vars, const OrderPtr& order,
                           int rank = 1, int line = 1, int columnOffset = 0);

// Convenience for tests and small drivers: rank-1 polynomials.
Poly parsePoly(const std::string& text, const std::vector<std::string>& vars, const OrderPtr& order);
std::vector<Poly> parsePolys(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                             const OrderPtr& order);

} // namespace invo
