// ASCII formula syntax.
//
//   formula ::= imp { "<->" imp }
//   imp     ::= or [ "->" imp ]
//   or      ::= and { "|" and }
//   and     ::= until { "&" until }
//   until   ::= unary [ ("U" | "S") until ]
//   unary   ::= ("!" | "X" | "F" | "G" | "Y" | "wY" | "Finf" | "Ginf"
//                | "@" var | "@root") unary
//             | ("E" | "A") formula
//             | "down" var "." formula
//             | atom
//   atom    ::= "true" | "false" | "root" | var | ident | "(" formula ")"
//   var     ::= "x" digit+        (index >= 1)
//
// E, A and down extend as far right as possible.
#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "btl/formula.hpp"

namespace btl {

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    enum class Code { Syntax, VarIndexZero, MalformedBinder, NotStateFormula };

    ParseError(Code code, SourceSpan span, std::string message, std::set<std::string> expected = {});

    Code code() const { return code_; }
    SourceSpan span() const { return span_; }
    const std::set<std::string>& expected() const { return expected_; }
    const std::string& detail() const { return detail_; }

private:
    Code code_;
    SourceSpan span_;
    std::set<std::string> expected_;
    std::string detail_;
};

// Parses a state formula; path formulas outside a quantifier are rejected.
Formula parse_formula(const std::string& text);
// Parses any formula, state or path.
Formula parse_path_formula(const std::string& text);

std::string print_formula(const Formula& f);

bool is_keyword(const std::string& word);
bool is_valid_prop_name(const std::string& word);

}  // namespace btl
