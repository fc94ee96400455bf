#pragma once

#include "shaclgap/turtle/document.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace shaclgap::turtle {

enum class ParseErrorKind {
    unexpected_token,
    undeclared_prefix,
    bad_iri,
    bad_literal,
    unterminated_statement,
};

std::string_view to_string(ParseErrorKind kind);

// Parsing stops at the first error. Line and column are 1-based and point
// at the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

    ParseErrorKind kind;
    std::size_t line;
    std::size_t column;
    std::string message;
};

// Parses the Turtle subset used throughout this project:
//   @prefix / PREFIX directives, the `a` keyword, predicate lists (`;`),
//   object lists (`,`), collections `( ... )`, blank node property lists
//   `[ ... ]`, labeled blank nodes `_:x`, plain / typed / language-tagged
//   string literals, integer and decimal numeric literals, `#` comments.
// Numeric exponents, triple-quoted strings and relative IRIs are rejected.
Document parse(std::string_view text);

// Expands `prefix:local` against the declared prefixes. Throws ParseError
// with kind undeclared_prefix (positions refer to the input string).
rdf::Iri resolve(std::string_view prefixed_name, const rdf::PrefixMap& prefixes);

}  // namespace shaclgap::turtle
