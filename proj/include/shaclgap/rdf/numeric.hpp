#pragma once

#include "shaclgap/rdf/term.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace shaclgap::rdf {

enum class RangeRelation {
    min_inclusive,
    max_inclusive,
    min_exclusive,
    max_exclusive,
};

std::string_view to_string(RangeRelation relation);

enum class CompareOutcome {
    satisfied,
    violated,
    incomparable,
};

// An exact decimal value: sign plus normalized digit strings (no leading
// zeros in the integer part, no trailing zeros in the fraction).
struct Decimal {
    bool negative = false;
    std::string int_digits = "0";
    std::string frac_digits;

    auto operator<=>(const Decimal&) const = default;
};

// Accepts optional sign, digits, at most one '.', at least one digit total.
// Exponents are out of the supported grammar and do not parse.
std::optional<Decimal> parse_decimal(std::string_view lexical);

// Three-way comparison by numeric value: -1, 0, or 1.
int compare(const Decimal& a, const Decimal& b);

// Numeric comparison of a literal against a bound. Comparability is decided
// by the lexical forms alone: datatype IRIs are not required to match, the
// datatype constraint checks those separately. Non-numeric lexical forms on
// either side give `incomparable`.
CompareOutcome compare_literal(const Literal& value, const Literal& bound, RangeRelation relation);

}  // namespace shaclgap::rdf
