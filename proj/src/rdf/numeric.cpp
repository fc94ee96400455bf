#include "shaclgap/rdf/numeric.hpp"

namespace shaclgap::rdf {

std::string_view to_string(RangeRelation relation) {
    switch (relation) {
        case RangeRelation::min_inclusive: return "minInclusive";
        case RangeRelation::max_inclusive: return "maxInclusive";
        case RangeRelation::min_exclusive: return "minExclusive";
        case RangeRelation::max_exclusive: return "maxExclusive";
    }
    return "?";
}

std::optional<Decimal> parse_decimal(std::string_view lexical) {
    std::size_t i = 0;
    bool negative = false;
    if (i < lexical.size() && (lexical[i] == '+' || lexical[i] == '-')) {
        negative = lexical[i] == '-';
        ++i;
    }
    std::string int_digits;
    std::string frac_digits;
    bool seen_dot = false;
    bool seen_digit = false;
    for (; i < lexical.size(); ++i) {
        char c = lexical[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
            (seen_dot ? frac_digits : int_digits) += c;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) return std::nullopt;

    // Normalize: strip leading integer zeros and trailing fraction zeros.
    std::size_t first = int_digits.find_first_not_of('0');
    int_digits = first == std::string::npos ? "0" : int_digits.substr(first);
    std::size_t last = frac_digits.find_last_not_of('0');
    frac_digits = last == std::string::npos ? "" : frac_digits.substr(0, last + 1);
    if (int_digits == "0" && frac_digits.empty()) negative = false;
    return Decimal{negative, std::move(int_digits), std::move(frac_digits)};
}

namespace {

// Compares two non-negative normalized decimals by magnitude.
int compare_magnitude(const Decimal& a, const Decimal& b) {
    if (a.int_digits.size() != b.int_digits.size())
        return a.int_digits.size() < b.int_digits.size() ? -1 : 1;
    if (int c = a.int_digits.compare(b.int_digits); c != 0) return c < 0 ? -1 : 1;
    // Fraction digits compare position by position; the shorter one is
    // padded with zeros, which normalization already stripped.
    if (int c = a.frac_digits.compare(b.frac_digits); c != 0) {
        // "12" vs "1" → "1" is a prefix, longer non-zero tail wins.
        std::size_t n = std::min(a.frac_digits.size(), b.frac_digits.size());
        int head = a.frac_digits.compare(0, n, b.frac_digits, 0, n);
        if (head != 0) return head < 0 ? -1 : 1;
        return a.frac_digits.size() < b.frac_digits.size() ? -1 : 1;
    }
    return 0;
}

}  // namespace

int compare(const Decimal& a, const Decimal& b) {
    if (a.negative != b.negative) return a.negative ? -1 : 1;
    int mag = compare_magnitude(a, b);
    return a.negative ? -mag : mag;
}

CompareOutcome compare_literal(const Literal& value, const Literal& bound, RangeRelation relation) {
    auto v = parse_decimal(value.lexical);
    auto b = parse_decimal(bound.lexical);
    if (!v || !b) return CompareOutcome::incomparable;
    int c = compare(*v, *b);
    bool ok = false;
    switch (relation) {
        case RangeRelation::min_inclusive: ok = c >= 0; break;
        case RangeRelation::max_inclusive: ok = c <= 0; break;
        case RangeRelation::min_exclusive: ok = c > 0; break;
        case RangeRelation::max_exclusive: ok = c < 0; break;
    }
    return ok ? CompareOutcome::satisfied : CompareOutcome::violated;
}

}  // namespace shaclgap::rdf
