#include "shaclgap/rdf/term.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <functional>

namespace shaclgap::rdf {

namespace {

bool contains_whitespace(std::string_view s) {
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return true;
    }
    return false;
}

}  // namespace

Term::Term(Iri iri) : value_(std::move(iri)) {
    const auto& v = std::get<Iri>(value_).value;
    if (v.empty() || contains_whitespace(v))
        throw std::invalid_argument("invalid IRI: '" + v + "'");
}

Term::Term(Literal literal) : value_(std::move(literal)) {
    const auto& lit = std::get<Literal>(value_);
    if (lit.datatype.value.empty())
        throw std::invalid_argument("literal without datatype: '" + lit.lexical + "'");
    if (!lit.language.empty() && lit.datatype != vocab::rdf_lang_string)
        throw std::invalid_argument("language-tagged literal must carry rdf:langString");
}

Term Term::literal(std::string lexical, Iri datatype) {
    return Term(Literal{std::move(lexical), std::move(datatype), {}});
}

Term Term::string_literal(std::string lexical) {
    return Term(Literal{std::move(lexical), vocab::xsd_string, {}});
}

Term Term::lang_literal(std::string lexical, std::string language) {
    return Term(Literal{std::move(lexical), vocab::rdf_lang_string, std::move(language)});
}

Term Term::integer(long long value) {
    return Term(Literal{std::to_string(value), vocab::xsd_integer, {}});
}

Term Term::boolean(bool value) {
    return Term(Literal{value ? "true" : "false", vocab::xsd_boolean, {}});
}

std::string to_string(const Term& term) {
    if (term.is_iri()) return "<" + term.as_iri().value + ">";
    if (term.is_blank()) return "_:" + term.as_blank().label;
    const Literal& lit = term.as_literal();
    std::string out = "\"";
    for (char c : lit.lexical) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    if (!lit.language.empty()) {
        out += '@';
        out += lit.language;
    } else if (lit.datatype != vocab::xsd_string) {
        out += "^^<" + lit.datatype.value + ">";
    }
    return out;
}

std::string to_string(const Triple& triple) {
    return to_string(triple.subject) + " " + to_string(triple.predicate) + " " +
           to_string(triple.object) + " .";
}

std::string_view local_name(const Iri& iri) {
    std::string_view v = iri.value;
    auto pos = v.find_last_of("#/");
    if (pos == std::string_view::npos || pos + 1 >= v.size()) return v;
    return v.substr(pos + 1);
}

std::size_t hash_value(const Term& term) {
    std::hash<std::string> h;
    auto mix = [](std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    if (term.is_iri()) return mix(1, h(term.as_iri().value));
    if (term.is_blank()) return mix(2, h(term.as_blank().label));
    const Literal& lit = term.as_literal();
    return mix(mix(mix(3, h(lit.lexical)), h(lit.datatype.value)), h(lit.language));
}

}  // namespace shaclgap::rdf
