#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace shaclgap::rdf {

// An absolute IRI. Non-empty, no whitespace.
struct Iri {
    std::string value;

    auto operator<=>(const Iri&) const = default;
};

// A blank node label, scoped to the document it was loaded from.
struct BlankNode {
    std::string label;

    auto operator<=>(const BlankNode&) const = default;
};

// A literal: lexical form plus datatype, plus a language tag when the
// datatype is rdf:langString. Plain literals carry xsd:string.
struct Literal {
    std::string lexical;
    Iri datatype;
    std::string language;

    auto operator<=>(const Literal&) const = default;
};

// One RDF node. Equality is structural: same kind, same components,
// compared exactly (no numeric normalization at the term level).
class Term {
public:
    // An empty blank node; placeholder until assigned.
    Term() : value_(BlankNode{}) {}
    Term(Iri iri);
    Term(BlankNode blank) : value_(std::move(blank)) {}
    Term(Literal literal);

    static Term iri(std::string value) { return Term(Iri{std::move(value)}); }
    static Term blank(std::string label) { return Term(BlankNode{std::move(label)}); }

    // Typed literal. The datatype IRI is mandatory.
    static Term literal(std::string lexical, Iri datatype);
    // Plain literal, defaults to xsd:string.
    static Term string_literal(std::string lexical);
    // Language-tagged literal, carries rdf:langString.
    static Term lang_literal(std::string lexical, std::string language);
    static Term integer(long long value);
    static Term boolean(bool value);

    bool is_iri() const { return std::holds_alternative<Iri>(value_); }
    bool is_blank() const { return std::holds_alternative<BlankNode>(value_); }
    bool is_literal() const { return std::holds_alternative<Literal>(value_); }

    const Iri& as_iri() const { return std::get<Iri>(value_); }
    const BlankNode& as_blank() const { return std::get<BlankNode>(value_); }
    const Literal& as_literal() const { return std::get<Literal>(value_); }

    auto operator<=>(const Term&) const = default;

private:
    std::variant<Iri, BlankNode, Literal> value_;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

// Renders a term in N-Triples style: <iri>, _:label, "lexical"^^<datatype>.
// Used for diagnostics and validation messages.
std::string to_string(const Term& term);
std::string to_string(const Triple& triple);

// The part of an IRI after the last '#' or '/'. Falls back to the whole IRI.
std::string_view local_name(const Iri& iri);

std::size_t hash_value(const Term& term);

struct TermHash {
    std::size_t operator()(const Term& term) const { return hash_value(term); }
};

struct TermPairHash {
    std::size_t operator()(const std::pair<Term, Term>& p) const {
        std::size_t h = hash_value(p.first);
        return h ^ (hash_value(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace shaclgap::rdf
