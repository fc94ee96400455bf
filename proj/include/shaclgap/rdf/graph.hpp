#pragma once

#include "shaclgap/rdf/term.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace shaclgap::rdf {

// A list node on an rdf:first/rdf:rest chain lacks exactly one rdf:first or
// exactly one rdf:rest, or the chain cycles.
class MalformedListError : public std::runtime_error {
public:
    MalformedListError(Term node, const std::string& what)
        : std::runtime_error(what), node(std::move(node)) {}

    Term node;
};

// In-memory triple set with set semantics and stable insertion order.
//
// Three indexes back pattern matching: SPO (keyed by subject), POS (keyed by
// predicate, then object) and OSP (keyed by object). Every match with at
// least one bound position goes through an index; only the all-unbound match
// walks the full triple vector. Match results always come back in insertion
// order.
//
// Graphs are mutable only during load. After freeze() any number of readers
// may query concurrently; insertion into a frozen graph is a logic error.
class Graph {
public:
    // Returns false when the triple was already present. Throws
    // std::invalid_argument on triples violating the term invariants
    // (literal subject, non-IRI predicate) and std::logic_error when frozen.
    bool insert(Triple triple);
    bool insert(Term subject, Term predicate, Term object);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    const std::vector<Triple>& triples() const { return triples_; }

    bool contains(const Triple& triple) const;

    // Triples agreeing with all bound positions, in insertion order.
    std::vector<Triple> match(const std::optional<Term>& subject,
                              const std::optional<Term>& predicate,
                              const std::optional<Term>& object) const;

    // Objects of (subject, predicate, ?). Distinct by set semantics.
    std::vector<Term> objects_of(const Term& subject, const Term& predicate) const;
    std::vector<Term> subjects_of(const Term& predicate, const Term& object) const;

    // Members of the RDF collection rooted at `head`, in list order.
    // rdf:nil yields the empty sequence. Throws MalformedListError.
    std::vector<Term> collect_list(const Term& head) const;

    // Reflexive-transitive closure of rdfs:subClassOf, pointing down: every
    // class whose instances count as instances of `cls`, including `cls`
    // itself. Cycles are tolerated. Breadth-first order from `cls`.
    std::vector<Term> subclass_closure(const Term& cls) const;

    // Nodes with rdf:type on any member of subclass_closure(cls).
    std::vector<Term> instances_of(const Term& cls) const;

private:
    std::vector<Triple> triples_;
    bool frozen_ = false;

    using IndexList = std::vector<std::uint32_t>;
    std::unordered_map<Term, IndexList, TermHash> by_subject_;
    std::unordered_map<Term, std::unordered_map<Term, IndexList, TermHash>, TermHash> by_predicate_object_;
    std::unordered_map<Term, IndexList, TermHash> by_object_;
};

}  // namespace shaclgap::rdf
