#pragma once

#include "shaclgap/rdf/graph.hpp"
#include "shaclgap/rdf/prefix_map.hpp"

#include <optional>

namespace shaclgap::turtle {

// A parsed Turtle document: frozen graph plus its prefix declarations.
// Every IRI in the graph is absolute; prefixes are resolved during parse.
struct Document {
    rdf::Graph graph;
    rdf::PrefixMap prefixes;
    std::optional<rdf::Iri> base;
};

// Union of several documents. Blank nodes stay distinct per source document:
// incoming labels are renamed to fresh ones in the merged graph. Prefix
// re-declarations overwrite, later documents winning.
Document merge(const std::vector<Document>& documents);

}  // namespace shaclgap::turtle
