#pragma once

#include "shaclgap/shacl/model.hpp"
#include "shaclgap/turtle/document.hpp"
#include "shaclgap/validator/report.hpp"

namespace shaclgap::validator {

// Focus nodes of one shape: union over its targets, duplicates removed,
// stable order. Class targets include instances of subclasses.
std::vector<rdf::Term> focus_nodes(const shacl::Shape& shape, const rdf::Graph& data);

// Conformance of one focus node against a node shape. Failing atomic
// constraints append one result each; logical constraints append a single
// result at their own level. Results from sh:property / sh:node recursion
// keep the inner shape as their source.
bool conforms_node(const shacl::Shape& shape, const rdf::Term& focus, const rdf::Graph& data,
                   const shacl::ShapesGraph& shapes, std::vector<ValidationResult>* results);

// Conformance of one focus node against a property shape: constraints apply
// to the value nodes reached via the shape's path.
bool conforms_property(const shacl::Shape& shape, const rdf::Term& focus, const rdf::Graph& data,
                       const shacl::ShapesGraph& shapes, std::vector<ValidationResult>* results);

// Check-only evaluation of a logical constraint at a node; inner results
// are never emitted.
bool conforms_logical(const shacl::Constraint& constraint, const rdf::Term& node,
                      const rdf::Graph& data, const shacl::ShapesGraph& shapes);

// Check-only evaluation of a single constraint of `carrier` at `focus`.
bool constraint_holds(const shacl::Shape& carrier, const shacl::Constraint& constraint,
                      const rdf::Term& focus, const rdf::Graph& data,
                      const shacl::ShapesGraph& shapes);

// Closed-world validation of the data graph: every entry shape is checked
// at each of its focus nodes. Conforms exactly when no results.
ValidationReport validate(const shacl::ShapesGraph& shapes, const rdf::Graph& data);

// The report as RDF, using the SHACL results vocabulary.
turtle::Document report_to_graph(const ValidationReport& report);

}  // namespace shaclgap::validator
