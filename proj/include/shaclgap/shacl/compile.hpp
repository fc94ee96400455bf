#pragma once

#include "shaclgap/shacl/model.hpp"
#include "shaclgap/turtle/document.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace shaclgap::shacl {

enum class CompileErrorKind {
    invalid_shape,
    dangling_reference,
    cyclic_reference,
    unsupported_constraint,
    malformed_constraint,
};

std::string_view to_string(CompileErrorKind kind);

class CompileError : public std::runtime_error {
public:
    CompileError(CompileErrorKind kind, rdf::Term shape_node, const std::string& message);

    CompileErrorKind kind;
    rdf::Term shape_node;
    std::string message;
};

// Builds the shape model from a parsed shapes document.
//
// A shape is created for every node that is typed sh:NodeShape or
// sh:PropertyShape, is the subject of sh:path, is the object of
// sh:property / sh:node / sh:not, or is a member of an sh:or / sh:and
// list. Kind follows the sh:path rule: property shapes are exactly the
// subjects of sh:path.
ShapesGraph discover(const turtle::Document& document);

// Constraints declared on one shape node, in document order. Exposed
// separately for inspection; discover() applies it to every shape.
std::vector<Constraint> compile_constraints(const rdf::Term& shape_node,
                                            const turtle::Document& document);

}  // namespace shaclgap::shacl
