#pragma once

#include "shaclgap/rdf/term.hpp"
#include "shaclgap/shacl/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shaclgap::validator {

// Constraint component of a validation result, named after the SHACL core
// vocabulary.
enum class Component {
    min_count,
    max_count,
    datatype,
    class_constraint,
    has_value,
    min_inclusive,
    max_inclusive,
    min_exclusive,
    max_exclusive,
    and_component,
    or_component,
    not_component,
};

// Local name of the component IRI, e.g. "MinCountConstraintComponent".
std::string_view component_name(Component component);
rdf::Iri component_iri(Component component);

struct ValidationResult {
    rdf::Term focus_node;
    std::optional<rdf::Iri> result_path;  // present iff the source shape is a property shape
    std::optional<rdf::Term> value;
    shacl::ShapeId source_shape;
    Component component;
    std::string message;
    // Severity is always sh:Violation.

    bool operator==(const ValidationResult&) const = default;
};

struct ValidationReport {
    bool conforms = true;
    std::vector<ValidationResult> results;
};

}  // namespace shaclgap::validator
