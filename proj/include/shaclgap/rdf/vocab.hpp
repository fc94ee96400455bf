#pragma once

#include "shaclgap/rdf/term.hpp"

// Vocabulary constants for the RDF, RDFS, XSD and SHACL namespaces.
namespace shaclgap::vocab {

inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view sh_ns = "http://www.w3.org/ns/shacl#";

inline rdf::Iri rdf_iri(std::string_view local) { return {std::string(rdf_ns) + std::string(local)}; }
inline rdf::Iri rdfs_iri(std::string_view local) { return {std::string(rdfs_ns) + std::string(local)}; }
inline rdf::Iri xsd_iri(std::string_view local) { return {std::string(xsd_ns) + std::string(local)}; }
inline rdf::Iri sh_iri(std::string_view local) { return {std::string(sh_ns) + std::string(local)}; }

inline const rdf::Iri rdf_type = rdf_iri("type");
inline const rdf::Iri rdf_first = rdf_iri("first");
inline const rdf::Iri rdf_rest = rdf_iri("rest");
inline const rdf::Iri rdf_nil = rdf_iri("nil");
inline const rdf::Iri rdf_lang_string = rdf_iri("langString");

inline const rdf::Iri rdfs_subclass_of = rdfs_iri("subClassOf");

inline const rdf::Iri xsd_string = xsd_iri("string");
inline const rdf::Iri xsd_integer = xsd_iri("integer");
inline const rdf::Iri xsd_decimal = xsd_iri("decimal");
inline const rdf::Iri xsd_boolean = xsd_iri("boolean");

inline const rdf::Iri sh_node_shape = sh_iri("NodeShape");
inline const rdf::Iri sh_property_shape = sh_iri("PropertyShape");
inline const rdf::Iri sh_path = sh_iri("path");
inline const rdf::Iri sh_target_class = sh_iri("targetClass");
inline const rdf::Iri sh_target_node = sh_iri("targetNode");
inline const rdf::Iri sh_property = sh_iri("property");
inline const rdf::Iri sh_node = sh_iri("node");
inline const rdf::Iri sh_not = sh_iri("not");
inline const rdf::Iri sh_and = sh_iri("and");
inline const rdf::Iri sh_or = sh_iri("or");
inline const rdf::Iri sh_order = sh_iri("order");
inline const rdf::Iri sh_min_count = sh_iri("minCount");
inline const rdf::Iri sh_max_count = sh_iri("maxCount");
inline const rdf::Iri sh_datatype = sh_iri("datatype");
inline const rdf::Iri sh_class = sh_iri("class");
inline const rdf::Iri sh_has_value = sh_iri("hasValue");
inline const rdf::Iri sh_min_inclusive = sh_iri("minInclusive");
inline const rdf::Iri sh_max_inclusive = sh_iri("maxInclusive");
inline const rdf::Iri sh_min_exclusive = sh_iri("minExclusive");
inline const rdf::Iri sh_max_exclusive = sh_iri("maxExclusive");

inline const rdf::Iri sh_validation_report = sh_iri("ValidationReport");
inline const rdf::Iri sh_validation_result = sh_iri("ValidationResult");
inline const rdf::Iri sh_conforms = sh_iri("conforms");
inline const rdf::Iri sh_result = sh_iri("result");
inline const rdf::Iri sh_focus_node = sh_iri("focusNode");
inline const rdf::Iri sh_result_path = sh_iri("resultPath");
inline const rdf::Iri sh_value = sh_iri("value");
inline const rdf::Iri sh_source_shape = sh_iri("sourceShape");
inline const rdf::Iri sh_source_constraint_component = sh_iri("sourceConstraintComponent");
inline const rdf::Iri sh_result_severity = sh_iri("resultSeverity");
inline const rdf::Iri sh_result_message = sh_iri("resultMessage");
inline const rdf::Iri sh_violation = sh_iri("Violation");

}  // namespace shaclgap::vocab
