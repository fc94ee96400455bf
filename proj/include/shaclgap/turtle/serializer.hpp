#pragma once

#include "shaclgap/turtle/document.hpp"

#include <string>

namespace shaclgap::turtle {

// Turtle text for the document: one subject per block, `;` between
// predicates, collections and single-reference blank nodes inlined.
// Deterministic for a given insertion order, and parse(serialize(d)) is
// graph-isomorphic to d.
std::string serialize(const Document& document);

}  // namespace shaclgap::turtle
