#pragma once

#include "shaclgap/rdf/graph.hpp"

namespace shaclgap::rdf {

// True when the two graphs are equal up to a bijection between their blank
// nodes. Ground triples must match exactly; blank-node triples are matched
// by backtracking with degree-signature pruning.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace shaclgap::rdf
