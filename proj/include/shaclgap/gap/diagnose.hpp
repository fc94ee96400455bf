#pragma once

#include "shaclgap/rdf/graph.hpp"
#include "shaclgap/shacl/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shaclgap::gap {

class GapError : public std::runtime_error {
public:
    enum class Kind { unknown_shape, not_a_node_shape };

    GapError(Kind kind, rdf::Term shape, const std::string& message)
        : std::runtime_error(message), kind(kind), shape(std::move(shape)) {}

    Kind kind;
    rdf::Term shape;
};

struct AlternativeDiagnosis;

// One failing atomic requirement: which shape demands it, what it demands,
// and what the data actually shows.
struct Gap {
    shacl::ShapeId source_shape;
    std::optional<rdf::Iri> path;
    std::string component;    // constraint kind, e.g. "minInclusive"
    std::string requirement;  // e.g. "minInclusive 1080 on :duration"
    std::vector<rdf::Term> observed;
    // Sub-diagnoses when the gap is a nested sh:or, ranked best-first.
    // The nested or counts as a single atom in its branch's totals.
    std::vector<AlternativeDiagnosis> alternatives;
};

struct AlternativeDiagnosis {
    std::size_t branch_index = 0;  // 0-based position in the sh:or list
    shacl::ShapeId member_shape;
    std::optional<rdf::Literal> order_tag;
    std::vector<Gap> gaps;
    std::size_t satisfied_count = 0;
    std::size_t total_count = 0;  // satisfied_count + |gaps|
};

struct GapReport {
    rdf::Term focus;
    shacl::ShapeId shape;
    bool conforms = false;
    // Failing atoms outside any alternative.
    std::vector<Gap> common_gaps;
    std::size_t common_satisfied = 0;
    std::size_t common_total = 0;
    // Branches of the shape's alternatives block, ranked best-first.
    std::vector<AlternativeDiagnosis> alternatives;
};

// Evaluates every atomic constraint reachable from the node shape at the
// focus node. Constraints under the shape's sh:or are grouped per branch
// (sh:and members flattened, sh:property expanded); everything else lands
// in common_gaps. The focus need not be a current target, so hypothetical
// applicants can be queried.
GapReport diagnose(const shacl::ShapesGraph& shapes, const shacl::ShapeId& shape,
                   const rdf::Term& focus, const rdf::Graph& data);

// Sorts ascending by gap count; ties break by ascending order tag (absent
// tags last), then by branch index.
std::vector<AlternativeDiagnosis> rank(std::vector<AlternativeDiagnosis> alternatives);

// One deterministic sentence naming path, requirement and observed state.
std::string explain(const Gap& gap);

}  // namespace shaclgap::gap
