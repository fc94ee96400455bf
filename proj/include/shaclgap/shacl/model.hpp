#pragma once

#include "shaclgap/rdf/numeric.hpp"
#include "shaclgap/rdf/term.hpp"
#include "shaclgap/turtle/document.hpp"

#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

namespace shaclgap::shacl {

// A shape's identity: the IRI or blank node naming it in the shapes graph.
using ShapeId = rdf::Term;

enum class ShapeKind { node_shape, property_shape };

struct Target {
    enum class Kind { target_class, target_node };
    Kind kind;
    rdf::Term value;

    bool operator==(const Target&) const = default;
};

struct MinCount { std::uint32_t count; bool operator==(const MinCount&) const = default; };
struct MaxCount { std::uint32_t count; bool operator==(const MaxCount&) const = default; };
struct DatatypeConstraint { rdf::Iri datatype; bool operator==(const DatatypeConstraint&) const = default; };
struct ClassConstraint { rdf::Iri cls; bool operator==(const ClassConstraint&) const = default; };
struct HasValue { rdf::Term value; bool operator==(const HasValue&) const = default; };
struct RangeConstraint {
    rdf::RangeRelation relation;
    rdf::Literal bound;
    bool operator==(const RangeConstraint&) const = default;
};
struct AndConstraint { std::vector<ShapeId> members; bool operator==(const AndConstraint&) const = default; };
struct OrConstraint { std::vector<ShapeId> members; bool operator==(const OrConstraint&) const = default; };
struct NotConstraint { ShapeId member; bool operator==(const NotConstraint&) const = default; };
struct PropertyRef { ShapeId member; bool operator==(const PropertyRef&) const = default; };
struct NodeRef { ShapeId member; bool operator==(const NodeRef&) const = default; };

using Constraint = std::variant<MinCount, MaxCount, DatatypeConstraint, ClassConstraint, HasValue,
                                RangeConstraint, AndConstraint, OrConstraint, NotConstraint,
                                PropertyRef, NodeRef>;

struct Shape {
    ShapeId id;
    ShapeKind kind = ShapeKind::node_shape;
    // Present exactly when kind is property_shape. Predicate paths only.
    std::optional<rdf::Iri> path;
    std::vector<Target> targets;
    std::vector<Constraint> constraints;
    // Non-validating annotation, carried for diagnosis only.
    std::optional<rdf::Literal> order;
};

// Compiled shapes, in discovery order. Every ShapeId referenced by a
// constraint resolves, and the reference graph is acyclic.
class ShapesGraph {
public:
    void add(Shape shape);

    const Shape* find(const ShapeId& id) const;
    const Shape& at(const ShapeId& id) const;
    const std::vector<Shape>& shapes() const { return shapes_; }
    std::size_t size() const { return shapes_.size(); }

    // Shapes with at least one target, in discovery order.
    std::vector<const Shape*> entry_points() const;

private:
    std::vector<Shape> shapes_;
    std::unordered_map<ShapeId, std::size_t, rdf::TermHash> index_;
};

inline std::optional<rdf::Literal> order_of(const Shape& shape) { return shape.order; }

// Canonical re-emission of a compiled model as triples; discover() of the
// result reproduces the model up to synthetic id renaming.
turtle::Document emit(const ShapesGraph& shapes);

}  // namespace shaclgap::shacl
