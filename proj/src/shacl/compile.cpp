#include "shaclgap/shacl/compile.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <unordered_map>
#include <unordered_set>

namespace shaclgap::shacl {

std::string_view to_string(CompileErrorKind kind) {
    switch (kind) {
        case CompileErrorKind::invalid_shape: return "InvalidShape";
        case CompileErrorKind::dangling_reference: return "DanglingReference";
        case CompileErrorKind::cyclic_reference: return "CyclicReference";
        case CompileErrorKind::unsupported_constraint: return "UnsupportedConstraint";
        case CompileErrorKind::malformed_constraint: return "MalformedConstraint";
    }
    return "?";
}

CompileError::CompileError(CompileErrorKind kind, rdf::Term shape_node, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " at " + rdf::to_string(shape_node) + ": " +
                         message),
      kind(kind),
      shape_node(std::move(shape_node)),
      message(message) {}

namespace {

using rdf::Term;

bool in_shacl_ns(const Term& predicate) {
    return predicate.as_iri().value.compare(0, vocab::sh_ns.size(), vocab::sh_ns) == 0;
}

std::uint32_t parse_count(const Term& shape_node, const Term& object, const char* predicate) {
    if (!object.is_literal() || object.as_literal().datatype != vocab::xsd_integer)
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " requires an integer, got " +
                               rdf::to_string(object));
    const std::string& lex = object.as_literal().lexical;
    if (lex.empty() || lex[0] == '-')
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " must be non-negative, got " + lex);
    std::uint32_t value = 0;
    for (char c : lex) {
        if (c < '0' || c > '9')
            throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                               std::string(predicate) + " requires an integer, got " + lex);
        value = value * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return value;
}

rdf::Iri require_iri(const Term& shape_node, const Term& object, const char* predicate) {
    if (!object.is_iri())
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " requires an IRI, got " + rdf::to_string(object));
    return object.as_iri();
}

rdf::Literal require_numeric_literal(const Term& shape_node, const Term& object,
                                     const char* predicate) {
    if (!object.is_literal() || !rdf::parse_decimal(object.as_literal().lexical))
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " requires a numeric literal, got " +
                               rdf::to_string(object));
    return object.as_literal();
}

std::vector<ShapeId> members_of_list(const Term& shape_node, const turtle::Document& document,
                                     const Term& head, const char* predicate) {
    std::vector<Term> members;
    try {
        members = document.graph.collect_list(head);
    } catch (const rdf::MalformedListError& e) {
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " list is malformed: " + e.what());
    }
    if (members.empty())
        throw CompileError(CompileErrorKind::malformed_constraint, shape_node,
                           std::string(predicate) + " list must not be empty");
    for (const auto& m : members) {
        if (m.is_literal())
            throw CompileError(CompileErrorKind::dangling_reference, shape_node,
                               std::string(predicate) + " member " + rdf::to_string(m) +
                                   " is not a shape");
    }
    return members;
}

ShapeId reference(const Term& shape_node, const Term& object, const char* predicate) {
    if (object.is_literal())
        throw CompileError(CompileErrorKind::dangling_reference, shape_node,
                           std::string(predicate) + " reference " + rdf::to_string(object) +
                               " is not a shape");
    return object;
}

}  // namespace

std::vector<Constraint> compile_constraints(const Term& shape_node,
                                            const turtle::Document& document) {
    std::vector<Constraint> constraints;
    for (const auto& triple : document.graph.match(shape_node, std::nullopt, std::nullopt)) {
        const Term& p = triple.predicate;
        const Term& o = triple.object;
        if (!in_shacl_ns(p)) continue;
        const rdf::Iri& pred = p.as_iri();
        if (pred == vocab::sh_path || pred == vocab::sh_target_class ||
            pred == vocab::sh_target_node || pred == vocab::sh_order)
            continue;  // structural, handled by discover()
        if (pred == vocab::sh_min_count)
            constraints.push_back(MinCount{parse_count(shape_node, o, "sh:minCount")});
        else if (pred == vocab::sh_max_count)
            constraints.push_back(MaxCount{parse_count(shape_node, o, "sh:maxCount")});
        else if (pred == vocab::sh_datatype)
            constraints.push_back(DatatypeConstraint{require_iri(shape_node, o, "sh:datatype")});
        else if (pred == vocab::sh_class)
            constraints.push_back(ClassConstraint{require_iri(shape_node, o, "sh:class")});
        else if (pred == vocab::sh_has_value)
            constraints.push_back(HasValue{o});
        else if (pred == vocab::sh_min_inclusive)
            constraints.push_back(RangeConstraint{rdf::RangeRelation::min_inclusive,
                                                  require_numeric_literal(shape_node, o, "sh:minInclusive")});
        else if (pred == vocab::sh_max_inclusive)
            constraints.push_back(RangeConstraint{rdf::RangeRelation::max_inclusive,
                                                  require_numeric_literal(shape_node, o, "sh:maxInclusive")});
        else if (pred == vocab::sh_min_exclusive)
            constraints.push_back(RangeConstraint{rdf::RangeRelation::min_exclusive,
                                                  require_numeric_literal(shape_node, o, "sh:minExclusive")});
        else if (pred == vocab::sh_max_exclusive)
            constraints.push_back(RangeConstraint{rdf::RangeRelation::max_exclusive,
                                                  require_numeric_literal(shape_node, o, "sh:maxExclusive")});
        else if (pred == vocab::sh_and)
            constraints.push_back(AndConstraint{members_of_list(shape_node, document, o, "sh:and")});
        else if (pred == vocab::sh_or)
            constraints.push_back(OrConstraint{members_of_list(shape_node, document, o, "sh:or")});
        else if (pred == vocab::sh_not)
            constraints.push_back(NotConstraint{reference(shape_node, o, "sh:not")});
        else if (pred == vocab::sh_property)
            constraints.push_back(PropertyRef{reference(shape_node, o, "sh:property")});
        else if (pred == vocab::sh_node)
            constraints.push_back(NodeRef{reference(shape_node, o, "sh:node")});
        else
            throw CompileError(CompileErrorKind::unsupported_constraint, shape_node,
                               "unsupported SHACL predicate <" + pred.value + ">");
    }
    return constraints;
}

namespace {

struct Discovery {
    std::vector<Term> order;
    std::unordered_set<Term, rdf::TermHash> seen;

    void add(const Term& node) {
        if (node.is_literal()) return;  // surfaces as DanglingReference later
        if (seen.insert(node).second) order.push_back(node);
    }
};

void check_references(const ShapesGraph& shapes, const turtle::Document& document) {
    // A shape named only by reference, with no triples of its own, stays a
    // legal vacuous node shape: documents may be fragments of a larger
    // shapes graph. The kind check fires only against defined shapes.
    auto defined = [&](const Shape& target) {
        return !target.constraints.empty() || !target.targets.empty() ||
               target.order.has_value() || target.path.has_value() ||
               document.graph.contains(
                   {target.id, Term(vocab::rdf_type), Term(vocab::sh_node_shape)});
    };
    for (const auto& shape : shapes.shapes()) {
        auto resolve = [&](const ShapeId& member, const char* predicate) -> const Shape& {
            const Shape* target = shapes.find(member);
            if (!target)
                throw CompileError(CompileErrorKind::dangling_reference, shape.id,
                                   std::string(predicate) + " reference " + rdf::to_string(member) +
                                       " does not resolve to a shape");
            return *target;
        };
        for (const auto& constraint : shape.constraints) {
            if (const auto* a = std::get_if<AndConstraint>(&constraint)) {
                for (const auto& m : a->members) resolve(m, "sh:and");
            } else if (const auto* o = std::get_if<OrConstraint>(&constraint)) {
                for (const auto& m : o->members) resolve(m, "sh:or");
            } else if (const auto* n = std::get_if<NotConstraint>(&constraint)) {
                resolve(n->member, "sh:not");
            } else if (const auto* pr = std::get_if<PropertyRef>(&constraint)) {
                const Shape& target = resolve(pr->member, "sh:property");
                if (target.kind != ShapeKind::property_shape && defined(target))
                    throw CompileError(CompileErrorKind::malformed_constraint, shape.id,
                                       "sh:property reference " + rdf::to_string(pr->member) +
                                           " is not a property shape");
            } else if (const auto* nr = std::get_if<NodeRef>(&constraint)) {
                const Shape& target = resolve(nr->member, "sh:node");
                if (target.kind != ShapeKind::node_shape)
                    throw CompileError(CompileErrorKind::malformed_constraint, shape.id,
                                       "sh:node reference " + rdf::to_string(nr->member) +
                                           " is not a node shape");
            }
        }
    }
}

std::vector<ShapeId> member_ids(const Constraint& constraint) {
    std::vector<ShapeId> out;
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, AndConstraint> || std::is_same_v<C, OrConstraint>)
                out = c.members;
            else if constexpr (std::is_same_v<C, NotConstraint> || std::is_same_v<C, PropertyRef> ||
                               std::is_same_v<C, NodeRef>)
                out.push_back(c.member);
        },
        constraint);
    return out;
}

void check_acyclic(const ShapesGraph& shapes) {
    // 0 fresh, 1 on stack, 2 done
    std::unordered_map<Term, int, rdf::TermHash> state;
    auto visit = [&](auto&& self, const Shape& shape) -> void {
        int& st = state[shape.id];
        if (st == 1)
            throw CompileError(CompileErrorKind::cyclic_reference, shape.id,
                               "shape references itself through sh:and/sh:or/sh:not/sh:node/sh:property");
        if (st == 2) return;
        st = 1;
        for (const auto& constraint : shape.constraints)
            for (const auto& member : member_ids(constraint)) self(self, shapes.at(member));
        state[shape.id] = 2;
    };
    for (const auto& shape : shapes.shapes()) visit(visit, shape);
}

}  // namespace

ShapesGraph discover(const turtle::Document& document) {
    Discovery discovery;
    const Term type(vocab::rdf_type);
    for (const auto& t : document.graph.triples()) {
        if (t.predicate == type &&
            (t.object == Term(vocab::sh_node_shape) || t.object == Term(vocab::sh_property_shape))) {
            discovery.add(t.subject);
        } else if (t.predicate == Term(vocab::sh_path)) {
            discovery.add(t.subject);
        } else if (t.predicate == Term(vocab::sh_property) || t.predicate == Term(vocab::sh_node) ||
                   t.predicate == Term(vocab::sh_not)) {
            discovery.add(t.object);
        } else if (t.predicate == Term(vocab::sh_or) || t.predicate == Term(vocab::sh_and)) {
            std::vector<Term> members;
            try {
                members = document.graph.collect_list(t.object);
            } catch (const rdf::MalformedListError& e) {
                throw CompileError(CompileErrorKind::malformed_constraint, t.subject,
                                   "sh:or/sh:and list is malformed: " + std::string(e.what()));
            }
            for (const auto& m : members) discovery.add(m);
        }
    }

    ShapesGraph shapes;
    for (const auto& node : discovery.order) {
        Shape shape;
        shape.id = node;

        auto paths = document.graph.objects_of(node, Term(vocab::sh_path));
        bool typed_node_shape =
            document.graph.contains({node, type, Term(vocab::sh_node_shape)});
        bool typed_property_shape =
            document.graph.contains({node, type, Term(vocab::sh_property_shape)});
        if (!paths.empty() && typed_node_shape)
            throw CompileError(CompileErrorKind::invalid_shape, node,
                               "typed sh:NodeShape but is the subject of sh:path");
        if (paths.empty() && typed_property_shape)
            throw CompileError(CompileErrorKind::invalid_shape, node,
                               "typed sh:PropertyShape but has no sh:path");
        if (paths.size() > 1)
            throw CompileError(CompileErrorKind::invalid_shape, node, "more than one sh:path");
        if (!paths.empty()) {
            if (!paths.front().is_iri())
                throw CompileError(CompileErrorKind::invalid_shape, node,
                                   "sh:path must be a predicate IRI, got " +
                                       rdf::to_string(paths.front()));
            shape.kind = ShapeKind::property_shape;
            shape.path = paths.front().as_iri();
        }

        for (const auto& t : document.graph.match(node, std::nullopt, std::nullopt)) {
            if (t.predicate == Term(vocab::sh_target_class)) {
                shape.targets.push_back(
                    {Target::Kind::target_class,
                     rdf::Term(require_iri(node, t.object, "sh:targetClass"))});
            } else if (t.predicate == Term(vocab::sh_target_node)) {
                shape.targets.push_back({Target::Kind::target_node, t.object});
            } else if (t.predicate == Term(vocab::sh_order)) {
                if (shape.order)
                    throw CompileError(CompileErrorKind::malformed_constraint, node,
                                       "more than one sh:order");
                shape.order = require_numeric_literal(node, t.object, "sh:order");
            }
        }

        shape.constraints = compile_constraints(node, document);
        if (shape.kind == ShapeKind::node_shape) {
            for (const auto& c : shape.constraints) {
                if (std::holds_alternative<MinCount>(c) || std::holds_alternative<MaxCount>(c))
                    throw CompileError(CompileErrorKind::malformed_constraint, node,
                                       "count constraints need a property shape context");
            }
        }
        shapes.add(std::move(shape));
    }

    check_references(shapes, document);
    check_acyclic(shapes);
    return shapes;
}

}  // namespace shaclgap::shacl
