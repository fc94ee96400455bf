#include "shaclgap/validator/validate.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <algorithm>
#include <unordered_set>

namespace shaclgap::validator {

std::string_view component_name(Component component) {
    switch (component) {
        case Component::min_count: return "MinCountConstraintComponent";
        case Component::max_count: return "MaxCountConstraintComponent";
        case Component::datatype: return "DatatypeConstraintComponent";
        case Component::class_constraint: return "ClassConstraintComponent";
        case Component::has_value: return "HasValueConstraintComponent";
        case Component::min_inclusive: return "MinInclusiveConstraintComponent";
        case Component::max_inclusive: return "MaxInclusiveConstraintComponent";
        case Component::min_exclusive: return "MinExclusiveConstraintComponent";
        case Component::max_exclusive: return "MaxExclusiveConstraintComponent";
        case Component::and_component: return "AndConstraintComponent";
        case Component::or_component: return "OrConstraintComponent";
        case Component::not_component: return "NotConstraintComponent";
    }
    return "?";
}

rdf::Iri component_iri(Component component) {
    return vocab::sh_iri(component_name(component));
}

namespace {

using rdf::Term;
using shacl::Shape;
using shacl::ShapeKind;

Component range_component(rdf::RangeRelation relation) {
    switch (relation) {
        case rdf::RangeRelation::min_inclusive: return Component::min_inclusive;
        case rdf::RangeRelation::max_inclusive: return Component::max_inclusive;
        case rdf::RangeRelation::min_exclusive: return Component::min_exclusive;
        case rdf::RangeRelation::max_exclusive: return Component::max_exclusive;
    }
    return Component::min_inclusive;
}

const char* relation_symbol(rdf::RangeRelation relation) {
    switch (relation) {
        case rdf::RangeRelation::min_inclusive: return ">=";
        case rdf::RangeRelation::max_inclusive: return "<=";
        case rdf::RangeRelation::min_exclusive: return ">";
        case rdf::RangeRelation::max_exclusive: return "<";
    }
    return "?";
}

class Engine {
public:
    Engine(const shacl::ShapesGraph& shapes, const rdf::Graph& data)
        : shapes_(shapes), data_(data) {}

    bool check_shape(const Shape& shape, const Term& focus, std::vector<ValidationResult>* out) {
        return shape.kind == ShapeKind::property_shape ? check_property(shape, focus, out)
                                                       : check_node(shape, focus, out);
    }

    bool check_node(const Shape& shape, const Term& focus, std::vector<ValidationResult>* out) {
        bool ok = true;
        for (const auto& constraint : shape.constraints) {
            // A node shape constrains the focus node itself: the focus is
            // the single value node, without a path.
            if (!check_constraint(shape, constraint, focus, focus, out)) ok = false;
        }
        return ok;
    }

    bool check_property(const Shape& shape, const Term& focus, std::vector<ValidationResult>* out) {
        bool ok = true;
        for (const auto& constraint : shape.constraints) {
            if (!check_one(shape, constraint, focus, out)) ok = false;
        }
        return ok;
    }

    // One constraint of `shape` at `focus`, in the context the shape kind
    // dictates: property shapes test their value nodes, node shapes test
    // the focus node itself.
    bool check_one(const Shape& shape, const shacl::Constraint& constraint, const Term& focus,
                   std::vector<ValidationResult>* out) {
        if (shape.kind != ShapeKind::property_shape)
            return check_constraint(shape, constraint, focus, focus, out);

        const std::vector<Term> values = data_.objects_of(focus, Term(*shape.path));
        if (const auto* min = std::get_if<shacl::MinCount>(&constraint)) {
            if (values.size() >= min->count) return true;
            emit(out, shape, focus, std::nullopt,
                 "property has " + std::to_string(values.size()) + " values, requires at least " +
                     std::to_string(min->count),
                 Component::min_count);
            return false;
        }
        if (const auto* max = std::get_if<shacl::MaxCount>(&constraint)) {
            if (values.size() <= max->count) return true;
            emit(out, shape, focus, std::nullopt,
                 "property has " + std::to_string(values.size()) + " values, allows at most " +
                     std::to_string(max->count),
                 Component::max_count);
            return false;
        }
        if (std::get_if<shacl::HasValue>(&constraint))
            return check_constraint(shape, constraint, focus, focus, out);
        if (const auto* pr = std::get_if<shacl::PropertyRef>(&constraint)) {
            bool ok = true;
            for (const auto& value : values)
                if (!check_property(shapes_.at(pr->member), value, out)) ok = false;
            return ok;
        }
        if (const auto* nr = std::get_if<shacl::NodeRef>(&constraint)) {
            bool ok = true;
            for (const auto& value : values)
                if (!check_node(shapes_.at(nr->member), value, out)) ok = false;
            return ok;
        }
        // Value-node constraints report once per failing constraint, at the
        // first offending value.
        for (const auto& value : values) {
            if (!check_constraint(shape, constraint, focus, value, nullptr))
                return check_constraint(shape, constraint, focus, value, out);
        }
        return true;
    }

    // One constraint at one value node. `focus` is the node the result is
    // reported for; for node shapes value == focus.
    bool check_constraint(const Shape& shape, const shacl::Constraint& constraint,
                          const Term& focus, const Term& value,
                          std::vector<ValidationResult>* out) {
        if (const auto* dt = std::get_if<shacl::DatatypeConstraint>(&constraint)) {
            if (!value.is_literal() || value.as_literal().datatype != dt->datatype) {
                emit(out, shape, focus, value,
                     "value " + rdf::to_string(value) + " is not a literal with datatype <" +
                         dt->datatype.value + ">",
                     Component::datatype);
                return false;
            }
            return true;
        }
        if (const auto* cls = std::get_if<shacl::ClassConstraint>(&constraint)) {
            if (!is_instance_of(value, cls->cls)) {
                emit(out, shape, focus, value,
                     "value " + rdf::to_string(value) + " is not an instance of <" +
                         cls->cls.value + ">",
                     Component::class_constraint);
                return false;
            }
            return true;
        }
        if (const auto* has = std::get_if<shacl::HasValue>(&constraint)) {
            bool present;
            if (shape.kind == ShapeKind::property_shape) {
                const auto values = data_.objects_of(focus, Term(*shape.path));
                present = std::find(values.begin(), values.end(), has->value) != values.end();
            } else {
                present = value == has->value;
            }
            if (!present) {
                emit(out, shape, focus, std::nullopt,
                     "required value " + rdf::to_string(has->value) + " is missing",
                     Component::has_value);
                return false;
            }
            return true;
        }
        if (const auto* range = std::get_if<shacl::RangeConstraint>(&constraint)) {
            const std::string bound = rdf::to_string(Term(range->bound));
            if (!value.is_literal()) {
                emit(out, shape, focus, value,
                     "value " + rdf::to_string(value) + " is not a literal comparable with " + bound,
                     range_component(range->relation));
                return false;
            }
            switch (rdf::compare_literal(value.as_literal(), range->bound, range->relation)) {
                case rdf::CompareOutcome::satisfied: return true;
                case rdf::CompareOutcome::violated:
                    emit(out, shape, focus, value,
                         "value " + rdf::to_string(value) + " is not " +
                             relation_symbol(range->relation) + " " + bound,
                         range_component(range->relation));
                    return false;
                case rdf::CompareOutcome::incomparable:
                    emit(out, shape, focus, value,
                         "value " + rdf::to_string(value) + " is not comparable with " + bound,
                         range_component(range->relation));
                    return false;
            }
            return false;
        }
        if (const auto* a = std::get_if<shacl::AndConstraint>(&constraint)) {
            for (const auto& member : a->members) {
                if (!check_shape(shapes_.at(member), value, nullptr)) {
                    emit(out, shape, focus, value,
                         "node does not conform to all members of the sh:and list",
                         Component::and_component);
                    return false;
                }
            }
            return true;
        }
        if (const auto* o = std::get_if<shacl::OrConstraint>(&constraint)) {
            for (const auto& member : o->members) {
                if (check_shape(shapes_.at(member), value, nullptr)) return true;
            }
            emit(out, shape, focus, value, "node does not conform to any member of the sh:or list",
                 Component::or_component);
            return false;
        }
        if (const auto* n = std::get_if<shacl::NotConstraint>(&constraint)) {
            if (check_shape(shapes_.at(n->member), value, nullptr)) {
                emit(out, shape, focus, value, "node conforms to the negated shape",
                     Component::not_component);
                return false;
            }
            return true;
        }
        if (const auto* pr = std::get_if<shacl::PropertyRef>(&constraint))
            return check_property(shapes_.at(pr->member), value, out);
        if (const auto* nr = std::get_if<shacl::NodeRef>(&constraint))
            return check_node(shapes_.at(nr->member), value, out);
        // MinCount/MaxCount are handled in check_property; compile rejects
        // them on node shapes.
        throw std::logic_error("count constraint outside property shape context");
    }

    bool is_instance_of(const Term& value, const rdf::Iri& cls) {
        if (value.is_literal()) return false;
        const auto closure = data_.subclass_closure(Term(cls));
        for (const auto& type : data_.objects_of(value, Term(vocab::rdf_type))) {
            if (std::find(closure.begin(), closure.end(), type) != closure.end()) return true;
        }
        return false;
    }

private:
    const shacl::ShapesGraph& shapes_;
    const rdf::Graph& data_;

    void emit(std::vector<ValidationResult>* out, const Shape& shape, const Term& focus,
              std::optional<Term> value, std::string message, Component component) {
        if (!out) return;
        ValidationResult result;
        result.focus_node = focus;
        if (shape.kind == ShapeKind::property_shape) result.result_path = *shape.path;
        result.value = std::move(value);
        result.source_shape = shape.id;
        result.component = component;
        result.message = std::move(message);
        out->push_back(std::move(result));
    }
};

}  // namespace

std::vector<Term> focus_nodes(const Shape& shape, const rdf::Graph& data) {
    std::vector<Term> out;
    std::unordered_set<Term, rdf::TermHash> seen;
    for (const auto& target : shape.targets) {
        if (target.kind == shacl::Target::Kind::target_node) {
            if (seen.insert(target.value).second) out.push_back(target.value);
        } else {
            for (const auto& node : data.instances_of(target.value)) {
                if (seen.insert(node).second) out.push_back(node);
            }
        }
    }
    return out;
}

bool conforms_node(const Shape& shape, const Term& focus, const rdf::Graph& data,
                   const shacl::ShapesGraph& shapes, std::vector<ValidationResult>* results) {
    return Engine(shapes, data).check_node(shape, focus, results);
}

bool conforms_property(const Shape& shape, const Term& focus, const rdf::Graph& data,
                       const shacl::ShapesGraph& shapes, std::vector<ValidationResult>* results) {
    return Engine(shapes, data).check_property(shape, focus, results);
}

bool constraint_holds(const Shape& carrier, const shacl::Constraint& constraint, const Term& focus,
                      const rdf::Graph& data, const shacl::ShapesGraph& shapes) {
    return Engine(shapes, data).check_one(carrier, constraint, focus, nullptr);
}

bool conforms_logical(const shacl::Constraint& constraint, const Term& node,
                      const rdf::Graph& data, const shacl::ShapesGraph& shapes) {
    Engine engine(shapes, data);
    if (const auto* a = std::get_if<shacl::AndConstraint>(&constraint)) {
        for (const auto& member : a->members)
            if (!engine.check_shape(shapes.at(member), node, nullptr)) return false;
        return true;
    }
    if (const auto* o = std::get_if<shacl::OrConstraint>(&constraint)) {
        for (const auto& member : o->members)
            if (engine.check_shape(shapes.at(member), node, nullptr)) return true;
        return false;
    }
    if (const auto* n = std::get_if<shacl::NotConstraint>(&constraint))
        return !engine.check_shape(shapes.at(n->member), node, nullptr);
    throw std::invalid_argument("conforms_logical expects sh:and, sh:or or sh:not");
}

ValidationReport validate(const shacl::ShapesGraph& shapes, const rdf::Graph& data) {
    ValidationReport report;
    Engine engine(shapes, data);
    for (const Shape* shape : shapes.entry_points()) {
        for (const auto& focus : focus_nodes(*shape, data))
            engine.check_shape(*shape, focus, &report.results);
    }
    // Report semantics are a set: a shape reachable through two references
    // must not double its results.
    std::vector<ValidationResult> unique;
    for (auto& result : report.results) {
        if (std::find(unique.begin(), unique.end(), result) == unique.end())
            unique.push_back(std::move(result));
    }
    report.results = std::move(unique);
    report.conforms = report.results.empty();
    return report;
}

turtle::Document report_to_graph(const ValidationReport& report) {
    turtle::Document doc;
    doc.prefixes.declare("sh", rdf::Iri{std::string(vocab::sh_ns)});
    doc.prefixes.declare("rdf", rdf::Iri{std::string(vocab::rdf_ns)});
    doc.prefixes.declare("xsd", rdf::Iri{std::string(vocab::xsd_ns)});

    const Term report_node = rdf::Term::blank("report");
    doc.graph.insert(report_node, Term(vocab::rdf_type), Term(vocab::sh_validation_report));
    doc.graph.insert(report_node, Term(vocab::sh_conforms), rdf::Term::boolean(report.conforms));
    std::size_t counter = 0;
    for (const auto& result : report.results) {
        const Term node = rdf::Term::blank("result" + std::to_string(counter++));
        doc.graph.insert(report_node, Term(vocab::sh_result), node);
        doc.graph.insert(node, Term(vocab::rdf_type), Term(vocab::sh_validation_result));
        doc.graph.insert(node, Term(vocab::sh_focus_node), result.focus_node);
        if (result.result_path)
            doc.graph.insert(node, Term(vocab::sh_result_path), Term(*result.result_path));
        if (result.value) doc.graph.insert(node, Term(vocab::sh_value), *result.value);
        doc.graph.insert(node, Term(vocab::sh_source_shape), result.source_shape);
        doc.graph.insert(node, Term(vocab::sh_source_constraint_component),
                         Term(component_iri(result.component)));
        doc.graph.insert(node, Term(vocab::sh_result_severity), Term(vocab::sh_violation));
        doc.graph.insert(node, Term(vocab::sh_result_message),
                         rdf::Term::string_literal(result.message));
    }
    doc.graph.freeze();
    return doc;
}

}  // namespace shaclgap::validator
