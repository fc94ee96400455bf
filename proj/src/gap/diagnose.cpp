#include "shaclgap/gap/diagnose.hpp"

#include "shaclgap/rdf/numeric.hpp"
#include "shaclgap/rdf/vocab.hpp"
#include "shaclgap/validator/validate.hpp"

#include <algorithm>

namespace shaclgap::gap {

namespace {

using rdf::Term;
using shacl::Constraint;
using shacl::Shape;
using shacl::ShapeKind;

// Friendly display for requirement strings: IRIs shorten to ":local",
// literals to their lexical form.
std::string display(const Term& term) {
    if (term.is_iri()) return ":" + std::string(rdf::local_name(term.as_iri()));
    if (term.is_blank()) return "_:" + term.as_blank().label;
    return term.as_literal().lexical;
}

std::string display(const rdf::Iri& iri) { return ":" + std::string(rdf::local_name(iri)); }

std::string display_list(const std::vector<shacl::ShapeId>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out += ", ";
        out += display(id);
    }
    return out;
}

// One evaluable atom: a constraint in the context of the shape carrying it.
// Every atom is evaluated at the diagnose focus.
struct Atom {
    const Shape* carrier = nullptr;
    const Constraint* constraint = nullptr;
};

struct Walk {
    std::vector<Atom> atoms;
    const Shape* main_or_carrier = nullptr;
    const shacl::OrConstraint* main_or = nullptr;
    std::optional<rdf::Literal> order_tag;

    void note_order(const Shape& shape) {
        if (!shape.order) return;
        if (!order_tag) {
            order_tag = shape.order;
            return;
        }
        auto a = rdf::parse_decimal(shape.order->lexical);
        auto b = rdf::parse_decimal(order_tag->lexical);
        if (a && b && rdf::compare(*a, *b) < 0) order_tag = shape.order;
    }
};

// Flattens a shape into atoms: sh:and members and sh:node / sh:property
// references expand in place, everything else becomes one atom. When
// `pick_main_or` is set, the first sh:or reached outside any alternative
// becomes the branch point instead of an atom.
void flatten(const shacl::ShapesGraph& shapes, const Shape& shape, bool pick_main_or, Walk& walk) {
    walk.note_order(shape);
    if (shape.kind == ShapeKind::property_shape) {
        // Constraints on a property shape all apply through its path;
        // logical members and shape references stay single atoms.
        for (const auto& constraint : shape.constraints)
            walk.atoms.push_back({&shape, &constraint});
        return;
    }
    for (const auto& constraint : shape.constraints) {
        if (const auto* o = std::get_if<shacl::OrConstraint>(&constraint)) {
            if (pick_main_or && !walk.main_or) {
                walk.main_or = o;
                walk.main_or_carrier = &shape;
                continue;
            }
            walk.atoms.push_back({&shape, &constraint});
        } else if (const auto* a = std::get_if<shacl::AndConstraint>(&constraint)) {
            for (const auto& member : a->members)
                flatten(shapes, shapes.at(member), pick_main_or, walk);
        } else if (const auto* pr = std::get_if<shacl::PropertyRef>(&constraint)) {
            flatten(shapes, shapes.at(pr->member), pick_main_or, walk);
        } else if (const auto* nr = std::get_if<shacl::NodeRef>(&constraint)) {
            flatten(shapes, shapes.at(nr->member), pick_main_or, walk);
        } else {
            walk.atoms.push_back({&shape, &constraint});
        }
    }
}

struct Evaluator {
    const shacl::ShapesGraph& shapes;
    const rdf::Graph& data;

    AlternativeDiagnosis diagnose_branch(const shacl::ShapeId& member, std::size_t index,
                                         const Term& focus) const {
        AlternativeDiagnosis diag;
        diag.branch_index = index;
        diag.member_shape = member;
        Walk walk;
        flatten(shapes, shapes.at(member), /*pick_main_or=*/false, walk);
        diag.order_tag = walk.order_tag;
        diag.total_count = walk.atoms.size();
        for (const auto& atom : walk.atoms) {
            if (auto gap = evaluate(atom, focus))
                diag.gaps.push_back(std::move(*gap));
            else
                ++diag.satisfied_count;
        }
        return diag;
    }

    // Evaluates one atom at the focus; a failing atom becomes a Gap.
    std::optional<Gap> evaluate(const Atom& atom, const Term& focus) const {
        const Shape& carrier = *atom.carrier;
        if (validator::constraint_holds(carrier, *atom.constraint, focus, data, shapes))
            return std::nullopt;

        Gap gap;
        gap.source_shape = carrier.id;
        gap.path = carrier.path;
        bool logical = std::holds_alternative<shacl::OrConstraint>(*atom.constraint) ||
                       std::holds_alternative<shacl::AndConstraint>(*atom.constraint) ||
                       std::holds_alternative<shacl::NotConstraint>(*atom.constraint);
        if (!logical || carrier.kind == ShapeKind::property_shape)
            gap.observed = observed_values(carrier, focus);
        describe(*atom.constraint, carrier, gap);

        if (const auto* o = std::get_if<shacl::OrConstraint>(atom.constraint)) {
            std::vector<AlternativeDiagnosis> subs;
            for (std::size_t i = 0; i < o->members.size(); ++i)
                subs.push_back(diagnose_branch(o->members[i], i, focus));
            gap.alternatives = rank(std::move(subs));
        }
        return gap;
    }

    std::vector<Term> observed_values(const Shape& carrier, const Term& focus) const {
        if (carrier.kind == ShapeKind::property_shape)
            return data.objects_of(focus, Term(*carrier.path));
        return {focus};
    }

    void describe(const Constraint& constraint, const Shape& carrier, Gap& gap) const {
        std::string on = carrier.path ? " on " + display(*carrier.path) : "";
        std::visit(
            [&](const auto& c) {
                using C = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<C, shacl::MinCount>) {
                    gap.component = "minCount";
                    gap.requirement = "minCount " + std::to_string(c.count) + on;
                } else if constexpr (std::is_same_v<C, shacl::MaxCount>) {
                    gap.component = "maxCount";
                    gap.requirement = "maxCount " + std::to_string(c.count) + on;
                } else if constexpr (std::is_same_v<C, shacl::DatatypeConstraint>) {
                    gap.component = "datatype";
                    gap.requirement = "datatype " + display(c.datatype) + on;
                } else if constexpr (std::is_same_v<C, shacl::ClassConstraint>) {
                    gap.component = "class";
                    gap.requirement = "class " + display(c.cls) + on;
                } else if constexpr (std::is_same_v<C, shacl::HasValue>) {
                    gap.component = "hasValue";
                    gap.requirement = "hasValue " + display(c.value) + on;
                } else if constexpr (std::is_same_v<C, shacl::RangeConstraint>) {
                    gap.component = std::string(rdf::to_string(c.relation));
                    gap.requirement =
                        std::string(rdf::to_string(c.relation)) + " " + c.bound.lexical + on;
                } else if constexpr (std::is_same_v<C, shacl::OrConstraint>) {
                    gap.component = "or";
                    gap.requirement = "one of " + display_list(c.members) + on;
                } else if constexpr (std::is_same_v<C, shacl::AndConstraint>) {
                    gap.component = "and";
                    gap.requirement = "all of " + display_list(c.members) + on;
                } else if constexpr (std::is_same_v<C, shacl::NotConstraint>) {
                    gap.component = "not";
                    gap.requirement = "not " + display(c.member) + on;
                } else if constexpr (std::is_same_v<C, shacl::PropertyRef>) {
                    gap.component = "property";
                    gap.requirement = "property " + display(c.member) + on;
                } else if constexpr (std::is_same_v<C, shacl::NodeRef>) {
                    gap.component = "node";
                    gap.requirement = "node " + display(c.member) + on;
                }
            },
            constraint);
    }
};

}  // namespace

GapReport diagnose(const shacl::ShapesGraph& shapes, const shacl::ShapeId& shape_id,
                   const Term& focus, const rdf::Graph& data) {
    const Shape* shape = shapes.find(shape_id);
    if (!shape)
        throw GapError(GapError::Kind::unknown_shape, shape_id,
                       "unknown shape " + rdf::to_string(shape_id));
    if (shape->kind != ShapeKind::node_shape)
        throw GapError(GapError::Kind::not_a_node_shape, shape_id,
                       rdf::to_string(shape_id) + " is a property shape; diagnose takes a node shape");

    GapReport report;
    report.focus = focus;
    report.shape = shape_id;

    Walk walk;
    flatten(shapes, *shape, /*pick_main_or=*/true, walk);

    Evaluator eval{shapes, data};
    report.common_total = walk.atoms.size();
    for (const auto& atom : walk.atoms) {
        if (auto gap = eval.evaluate(atom, focus))
            report.common_gaps.push_back(std::move(*gap));
        else
            ++report.common_satisfied;
    }

    if (walk.main_or) {
        std::vector<AlternativeDiagnosis> alternatives;
        for (std::size_t i = 0; i < walk.main_or->members.size(); ++i)
            alternatives.push_back(eval.diagnose_branch(walk.main_or->members[i], i, focus));
        report.alternatives = rank(std::move(alternatives));
    }

    bool some_alternative_ok = report.alternatives.empty();
    for (const auto& alt : report.alternatives)
        if (alt.gaps.empty()) some_alternative_ok = true;
    report.conforms = report.common_gaps.empty() && some_alternative_ok;
    return report;
}

std::vector<AlternativeDiagnosis> rank(std::vector<AlternativeDiagnosis> alternatives) {
    auto order_key = [](const AlternativeDiagnosis& d) -> std::optional<rdf::Decimal> {
        if (!d.order_tag) return std::nullopt;
        return rdf::parse_decimal(d.order_tag->lexical);
    };
    std::stable_sort(alternatives.begin(), alternatives.end(),
                     [&](const AlternativeDiagnosis& a, const AlternativeDiagnosis& b) {
                         if (a.gaps.size() != b.gaps.size()) return a.gaps.size() < b.gaps.size();
                         auto ka = order_key(a);
                         auto kb = order_key(b);
                         if (ka.has_value() != kb.has_value()) return ka.has_value();
                         if (ka && kb && *ka != *kb) return rdf::compare(*ka, *kb) < 0;
                         return a.branch_index < b.branch_index;
                     });
    return alternatives;
}

namespace {

std::string observed_clause(const Gap& gap) {
    if (gap.observed.empty()) return "observed none";
    std::string out = "observed ";
    for (std::size_t i = 0; i < gap.observed.size(); ++i) {
        if (i > 0) out += ", ";
        out += display(gap.observed[i]);
    }
    return out;
}

std::string subject_clause(const Gap& gap) {
    return gap.path ? "Value for " + display(*gap.path) : "Focus node";
}

}  // namespace

std::string explain(const Gap& gap) {
    if (gap.component == "minCount")
        return subject_clause(gap) + " is missing: requires " + gap.requirement + ", " +
               observed_clause(gap) + ".";
    if (gap.component == "maxCount")
        return subject_clause(gap) + " occurs too often: requires " + gap.requirement + ", " +
               observed_clause(gap) + ".";
    if (gap.component == "hasValue")
        return "Required value is missing: " + gap.requirement + "; " + observed_clause(gap) + ".";
    if (gap.component == "or")
        return "No alternative is satisfied: requires " + gap.requirement + "; " +
               observed_clause(gap) + ".";
    if (gap.component == "and")
        return "Not every requirement is satisfied: requires " + gap.requirement + "; " +
               observed_clause(gap) + ".";
    if (gap.component == "not")
        return "Requirement " + gap.requirement + " is violated; " + observed_clause(gap) + ".";
    return subject_clause(gap) + " does not satisfy " + gap.requirement + "; " +
           observed_clause(gap) + ".";
}

}  // namespace shaclgap::gap
