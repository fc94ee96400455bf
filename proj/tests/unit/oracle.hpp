#pragma once

#include "shaclgap/rdf/vocab.hpp"
#include "shaclgap/shacl/model.hpp"

#include <cstdlib>
#include <set>
#include <vector>

// Brute-force conformance evaluator, independent of the validator: plain
// scans over the raw triple vector, closure by fixpoint iteration, numeric
// comparison through strtod. Nothing here touches the graph indexes or the
// engine.
namespace oracle {

using shaclgap::rdf::Term;
using shaclgap::rdf::Triple;
namespace vocab = shaclgap::vocab;
namespace shacl = shaclgap::shacl;

inline std::vector<Term> scan_objects(const shaclgap::rdf::Graph& g, const Term& s, const Term& p) {
    std::vector<Term> out;
    for (const auto& t : g.triples())
        if (t.subject == s && t.predicate == p) out.push_back(t.object);
    return out;
}

inline bool numeric(const std::string& lexical, double& out) {
    if (lexical.empty()) return false;
    for (char c : lexical)
        if (!(c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9'))) return false;
    char* end = nullptr;
    out = std::strtod(lexical.c_str(), &end);
    return end && *end == '\0' && end != lexical.c_str();
}

inline std::set<Term> closure_fixpoint(const shaclgap::rdf::Graph& g, const Term& cls) {
    std::set<Term> closure{cls};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : g.triples()) {
            if (t.predicate == Term(vocab::rdfs_subclass_of) && closure.count(t.object) &&
                t.subject.is_iri() && !closure.count(t.subject)) {
                closure.insert(t.subject);
                changed = true;
            }
        }
    }
    return closure;
}

inline bool conforms(const shacl::ShapesGraph& shapes, const shacl::ShapeId& id, const Term& node,
                     const shaclgap::rdf::Graph& data);

inline bool value_ok(const shacl::ShapesGraph& shapes, const shacl::Constraint& c, const Term& v,
                     const shaclgap::rdf::Graph& data) {
    if (const auto* dt = std::get_if<shacl::DatatypeConstraint>(&c))
        return v.is_literal() && v.as_literal().datatype == dt->datatype;
    if (const auto* cc = std::get_if<shacl::ClassConstraint>(&c)) {
        if (v.is_literal()) return false;
        auto closure = closure_fixpoint(data, Term(cc->cls));
        for (const auto& type : scan_objects(data, v, Term(vocab::rdf_type)))
            if (closure.count(type)) return true;
        return false;
    }
    if (const auto* range = std::get_if<shacl::RangeConstraint>(&c)) {
        double value = 0, bound = 0;
        if (!v.is_literal() || !numeric(v.as_literal().lexical, value) ||
            !numeric(range->bound.lexical, bound))
            return false;
        switch (range->relation) {
            case shaclgap::rdf::RangeRelation::min_inclusive: return value >= bound;
            case shaclgap::rdf::RangeRelation::max_inclusive: return value <= bound;
            case shaclgap::rdf::RangeRelation::min_exclusive: return value > bound;
            case shaclgap::rdf::RangeRelation::max_exclusive: return value < bound;
        }
        return false;
    }
    if (const auto* a = std::get_if<shacl::AndConstraint>(&c)) {
        for (const auto& m : a->members)
            if (!conforms(shapes, m, v, data)) return false;
        return true;
    }
    if (const auto* o = std::get_if<shacl::OrConstraint>(&c)) {
        for (const auto& m : o->members)
            if (conforms(shapes, m, v, data)) return true;
        return false;
    }
    if (const auto* n = std::get_if<shacl::NotConstraint>(&c))
        return !conforms(shapes, n->member, v, data);
    if (const auto* pr = std::get_if<shacl::PropertyRef>(&c))
        return conforms(shapes, pr->member, v, data);
    if (const auto* nr = std::get_if<shacl::NodeRef>(&c))
        return conforms(shapes, nr->member, v, data);
    return true;
}

inline bool conforms(const shacl::ShapesGraph& shapes, const shacl::ShapeId& id, const Term& node,
                     const shaclgap::rdf::Graph& data) {
    const shacl::Shape& shape = shapes.at(id);
    if (shape.kind == shacl::ShapeKind::property_shape) {
        const auto values = scan_objects(data, node, Term(*shape.path));
        for (const auto& c : shape.constraints) {
            if (const auto* min = std::get_if<shacl::MinCount>(&c)) {
                if (values.size() < min->count) return false;
            } else if (const auto* max = std::get_if<shacl::MaxCount>(&c)) {
                if (values.size() > max->count) return false;
            } else if (const auto* has = std::get_if<shacl::HasValue>(&c)) {
                bool found = false;
                for (const auto& v : values)
                    if (v == has->value) found = true;
                if (!found) return false;
            } else {
                for (const auto& v : values)
                    if (!value_ok(shapes, c, v, data)) return false;
            }
        }
        return true;
    }
    for (const auto& c : shape.constraints) {
        if (const auto* has = std::get_if<shacl::HasValue>(&c)) {
            if (node != has->value) return false;
        } else if (!value_ok(shapes, c, node, data)) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle
