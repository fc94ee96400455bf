#include "shaclgap/cli/render.hpp"

#include "shaclgap/rdf/vocab.hpp"
#include "shaclgap/turtle/serializer.hpp"
#include "shaclgap/validator/validate.hpp"

#include <json.hpp>

#include <algorithm>

namespace shaclgap::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using rdf::Term;

// label:local against the declared prefixes, longest namespace first;
// falls back to <iri>.
std::string compact(const rdf::Iri& iri, const rdf::PrefixMap& prefixes) {
    std::string best;
    std::size_t best_len = 0;
    for (const auto& entry : prefixes.entries()) {
        const std::string& ns = entry.ns.value;
        if (ns.size() <= best_len || iri.value.compare(0, ns.size(), ns) != 0) continue;
        std::string_view local(iri.value);
        local.remove_prefix(ns.size());
        bool safe = true;
        for (char c : local)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') safe = false;
        if (!safe) continue;
        best = entry.label + ":" + std::string(local);
        best_len = ns.size();
    }
    return best.empty() ? "<" + iri.value + ">" : best;
}

std::string compact(const Term& term, const rdf::PrefixMap& prefixes) {
    if (term.is_iri()) return compact(term.as_iri(), prefixes);
    return rdf::to_string(term);
}

ordered_json term_json(const Term& term) { return rdf::to_string(term); }

ordered_json result_json(const validator::ValidationResult& result) {
    ordered_json j;
    j["focusNode"] = term_json(result.focus_node);
    if (result.result_path) j["resultPath"] = term_json(Term(*result.result_path));
    if (result.value) j["value"] = term_json(*result.value);
    j["sourceShape"] = term_json(result.source_shape);
    j["sourceConstraintComponent"] = std::string(validator::component_name(result.component));
    j["severity"] = "Violation";
    j["message"] = result.message;
    return j;
}

ordered_json alternative_json(const gap::AlternativeDiagnosis& alt);

ordered_json gap_json(const gap::Gap& g) {
    ordered_json j;
    j["sourceShape"] = term_json(g.source_shape);
    if (g.path) j["path"] = term_json(Term(*g.path));
    j["component"] = g.component;
    j["requirement"] = g.requirement;
    j["observed"] = ordered_json::array();
    for (const auto& v : g.observed) j["observed"].push_back(term_json(v));
    j["explanation"] = gap::explain(g);
    if (!g.alternatives.empty()) {
        j["alternatives"] = ordered_json::array();
        for (const auto& alt : g.alternatives) j["alternatives"].push_back(alternative_json(alt));
    }
    return j;
}

ordered_json alternative_json(const gap::AlternativeDiagnosis& alt) {
    ordered_json j;
    j["branchIndex"] = alt.branch_index;
    j["memberShape"] = term_json(alt.member_shape);
    if (alt.order_tag) j["order"] = alt.order_tag->lexical;
    j["satisfiedCount"] = alt.satisfied_count;
    j["totalCount"] = alt.total_count;
    j["gaps"] = ordered_json::array();
    for (const auto& g : alt.gaps) j["gaps"].push_back(gap_json(g));
    return j;
}

}  // namespace

std::string render_report_turtle(const validator::ValidationReport& report,
                                 const rdf::PrefixMap& prefixes) {
    turtle::Document doc = validator::report_to_graph(report);
    for (const auto& entry : prefixes.entries()) doc.prefixes.declare(entry.label, entry.ns);
    return turtle::serialize(doc);
}

std::string render_report_json(const validator::ValidationReport& report) {
    ordered_json j;
    j["conforms"] = report.conforms;
    j["results"] = ordered_json::array();
    for (const auto& result : report.results) j["results"].push_back(result_json(result));
    return j.dump(2) + "\n";
}

std::string render_report_text(const validator::ValidationReport& report) {
    std::string out = "Validation report\n";
    out += "  conforms: " + std::string(report.conforms ? "yes" : "no") + "\n";
    out += "  results: " + std::to_string(report.results.size()) + "\n";
    for (const auto& result : report.results) {
        out += "\n- focusNode: " + rdf::to_string(result.focus_node) + "\n";
        if (result.result_path)
            out += "  resultPath: " + rdf::to_string(Term(*result.result_path)) + "\n";
        if (result.value) out += "  value: " + rdf::to_string(*result.value) + "\n";
        out += "  sourceShape: " + rdf::to_string(result.source_shape) + "\n";
        out += "  component: " + std::string(validator::component_name(result.component)) + "\n";
        out += "  message: " + result.message + "\n";
    }
    return out;
}

std::string render_gap_json(const gap::GapReport& report) {
    ordered_json j;
    j["focus"] = term_json(report.focus);
    j["shape"] = term_json(report.shape);
    j["conforms"] = report.conforms;
    j["commonSatisfied"] = report.common_satisfied;
    j["commonTotal"] = report.common_total;
    j["commonGaps"] = ordered_json::array();
    for (const auto& g : report.common_gaps) j["commonGaps"].push_back(gap_json(g));
    j["alternatives"] = ordered_json::array();
    for (const auto& alt : report.alternatives) j["alternatives"].push_back(alternative_json(alt));
    return j.dump(2) + "\n";
}

std::string render_gap_text(const gap::GapReport& report) {
    std::string out = "Gap report\n";
    out += "  focus: " + rdf::to_string(report.focus) + "\n";
    out += "  shape: " + rdf::to_string(report.shape) + "\n";
    out += "  conforms: " + std::string(report.conforms ? "yes" : "no") + "\n";
    if (report.conforms && report.common_gaps.empty()) {
        bool gap_free_alternative = report.alternatives.empty();
        for (const auto& alt : report.alternatives)
            if (alt.gaps.empty()) gap_free_alternative = true;
        if (gap_free_alternative) out += "\nNo gaps.\n";
    }
    if (!report.common_gaps.empty() || report.common_total > 0) {
        out += "\nCommon requirements: " + std::to_string(report.common_satisfied) + "/" +
               std::to_string(report.common_total) + " met\n";
        for (const auto& g : report.common_gaps) out += "  missing: " + gap::explain(g) + "\n";
    }
    for (const auto& alt : report.alternatives) {
        out += "\nAlternative " + std::to_string(alt.branch_index + 1);
        if (alt.order_tag) out += " (order " + alt.order_tag->lexical + ")";
        out += ": " + std::to_string(alt.satisfied_count) + "/" + std::to_string(alt.total_count) +
               " requirements met\n";
        for (const auto& g : alt.gaps) out += "  missing: " + gap::explain(g) + "\n";
    }
    return out;
}

std::string render_inspect(const shacl::ShapesGraph& shapes, const rdf::PrefixMap& prefixes) {
    std::string out;
    auto name = [&](const Term& t) { return compact(t, prefixes); };
    for (const auto& shape : shapes.shapes()) {
        if (!out.empty()) out += "\n";
        out += name(shape.id) + "  " +
               (shape.kind == shacl::ShapeKind::property_shape ? "property shape" : "node shape");
        if (shape.path) out += "  path " + name(Term(*shape.path));
        if (shape.order) out += "  order " + shape.order->lexical;
        out += "\n";
        for (const auto& target : shape.targets) {
            out += "  target ";
            out += target.kind == shacl::Target::Kind::target_class ? "class " : "node ";
            out += name(target.value) + "\n";
        }
        for (const auto& constraint : shape.constraints) {
            out += "  ";
            std::visit(
                [&](const auto& c) {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, shacl::MinCount>)
                        out += "minCount " + std::to_string(c.count);
                    else if constexpr (std::is_same_v<C, shacl::MaxCount>)
                        out += "maxCount " + std::to_string(c.count);
                    else if constexpr (std::is_same_v<C, shacl::DatatypeConstraint>)
                        out += "datatype " + name(Term(c.datatype));
                    else if constexpr (std::is_same_v<C, shacl::ClassConstraint>)
                        out += "class " + name(Term(c.cls));
                    else if constexpr (std::is_same_v<C, shacl::HasValue>)
                        out += "hasValue " + name(c.value);
                    else if constexpr (std::is_same_v<C, shacl::RangeConstraint>)
                        out += std::string(rdf::to_string(c.relation)) + " " + c.bound.lexical;
                    else if constexpr (std::is_same_v<C, shacl::AndConstraint>) {
                        out += "and (" + std::to_string(c.members.size()) + " members:";
                        for (const auto& m : c.members) out += " " + name(m);
                        out += ")";
                    } else if constexpr (std::is_same_v<C, shacl::OrConstraint>) {
                        out += "or (" + std::to_string(c.members.size()) + " alternatives:";
                        for (const auto& m : c.members) out += " " + name(m);
                        out += ")";
                    } else if constexpr (std::is_same_v<C, shacl::NotConstraint>)
                        out += "not " + name(c.member);
                    else if constexpr (std::is_same_v<C, shacl::PropertyRef>)
                        out += "property " + name(c.member);
                    else if constexpr (std::is_same_v<C, shacl::NodeRef>)
                        out += "node " + name(c.member);
                },
                constraint);
            out += "\n";
        }
    }
    out += "\n" + std::to_string(shapes.size()) + " shapes\n";
    return out;
}

}  // namespace shaclgap::cli
