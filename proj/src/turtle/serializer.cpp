#include "shaclgap/turtle/serializer.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace shaclgap::turtle {

namespace {

using rdf::Term;
using rdf::Triple;

bool pname_safe_local(std::string_view local) {
    if (local.empty()) return true;
    auto word_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    };
    if (!word_char(local.front())) return false;
    if (local.back() == '.') return false;
    for (char c : local)
        if (!word_char(c) && c != '-' && c != '.') return false;
    return true;
}

bool bare_integer(const std::string& lexical) {
    std::size_t i = lexical.size() > 0 && (lexical[0] == '+' || lexical[0] == '-') ? 1 : 0;
    if (i >= lexical.size()) return false;
    for (; i < lexical.size(); ++i)
        if (lexical[i] < '0' || lexical[i] > '9') return false;
    return true;
}

bool bare_decimal(const std::string& lexical) {
    std::size_t i = lexical.size() > 0 && (lexical[0] == '+' || lexical[0] == '-') ? 1 : 0;
    auto dot = lexical.find('.', i);
    if (dot == std::string::npos || dot + 1 >= lexical.size()) return false;
    for (std::size_t k = i; k < lexical.size(); ++k) {
        if (k == dot) continue;
        if (lexical[k] < '0' || lexical[k] > '9') return false;
    }
    return true;
}

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

struct Rendered {
    std::string text;
    bool multiline = false;
};

class Serializer {
public:
    explicit Serializer(const Document& doc) : doc_(doc) { analyze(); }

    std::string run() {
        std::string out;
        for (const auto& entry : doc_.prefixes.entries())
            out += "@prefix " + entry.label + ": <" + entry.ns.value + "> .\n";
        if (!doc_.prefixes.empty() && !doc_.graph.empty()) out += "\n";

        std::unordered_set<Term, rdf::TermHash> emitted;
        bool first_block = true;
        for (const auto& triple : doc_.graph.triples()) {
            const Term& subject = triple.subject;
            if (emitted.count(subject)) continue;
            emitted.insert(subject);
            if (consumed_.count(subject)) continue;
            if (!first_block) out += "\n";
            first_block = false;
            out += block(subject);
        }
        return out;
    }

private:
    const Document& doc_;
    std::vector<std::pair<std::string, std::string>> namespaces_;  // (ns, label), longest first
    std::unordered_map<Term, std::vector<Triple>, rdf::TermHash> outgoing_;
    std::unordered_map<Term, std::size_t, rdf::TermHash> object_refs_;
    std::unordered_set<Term, rdf::TermHash> list_nodes_;  // members of inlineable chains
    std::unordered_set<Term, rdf::TermHash> consumed_;    // rendered inline at their reference

    void analyze() {
        for (const auto& entry : doc_.prefixes.entries())
            namespaces_.emplace_back(entry.ns.value, entry.label);
        std::stable_sort(namespaces_.begin(), namespaces_.end(),
                         [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

        for (const auto& t : doc_.graph.triples()) {
            if (t.subject.is_blank()) outgoing_[t.subject].push_back(t);
            if (t.object.is_blank()) ++object_refs_[t.object];
        }

        // Candidates for inlining: blank nodes referenced exactly once.
        // Pure rdf:first/rdf:rest chains become collections when the whole
        // chain qualifies.
        std::unordered_set<Term, rdf::TermHash> candidates;
        for (const auto& [node, refs] : object_refs_) {
            if (refs == 1) candidates.insert(node);
        }

        // Chains are walked from their heads: pure list nodes not fed by
        // another candidate's rdf:rest. Insertion order keeps this
        // deterministic.
        std::vector<std::vector<Term>> chains;
        std::unordered_set<Term, rdf::TermHash> in_chain;
        for (const auto& t : doc_.graph.triples()) {
            for (const Term* node : {&t.subject, &t.object}) {
                if (!node->is_blank() || in_chain.count(*node)) continue;
                if (!candidates.count(*node) || !is_pure_list_node(*node)) continue;
                if (fed_by_candidate_rest(*node, candidates)) continue;
                std::vector<Term> chain;
                if (chain_inlineable(*node, candidates, chain)) {
                    for (const auto& n : chain) in_chain.insert(n);
                    chains.push_back(std::move(chain));
                }
            }
        }

        std::unordered_set<Term, rdf::TermHash> eligible;
        for (const auto& node : candidates) {
            if (is_pure_list_node(node) && !in_chain.count(node)) continue;
            eligible.insert(node);
        }
        drop_cyclic(eligible);
        // A chain that lost any node to cycle demotion falls back entirely
        // to labeled triples.
        for (const auto& chain : chains) {
            bool complete = true;
            for (const auto& n : chain)
                if (!eligible.count(n)) complete = false;
            if (complete) {
                for (const auto& n : chain) list_nodes_.insert(n);
            } else {
                for (const auto& n : chain) eligible.erase(n);
            }
        }
        consumed_ = std::move(eligible);
    }

    bool fed_by_candidate_rest(const Term& node,
                               const std::unordered_set<Term, rdf::TermHash>& candidates) const {
        for (const auto& t : doc_.graph.match(std::nullopt, Term(vocab::rdf_rest), node)) {
            if (t.subject.is_blank() && candidates.count(t.subject) &&
                is_pure_list_node(t.subject))
                return true;
        }
        return false;
    }

    bool is_pure_list_node(const Term& node) const {
        auto it = outgoing_.find(node);
        if (it == outgoing_.end() || it->second.size() != 2) return false;
        const Term first(vocab::rdf_first);
        const Term rest(vocab::rdf_rest);
        bool has_first = false, has_rest = false;
        for (const auto& t : it->second) {
            if (t.predicate == first && !has_first) has_first = true;
            else if (t.predicate == rest && !has_rest) has_rest = true;
            else return false;
        }
        return has_first && has_rest;
    }

    // Walks the rdf:rest chain from `head`; true when every node is a pure,
    // single-reference list node and the chain terminates at rdf:nil.
    bool chain_inlineable(const Term& head,
                          const std::unordered_set<Term, rdf::TermHash>& candidates,
                          std::vector<Term>& chain) const {
        const Term nil(vocab::rdf_nil);
        std::unordered_set<Term, rdf::TermHash> seen;
        Term node = head;
        while (node != nil) {
            if (!node.is_blank() || !candidates.count(node) || !is_pure_list_node(node))
                return false;
            if (!seen.insert(node).second) return false;  // cycle
            chain.push_back(node);
            node = doc_.graph.objects_of(node, Term(vocab::rdf_rest)).front();
        }
        return true;
    }

    // Removes inline candidates that can reach themselves through other
    // inline candidates; those must stay labeled to terminate.
    void drop_cyclic(std::unordered_set<Term, rdf::TermHash>& eligible) const {
        std::unordered_map<Term, int, rdf::TermHash> state;  // 0 fresh, 1 visiting, 2 done
        std::vector<Term> cyclic;
        auto visit = [&](auto&& self, const Term& node) -> bool {
            int& st = state[node];
            if (st == 1) return false;
            if (st == 2) return true;
            st = 1;
            auto it = outgoing_.find(node);
            bool ok = true;
            if (it != outgoing_.end()) {
                for (const auto& t : it->second) {
                    if (t.object.is_blank() && eligible.count(t.object) && !self(self, t.object))
                        ok = false;
                }
            }
            st = 2;
            if (!ok) cyclic.push_back(node);
            return ok;
        };
        for (const auto& node : eligible) {
            state.clear();
            if (!visit(visit, node)) cyclic.push_back(node);
        }
        for (const auto& node : cyclic) eligible.erase(node);
    }

    std::string render_iri(const rdf::Iri& iri) const {
        for (const auto& [ns, label] : namespaces_) {
            if (iri.value.size() >= ns.size() && iri.value.compare(0, ns.size(), ns) == 0) {
                std::string_view local(iri.value);
                local.remove_prefix(ns.size());
                if (pname_safe_local(local)) return label + ":" + std::string(local);
            }
        }
        return "<" + iri.value + ">";
    }

    std::string render_literal(const rdf::Literal& lit) const {
        if (!lit.language.empty()) return quote(lit.lexical) + "@" + lit.language;
        if (lit.datatype == vocab::xsd_string) return quote(lit.lexical);
        if (lit.datatype == vocab::xsd_integer && bare_integer(lit.lexical)) return lit.lexical;
        if (lit.datatype == vocab::xsd_decimal && bare_decimal(lit.lexical)) return lit.lexical;
        return quote(lit.lexical) + "^^" + render_iri(lit.datatype);
    }

    Rendered render_term(const Term& term, std::size_t indent) const {
        if (term.is_iri()) return {render_iri(term.as_iri()), false};
        if (term.is_literal()) return {render_literal(term.as_literal()), false};
        if (consumed_.count(term)) {
            if (list_nodes_.count(term)) return render_list(term, indent);
            return render_anon(term, indent);
        }
        return {"_:" + term.as_blank().label, false};
    }

    Rendered render_list(const Term& head, std::size_t indent) const {
        std::vector<Rendered> members;
        bool any_multiline = false;
        const Term nil(vocab::rdf_nil);
        Term node = head;
        while (node != nil) {
            members.push_back(render_term(doc_.graph.objects_of(node, Term(vocab::rdf_first)).front(),
                                          indent + 2));
            any_multiline = any_multiline || members.back().multiline;
            node = doc_.graph.objects_of(node, Term(vocab::rdf_rest)).front();
        }
        if (!any_multiline) {
            std::string out = "(";
            for (const auto& m : members) out += " " + m.text;
            out += " )";
            return {out, false};
        }
        std::string pad(indent + 2, ' ');
        std::string out = "(\n";
        for (const auto& m : members) out += pad + m.text + "\n";
        out += std::string(indent, ' ') + ")";
        return {out, true};
    }

    Rendered render_anon(const Term& node, std::size_t indent) const {
        auto it = outgoing_.find(node);
        if (it == outgoing_.end() || it->second.empty()) return {"[]", false};
        auto groups = group_predicates(it->second);
        std::string pad(indent + 2, ' ');
        std::string out = "[ ";
        bool first = true;
        for (const auto& [predicate, objects] : groups) {
            if (!first) out += " ;\n" + pad;
            first = false;
            out += render_predicate_objects(predicate, objects, indent + 2);
        }
        out += " ]";
        return {out, out.find('\n') != std::string::npos};
    }

    using PredicateGroups = std::vector<std::pair<Term, std::vector<Term>>>;

    static PredicateGroups group_predicates(const std::vector<Triple>& triples) {
        PredicateGroups groups;
        for (const auto& t : triples) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.first == t.predicate; });
            if (it == groups.end()) groups.push_back({t.predicate, {t.object}});
            else it->second.push_back(t.object);
        }
        return groups;
    }

    std::string render_predicate_objects(const Term& predicate, const std::vector<Term>& objects,
                                         std::size_t indent) const {
        std::string out = predicate == Term(vocab::rdf_type) ? "a" : render_iri(predicate.as_iri());
        bool first = true;
        for (const auto& obj : objects) {
            out += first ? " " : ", ";
            first = false;
            out += render_term(obj, indent).text;
        }
        return out;
    }

    std::string block(const Term& subject) {
        std::string out = render_term(subject, 0).text;
        auto triples = doc_.graph.match(subject, std::nullopt, std::nullopt);
        auto groups = group_predicates(triples);
        out += "\n";
        bool first = true;
        for (const auto& [predicate, objects] : groups) {
            if (!first) out += " ;\n";
            first = false;
            out += "  " + render_predicate_objects(predicate, objects, 2);
        }
        out += " .\n";
        return out;
    }
};

}  // namespace

std::string serialize(const Document& document) { return Serializer(document).run(); }

}  // namespace shaclgap::turtle
