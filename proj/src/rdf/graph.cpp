#include "shaclgap/rdf/graph.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace shaclgap::rdf {

bool Graph::insert(Triple triple) {
    if (frozen_) throw std::logic_error("insert into frozen graph");
    if (!triple.predicate.is_iri())
        throw std::invalid_argument("triple predicate must be an IRI: " + to_string(triple));
    if (triple.subject.is_literal())
        throw std::invalid_argument("triple subject must not be a literal: " + to_string(triple));
    if (contains(triple)) return false;

    auto idx = static_cast<std::uint32_t>(triples_.size());
    by_subject_[triple.subject].push_back(idx);
    by_predicate_object_[triple.predicate][triple.object].push_back(idx);
    by_object_[triple.object].push_back(idx);
    triples_.push_back(std::move(triple));
    return true;
}

bool Graph::insert(Term subject, Term predicate, Term object) {
    return insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
}

bool Graph::contains(const Triple& triple) const {
    auto p = by_predicate_object_.find(triple.predicate);
    if (p == by_predicate_object_.end()) return false;
    auto o = p->second.find(triple.object);
    if (o == p->second.end()) return false;
    for (auto idx : o->second) {
        if (triples_[idx].subject == triple.subject) return true;
    }
    return false;
}

std::vector<Triple> Graph::match(const std::optional<Term>& subject,
                                 const std::optional<Term>& predicate,
                                 const std::optional<Term>& object) const {
    std::vector<Triple> out;
    auto matches = [&](const Triple& t) {
        return (!subject || t.subject == *subject) && (!predicate || t.predicate == *predicate) &&
               (!object || t.object == *object);
    };

    if (subject) {
        auto it = by_subject_.find(*subject);
        if (it == by_subject_.end()) return out;
        for (auto idx : it->second) {
            if (matches(triples_[idx])) out.push_back(triples_[idx]);
        }
        return out;
    }
    if (predicate) {
        auto p = by_predicate_object_.find(*predicate);
        if (p == by_predicate_object_.end()) return out;
        if (object) {
            auto o = p->second.find(*object);
            if (o == p->second.end()) return out;
            for (auto idx : o->second) out.push_back(triples_[idx]);
            return out;
        }
        // Predicate only: merge the per-object buckets back into
        // insertion order.
        IndexList indexes;
        for (const auto& [_, bucket] : p->second)
            indexes.insert(indexes.end(), bucket.begin(), bucket.end());
        std::sort(indexes.begin(), indexes.end());
        for (auto idx : indexes) out.push_back(triples_[idx]);
        return out;
    }
    if (object) {
        auto it = by_object_.find(*object);
        if (it == by_object_.end()) return out;
        for (auto idx : it->second) out.push_back(triples_[idx]);
        return out;
    }
    return triples_;
}

std::vector<Term> Graph::objects_of(const Term& subject, const Term& predicate) const {
    std::vector<Term> out;
    auto it = by_subject_.find(subject);
    if (it == by_subject_.end()) return out;
    for (auto idx : it->second) {
        if (triples_[idx].predicate == predicate) out.push_back(triples_[idx].object);
    }
    return out;
}

std::vector<Term> Graph::subjects_of(const Term& predicate, const Term& object) const {
    std::vector<Term> out;
    for (const auto& t : match(std::nullopt, predicate, object)) out.push_back(t.subject);
    return out;
}

std::vector<Term> Graph::collect_list(const Term& head) const {
    const Term nil{vocab::rdf_nil};
    std::vector<Term> members;
    std::unordered_set<Term, TermHash> seen;
    Term node = head;
    while (node != nil) {
        if (!seen.insert(node).second)
            throw MalformedListError(node, "rdf list cycles at " + to_string(node));
        auto firsts = objects_of(node, Term(vocab::rdf_first));
        auto rests = objects_of(node, Term(vocab::rdf_rest));
        if (firsts.size() != 1)
            throw MalformedListError(node, "rdf list node " + to_string(node) + " has " +
                                               std::to_string(firsts.size()) + " rdf:first values");
        if (rests.size() != 1)
            throw MalformedListError(node, "rdf list node " + to_string(node) + " has " +
                                               std::to_string(rests.size()) + " rdf:rest values");
        members.push_back(firsts.front());
        node = rests.front();
        if (node.is_literal())
            throw MalformedListError(node, "rdf:rest points at a literal");
    }
    return members;
}

std::vector<Term> Graph::subclass_closure(const Term& cls) const {
    std::vector<Term> closure;
    std::unordered_set<Term, TermHash> seen;
    std::deque<Term> queue{cls};
    seen.insert(cls);
    const Term subclass_of{vocab::rdfs_subclass_of};
    while (!queue.empty()) {
        Term current = std::move(queue.front());
        queue.pop_front();
        closure.push_back(current);
        for (const auto& sub : subjects_of(subclass_of, current)) {
            if (!sub.is_iri()) continue;
            if (seen.insert(sub).second) queue.push_back(sub);
        }
    }
    return closure;
}

std::vector<Term> Graph::instances_of(const Term& cls) const {
    std::vector<Term> out;
    std::unordered_set<Term, TermHash> seen;
    const Term type{vocab::rdf_type};
    for (const auto& c : subclass_closure(cls)) {
        for (const auto& node : subjects_of(type, c)) {
            if (seen.insert(node).second) out.push_back(node);
        }
    }
    return out;
}

}  // namespace shaclgap::rdf
