#include "shaclgap/turtle/document.hpp"

#include <string>
#include <unordered_map>

namespace shaclgap::turtle {

Document merge(const std::vector<Document>& documents) {
    Document merged;
    std::size_t fresh = 0;
    for (const auto& doc : documents) {
        std::unordered_map<std::string, std::string> renamed;
        auto rename = [&](const rdf::Term& t) -> rdf::Term {
            if (!t.is_blank()) return t;
            auto [it, inserted] = renamed.try_emplace(t.as_blank().label);
            if (inserted) it->second = "m" + std::to_string(fresh++);
            return rdf::Term::blank(it->second);
        };
        for (const auto& triple : doc.graph.triples())
            merged.graph.insert(rename(triple.subject), triple.predicate, rename(triple.object));
        for (const auto& entry : doc.prefixes.entries())
            merged.prefixes.declare(entry.label, entry.ns);
        if (doc.base) merged.base = doc.base;
    }
    merged.graph.freeze();
    return merged;
}

}  // namespace shaclgap::turtle
