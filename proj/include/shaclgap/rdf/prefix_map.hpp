#pragma once

#include "shaclgap/rdf/term.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace shaclgap::rdf {

// Prefix label -> namespace IRI, remembering declaration order.
// Re-declaring a label overwrites its namespace but keeps its position.
class PrefixMap {
public:
    void declare(std::string label, Iri ns);

    std::optional<Iri> find(const std::string& label) const;
    bool empty() const { return order_.size() == 0; }

    struct Entry {
        std::string label;
        Iri ns;
    };
    // Declaration order.
    std::vector<Entry> entries() const;

private:
    std::unordered_map<std::string, Iri> map_;
    std::vector<std::string> order_;
};

}  // namespace shaclgap::rdf
