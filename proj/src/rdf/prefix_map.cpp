#include "shaclgap/rdf/prefix_map.hpp"

namespace shaclgap::rdf {

void PrefixMap::declare(std::string label, Iri ns) {
    auto [it, inserted] = map_.insert_or_assign(std::move(label), std::move(ns));
    if (inserted) order_.push_back(it->first);
}

std::optional<Iri> PrefixMap::find(const std::string& label) const {
    auto it = map_.find(label);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

std::vector<PrefixMap::Entry> PrefixMap::entries() const {
    std::vector<Entry> out;
    out.reserve(order_.size());
    for (const auto& label : order_) out.push_back({label, map_.at(label)});
    return out;
}

}  // namespace shaclgap::rdf
