#include "shaclgap/shacl/model.hpp"

#include "shaclgap/rdf/vocab.hpp"

#include <stdexcept>

namespace shaclgap::shacl {

void ShapesGraph::add(Shape shape) {
    auto [it, inserted] = index_.try_emplace(shape.id, shapes_.size());
    if (!inserted) throw std::logic_error("duplicate shape id " + rdf::to_string(shape.id));
    shapes_.push_back(std::move(shape));
}

const Shape* ShapesGraph::find(const ShapeId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &shapes_[it->second];
}

const Shape& ShapesGraph::at(const ShapeId& id) const {
    const Shape* shape = find(id);
    if (!shape) throw std::out_of_range("unknown shape " + rdf::to_string(id));
    return *shape;
}

std::vector<const Shape*> ShapesGraph::entry_points() const {
    std::vector<const Shape*> out;
    for (const auto& shape : shapes_)
        if (!shape.targets.empty()) out.push_back(&shape);
    return out;
}

turtle::Document emit(const ShapesGraph& shapes) {
    turtle::Document doc;
    doc.prefixes.declare("sh", rdf::Iri{std::string(vocab::sh_ns)});
    doc.prefixes.declare("rdf", rdf::Iri{std::string(vocab::rdf_ns)});
    doc.prefixes.declare("xsd", rdf::Iri{std::string(vocab::xsd_ns)});

    std::size_t list_counter = 0;
    auto emit_list = [&](const std::vector<ShapeId>& members) -> rdf::Term {
        std::vector<rdf::Term> nodes;
        nodes.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            nodes.push_back(rdf::Term::blank("L" + std::to_string(list_counter++)));
        for (std::size_t i = 0; i < members.size(); ++i) {
            doc.graph.insert(nodes[i], rdf::Term(vocab::rdf_first), members[i]);
            doc.graph.insert(nodes[i], rdf::Term(vocab::rdf_rest),
                             i + 1 < nodes.size() ? nodes[i + 1] : rdf::Term(vocab::rdf_nil));
        }
        return nodes.empty() ? rdf::Term(vocab::rdf_nil) : nodes.front();
    };

    for (const auto& shape : shapes.shapes()) {
        doc.graph.insert(shape.id, rdf::Term(vocab::rdf_type),
                         rdf::Term(shape.kind == ShapeKind::property_shape
                                       ? vocab::sh_property_shape
                                       : vocab::sh_node_shape));
        if (shape.path) doc.graph.insert(shape.id, rdf::Term(vocab::sh_path), rdf::Term(*shape.path));
        for (const auto& target : shape.targets) {
            doc.graph.insert(shape.id,
                             rdf::Term(target.kind == Target::Kind::target_class
                                           ? vocab::sh_target_class
                                           : vocab::sh_target_node),
                             target.value);
        }
        if (shape.order)
            doc.graph.insert(shape.id, rdf::Term(vocab::sh_order), rdf::Term(*shape.order));
        for (const auto& constraint : shape.constraints) {
            std::visit(
                [&](const auto& c) {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, MinCount>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_min_count),
                                         rdf::Term::integer(c.count));
                    else if constexpr (std::is_same_v<C, MaxCount>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_max_count),
                                         rdf::Term::integer(c.count));
                    else if constexpr (std::is_same_v<C, DatatypeConstraint>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_datatype), rdf::Term(c.datatype));
                    else if constexpr (std::is_same_v<C, ClassConstraint>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_class), rdf::Term(c.cls));
                    else if constexpr (std::is_same_v<C, HasValue>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_has_value), c.value);
                    else if constexpr (std::is_same_v<C, RangeConstraint>) {
                        const rdf::Iri* pred = nullptr;
                        switch (c.relation) {
                            case rdf::RangeRelation::min_inclusive: pred = &vocab::sh_min_inclusive; break;
                            case rdf::RangeRelation::max_inclusive: pred = &vocab::sh_max_inclusive; break;
                            case rdf::RangeRelation::min_exclusive: pred = &vocab::sh_min_exclusive; break;
                            case rdf::RangeRelation::max_exclusive: pred = &vocab::sh_max_exclusive; break;
                        }
                        doc.graph.insert(shape.id, rdf::Term(*pred), rdf::Term(c.bound));
                    } else if constexpr (std::is_same_v<C, AndConstraint>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_and), emit_list(c.members));
                    else if constexpr (std::is_same_v<C, OrConstraint>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_or), emit_list(c.members));
                    else if constexpr (std::is_same_v<C, NotConstraint>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_not), c.member);
                    else if constexpr (std::is_same_v<C, PropertyRef>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_property), c.member);
                    else if constexpr (std::is_same_v<C, NodeRef>)
                        doc.graph.insert(shape.id, rdf::Term(vocab::sh_node), c.member);
                },
                constraint);
        }
    }
    doc.graph.freeze();
    return doc;
}

}  // namespace shaclgap::shacl
