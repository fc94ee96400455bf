#include "shaclgap/rdf/isomorphism.hpp"
#include "shaclgap/rdf/vocab.hpp"
#include "shaclgap/shacl/compile.hpp"
#include "shaclgap/turtle/parser.hpp"
#include "shaclgap/turtle/serializer.hpp"

#include "generators.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace shaclgap;
using rdf::Term;
using shacl::CompileError;
using shacl::CompileErrorKind;
using shacl::ShapeKind;
using testutil::ex;

namespace {

CompileError capture(const std::string& body) {
    try {
        shacl::discover(testutil::parse_with_preamble(body));
    } catch (const CompileError& e) {
        return e;
    }
    throw std::runtime_error("expected a compile error");
}

}  // namespace

TEST_CASE("discover the vessel shapes") {
    auto shapes = shacl::discover(testutil::parse_with_preamble(testutil::kVesselShapes));
    REQUIRE(shapes.size() == 2);

    const auto& vessel = shapes.at(ex("VesselShape"));
    CHECK(vessel.kind == ShapeKind::node_shape);
    CHECK_FALSE(vessel.path.has_value());
    REQUIRE(vessel.targets.size() == 1);
    CHECK(vessel.targets[0].kind == shacl::Target::Kind::target_class);
    CHECK(vessel.targets[0].value == ex("Vessel"));
    REQUIRE(vessel.constraints.size() == 1);
    CHECK(std::get<shacl::PropertyRef>(vessel.constraints[0]).member == ex("GTShape"));

    const auto& gt = shapes.at(ex("GTShape"));
    CHECK(gt.kind == ShapeKind::property_shape);
    CHECK(gt.path == rdf::Iri{"http://example.org/nma/grossTonnage"});
    CHECK(gt.targets.empty());
    CHECK(gt.constraints.empty());
}

TEST_CASE("discover an empty document") {
    CHECK(shacl::discover(turtle::parse("")).size() == 0);
}

TEST_CASE("discover the alternatives block") {
    auto shapes = shacl::discover(testutil::parse_with_preamble(testutil::kAlternativesFragment));

    const auto& certificate = shapes.at(ex("CertificateShape"));
    CHECK(certificate.kind == ShapeKind::node_shape);
    REQUIRE(certificate.constraints.size() == 1);
    const auto& alternatives = std::get<shacl::OrConstraint>(certificate.constraints[0]);
    REQUIRE(alternatives.members.size() == 2);

    // Both members are anonymous sh:and shapes with two and three members.
    const auto& first = shapes.at(alternatives.members[0]);
    CHECK(first.id.is_blank());
    CHECK(first.kind == ShapeKind::node_shape);
    REQUIRE(first.constraints.size() == 1);
    CHECK(std::get<shacl::AndConstraint>(first.constraints[0]).members.size() == 2);

    const auto& second = shapes.at(alternatives.members[1]);
    REQUIRE(second.constraints.size() == 1);
    CHECK(std::get<shacl::AndConstraint>(second.constraints[0]).members.size() == 3);

    // The bare sh:path blocks inside the lists compile as anonymous
    // property shapes.
    const auto& first_members = std::get<shacl::AndConstraint>(first.constraints[0]).members;
    const auto& service = shapes.at(first_members[1]);
    CHECK(service.kind == ShapeKind::property_shape);
    CHECK(service.path == rdf::Iri{"http://example.org/nma/hasSeagoingServiceRequirement"});
    REQUIRE(service.constraints.size() == 1);
    CHECK(std::get<shacl::HasValue>(service.constraints[0]).value == ex("SGS_500_1080_DO"));

    // Certificates named in the lists become (empty) shapes too.
    CHECK(shapes.find(testutil::cert("PS_D4F0")) != nullptr);
}

TEST_CASE("compile_constraints on the gross tonnage shape") {
    auto doc = testutil::parse_with_preamble(testutil::kGrossTonnage500);
    auto constraints = shacl::compile_constraints(ex("GT500"), doc);
    REQUIRE(constraints.size() == 4);
    const auto& range = std::get<shacl::RangeConstraint>(constraints[0]);
    CHECK(range.relation == rdf::RangeRelation::min_inclusive);
    CHECK(range.bound.lexical == "500");
    CHECK(std::get<shacl::DatatypeConstraint>(constraints[1]).datatype == testutil::unit("GT"));
    CHECK(std::get<shacl::MinCount>(constraints[2]).count == 1);
    CHECK(std::get<shacl::MaxCount>(constraints[3]).count == 1);
}

TEST_CASE("compile_constraints on the duration shape") {
    auto doc = testutil::parse_with_preamble(testutil::kServiceConstraints);
    auto constraints = shacl::compile_constraints(ex("Duration1080"), doc);
    REQUIRE(constraints.size() == 2);
    const auto& range = std::get<shacl::RangeConstraint>(constraints[0]);
    CHECK(range.relation == rdf::RangeRelation::min_inclusive);
    CHECK(range.bound.lexical == "1080");
    CHECK(std::get<shacl::DatatypeConstraint>(constraints[1]).datatype == testutil::unit("DAY"));
}

TEST_CASE("entry points") {
    auto vessel = shacl::discover(testutil::parse_with_preamble(testutil::kVesselShapes));
    auto entries = vessel.entry_points();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0]->id == ex("VesselShape"));

    auto only_properties = shacl::discover(testutil::parse_with_preamble(testutil::kGrossTonnage500));
    CHECK(only_properties.entry_points().empty());

    auto corpus = shacl::discover(testutil::load_corpus_shapes());
    std::vector<Term> ids;
    for (const auto* shape : corpus.entry_points()) ids.push_back(shape->id);
    CHECK(ids == std::vector<Term>{ex("VesselShape"), ex("SeagoingServiceURI"),
                                   ex("DeckOfficerClass1Certificate"),
                                   ex("SeagoingService720URI"), ex("SeagoingService360URI")});
}

TEST_CASE("order_of") {
    auto shapes = shacl::discover(testutil::parse_with_preamble(testutil::kAlternativesFragment));
    const auto& alternatives = std::get<shacl::OrConstraint>(
        shapes.at(ex("CertificateShape")).constraints[0]);

    const auto& first_and = std::get<shacl::AndConstraint>(
        shapes.at(alternatives.members[0]).constraints[0]);
    const auto& first_service = shapes.at(first_and.members[1]);
    REQUIRE(shacl::order_of(first_service).has_value());
    CHECK(shacl::order_of(first_service)->lexical == "1");

    CHECK_FALSE(shacl::order_of(shapes.at(alternatives.members[0])).has_value());

    const auto& second_and = std::get<shacl::AndConstraint>(
        shapes.at(alternatives.members[1]).constraints[0]);
    CHECK(shacl::order_of(shapes.at(second_and.members[1]))->lexical == "2");
    CHECK(shacl::order_of(shapes.at(second_and.members[2]))->lexical == "2");
}

TEST_CASE("compile errors") {
    SUBCASE("node shape with a path") {
        auto e = capture(":bad a sh:NodeShape ; sh:path :p .");
        CHECK(e.kind == CompileErrorKind::invalid_shape);
    }
    SUBCASE("property shape without a path") {
        CHECK(capture(":bad a sh:PropertyShape .").kind == CompileErrorKind::invalid_shape);
    }
    SUBCASE("two paths") {
        CHECK(capture(":bad sh:path :p, :q .").kind == CompileErrorKind::invalid_shape);
    }
    SUBCASE("literal path") {
        CHECK(capture(":bad sh:path \"p\" .").kind == CompileErrorKind::invalid_shape);
    }
    SUBCASE("non integer count") {
        auto e = capture(":bad sh:path :p ; sh:minCount \"two\" .");
        CHECK(e.kind == CompileErrorKind::malformed_constraint);
        CHECK(e.shape_node == ex("bad"));
    }
    SUBCASE("negative count") {
        CHECK(capture(":bad sh:path :p ; sh:maxCount -1 .").kind ==
              CompileErrorKind::malformed_constraint);
    }
    SUBCASE("count on a node shape") {
        CHECK(capture(":bad a sh:NodeShape ; sh:minCount 1 .").kind ==
              CompileErrorKind::malformed_constraint);
    }
    SUBCASE("empty or list") {
        CHECK(capture(":bad a sh:NodeShape ; sh:or () .").kind ==
              CompileErrorKind::malformed_constraint);
    }
    SUBCASE("literal member in an or list") {
        CHECK(capture(":bad a sh:NodeShape ; sh:or ( \"x\" ) .").kind ==
              CompileErrorKind::dangling_reference);
    }
    SUBCASE("literal sh:not reference") {
        CHECK(capture(":bad a sh:NodeShape ; sh:not 5 .").kind ==
              CompileErrorKind::dangling_reference);
    }
    SUBCASE("sh:property pointing at a node shape") {
        CHECK(capture(":n a sh:NodeShape . :bad a sh:NodeShape ; sh:property :n .").kind ==
              CompileErrorKind::malformed_constraint);
    }
    SUBCASE("sh:property pointing at an undefined name stays a vacuous reference") {
        auto shapes = shacl::discover(
            testutil::parse_with_preamble(":ok a sh:NodeShape ; sh:property :elsewhere ."));
        CHECK(shapes.at(ex("elsewhere")).kind == ShapeKind::node_shape);
        CHECK(shapes.at(ex("elsewhere")).constraints.empty());
    }
    SUBCASE("sh:node pointing at a property shape") {
        CHECK(capture(":p sh:path :q . :bad a sh:NodeShape ; sh:node :p .").kind ==
              CompileErrorKind::malformed_constraint);
    }
    SUBCASE("reference cycle") {
        auto e = capture(":a a sh:NodeShape ; sh:not :b . :b a sh:NodeShape ; sh:not :a .");
        CHECK(e.kind == CompileErrorKind::cyclic_reference);
    }
    SUBCASE("self reference") {
        CHECK(capture(":a a sh:NodeShape ; sh:node :a .").kind ==
              CompileErrorKind::cyclic_reference);
    }
    SUBCASE("non SHACL predicates are ignored") {
        auto shapes = shacl::discover(testutil::parse_with_preamble(
            ":s sh:path :p ; rdfs:label \"gross tonnage\" ; :note :x ."));
        CHECK(shapes.at(ex("s")).constraints.empty());
    }
    SUBCASE("malformed list behind sh:or") {
        auto e = capture(":bad a sh:NodeShape ; sh:or :notalist .");
        CHECK(e.kind == CompileErrorKind::malformed_constraint);
    }
}

TEST_CASE("unsupported SHACL predicate names the offender") {
    auto e = capture(":bad sh:path :p ; sh:qualifiedValueShape :q .");
    CHECK(e.kind == CompileErrorKind::unsupported_constraint);
    CHECK(e.message.find("qualifiedValueShape") != std::string::npos);
}

TEST_CASE("kind partition follows the path rule") {
    auto corpus = shacl::discover(testutil::load_corpus_shapes());
    for (const auto& shape : corpus.shapes()) {
        CHECK((shape.kind == ShapeKind::property_shape) == shape.path.has_value());
    }
    CHECK(corpus.size() > 10);
}

TEST_CASE("discovery is deterministic") {
    auto doc = testutil::load_corpus_shapes();
    auto emitted_a = shacl::emit(shacl::discover(doc));
    auto emitted_b = shacl::emit(shacl::discover(doc));
    CHECK(turtle::serialize(emitted_a) == turtle::serialize(emitted_b));
}

TEST_CASE("emit and recompile reproduce the model") {
    auto check_fidelity = [](const turtle::Document& doc) {
        auto shapes = shacl::discover(doc);
        auto emitted = shacl::emit(shapes);
        auto recompiled = shacl::discover(emitted);
        CHECK(shapes.size() == recompiled.size());
        // Emission is canonical, so model identity is graph isomorphism.
        CHECK(rdf::isomorphic(emitted.graph, shacl::emit(recompiled).graph));
        // Through text as well, blank ids renamed.
        auto reparsed = shacl::discover(turtle::parse(turtle::serialize(emitted)));
        CHECK(rdf::isomorphic(emitted.graph, shacl::emit(reparsed).graph));
    };
    check_fidelity(testutil::load_corpus_shapes());
    check_fidelity(testutil::parse_with_preamble(testutil::kAlternativesFragment));

    testgen::Rng rng(9001);
    for (int round = 0; round < 100; ++round) {
        auto world = testgen::random_shape_world(rng);
        check_fidelity(world.shapes_doc);
    }
}
