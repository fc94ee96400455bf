#include "shaclgap/rdf/graph.hpp"
#include "shaclgap/rdf/isomorphism.hpp"
#include "shaclgap/rdf/numeric.hpp"
#include "shaclgap/rdf/vocab.hpp"

#include "generators.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace shaclgap;
using rdf::Term;
using testutil::ex;

namespace {

Term lit(long long n) { return Term::integer(n); }

rdf::Graph graph_of(std::initializer_list<rdf::Triple> triples) {
    rdf::Graph g;
    for (const auto& t : triples) g.insert(t);
    return g;
}

}  // namespace

TEST_CASE("term invariants") {
    CHECK_THROWS_AS(Term::iri(""), std::invalid_argument);
    CHECK_THROWS_AS(Term::iri("http://x y"), std::invalid_argument);
    CHECK_THROWS_AS(Term::iri("a\tb"), std::invalid_argument);

    CHECK(Term::string_literal("x").as_literal().datatype == vocab::xsd_string);
    CHECK(Term::lang_literal("x", "en").as_literal().datatype == vocab::rdf_lang_string);

    // Structural equality: no numeric normalization at the term level.
    CHECK(Term::integer(1080) != Term::literal("1080.0", vocab::xsd_decimal));
    CHECK(Term::integer(1080) != Term::literal("1080", vocab::xsd_decimal));
    CHECK(Term::iri("http://a") != Term::blank("http://a"));
    CHECK(Term::integer(5) == Term::integer(5));
}

TEST_CASE("insert is a set operation") {
    rdf::Graph g;
    CHECK(g.insert(ex("a"), ex("p"), ex("b")));
    CHECK(g.size() == 1);
    CHECK_FALSE(g.insert(ex("a"), ex("p"), ex("b")));
    CHECK(g.size() == 1);

    CHECK_THROWS_AS(g.insert(lit(1), ex("p"), ex("b")), std::invalid_argument);
    CHECK_THROWS_AS(g.insert(ex("a"), Term::blank("b"), ex("b")), std::invalid_argument);

    g.freeze();
    CHECK_THROWS_AS(g.insert(ex("a"), ex("p"), ex("c")), std::logic_error);
}

TEST_CASE("parsing the vessel shapes gives five triples") {
    auto doc = testutil::parse_with_preamble(testutil::kVesselShapes);
    CHECK(doc.graph.size() == 5);
}

TEST_CASE("match with bound positions") {
    auto doc = testutil::parse_with_preamble(testutil::kVesselShapes);
    const auto& g = doc.graph;

    auto by_path = g.match(ex("GTShape"), Term(vocab::sh_path), std::nullopt);
    REQUIRE(by_path.size() == 1);
    CHECK(by_path[0].object == ex("grossTonnage"));

    CHECK(rdf::Graph{}.match(std::nullopt, std::nullopt, std::nullopt).empty());

    auto typed = g.match(std::nullopt, Term(vocab::rdf_type), Term(vocab::sh_property_shape));
    REQUIRE(typed.size() == 1);
    CHECK(typed[0].subject == ex("GTShape"));
}

TEST_CASE("match completeness against a naive scan") {
    testgen::Rng rng(7001);
    for (int round = 0; round < 200; ++round) {
        auto doc = testgen::random_document(rng);
        const auto& g = doc.graph;
        CHECK(g.match(std::nullopt, std::nullopt, std::nullopt).size() == g.size());
        for (const auto& t : g.triples()) {
            auto exact = g.match(t.subject, t.predicate, t.object);
            REQUIRE(exact.size() == 1);
            CHECK(exact[0] == t);
        }
        // Every bound-position pattern agrees with a full scan.
        if (g.empty()) continue;
        const auto& probe = g.triples()[testgen::pick(rng, g.size())];
        for (int mask = 1; mask < 8; ++mask) {
            std::optional<Term> s = (mask & 1) ? std::optional<Term>(probe.subject) : std::nullopt;
            std::optional<Term> p = (mask & 2) ? std::optional<Term>(probe.predicate) : std::nullopt;
            std::optional<Term> o = (mask & 4) ? std::optional<Term>(probe.object) : std::nullopt;
            std::vector<rdf::Triple> expected;
            for (const auto& t : g.triples()) {
                if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o))
                    expected.push_back(t);
            }
            CHECK(g.match(s, p, o) == expected);
        }
    }
}

TEST_CASE("objects_of") {
    auto doc = testutil::parse_with_preamble(testutil::kVesselShapes);
    auto objs = doc.graph.objects_of(ex("VesselShape"), Term(vocab::sh_property));
    REQUIRE(objs.size() == 1);
    CHECK(objs[0] == ex("GTShape"));

    CHECK(doc.graph.objects_of(ex("nobody"), ex("p")).empty());

    auto cv = graph_of({{ex("sailor1"), ex("hasCertification"), testutil::cert("D3A0")},
                        {ex("sailor1"), ex("hasCertification"), testutil::cert("D2B0")}});
    CHECK(cv.objects_of(ex("sailor1"), ex("hasCertification")).size() == 2);
}

TEST_CASE("collect_list") {
    rdf::Graph empty;
    CHECK(empty.collect_list(Term(vocab::rdf_nil)).empty());

    // First sh:or list in the alternatives block: the six certificates.
    auto doc = testutil::parse_with_preamble(testutil::kAlternativesFragment);
    std::optional<rdf::Triple> first_or;
    for (const auto& t : doc.graph.triples()) {
        if (t.predicate == Term(vocab::sh_or)) {
            first_or = t;
            break;
        }
    }
    REQUIRE(first_or.has_value());
    auto members = doc.graph.collect_list(first_or->object);
    REQUIRE(members.size() == 6);
    CHECK(members.front() == testutil::cert("PS_D2A0"));
    CHECK(members.back() == testutil::cert("PS_D4F0"));

    // Two-node chain whose second node lacks rdf:rest.
    rdf::Graph broken;
    broken.insert(Term::blank("l1"), Term(vocab::rdf_first), ex("a"));
    broken.insert(Term::blank("l1"), Term(vocab::rdf_rest), Term::blank("l2"));
    broken.insert(Term::blank("l2"), Term(vocab::rdf_first), ex("b"));
    CHECK_THROWS_AS(broken.collect_list(Term::blank("l1")), rdf::MalformedListError);

    rdf::Graph cyclic;
    cyclic.insert(Term::blank("l1"), Term(vocab::rdf_first), ex("a"));
    cyclic.insert(Term::blank("l1"), Term(vocab::rdf_rest), Term::blank("l1"));
    CHECK_THROWS_AS(cyclic.collect_list(Term::blank("l1")), rdf::MalformedListError);
}

TEST_CASE("collect_list round-trips an encoded sequence") {
    testgen::Rng rng(7002);
    for (int round = 0; round < 200; ++round) {
        std::vector<Term> members;
        const std::size_t n = testgen::pick(rng, 7);
        for (std::size_t i = 0; i < n; ++i) members.push_back(testgen::random_iri(rng));
        rdf::Graph g;
        std::vector<Term> nodes;
        for (std::size_t i = 0; i < n; ++i) nodes.push_back(Term::blank("c" + std::to_string(i)));
        for (std::size_t i = 0; i < n; ++i) {
            g.insert(nodes[i], Term(vocab::rdf_first), members[i]);
            g.insert(nodes[i], Term(vocab::rdf_rest),
                     i + 1 < n ? nodes[i + 1] : Term(vocab::rdf_nil));
        }
        Term head = n == 0 ? Term(vocab::rdf_nil) : nodes.front();
        CHECK(g.collect_list(head) == members);
    }
}

TEST_CASE("subclass_closure") {
    auto g = graph_of({{ex("ChiefOfficer"), Term(vocab::rdfs_subclass_of), ex("DeckOfficerPosition")}});
    auto closure = g.subclass_closure(ex("DeckOfficerPosition"));
    CHECK(closure == std::vector<Term>{ex("DeckOfficerPosition"), ex("ChiefOfficer")});

    CHECK(rdf::Graph{}.subclass_closure(ex("Anything")) == std::vector<Term>{ex("Anything")});

    auto chain = graph_of({{ex("A"), Term(vocab::rdfs_subclass_of), ex("B")},
                           {ex("B"), Term(vocab::rdfs_subclass_of), ex("C")}});
    auto abc = chain.subclass_closure(ex("C"));
    CHECK(abc == std::vector<Term>{ex("C"), ex("B"), ex("A")});

    auto cyclic = graph_of({{ex("A"), Term(vocab::rdfs_subclass_of), ex("B")},
                            {ex("B"), Term(vocab::rdfs_subclass_of), ex("A")}});
    CHECK(cyclic.subclass_closure(ex("A")).size() == 2);
}

TEST_CASE("subclass_closure is monotone in the graph") {
    testgen::Rng rng(7003);
    for (int round = 0; round < 200; ++round) {
        auto world = testgen::random_shape_world(rng);
        auto data = testgen::random_data(rng, world);
        const Term& cls = world.classes[testgen::pick(rng, world.classes.size())];
        auto before = data.subclass_closure(cls);

        rdf::Graph larger;
        for (const auto& t : data.triples()) larger.insert(t);
        auto extra = testgen::random_data(rng, world, 5);
        for (const auto& t : extra.triples()) larger.insert(t);

        auto after = larger.subclass_closure(cls);
        for (const auto& c : before)
            CHECK(std::find(after.begin(), after.end(), c) != after.end());
    }
}

TEST_CASE("instances_of") {
    auto g = graph_of({{ex("v1"), Term(vocab::rdf_type), ex("Vessel")}});
    CHECK(g.instances_of(ex("Vessel")) == std::vector<Term>{ex("v1")});

    CHECK(rdf::Graph{}.instances_of(ex("Vessel")).empty());

    auto sub = graph_of({{ex("co1"), Term(vocab::rdf_type), ex("ChiefOfficer")},
                         {ex("ChiefOfficer"), Term(vocab::rdfs_subclass_of), ex("DeckOfficerPosition")}});
    auto instances = sub.instances_of(ex("DeckOfficerPosition"));
    CHECK(std::find(instances.begin(), instances.end(), ex("co1")) != instances.end());
}

TEST_CASE("compare_literal") {
    using rdf::CompareOutcome;
    using rdf::RangeRelation;
    auto gt = [](const char* lexical) {
        return rdf::Literal{lexical, testutil::unit("GT"), {}};
    };
    rdf::Literal bound{"500", vocab::xsd_integer, {}};

    CHECK(rdf::compare_literal(gt("500"), bound, RangeRelation::min_inclusive) ==
          CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(gt("499"), bound, RangeRelation::min_inclusive) ==
          CompareOutcome::violated);
    CHECK(rdf::compare_literal(gt("abc"), bound, RangeRelation::min_inclusive) ==
          CompareOutcome::incomparable);

    // Integer and decimal lexical forms compare by value.
    CHECK(rdf::compare_literal(rdf::Literal{"1080.0", vocab::xsd_decimal, {}},
                               rdf::Literal{"1080", vocab::xsd_integer, {}},
                               RangeRelation::min_inclusive) == CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(rdf::Literal{"1080.0", vocab::xsd_decimal, {}},
                               rdf::Literal{"1080", vocab::xsd_integer, {}},
                               RangeRelation::max_inclusive) == CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(gt("-0"), rdf::Literal{"0", vocab::xsd_integer, {}},
                               RangeRelation::min_inclusive) == CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(gt("0.50"), rdf::Literal{"0.5", vocab::xsd_decimal, {}},
                               RangeRelation::max_inclusive) == CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(gt("10"), rdf::Literal{"9.999", vocab::xsd_decimal, {}},
                               RangeRelation::min_exclusive) == CompareOutcome::satisfied);
    CHECK(rdf::compare_literal(gt("10"), rdf::Literal{"10", vocab::xsd_integer, {}},
                               RangeRelation::min_exclusive) == CompareOutcome::violated);
}

TEST_CASE("compare_literal reflexivity on random numerics") {
    testgen::Rng rng(7004);
    for (int round = 0; round < 500; ++round) {
        std::string lexical = std::to_string(testgen::pick(rng, 5000));
        if (testgen::chance(rng, 0.5)) lexical += "." + std::to_string(testgen::pick(rng, 1000));
        if (testgen::chance(rng, 0.2)) lexical = "-" + lexical;
        rdf::Literal l{lexical, vocab::xsd_decimal, {}};
        CHECK(rdf::compare_literal(l, l, rdf::RangeRelation::min_inclusive) ==
              rdf::CompareOutcome::satisfied);
        CHECK(rdf::compare_literal(l, l, rdf::RangeRelation::max_inclusive) ==
              rdf::CompareOutcome::satisfied);
    }
}

TEST_CASE("insert idempotence on random graphs") {
    testgen::Rng rng(7005);
    for (int round = 0; round < 100; ++round) {
        auto doc = testgen::random_document(rng);
        rdf::Graph g;
        for (const auto& t : doc.graph.triples()) g.insert(t);
        const std::size_t size = g.size();
        for (const auto& t : doc.graph.triples()) CHECK_FALSE(g.insert(t));
        CHECK(g.size() == size);
        CHECK(g.triples() == doc.graph.triples());
    }
}

TEST_CASE("isomorphism basics") {
    auto a = graph_of({{Term::blank("x"), ex("p"), ex("o")}});
    auto b = graph_of({{Term::blank("y"), ex("p"), ex("o")}});
    CHECK(rdf::isomorphic(a, b));

    auto c = graph_of({{Term::blank("x"), ex("p"), ex("other")}});
    CHECK_FALSE(rdf::isomorphic(a, c));

    // Two blanks with swapped roles.
    auto d1 = graph_of({{Term::blank("m"), ex("p"), Term::blank("n")},
                        {Term::blank("n"), ex("q"), ex("o")}});
    auto d2 = graph_of({{Term::blank("n"), ex("p"), Term::blank("m")},
                        {Term::blank("m"), ex("q"), ex("o")}});
    CHECK(rdf::isomorphic(d1, d2));

    auto d3 = graph_of({{Term::blank("n"), ex("p"), Term::blank("m")},
                        {Term::blank("n"), ex("q"), ex("o")}});
    CHECK_FALSE(rdf::isomorphic(d1, d3));
}
