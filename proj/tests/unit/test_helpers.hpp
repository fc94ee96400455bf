#pragma once

#include "shaclgap/rdf/graph.hpp"
#include "shaclgap/turtle/parser.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

inline std::string corpus_path(const std::string& relative) {
    return std::string(SHACLGAP_CORPUS_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Prefixes every corpus document and test snippet assumes.
inline constexpr const char* kPreamble = R"(
@prefix : <http://example.org/nma/> .
@prefix cert: <http://example.org/nma/cert/> .
@prefix sh: <http://www.w3.org/ns/shacl#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix unit: <http://qudt.org/vocab/unit/> .
)";

// The minimal vessel node shape / gross tonnage property shape pair.
inline constexpr const char* kVesselShapes = R"(
:VesselShape
  a sh:NodeShape ;
  sh:targetClass :Vessel ;
  sh:property :GTShape .

:GTShape
  a sh:PropertyShape ;
  sh:path :grossTonnage .
)";

// Gross tonnage of at least 500, unique and mandatory.
inline constexpr const char* kGrossTonnage500 = R"(
:GT500
  a sh:PropertyShape ;
  sh:path :grossTonnage ;
  sh:minInclusive 500 ;
  sh:datatype unit:GT ;
  sh:minCount 1 ;
  sh:maxCount 1 .
)";

// Duration, position and trade area requirements of the first alternative.
inline constexpr const char* kServiceConstraints = R"(
:Duration1080
  a sh:PropertyShape ;
  sh:path :duration ;
  sh:minInclusive 1080 ;
  sh:datatype unit:DAY .

:PositionDO
  a sh:PropertyShape ;
  sh:path :inPosition ;
  sh:class :DeckOfficerPosition .

:TradeAreaBF
  a sh:PropertyShape ;
  sh:path :tradeArea ;
  sh:hasValue :BankFishing .
)";

// Node shape tying the four service requirements together.
inline constexpr const char* kServiceNodeShape = R"(
:SeagoingServiceURI
  a sh:NodeShape ;
  sh:targetClass :SGS_500_1080_DO ;
  sh:property :Duration1080, :PositionDO, :TradeAreaBF, :GT500 .
)";

// The alternatives block, wrapped in a carrier node shape so the fragment
// parses on its own.
inline constexpr const char* kAlternativesFragment = R"(
:CertificateShape
  a sh:NodeShape ;
  sh:or (
    [ sh:and ( # first alternative
      [ sh:or (cert:PS_D2A0 cert:PS_D2B0 cert:PS_D3A0
               cert:PS_D3B0 cert:PS_D4B0 cert:PS_D4F0) ]
      [ sh:path :hasSeagoingServiceRequirement ;
        sh:hasValue :SGS_500_1080_DO ;
        sh:order 1 ; ]
    )]

    [ sh:and ( # second alternative
      [ sh:or (cert:PS_D2A0 cert:PS_D2B0 cert:PS_D3A0 cert:PS_D3B0) ]
      [ sh:path :hasSeagoingServiceRequirement ;
        sh:hasValue :SGS_500_720_DO ;
        sh:order 2 ; ]
      [ sh:path :hasSeagoingServiceRequirement ;
        sh:hasValue :SGS_500_360_CO ;
        sh:order 2 ; ]
    )]
  ) .
)";

inline shaclgap::turtle::Document parse_with_preamble(const std::string& body) {
    return shaclgap::turtle::parse(std::string(kPreamble) + body);
}

inline shaclgap::rdf::Term ex(const std::string& local) {
    return shaclgap::rdf::Term::iri("http://example.org/nma/" + local);
}

inline shaclgap::rdf::Term cert(const std::string& local) {
    return shaclgap::rdf::Term::iri("http://example.org/nma/cert/" + local);
}

inline shaclgap::rdf::Iri unit(const std::string& local) {
    return shaclgap::rdf::Iri{"http://qudt.org/vocab/unit/" + local};
}

inline std::vector<std::string> corpus_shapes_files() {
    return {corpus_path("shapes/core-requirements.ttl"),
            corpus_path("shapes/certificate-deck-officer-1.ttl")};
}

inline shaclgap::turtle::Document load_corpus_shapes() {
    std::vector<shaclgap::turtle::Document> docs;
    for (const auto& path : corpus_shapes_files())
        docs.push_back(shaclgap::turtle::parse(read_file(path)));
    return shaclgap::turtle::merge(docs);
}

inline shaclgap::turtle::Document load_corpus_data(const std::vector<std::string>& relatives) {
    std::vector<shaclgap::turtle::Document> docs;
    for (const auto& rel : relatives)
        docs.push_back(shaclgap::turtle::parse(read_file(corpus_path(rel))));
    return shaclgap::turtle::merge(docs);
}

}  // namespace testutil
