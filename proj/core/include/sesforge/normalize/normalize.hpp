#pragma once

#include <string_view>

#include "sesforge/model/vocabulary.hpp"
#include "sesforge/normalize/name_split.hpp"
#include "sesforge/normalize/report.hpp"
#include "sesforge/rdf/graph.hpp"

namespace sesforge::normalize {

struct NormalizeResult {
    rdf::Graph graph;
    NormalizationReport report;
};

// Rewrites a raw ingested graph into an SES-core case graph.
//
// Case nodes are the IRIs of `raw` that are not external; external IRIs are the
// W3C/sescore vocabularies, global concepts, framework namespaces, other cases'
// namespaces, and anything `registry` already describes. Rules, in order:
//   R1 role inference from the template (described_by -> Study/ConceptGraph,
//      member/narrower closure -> concepts; unreachable case nodes become concepts
//      with a warning);
//   R2 owl:Class declarations on classified nodes are removed;
//   R3 Study / Framework / ConceptGraph / LocalConcept typing;
//   R4 concept-to-concept skos:member becomes skos:narrower, then narrower/broader
//      inverse closure (edges to a registry LocalConcept count as contextualization);
//   R5 each LocalConcept without refers_to is linked to the global of its base name,
//      minting it into `registry` when absent.
// Property declarations (owl:ObjectProperty etc.) are dropped with a warning.
// Throws NormalizeError when no Study or ConceptGraph can be identified.
NormalizeResult normalize(const rdf::Graph& raw, rdf::Graph& registry, std::string_view case_id,
                          const model::SesVocabulary& vocab);

// Asserts  case_local skos:broader framework_local  and the narrower inverse.
// Both must be typed LocalConcept in `g` and must differ; throws NormalizeError
// otherwise. Returns the number of triples added.
std::size_t contextualize_link(const rdf::Term& case_local, const rdf::Term& framework_local,
                               rdf::Graph& g, const model::SesVocabulary& vocab);

} // namespace sesforge::normalize
