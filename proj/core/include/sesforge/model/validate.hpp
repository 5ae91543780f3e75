#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sesforge/model/vocabulary.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/prefix_map.hpp"

namespace sesforge::model {

enum class Rule { V1 = 1, V2, V3, V4, V5, V6, V7 };
enum class FindingSeverity { Error, Warning };

std::string_view rule_code(Rule r) noexcept;
std::string_view rule_summary(Rule r) noexcept;

struct Finding {
    Rule rule;
    FindingSeverity severity;
    rdf::Term subject;
    std::string message;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
    std::vector<Finding> findings;  // sorted by rule, subject, message

    bool empty() const noexcept { return findings.empty(); }
    std::size_t error_count() const;
    std::size_t warning_count() const;
    std::size_t count(Rule r) const;
    // One line per finding then "<n> findings".
    std::string to_text(const rdf::PrefixMap& pm) const;
};

// Conformance rules:
//   V1 every LocalConcept has exactly one refers_to (0: error, >1: warning)
//   V2 every refers_to object is typed GlobalConcept
//   V3 every ConceptGraph has at least one skos:member
//   V4 every Study has a described_by whose object is a ConceptGraph
//   V5 skos:narrower and skos:broader are mutual inverses
//   V6 no rdf:type owl:Class outside the T-Box classes
//   V7 every IRI subject/object of a sescore or skos triple has an rdf:type
ValidationReport validate(const rdf::Graph& g, const SesVocabulary& vocab);

} // namespace sesforge::model
