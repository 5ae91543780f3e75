#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/prefix_map.hpp"
#include "sesforge/store/registry.hpp"

namespace sesforge::store {

struct TriplePattern {
    rdf::Term subject;
    rdf::Term predicate;
    rdf::Term object;
};

// Conjunctive basic graph pattern, at least one triple pattern.
struct QueryPattern {
    std::vector<TriplePattern> patterns;

    // Variable names in sorted order.
    std::vector<std::string> variables() const;
};

using Row = std::map<std::string, rdf::Term>;

struct BindingSet {
    std::vector<std::string> variables;  // sorted
    std::vector<Row> rows;               // sorted by bound terms in variable order

    // Header of "?name" columns then one tab-separated row per line, terms compacted.
    std::string to_tsv(const rdf::PrefixMap& pm) const;
};

// One pattern per line (or several separated by " . "); terms are <IRIs>,
// curies, quoted literals, `a`, or ?variables. A bare word names a sescore term.
// Throws ParseError.
QueryPattern parse_query(std::string_view text, const rdf::PrefixMap& pm);

// Seeds from the most selective pattern, then extends bindings through the rest in
// order. Rows come back deduplicated and sorted.
BindingSet bgp_query(const rdf::Graph& g, const QueryPattern& q);
BindingSet bgp_query(const Registry& reg, const QueryPattern& q);

struct SearchHit {
    rdf::Term iri;
    std::size_t score;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Lowercased alphanumeric tokens; CamelCase and letter/underscore boundaries split.
std::vector<std::string> tokenize(std::string_view text);

// Scores every subject IRI by the number of distinct query tokens that prefix one
// of its tokens (from rdfs:label values and the IRI local name). Sorted by score
// descending then IRI.
std::vector<SearchHit> keyword_search(const rdf::Graph& g, std::string_view text);
std::vector<SearchHit> keyword_search(const Registry& reg, std::string_view text);

enum class Direction { Narrower, Broader };

// Breadth-first transitive closure along skos:narrower or skos:broader, excluding
// the root. Throws RegistryError when the root is not mentioned in the graph.
std::vector<rdf::Term> hierarchy(const rdf::Graph& g, const rdf::Term& root, Direction direction);
std::vector<rdf::Term> hierarchy(const Registry& reg, const rdf::Term& root, Direction direction);

} // namespace sesforge::store
