#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sesforge/io/diagnostic.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/prefix_map.hpp"

namespace sesforge::io {

struct MapNode {
    std::string id;
    std::string label;
    std::size_t line = 0;
};

struct Connection {
    std::string from_id;
    std::string to_id;
    std::size_t line = 0;
};

// Concept-map document: nodes joined through linking phrases
// (node -> phrase -> node).
struct ConceptMap {
    std::vector<MapNode> nodes;
    std::vector<MapNode> linking_phrases;
    std::vector<Connection> connections;
};

struct ParsedConceptMap {
    ConceptMap map;
    Diagnostics diagnostics;
};

// Reads a CXL document (concept-list, linking-phrase-list, connection-list).
// Throws ParseError on malformed XML, duplicate ids, or connections naming an
// unknown id; a phrase missing its incoming or outgoing side yields a warning.
ParsedConceptMap parse_cxl(std::string_view text);

// Linking-phrase label -> predicate IRI. Labels are matched after trimming,
// lowercasing and collapsing whitespace.
class PhraseTable {
public:
    PhraseTable() = default;

    // described_by, member, narrower, has subconcept, refers_to.
    static PhraseTable defaults(const rdf::PrefixMap& pm);
    // Lines of `phrase -> curie`; '#' starts a comment. Throws ParseError.
    static PhraseTable parse(std::string_view text, const rdf::PrefixMap& pm);

    void set(std::string_view phrase, rdf::Term predicate);
    const rdf::Term* find(std::string_view phrase) const;
    std::size_t size() const noexcept { return table_.size(); }

    static std::string normalize_phrase(std::string_view phrase);

private:
    std::map<std::string, rdf::Term> table_;
};

struct ConvertedMap {
    rdf::Graph graph;
    Diagnostics diagnostics;
};

// Spaces become '_' and everything outside [A-Za-z0-9_] is dropped.
std::string slugify_label(std::string_view label);

// Each node becomes <case_ns><slug> plus an rdfs:label; each node-phrase-node
// chain becomes one triple with the phrase's predicate. Unmapped phrases fall
// back to `fallback` (sescore:related_to) with a warning. Two labels with the same
// slug, or an empty slug, throw ParseError.
ConvertedMap conceptmap_to_graph(const ConceptMap& cm, const PhraseTable& phrases,
                                 std::string_view case_ns, const rdf::Term& fallback);

} // namespace sesforge::io
