#pragma once

#include <string>
#include <string_view>

#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/namespaces.hpp"
#include "sesforge/rdf/prefix_map.hpp"

namespace sesforge::io {

struct TurtleOptions {
    // Blank nodes are skolemized to <skolem_ns><document-hash>-<label>.
    std::string skolem_ns = rdf::Namespaces{}.skolem;
};

// Reads the Turtle subset: @prefix / PREFIX, curies, <absolute IRIs>, quoted
// literals with language tag or datatype, `a`, predicate lists, object lists,
// comments and _:labels. Document prefixes extend (and may rebind) `pm` for the
// duration of the parse. Throws ParseError with a line number, PrefixError-like
// failures are reported as ParseError too.
rdf::Graph parse_turtle(std::string_view text, const rdf::PrefixMap& pm,
                        const TurtleOptions& options = {});

// Deterministic Turtle: every prefix of `pm` sorted by name, a blank line, then
// one block per subject in canonical order with predicates and objects sorted.
std::string serialize_turtle(const rdf::Graph& g, const rdf::PrefixMap& pm);

// IRI in curie form when compactable and valid Turtle, <iri> otherwise; literals
// quoted with escapes.
std::string turtle_term(const rdf::Term& t, const rdf::PrefixMap& pm);

} // namespace sesforge::io
