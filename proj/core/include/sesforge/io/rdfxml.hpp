#pragma once

#include <string>
#include <string_view>

#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/namespaces.hpp"

namespace sesforge::io {

struct OwlReadOptions {
    // Namespace that relative rdf:about / rdf:resource values are appended to
    // (a leading '#' is dropped). Empty: use xml:base of the root, else the
    // default case namespace.
    std::string base;
    std::string skolem_ns = rdf::Namespaces{}.skolem;
};

// Reads the RDF/XML subset exported by node-and-edge ontology editors:
//   rdf:RDF root; owl:Class, rdf:Description and typed node elements carrying
//   rdf:about; property elements with rdf:resource or text content; rdf:type;
//   rdfs:label. owl:Ontology headers are skipped.
// Containers, reification, parseType and nested node elements are rejected with a
// ParseError naming the construct. XML errors carry the line number.
rdf::Graph parse_coe_owl(std::string_view text, const OwlReadOptions& options = {});

} // namespace sesforge::io
