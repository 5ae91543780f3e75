#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sesforge/rdf/namespaces.hpp"
#include "sesforge/rdf/term.hpp"

namespace sesforge::rdf {

// prefix -> namespace IRI.
//
// compact() picks the longest matching namespace (ties: smallest prefix), so
// compact(expand(c)) == c whenever no two registered namespaces overlap.
class PrefixMap {
public:
    PrefixMap() = default;

    // sescore, skos, rdf, rdfs, owl, xsd and global.
    static PrefixMap with_builtins(const Namespaces& ns = {});

    // Binds or rebinds. Throws TermError on an invalid prefix or non-absolute namespace.
    void bind(std::string prefix, std::string ns);
    bool contains(std::string_view prefix) const;
    std::optional<std::string> namespace_of(std::string_view prefix) const;

    // "p:local" -> IRI term. Throws PrefixError naming an unknown prefix and
    // TermError when the text is not a curie.
    Term expand(std::string_view curie) const;
    // Curie when some namespace matches with a valid local part, else the IRI itself.
    std::string compact(std::string_view iri) const;
    std::optional<std::string> try_compact(std::string_view iri) const;

    const std::map<std::string, std::string, std::less<>>& mappings() const noexcept {
        return map_;
    }

private:
    std::map<std::string, std::string, std::less<>> map_;
};

bool is_valid_prefix(std::string_view prefix) noexcept;
// Local part restricted to [A-Za-z0-9_.-], no leading '.'/'-', no trailing '.'.
bool is_valid_local(std::string_view local) noexcept;

} // namespace sesforge::rdf
