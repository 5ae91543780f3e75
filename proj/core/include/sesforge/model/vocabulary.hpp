#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/namespaces.hpp"
#include "sesforge/rdf/term.hpp"

namespace sesforge::model {

// Class and property IRIs of the SES-core T-Box under a configurable base.
class SesVocabulary {
public:
    explicit SesVocabulary(const rdf::Namespaces& ns = {});

    const rdf::Namespaces& namespaces() const noexcept { return ns_; }

    const rdf::Term& concept_class() const noexcept { return classes_[0]; }
    const rdf::Term& global_concept() const noexcept { return classes_[1]; }
    const rdf::Term& local_concept() const noexcept { return classes_[2]; }
    const rdf::Term& framework() const noexcept { return classes_[3]; }
    const rdf::Term& concept_graph() const noexcept { return classes_[4]; }
    const rdf::Term& study() const noexcept { return classes_[5]; }
    const rdf::Term& publication() const noexcept { return classes_[6]; }
    const rdf::Term& author() const noexcept { return classes_[7]; }

    const rdf::Term& refers_to() const noexcept { return properties_[0]; }
    const rdf::Term& described_by() const noexcept { return properties_[1]; }
    const rdf::Term& related_to() const noexcept { return properties_[2]; }

    // The closed list of eight T-Box classes.
    const std::array<rdf::Term, 8>& classes() const noexcept { return classes_; }
    const std::array<rdf::Term, 3>& properties() const noexcept { return properties_; }

    bool is_tbox_class(const rdf::Term& t) const;
    bool in_sescore(const rdf::Term& t) const;

private:
    rdf::Namespaces ns_;
    std::array<rdf::Term, 8> classes_;
    std::array<rdf::Term, 3> properties_;
};

// Eight classes, GlobalConcept/LocalConcept subClassOf Concept, three object
// properties, each with an rdfs:label.
rdf::Graph seed_tbox(const SesVocabulary& vocab);

// IRI of the global concept for `base`: <global ns><base>.
rdf::Term global_iri(const SesVocabulary& vocab, std::string_view base);
// rdfs:label of a minted global: base with '_' shown as ' '.
std::string global_label(std::string_view base);

// Finds a GlobalConcept in `registry` whose local name equals `base`, preferring
// the canonical global IRI. Returns nullopt when none exists.
std::optional<rdf::Term> find_global(const rdf::Graph& registry, const SesVocabulary& vocab,
                                     std::string_view base);

// Adds the canonical global concept for `base` without looking for an existing one.
// Throws NormalizeError when the canonical IRI is already used by another resource.
rdf::Term mint_global(rdf::Graph& registry, const SesVocabulary& vocab, std::string_view base);

// Looks up or mints the global concept for `base` in `registry`. `minted` is set
// when new triples were added. Throws NormalizeError when the canonical IRI is
// already used by something that is not a GlobalConcept.
rdf::Term ensure_global(rdf::Graph& registry, const SesVocabulary& vocab, std::string_view base,
                        bool* minted = nullptr);

} // namespace sesforge::model
