#include "sesforge/model/vocabulary.hpp"

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::model {

using rdf::Term;
namespace vocab = rdf::vocab;

namespace {

Term sescore_term(const rdf::Namespaces& ns, std::string_view local) {
    return Term::iri(ns.sescore + std::string(local));
}

} // namespace

SesVocabulary::SesVocabulary(const rdf::Namespaces& ns)
    : ns_(ns),
      classes_{sescore_term(ns, "Concept"),     sescore_term(ns, "GlobalConcept"),
               sescore_term(ns, "LocalConcept"), sescore_term(ns, "Framework"),
               sescore_term(ns, "ConceptGraph"), sescore_term(ns, "Study"),
               sescore_term(ns, "Publication"),  sescore_term(ns, "Author")},
      properties_{sescore_term(ns, "refers_to"), sescore_term(ns, "described_by"),
                  sescore_term(ns, "related_to")} {}

bool SesVocabulary::is_tbox_class(const Term& t) const {
    for (const auto& c : classes_) {
        if (c == t) return true;
    }
    return false;
}

bool SesVocabulary::in_sescore(const Term& t) const {
    return t.is_iri() && t.value().starts_with(ns_.sescore);
}

rdf::Graph seed_tbox(const SesVocabulary& v) {
    static constexpr std::array<std::string_view, 8> kClassLabels = {
        "Concept", "Global concept", "Local concept", "Framework",
        "Concept graph", "Study", "Publication", "Author"};
    static constexpr std::array<std::string_view, 3> kPropertyLabels = {
        "refers to", "described by", "related to"};

    rdf::Graph g;
    for (std::size_t i = 0; i < v.classes().size(); ++i) {
        g.insert(v.classes()[i], vocab::rdf_type(), vocab::owl_class());
        g.insert(v.classes()[i], vocab::rdfs_label(), Term::literal(std::string(kClassLabels[i])));
    }
    g.insert(v.global_concept(), vocab::rdfs_subclass_of(), v.concept_class());
    g.insert(v.local_concept(), vocab::rdfs_subclass_of(), v.concept_class());
    for (std::size_t i = 0; i < v.properties().size(); ++i) {
        g.insert(v.properties()[i], vocab::rdf_type(), vocab::owl_object_property());
        g.insert(v.properties()[i], vocab::rdfs_label(),
                 Term::literal(std::string(kPropertyLabels[i])));
    }
    return g;
}

Term global_iri(const SesVocabulary& v, std::string_view base) {
    return Term::iri(v.namespaces().global + std::string(base));
}

std::string global_label(std::string_view base) {
    std::string out(base);
    for (char& c : out) {
        if (c == '_') c = ' ';
    }
    return out;
}

std::optional<Term> find_global(const rdf::Graph& registry, const SesVocabulary& v,
                                std::string_view base) {
    const Term canonical = global_iri(v, base);
    if (registry.contains(canonical, vocab::rdf_type(), v.global_concept())) return canonical;
    for (const auto& g : registry.subjects(vocab::rdf_type(), v.global_concept())) {
        if (g.is_iri() && rdf::local_name(g.value()) == base) return g;
    }
    return std::nullopt;
}

Term mint_global(rdf::Graph& registry, const SesVocabulary& v, std::string_view base) {
    Term g = global_iri(v, base);
    if (registry.has_subject(g)) {
        throw NormalizeError("cannot mint global concept " + g.key() +
                             ": the IRI is already used by a non-global resource");
    }
    registry.insert(g, vocab::rdf_type(), v.global_concept());
    registry.insert(g, vocab::rdfs_label(), Term::literal(global_label(base)));
    return g;
}

Term ensure_global(rdf::Graph& registry, const SesVocabulary& v, std::string_view base,
                   bool* minted) {
    if (minted != nullptr) *minted = false;
    if (auto existing = find_global(registry, v, base)) return *existing;
    Term g = mint_global(registry, v, base);
    if (minted != nullptr) *minted = true;
    return g;
}

} // namespace sesforge::model
