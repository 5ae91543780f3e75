#include "sesforge/rdf/vocab.hpp"

#include <string>

namespace sesforge::rdf::vocab {

namespace {

Term make(std::string_view ns, std::string_view local) {
    return Term::iri(std::string(ns) + std::string(local));
}

} // namespace

#define SESFORGE_VOCAB_TERM(fn, ns, local)      \
    const Term& fn() {                          \
        static const Term t = make(ns, local);  \
        return t;                               \
    }

SESFORGE_VOCAB_TERM(rdf_type, kRdf, "type")
SESFORGE_VOCAB_TERM(rdf_property, kRdf, "Property")
SESFORGE_VOCAB_TERM(rdfs_label, kRdfs, "label")
SESFORGE_VOCAB_TERM(rdfs_subclass_of, kRdfs, "subClassOf")
SESFORGE_VOCAB_TERM(owl_class, kOwl, "Class")
SESFORGE_VOCAB_TERM(owl_object_property, kOwl, "ObjectProperty")
SESFORGE_VOCAB_TERM(owl_datatype_property, kOwl, "DatatypeProperty")
SESFORGE_VOCAB_TERM(owl_annotation_property, kOwl, "AnnotationProperty")
SESFORGE_VOCAB_TERM(skos_member, kSkos, "member")
SESFORGE_VOCAB_TERM(skos_narrower, kSkos, "narrower")
SESFORGE_VOCAB_TERM(skos_broader, kSkos, "broader")

#undef SESFORGE_VOCAB_TERM

} // namespace sesforge::rdf::vocab
