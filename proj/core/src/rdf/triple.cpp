#include "sesforge/rdf/triple.hpp"

#include "sesforge/error.hpp"

namespace sesforge::rdf {

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
    if (!subject_.is_iri()) {
        throw TermError("triple subject must be an IRI, got " + subject_.key());
    }
    if (!predicate_.is_iri()) {
        throw TermError("triple predicate must be an IRI, got " + predicate_.key());
    }
    if (object_.is_variable()) {
        throw TermError("triple object must be an IRI or literal, got " + object_.key());
    }
}

std::string Triple::to_string() const {
    return subject_.key() + " " + predicate_.key() + " " + object_.key() + " .";
}

} // namespace sesforge::rdf
