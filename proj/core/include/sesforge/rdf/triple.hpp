#pragma once

#include <compare>
#include <functional>
#include <string>

#include "sesforge/rdf/term.hpp"

namespace sesforge::rdf {

// Subject and predicate are IRIs; the object is an IRI or a literal.
class Triple {
public:
    // Throws TermError when a position holds a term kind it does not admit.
    Triple(Term subject, Term predicate, Term object);

    const Term& subject() const noexcept { return subject_; }
    const Term& predicate() const noexcept { return predicate_; }
    const Term& object() const noexcept { return object_; }

    // "<s> <p> <o> ." on one line.
    std::string to_string() const;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) noexcept {
        if (auto c = a.subject_ <=> b.subject_; c != 0) return c;
        if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
        return a.object_ <=> b.object_;
    }

private:
    Term subject_;
    Term predicate_;
    Term object_;
};

} // namespace sesforge::rdf

template <>
struct std::hash<sesforge::rdf::Triple> {
    std::size_t operator()(const sesforge::rdf::Triple& t) const noexcept {
        std::hash<sesforge::rdf::Term> h;
        std::size_t seed = h(t.subject());
        seed ^= h(t.predicate()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        seed ^= h(t.object()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        return seed;
    }
};
