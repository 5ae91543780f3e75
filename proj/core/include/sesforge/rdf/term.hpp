#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace sesforge::rdf {

// An RDF term: IRI, literal, or (query-only) variable.
//
// Every term carries its canonical N-Triples-style serialization (key()); equality,
// ordering and hashing are defined on that key so that sorted containers iterate in
// serialized order.
class Term {
public:
    enum class Kind : std::uint8_t { Iri, Literal, Variable };

    // Throws TermError unless `value` is an absolute IRI without whitespace or
    // characters forbidden in IRIREF.
    static Term iri(std::string value);
    static Term literal(std::string lexical);
    // Throws TermError on a malformed language tag.
    static Term lang_literal(std::string lexical, std::string language);
    static Term typed_literal(std::string lexical, std::string datatype);
    // Name without the leading '?'.
    static Term variable(std::string name);

    Kind kind() const noexcept { return d_->kind; }
    bool is_iri() const noexcept { return d_->kind == Kind::Iri; }
    bool is_literal() const noexcept { return d_->kind == Kind::Literal; }
    bool is_variable() const noexcept { return d_->kind == Kind::Variable; }

    // IRI string, literal lexical form, or variable name.
    const std::string& value() const noexcept { return d_->value; }
    const std::string& language() const noexcept { return d_->language; }
    const std::string& datatype() const noexcept { return d_->datatype; }
    const std::string& key() const noexcept { return d_->key; }
    std::size_t hash() const noexcept { return d_->hash; }

    friend bool operator==(const Term& a, const Term& b) noexcept {
        return a.d_ == b.d_ || (a.d_->hash == b.d_->hash && a.d_->key == b.d_->key);
    }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
        if (a.d_ == b.d_) return std::strong_ordering::equal;
        const int c = a.d_->key.compare(b.d_->key);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    // Terms are immutable, so copies share one allocation.
    struct Data {
        Kind kind;
        std::string value;
        std::string language;
        std::string datatype;
        std::string key;
        std::size_t hash;
    };

    Term(Kind kind, std::string value, std::string language, std::string datatype);

    std::shared_ptr<const Data> d_;
};

bool is_absolute_iri(std::string_view value) noexcept;
bool is_valid_language_tag(std::string_view tag) noexcept;
bool is_valid_variable_name(std::string_view name) noexcept;

// Escapes a lexical form for use between double quotes (Turtle / N-Triples).
std::string escape_string(std::string_view lexical);

// Text after the last '#' or '/' of an IRI (whole value when neither occurs).
std::string_view local_name(std::string_view iri) noexcept;

} // namespace sesforge::rdf

template <>
struct std::hash<sesforge::rdf::Term> {
    std::size_t operator()(const sesforge::rdf::Term& t) const noexcept {
        return t.hash();
    }
};
