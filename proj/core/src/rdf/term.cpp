#include "sesforge/rdf/term.hpp"

#include <cstdio>

#include "sesforge/error.hpp"

namespace sesforge::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool forbidden_in_iri(unsigned char c) {
    if (c <= 0x20) return true;
    switch (c) {
        case '<': case '>': case '"': case '{': case '}':
        case '|': case '^': case '`': case '\\':
            return true;
        default:
            return false;
    }
}

} // namespace

bool is_absolute_iri(std::string_view value) noexcept {
    if (value.empty() || !is_alpha(value.front())) return false;
    std::size_t i = 1;
    while (i < value.size() && (is_alpha(value[i]) || is_digit(value[i]) || value[i] == '+' ||
                                value[i] == '-' || value[i] == '.')) {
        ++i;
    }
    if (i >= value.size() || value[i] != ':') return false;
    for (unsigned char c : value) {
        if (forbidden_in_iri(c)) return false;
    }
    return true;
}

bool is_valid_language_tag(std::string_view tag) noexcept {
    // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
    std::size_t i = 0;
    while (i < tag.size() && is_alpha(tag[i])) ++i;
    if (i == 0) return false;
    while (i < tag.size()) {
        if (tag[i] != '-') return false;
        std::size_t start = ++i;
        while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i;
        if (i == start) return false;
    }
    return true;
}

bool is_valid_variable_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    for (char c : name) {
        if (!(is_alpha(c) || is_digit(c) || c == '_')) return false;
    }
    return true;
}

std::string escape_string(std::string_view lexical) {
    std::string out;
    out.reserve(lexical.size() + 2);
    for (unsigned char c : lexical) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20 || c == 0x7f) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

std::string_view local_name(std::string_view iri) noexcept {
    const auto pos = iri.find_last_of("#/");
    return pos == std::string_view::npos ? iri : iri.substr(pos + 1);
}

Term::Term(Kind kind, std::string value, std::string language, std::string datatype) {
    std::string key;
    switch (kind) {
        case Kind::Iri:
            key = "<" + value + ">";
            break;
        case Kind::Literal:
            key = "\"" + escape_string(value) + "\"";
            if (!language.empty()) {
                key += "@" + language;
            } else if (!datatype.empty()) {
                key += "^^<" + datatype + ">";
            }
            break;
        case Kind::Variable:
            key = "?" + value;
            break;
    }
    const std::size_t h = std::hash<std::string>{}(key);
    d_ = std::make_shared<const Data>(
        Data{kind, std::move(value), std::move(language), std::move(datatype), std::move(key), h});
}

Term Term::iri(std::string value) {
    if (!is_absolute_iri(value)) {
        throw TermError("not an absolute IRI: '" + value + "'");
    }
    return Term(Kind::Iri, std::move(value), {}, {});
}

Term Term::literal(std::string lexical) {
    return Term(Kind::Literal, std::move(lexical), {}, {});
}

Term Term::lang_literal(std::string lexical, std::string language) {
    if (!is_valid_language_tag(language)) {
        throw TermError("malformed language tag '" + language + "'");
    }
    return Term(Kind::Literal, std::move(lexical), std::move(language), {});
}

Term Term::typed_literal(std::string lexical, std::string datatype) {
    if (!is_absolute_iri(datatype)) {
        throw TermError("literal datatype is not an absolute IRI: '" + datatype + "'");
    }
    return Term(Kind::Literal, std::move(lexical), {}, std::move(datatype));
}

Term Term::variable(std::string name) {
    if (!is_valid_variable_name(name)) {
        throw TermError("malformed variable name '?" + name + "'");
    }
    return Term(Kind::Variable, std::move(name), {}, {});
}

} // namespace sesforge::rdf
