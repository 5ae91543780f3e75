#include "sesforge/io/turtle.hpp"

#include <algorithm>
#include <optional>

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"
#include "text_util.hpp"

namespace sesforge::io {

using rdf::Term;

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.'; }

class TurtleParser {
public:
    TurtleParser(std::string_view text, const rdf::PrefixMap& pm, const TurtleOptions& options)
        : text_(text), pm_(pm),
          skolem_prefix_(options.skolem_ns + detail::hex64(detail::fnv1a64(text)) + "-") {}

    rdf::Graph run() {
        for (;;) {
            skip_ws();
            if (at_end()) break;
            statement();
        }
        return std::move(graph_);
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char next() {
        const char c = text_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            const char c = peek();
            if (is_space(c)) {
                next();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') next();
            } else {
                break;
            }
        }
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "' " + what + describe_here());
        }
        next();
    }

    std::string describe_here() const {
        if (at_end()) return ", found end of input";
        const char c = peek();
        if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
            return ", found byte " + std::to_string(static_cast<unsigned char>(c));
        }
        return std::string(", found '") + c + "'";
    }

    bool keyword_ahead(std::string_view word, bool case_insensitive) const {
        if (text_.size() - pos_ < word.size()) return false;
        for (std::size_t i = 0; i < word.size(); ++i) {
            char a = text_[pos_ + i];
            char b = word[i];
            if (case_insensitive) {
                if (a >= 'a' && a <= 'z') a = static_cast<char>(a - 32);
                if (b >= 'a' && b <= 'z') b = static_cast<char>(b - 32);
            }
            if (a != b) return false;
        }
        const char after = peek(word.size());
        return after == '\0' || is_space(after) || after == '<';
    }

    void statement() {
        if (peek() == '@') {
            if (keyword_ahead("@prefix", false)) {
                pos_ += 7;
                prefix_directive();
                expect('.', "after @prefix directive");
                return;
            }
            if (keyword_ahead("@base", false)) fail("@base is not supported");
            fail("unknown directive");
        }
        if (keyword_ahead("PREFIX", true)) {
            pos_ += 6;
            prefix_directive();
            return;
        }
        if (keyword_ahead("BASE", true)) fail("BASE is not supported");

        Term subject = read_subject();
        predicate_object_list(subject);
        expect('.', "at end of triples");
    }

    void prefix_directive() {
        skip_ws();
        std::string prefix;
        while (!at_end() && is_name_char(peek())) prefix += next();
        if (at_end() || peek() != ':') fail("expected ':' after prefix name" + describe_here());
        next();
        if (!rdf::is_valid_prefix(prefix)) fail("invalid prefix name '" + prefix + "'");
        skip_ws();
        if (peek() != '<') fail("expected <namespace IRI> in prefix directive" + describe_here());
        const std::string ns = read_iriref();
        pm_.bind(prefix, ns);
    }

    void predicate_object_list(const Term& subject) {
        for (;;) {
            skip_ws();
            Term predicate = read_verb();
            object_list(subject, predicate);
            skip_ws();
            if (peek() != ';') return;
            while (peek() == ';') {
                next();
                skip_ws();
            }
            // trailing ';' before '.' is allowed
            if (peek() == '.' || at_end()) return;
        }
    }

    void object_list(const Term& subject, const Term& predicate) {
        for (;;) {
            skip_ws();
            Term object = read_object();
            graph_.insert(subject, predicate, std::move(object));
            skip_ws();
            if (peek() != ',') return;
            next();
        }
    }

    Term read_subject() {
        const char c = peek();
        if (c == '"' || c == '\'') fail("a literal cannot be a subject");
        return read_resource("subject");
    }

    Term read_verb() {
        if (peek() == 'a') {
            const char after = peek(1);
            if (after == '\0' || is_space(after) || after == '<' || after == '"' ||
                after == '#') {
                next();
                return rdf::vocab::rdf_type();
            }
        }
        const char c = peek();
        if (c == '_' && peek(1) == ':') fail("a blank node cannot be a predicate");
        return read_resource("predicate");
    }

    Term read_object() {
        const char c = peek();
        if (c == '"' || c == '\'') return read_literal();
        return read_resource("object");
    }

    Term read_resource(const char* position) {
        if (at_end()) fail(std::string("expected ") + position + ", found end of input");
        const char c = peek();
        if (c == '<') return make_iri(read_iriref());
        if (c == '[') fail("blank node property lists are not supported");
        if (c == '(') fail("collections are not supported");
        if (c == '_' && peek(1) == ':') return read_blank();
        if (is_alpha(c) || c == ':' || c == '_') return read_prefixed_name();
        if (is_digit(c) || c == '+' || c == '-') fail("numeric literals are not supported");
        fail(std::string("expected ") + position + describe_here());
    }

    Term make_iri(std::string value) {
        try {
            return Term::iri(std::move(value));
        } catch (const TermError& e) {
            fail(e.what());
        }
    }

    std::string read_iriref() {
        next();  // '<'
        std::string value;
        for (;;) {
            if (at_end()) fail("unterminated IRI");
            const char c = peek();
            if (c == '>') {
                next();
                break;
            }
            if (is_space(c) || c == '<' || c == '"' || c == '\\') {
                fail("invalid character in IRI" + describe_here());
            }
            value += next();
        }
        if (!rdf::is_absolute_iri(value)) fail("relative IRI <" + value + "> is not supported");
        return value;
    }

    Term read_blank() {
        pos_ += 2;
        std::string label;
        while (!at_end() && is_name_char(peek())) label += next();
        while (!label.empty() && label.back() == '.') {
            label.pop_back();
            --pos_;
        }
        if (label.empty()) fail("empty blank node label");
        return make_iri(skolem_prefix_ + label);
    }

    Term read_prefixed_name() {
        std::string prefix;
        while (!at_end() && is_name_char(peek())) prefix += next();
        if (peek() != ':') {
            if (prefix == "true" || prefix == "false") fail("boolean literals are not supported");
            fail("expected prefixed name, found '" + prefix + "'");
        }
        next();
        std::string local;
        while (!at_end() && (is_name_char(peek()) || peek() == ':' || peek() == '%')) {
            local += next();
        }
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_;
        }
        auto ns = pm_.namespace_of(prefix);
        if (!ns) fail("unknown prefix '" + prefix + "'");
        return make_iri(*ns + local);
    }

    std::uint32_t read_hex(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail("truncated \\u escape");
            const char h = next();
            cp <<= 4;
            if (is_digit(h)) cp |= static_cast<std::uint32_t>(h - '0');
            else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
            else fail("invalid hex digit in escape");
        }
        return cp;
    }

    Term read_literal() {
        const char quote = next();
        bool long_form = false;
        if (peek() == quote && peek(1) == quote) {
            pos_ += 2;
            long_form = true;
        }
        std::string lexical;
        for (;;) {
            if (at_end()) fail("unterminated string literal");
            const char c = peek();
            if (c == quote) {
                if (!long_form) {
                    next();
                    break;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    pos_ += 3;
                    break;
                }
            }
            if (!long_form && (c == '\n' || c == '\r')) fail("newline in short string literal");
            if (c == '\\') {
                next();
                if (at_end()) fail("unterminated escape");
                const char e = next();
                switch (e) {
                    case 't': lexical += '\t'; break;
                    case 'b': lexical += '\b'; break;
                    case 'n': lexical += '\n'; break;
                    case 'r': lexical += '\r'; break;
                    case 'f': lexical += '\f'; break;
                    case '"': lexical += '"'; break;
                    case '\'': lexical += '\''; break;
                    case '\\': lexical += '\\'; break;
                    case 'u':
                    case 'U': {
                        const std::uint32_t cp = read_hex(e == 'u' ? 4 : 8);
                        if (!detail::append_utf8(lexical, cp)) fail("invalid code point in escape");
                        break;
                    }
                    default:
                        fail(std::string("invalid escape '\\") + e + "'");
                }
                continue;
            }
            lexical += next();
        }

        if (peek() == '@') {
            next();
            std::string tag;
            while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) {
                tag += next();
            }
            if (!rdf::is_valid_language_tag(tag)) fail("malformed language tag '" + tag + "'");
            return Term::lang_literal(std::move(lexical), std::move(tag));
        }
        if (peek() == '^' && peek(1) == '^') {
            pos_ += 2;
            Term dt = read_resource("datatype");
            return Term::typed_literal(std::move(lexical), dt.value());
        }
        return Term::literal(std::move(lexical));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    rdf::PrefixMap pm_;
    std::string skolem_prefix_;
    rdf::Graph graph_;
};

} // namespace

rdf::Graph parse_turtle(std::string_view text, const rdf::PrefixMap& pm,
                        const TurtleOptions& options) {
    return TurtleParser(text, pm, options).run();
}

std::string turtle_term(const Term& t, const rdf::PrefixMap& pm) {
    switch (t.kind()) {
        case Term::Kind::Iri:
            if (auto c = pm.try_compact(t.value())) return *c;
            return "<" + t.value() + ">";
        case Term::Kind::Literal: {
            std::string out = "\"" + rdf::escape_string(t.value()) + "\"";
            if (!t.language().empty()) {
                out += "@" + t.language();
            } else if (!t.datatype().empty()) {
                out += "^^" + turtle_term(Term::iri(t.datatype()), pm);
            }
            return out;
        }
        case Term::Kind::Variable:
            return "?" + t.value();
    }
    return {};
}

std::string serialize_turtle(const rdf::Graph& g, const rdf::PrefixMap& pm) {
    std::string out;
    for (const auto& [prefix, ns] : pm.mappings()) {
        out += "@prefix " + prefix + ": <" + ns + "> .\n";
    }

    // Subject blocks in canonical order; within a block rdf:type comes first.
    auto it = g.begin();
    while (it != g.end()) {
        auto end = it;
        while (end != g.end() && end->subject() == it->subject()) ++end;
        std::vector<const rdf::Triple*> block;
        for (auto t = it; t != end; ++t) block.push_back(&*t);
        std::stable_partition(block.begin(), block.end(), [](const rdf::Triple* t) {
            return t->predicate() == rdf::vocab::rdf_type();
        });

        out += "\n" + turtle_term(it->subject(), pm) + " ";
        const Term* predicate = nullptr;
        for (const rdf::Triple* t : block) {
            if (predicate == nullptr || t->predicate() != *predicate) {
                if (predicate != nullptr) out += " ;\n    ";
                const bool is_type = t->predicate() == rdf::vocab::rdf_type();
                out += (is_type ? std::string("a") : turtle_term(t->predicate(), pm)) + " ";
                predicate = &t->predicate();
            } else {
                out += ", ";
            }
            out += turtle_term(t->object(), pm);
        }
        out += " .\n";
        it = end;
    }
    return out;
}

} // namespace sesforge::io
