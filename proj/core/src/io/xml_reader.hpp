#pragma once

#include <expat.h>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "sesforge/error.hpp"

namespace sesforge::io::detail {

// Namespace-resolved XML name: `ns` is the namespace URI (possibly empty).
struct XmlName {
    std::string ns;
    std::string local;

    std::string iri() const { return ns + local; }
    bool is(std::string_view n, std::string_view l) const { return ns == n && local == l; }
};

struct XmlAttributes {
    std::map<std::string, std::string> by_iri;  // ns + local -> value
    std::map<std::string, std::string> by_local;

    const std::string* find(std::string_view ns, std::string_view local) const {
        auto it = by_iri.find(std::string(ns) + std::string(local));
        return it == by_iri.end() ? nullptr : &it->second;
    }
};

// SAX-style handler. Callbacks may throw ParseError; the exception is carried out
// of expat and rethrown from parse().
class XmlHandler {
public:
    virtual ~XmlHandler() = default;
    virtual void start(const XmlName& name, const XmlAttributes& attrs, std::size_t line) = 0;
    virtual void end(const XmlName& name, std::size_t line) = 0;
    virtual void text(std::string_view chars, std::size_t line) = 0;
};

constexpr char kNsSeparator = '\x1f';
inline constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

inline XmlName split_name(const XML_Char* raw) {
    std::string_view s(raw);
    const auto sep = s.find(kNsSeparator);
    if (sep == std::string_view::npos) return {{}, std::string(s)};
    return {std::string(s.substr(0, sep)), std::string(s.substr(sep + 1))};
}

struct XmlContext {
    XML_Parser parser;
    XmlHandler* handler;
    std::exception_ptr error;
};

inline std::size_t xml_line(XML_Parser p) {
    return static_cast<std::size_t>(XML_GetCurrentLineNumber(p));
}

// Exceptions must not cross expat's C frames: park them and stop the parser.
template <class Fn>
void xml_guarded(XmlContext* c, Fn&& fn) {
    if (c->error) return;
    try {
        fn();
    } catch (...) {
        c->error = std::current_exception();
        XML_StopParser(c->parser, XML_FALSE);
    }
}

inline void parse_xml(std::string_view text, XmlHandler& handler) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS("UTF-8", kNsSeparator), &XML_ParserFree);
    if (!parser) throw ParseError("cannot allocate XML parser", 0);

    XmlContext ctx{parser.get(), &handler, nullptr};

    XML_SetUserData(parser.get(), &ctx);
    XML_SetElementHandler(
        parser.get(),
        [](void* data, const XML_Char* name, const XML_Char** atts) {
            auto* c = static_cast<XmlContext*>(data);
            xml_guarded(c, [&] {
                XmlAttributes attrs;
                for (std::size_t i = 0; atts[i] != nullptr; i += 2) {
                    XmlName an = split_name(atts[i]);
                    attrs.by_iri[an.iri()] = atts[i + 1];
                    attrs.by_local[an.local] = atts[i + 1];
                }
                c->handler->start(split_name(name), attrs, xml_line(c->parser));
            });
        },
        [](void* data, const XML_Char* name) {
            auto* c = static_cast<XmlContext*>(data);
            xml_guarded(c, [&] { c->handler->end(split_name(name), xml_line(c->parser)); });
        });
    XML_SetCharacterDataHandler(parser.get(), [](void* data, const XML_Char* s, int len) {
        auto* c = static_cast<XmlContext*>(data);
        xml_guarded(c, [&] {
            c->handler->text(std::string_view(s, static_cast<std::size_t>(len)),
                             xml_line(c->parser));
        });
    });

    const auto status = XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                                  XML_TRUE);
    if (ctx.error) std::rethrow_exception(ctx.error);
    if (status != XML_STATUS_OK) {
        throw ParseError(std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser.get())),
                         xml_line(parser.get()));
    }
}

} // namespace sesforge::io::detail
