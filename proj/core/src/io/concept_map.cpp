#include "sesforge/io/concept_map.hpp"

#include <set>
#include <unordered_map>

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"
#include "text_util.hpp"
#include "xml_reader.hpp"

namespace sesforge::io {

using rdf::Term;

namespace {

std::string collapse_ws(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += c;
    }
    return out;
}

class CxlHandler final : public detail::XmlHandler {
public:
    void start(const detail::XmlName& name, const detail::XmlAttributes& attrs,
               std::size_t line) override {
        ++depth_;
        if (depth_ == 1) {
            if (name.local != "cmap") {
                throw ParseError("root element must be <cmap>, found <" + name.local + ">", line);
            }
            seen_root_ = true;
            return;
        }
        const std::string& parent = stack_.empty() ? kNone : stack_.back();
        stack_.push_back(name.local);

        if (name.local == "concept" && parent == "concept-list") {
            map_.nodes.push_back(read_node(attrs, "concept", line));
        } else if (name.local == "linking-phrase" && parent == "linking-phrase-list") {
            map_.linking_phrases.push_back(read_node(attrs, "linking-phrase", line));
        } else if (name.local == "connection" && parent == "connection-list") {
            Connection c;
            c.from_id = require(attrs, "from-id", "connection", line);
            c.to_id = require(attrs, "to-id", "connection", line);
            c.line = line;
            map_.connections.push_back(std::move(c));
        }
    }

    void end(const detail::XmlName&, std::size_t) override {
        if (depth_ > 1) stack_.pop_back();
        --depth_;
    }

    void text(std::string_view, std::size_t) override {}

    ParsedConceptMap finish() {
        if (!seen_root_) throw ParseError("document has no <cmap> root element", 0);
        ParsedConceptMap out;

        std::unordered_map<std::string, bool> is_phrase;  // id -> phrase?
        for (const auto& n : map_.nodes) {
            if (!is_phrase.emplace(n.id, false).second) {
                throw ParseError("duplicate id '" + n.id + "'", n.line);
            }
        }
        for (const auto& p : map_.linking_phrases) {
            if (!is_phrase.emplace(p.id, true).second) {
                throw ParseError("duplicate id '" + p.id + "'", p.line);
            }
        }

        std::unordered_map<std::string, int> incoming, outgoing;
        for (const auto& c : map_.connections) {
            for (const auto* id : {&c.from_id, &c.to_id}) {
                if (!is_phrase.contains(*id)) {
                    throw ParseError("connection references unknown id '" + *id + "'", c.line);
                }
            }
            if (is_phrase[c.to_id]) ++incoming[c.to_id];
            if (is_phrase[c.from_id]) ++outgoing[c.from_id];
        }
        for (const auto& p : map_.linking_phrases) {
            if (incoming[p.id] == 0) {
                out.diagnostics.push_back({Severity::Warning, p.line,
                                           "linking phrase '" + p.label + "' (" + p.id +
                                               ") has no incoming connection"});
            }
            if (outgoing[p.id] == 0) {
                out.diagnostics.push_back({Severity::Warning, p.line,
                                           "linking phrase '" + p.label + "' (" + p.id +
                                               ") has no outgoing connection"});
            }
        }
        out.map = std::move(map_);
        return out;
    }

private:
    static std::string require(const detail::XmlAttributes& attrs, const char* attr,
                               const char* element, std::size_t line) {
        auto it = attrs.by_local.find(attr);
        if (it == attrs.by_local.end() || it->second.empty()) {
            throw ParseError(std::string("<") + element + "> is missing attribute '" + attr + "'",
                             line);
        }
        return it->second;
    }

    static MapNode read_node(const detail::XmlAttributes& attrs, const char* element,
                             std::size_t line) {
        MapNode n;
        n.id = require(attrs, "id", element, line);
        auto it = attrs.by_local.find("label");
        n.label = it == attrs.by_local.end() ? std::string() : collapse_ws(it->second);
        n.line = line;
        return n;
    }

    inline static const std::string kNone;
    ConceptMap map_;
    std::vector<std::string> stack_;
    std::size_t depth_ = 0;
    bool seen_root_ = false;
};

} // namespace

ParsedConceptMap parse_cxl(std::string_view text) {
    CxlHandler handler;
    detail::parse_xml(text, handler);
    return handler.finish();
}

std::string PhraseTable::normalize_phrase(std::string_view phrase) {
    std::string out = collapse_ws(phrase);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

PhraseTable PhraseTable::defaults(const rdf::PrefixMap& pm) {
    PhraseTable t;
    t.set("described_by", pm.expand("sescore:described_by"));
    t.set("member", pm.expand("skos:member"));
    t.set("narrower", pm.expand("skos:narrower"));
    t.set("has subconcept", pm.expand("skos:narrower"));
    t.set("refers_to", pm.expand("sescore:refers_to"));
    return t;
}

PhraseTable PhraseTable::parse(std::string_view text, const rdf::PrefixMap& pm) {
    PhraseTable t;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            // '#' inside <...> belongs to the IRI
            const auto lt = line.find('<');
            if (lt == std::string_view::npos || hash < lt) line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) continue;

        const auto arrow = line.rfind("->");
        if (arrow == std::string_view::npos) {
            throw ParseError("expected 'phrase -> curie'", line_no);
        }
        const auto phrase = detail::trim(line.substr(0, arrow));
        const auto target = detail::trim(line.substr(arrow + 2));
        if (phrase.empty() || target.empty()) {
            throw ParseError("expected 'phrase -> curie'", line_no);
        }
        try {
            if (target.front() == '<' && target.back() == '>') {
                t.set(phrase, Term::iri(std::string(target.substr(1, target.size() - 2))));
            } else {
                t.set(phrase, pm.expand(target));
            }
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return t;
}

void PhraseTable::set(std::string_view phrase, Term predicate) {
    table_.insert_or_assign(normalize_phrase(phrase), std::move(predicate));
}

const Term* PhraseTable::find(std::string_view phrase) const {
    auto it = table_.find(normalize_phrase(phrase));
    return it == table_.end() ? nullptr : &it->second;
}

std::string slugify_label(std::string_view label) {
    std::string out;
    for (char c : label) {
        if (c == ' ') {
            out += '_';
        } else if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                   c == '_') {
            out += c;
        }
    }
    return out;
}

ConvertedMap conceptmap_to_graph(const ConceptMap& cm, const PhraseTable& phrases,
                                 std::string_view case_ns, const Term& fallback) {
    ConvertedMap out;

    std::unordered_map<std::string, Term> node_iri;
    std::unordered_map<std::string, const MapNode*> by_slug;
    for (const auto& n : cm.nodes) {
        const std::string slug = slugify_label(n.label);
        if (slug.empty()) {
            throw ParseError("concept '" + n.id + "' has a label with no usable characters", n.line);
        }
        auto [it, fresh] = by_slug.emplace(slug, &n);
        if (!fresh) {
            throw ParseError("labels '" + it->second->label + "' and '" + n.label +
                                 "' both map to '" + slug + "'",
                             n.line);
        }
        Term iri = Term::iri(std::string(case_ns) + slug);
        out.graph.insert(iri, rdf::vocab::rdfs_label(), Term::literal(n.label));
        node_iri.emplace(n.id, std::move(iri));
    }

    std::unordered_map<std::string, const MapNode*> phrase_by_id;
    for (const auto& p : cm.linking_phrases) phrase_by_id.emplace(p.id, &p);

    std::unordered_map<std::string, std::vector<const Term*>> sources, targets;
    for (const auto& c : cm.connections) {
        const bool from_node = node_iri.contains(c.from_id);
        const bool to_node = node_iri.contains(c.to_id);
        if (from_node && phrase_by_id.contains(c.to_id)) {
            sources[c.to_id].push_back(&node_iri.at(c.from_id));
        } else if (phrase_by_id.contains(c.from_id) && to_node) {
            targets[c.from_id].push_back(&node_iri.at(c.to_id));
        } else if (from_node && to_node) {
            out.diagnostics.push_back({Severity::Warning, c.line,
                                       "connection between two concepts without a linking "
                                       "phrase ignored"});
        } else {
            out.diagnostics.push_back({Severity::Warning, c.line,
                                       "connection between two linking phrases ignored"});
        }
    }

    for (const auto& p : cm.linking_phrases) {
        const auto& from = sources[p.id];
        const auto& to = targets[p.id];
        if (from.empty() || to.empty()) continue;
        const Term* predicate = phrases.find(p.label);
        if (predicate == nullptr) {
            out.diagnostics.push_back({Severity::Warning, p.line,
                                       "unmapped linking phrase '" + p.label +
                                           "' converted to " + fallback.key()});
            predicate = &fallback;
        }
        for (const Term* s : from) {
            for (const Term* o : to) out.graph.insert(*s, *predicate, *o);
        }
    }
    return out;
}

} // namespace sesforge::io
