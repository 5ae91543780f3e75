#include "sesforge/io/rdfxml.hpp"

#include <optional>
#include <vector>

#include "sesforge/rdf/vocab.hpp"
#include "text_util.hpp"
#include "xml_reader.hpp"

namespace sesforge::io {

using rdf::Term;
namespace vocab = rdf::vocab;

namespace {

constexpr std::string_view kRdf = vocab::kRdf;
constexpr std::string_view kOwl = vocab::kOwl;

bool is_container_name(std::string_view local) {
    return local == "Bag" || local == "Seq" || local == "Alt" || local == "List";
}

bool is_membership_property(std::string_view local) {
    if (local == "li") return true;
    if (local.size() < 2 || local[0] != '_') return false;
    for (std::size_t i = 1; i < local.size(); ++i) {
        if (local[i] < '0' || local[i] > '9') return false;
    }
    return true;
}

class OwlHandler final : public detail::XmlHandler {
public:
    OwlHandler(const OwlReadOptions& options, std::string_view text)
        : options_(options),
          skolem_prefix_(options.skolem_ns + detail::hex64(detail::fnv1a64(text)) + "-") {}

    rdf::Graph take() {
        if (!seen_root_) throw ParseError("document has no rdf:RDF root element", 0);
        return std::move(graph_);
    }

    void start(const detail::XmlName& name, const detail::XmlAttributes& attrs,
               std::size_t line) override {
        line_ = line;
        push_lang(attrs);
        ++depth_;
        if (skip_depth_ > 0) return;

        if (depth_ == 1) {
            if (!name.is(kRdf, "RDF")) {
                fail("root element must be rdf:RDF, found " + display(name));
            }
            seen_root_ = true;
            base_ = options_.base;
            if (base_.empty()) {
                if (const auto* xb = attrs.find(detail::kXmlNs, "base")) base_ = *xb;
            }
            if (base_.empty()) base_ = rdf::Namespaces{}.case_ns("default");
            return;
        }
        if (depth_ == 2) {
            node_element(name, attrs);
            return;
        }
        if (depth_ == 3) {
            property_element(name, attrs);
            return;
        }
        fail("nested node element " + display(name) + " is not supported");
    }

    void end(const detail::XmlName&, std::size_t line) override {
        line_ = line;
        if (skip_depth_ > 0) {
            if (depth_ == skip_depth_) skip_depth_ = 0;
        } else if (depth_ == 3 && pending_literal_) {
            emit(*subject_, *pending_predicate_, make_literal());
            pending_literal_ = false;
        }
        --depth_;
        lang_stack_.pop_back();
    }

    void text(std::string_view chars, std::size_t line) override {
        line_ = line;
        if (skip_depth_ > 0) return;
        if (depth_ == 3 && pending_literal_) {
            text_ += chars;
        } else if (detail::trim(chars).size() > 0) {
            fail("unexpected text content outside a property element");
        }
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_); }

    static std::string display(const detail::XmlName& n) {
        if (n.ns == kRdf) return "rdf:" + n.local;
        if (n.ns == kOwl) return "owl:" + n.local;
        if (n.ns == vocab::kRdfs) return "rdfs:" + n.local;
        return n.ns.empty() ? n.local : "<" + n.iri() + ">";
    }

    void push_lang(const detail::XmlAttributes& attrs) {
        std::string lang = lang_stack_.empty() ? std::string() : lang_stack_.back();
        if (const auto* l = attrs.find(detail::kXmlNs, "lang")) lang = *l;
        lang_stack_.push_back(std::move(lang));
    }

    std::string resolve(const std::string& ref) const {
        if (rdf::is_absolute_iri(ref)) return ref;
        if (ref.empty() || ref == "#") fail("empty IRI reference");
        return base_ + (ref.front() == '#' ? ref.substr(1) : ref);
    }

    Term make_iri(const std::string& value) const {
        try {
            return Term::iri(value);
        } catch (const TermError& e) {
            fail(e.what());
        }
    }

    void emit(const Term& s, const Term& p, Term o) { graph_.insert(s, p, std::move(o)); }

    void reject_rdf_attrs(const detail::XmlAttributes& attrs) const {
        if (const auto* pt = attrs.find(kRdf, "parseType")) {
            fail("rdf:parseType=\"" + *pt + "\" is not supported");
        }
        if (attrs.find(kRdf, "bagID") != nullptr) fail("rdf:bagID (reification) is not supported");
    }

    void node_element(const detail::XmlName& name, const detail::XmlAttributes& attrs) {
        if (name.is(kOwl, "Ontology")) {
            skip_depth_ = depth_;
            return;
        }
        if (name.ns == kRdf && is_container_name(name.local)) {
            fail("container rdf:" + name.local + " is not supported");
        }
        if (name.is(kRdf, "Statement")) fail("reification (rdf:Statement) is not supported");
        reject_rdf_attrs(attrs);

        if (const auto* about = attrs.find(kRdf, "about")) {
            subject_ = make_iri(resolve(*about));
        } else if (const auto* id = attrs.find(kRdf, "ID")) {
            subject_ = make_iri(resolve("#" + *id));
        } else if (const auto* node_id = attrs.find(kRdf, "nodeID")) {
            subject_ = make_iri(skolem_prefix_ + *node_id);
        } else {
            fail("anonymous node element " + display(name) + " is not supported (missing rdf:about)");
        }

        if (!name.is(kRdf, "Description")) {
            emit(*subject_, vocab::rdf_type(), make_iri(name.iri()));
        }

        // property attributes
        for (const auto& [iri, value] : attrs.by_iri) {
            if (iri.starts_with(kRdf) || iri.starts_with(detail::kXmlNs) || iri.find(':') == std::string::npos) {
                continue;
            }
            emit(*subject_, make_iri(iri), plain_literal(value));
        }
    }

    void property_element(const detail::XmlName& name, const detail::XmlAttributes& attrs) {
        if (name.ns == kRdf && is_membership_property(name.local)) {
            fail("container membership property rdf:" + name.local + " is not supported");
        }
        if (name.ns == kRdf && (name.local == "subject" || name.local == "predicate" ||
                                name.local == "object")) {
            fail("reification property rdf:" + name.local + " is not supported");
        }
        if (attrs.find(kRdf, "ID") != nullptr) {
            fail("rdf:ID on a property element (reification) is not supported");
        }
        reject_rdf_attrs(attrs);
        if (name.ns.empty()) fail("property element '" + name.local + "' has no namespace");

        const Term predicate = make_iri(name.iri());
        if (const auto* res = attrs.find(kRdf, "resource")) {
            emit(*subject_, predicate, make_iri(resolve(*res)));
        } else if (const auto* node_id = attrs.find(kRdf, "nodeID")) {
            emit(*subject_, predicate, make_iri(skolem_prefix_ + *node_id));
        } else {
            pending_literal_ = true;
            pending_predicate_ = predicate;
            text_.clear();
            datatype_.clear();
            if (const auto* dt = attrs.find(kRdf, "datatype")) datatype_ = resolve(*dt);
        }
    }

    Term plain_literal(const std::string& lexical) const {
        const auto& lang = lang_stack_.back();
        if (!lang.empty()) {
            try {
                return Term::lang_literal(lexical, lang);
            } catch (const TermError& e) {
                fail(e.what());
            }
        }
        return Term::literal(lexical);
    }

    Term make_literal() const {
        if (!datatype_.empty()) {
            try {
                return Term::typed_literal(text_, datatype_);
            } catch (const TermError& e) {
                fail(e.what());
            }
        }
        return plain_literal(text_);
    }

    const OwlReadOptions& options_;
    std::string skolem_prefix_;
    std::string base_;
    rdf::Graph graph_;
    std::vector<std::string> lang_stack_;
    std::size_t depth_ = 0;
    std::size_t skip_depth_ = 0;
    std::size_t line_ = 1;
    bool seen_root_ = false;
    bool pending_literal_ = false;
    std::optional<Term> subject_;
    std::optional<Term> pending_predicate_;
    std::string text_;
    std::string datatype_;
};

} // namespace

rdf::Graph parse_coe_owl(std::string_view text, const OwlReadOptions& options) {
    OwlHandler handler(options, text);
    detail::parse_xml(text, handler);
    return handler.take();
}

} // namespace sesforge::io
