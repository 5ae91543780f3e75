#include "sesforge/normalize/normalize.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::normalize {

using rdf::Term;
namespace vocab = rdf::vocab;

namespace {

class Normalizer {
public:
    Normalizer(const rdf::Graph& raw, rdf::Graph& registry, std::string_view case_id,
               const model::SesVocabulary& v)
        : graph_(raw), registry_(registry), v_(v),
          case_ns_(v.namespaces().case_ns(case_id)) {}

    NormalizeResult run() {
        drop_property_declarations();
        collect_nodes();
        infer_roles();
        demote_classes();
        assert_types();
        canonicalize_hierarchy();
        link_globals();
        return {std::move(graph_), std::move(report_)};
    }

private:
    void act(ActionKind kind, const Term& subject, std::optional<Term> object = std::nullopt,
             std::string note = {}) {
        report_.record(Action{kind, subject, std::move(object), std::move(note)});
    }
    void warn(const Term& subject, std::string message) {
        act(ActionKind::Warn, subject, std::nullopt, std::move(message));
    }

    bool is_external(const Term& t) const {
        if (!t.is_iri()) return true;
        const std::string& iri = t.value();
        const auto& ns = v_.namespaces();
        for (std::string_view vocab_ns :
             {vocab::kRdf, vocab::kRdfs, vocab::kOwl, vocab::kSkos, vocab::kXsd}) {
            if (iri.starts_with(vocab_ns)) return true;
        }
        if (iri.starts_with(ns.sescore) || iri.starts_with(ns.global) ||
            iri.starts_with(ns.framework_root)) {
            return true;
        }
        if (iri.starts_with(ns.case_root) && !iri.starts_with(case_ns_)) return true;
        return registry_.has_subject(t);
    }

    bool is_property_declaration(const Term& type) const {
        return type == vocab::owl_object_property() || type == vocab::owl_datatype_property() ||
               type == vocab::owl_annotation_property() || type == vocab::rdf_property();
    }

    void drop_property_declarations() {
        std::set<std::pair<Term, Term>> declared;
        for (const auto& t : graph_.match(std::nullopt, vocab::rdf_type(), std::nullopt)) {
            if (is_property_declaration(t.object())) {
                declared.emplace(t.subject(), t.object());
            }
        }
        std::set<Term> dropped;
        for (const auto& [subject, type] : declared) {
            if (!dropped.insert(subject).second) continue;
            for (const auto& t : graph_.match(subject, std::nullopt, std::nullopt)) graph_.erase(t);
            act(ActionKind::Drop, subject, type);
            warn(subject, "property declaration dropped");
        }
    }

    void collect_nodes() {
        for (const auto& t : graph_) {
            if (!is_external(t.subject())) nodes_.insert(t.subject());
            if (t.predicate() != vocab::rdf_type() && t.object().is_iri() &&
                !is_external(t.object())) {
                nodes_.insert(t.object());
            }
        }
    }

    bool is_node(const Term& t) const { return nodes_.contains(t); }

    void infer_roles() {
        for (const auto& t : graph_.match(std::nullopt, v_.described_by(), std::nullopt)) {
            if (is_node(t.subject())) studies_.insert(t.subject());
            if (is_node(t.object())) graphs_.insert(t.object());
        }
        for (const Term* cls : {&v_.study(), &v_.framework()}) {
            for (const auto& s : graph_.subjects(vocab::rdf_type(), *cls)) {
                if (is_node(s)) studies_.insert(s);
            }
        }
        for (const auto& s : graph_.subjects(vocab::rdf_type(), v_.concept_graph())) {
            if (is_node(s)) graphs_.insert(s);
        }
        if (studies_.empty() && graphs_.empty()) {
            throw NormalizeError(
                "not an SES case graph: no study (described_by subject) or concept graph found");
        }
        for (const auto& s : studies_) {
            if (graphs_.contains(s)) warn(s, "node is used both as study and as concept graph");
            const auto name = rdf::local_name(s.value());
            if (graph_.contains(s, vocab::rdf_type(), v_.framework()) || name.ends_with("Framework")) {
                frameworks_.insert(s);
            }
        }

        std::deque<Term> queue;
        auto visit = [&](const Term& t) {
            if (!is_node(t) || studies_.contains(t) || graphs_.contains(t)) return;
            if (concepts_.insert(t).second) queue.push_back(t);
        };
        for (const auto& cg : graphs_) {
            for (const auto& o : graph_.objects(cg, vocab::skos_member())) visit(o);
        }
        while (!queue.empty()) {
            const Term c = queue.front();
            queue.pop_front();
            for (const Term* p : {&vocab::skos_narrower(), &vocab::skos_member()}) {
                for (const auto& o : graph_.objects(c, *p)) visit(o);
            }
        }

        for (const auto& n : nodes_) {
            if (studies_.contains(n) || graphs_.contains(n) || concepts_.contains(n)) continue;
            concepts_.insert(n);
            warn(n, "node is not reachable from the study template; typed LocalConcept");
        }
    }

    void demote_classes() {
        for (const auto* role : {&studies_, &graphs_, &concepts_}) {
            for (const auto& n : *role) {
                if (graph_.erase(rdf::Triple(n, vocab::rdf_type(), vocab::owl_class()))) {
                    act(ActionKind::Demote, n, vocab::owl_class());
                }
            }
        }
    }

    void type_node(const Term& n, const Term& cls) {
        if (graph_.insert(n, vocab::rdf_type(), cls)) act(ActionKind::Type, n, cls);
    }

    void assert_types() {
        for (const auto& s : studies_) {
            type_node(s, v_.study());
            if (frameworks_.contains(s)) type_node(s, v_.framework());
        }
        for (const auto& g : graphs_) type_node(g, v_.concept_graph());
        for (const auto& c : concepts_) type_node(c, v_.local_concept());
    }

    bool registry_local(const Term& t) const {
        return registry_.contains(t, vocab::rdf_type(), v_.local_concept());
    }

    // Inverse for  a <pred> b  where `pred` is narrower (forward) or broader.
    void add_inverse(const Term& a, const Term& b, bool forward_is_narrower) {
        const Term& inverse = forward_is_narrower ? vocab::skos_broader() : vocab::skos_narrower();
        if (graph_.contains(b, inverse, a)) return;

        const Term& child = forward_is_narrower ? b : a;
        const Term& parent = forward_is_narrower ? a : b;
        if (concepts_.contains(child) && !is_node(parent)) {
            if (registry_local(parent)) {
                graph_.insert(child, vocab::skos_broader(), parent);
                graph_.insert(parent, vocab::skos_narrower(), child);
                act(ActionKind::Context, child, parent);
                return;
            }
            warn(parent, "hierarchy edge to an unresolved external resource");
        }
        graph_.insert(b, inverse, a);
        act(forward_is_narrower ? ActionKind::AddBroader : ActionKind::AddNarrower, b, a);
    }

    void canonicalize_hierarchy() {
        for (const auto& t : graph_.match(std::nullopt, vocab::skos_member(), std::nullopt)) {
            if (concepts_.contains(t.subject()) && concepts_.contains(t.object())) {
                graph_.erase(t);
                graph_.insert(t.subject(), vocab::skos_narrower(), t.object());
                act(ActionKind::Rewrite, t.subject(), t.object());
            }
        }
        for (const auto& t : graph_.match(std::nullopt, vocab::skos_narrower(), std::nullopt)) {
            if (t.object().is_iri()) add_inverse(t.subject(), t.object(), true);
        }
        for (const auto& t : graph_.match(std::nullopt, vocab::skos_broader(), std::nullopt)) {
            if (t.object().is_iri()) add_inverse(t.subject(), t.object(), false);
        }
    }

    // Same lookup as model::find_global, indexed once per run instead of per concept.
    Term global_for(const std::string& base) {
        if (!globals_by_base_) {
            globals_by_base_.emplace();
            for (const auto& g : registry_.subjects(vocab::rdf_type(), v_.global_concept())) {
                if (!g.is_iri()) continue;
                const std::string name(rdf::local_name(g.value()));
                // The canonical IRI wins over same-named globals elsewhere.
                if (g == model::global_iri(v_, name) || !globals_by_base_->contains(name)) {
                    globals_by_base_->insert_or_assign(name, g);
                }
            }
        }
        if (auto it = globals_by_base_->find(base); it != globals_by_base_->end()) return it->second;
        const Term g = model::mint_global(registry_, v_, base);
        act(ActionKind::Mint, g, std::nullopt, model::global_label(base));
        globals_by_base_->emplace(base, g);
        return g;
    }

    void link_globals() {
        for (const auto& c : concepts_) {
            if (!graph_.objects(c, v_.refers_to()).empty()) continue;
            const NameSplit split = split_name(rdf::local_name(c.value()));
            if (split.base.empty()) {
                throw NormalizeError("cannot derive a global concept name from " + c.key());
            }
            const Term global = global_for(split.base);
            graph_.insert(c, v_.refers_to(), global);
            act(ActionKind::Link, c, global);
        }
    }

    rdf::Graph graph_;
    rdf::Graph& registry_;
    const model::SesVocabulary& v_;
    std::string case_ns_;
    NormalizationReport report_;

    std::set<Term> nodes_;
    std::set<Term> studies_;
    std::set<Term> frameworks_;
    std::set<Term> graphs_;
    std::set<Term> concepts_;
    std::optional<std::map<std::string, Term>> globals_by_base_;
};

} // namespace

NormalizeResult normalize(const rdf::Graph& raw, rdf::Graph& registry, std::string_view case_id,
                          const model::SesVocabulary& vocab) {
    return Normalizer(raw, registry, case_id, vocab).run();
}

std::size_t contextualize_link(const Term& case_local, const Term& framework_local, rdf::Graph& g,
                               const model::SesVocabulary& v) {
    if (case_local == framework_local) {
        throw NormalizeError("cannot contextualize " + case_local.key() + " to itself");
    }
    for (const Term* t : {&case_local, &framework_local}) {
        if (!g.contains(*t, vocab::rdf_type(), v.local_concept())) {
            throw NormalizeError(t->key() + " is not typed LocalConcept");
        }
    }
    std::size_t added = 0;
    added += g.insert(case_local, vocab::skos_broader(), framework_local) ? 1 : 0;
    added += g.insert(framework_local, vocab::skos_narrower(), case_local) ? 1 : 0;
    return added;
}

} // namespace sesforge::normalize
