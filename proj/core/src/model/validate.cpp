#include "sesforge/model/validate.hpp"

#include <algorithm>
#include <set>

#include "sesforge/rdf/vocab.hpp"

namespace sesforge::model {

using rdf::Term;
namespace vocab = rdf::vocab;

std::string_view rule_code(Rule r) noexcept {
    switch (r) {
        case Rule::V1: return "V1";
        case Rule::V2: return "V2";
        case Rule::V3: return "V3";
        case Rule::V4: return "V4";
        case Rule::V5: return "V5";
        case Rule::V6: return "V6";
        case Rule::V7: return "V7";
    }
    return "V?";
}

std::string_view rule_summary(Rule r) noexcept {
    switch (r) {
        case Rule::V1: return "local concept must refer to exactly one global concept";
        case Rule::V2: return "refers_to target must be a GlobalConcept";
        case Rule::V3: return "concept graph must have at least one member";
        case Rule::V4: return "study must be described by a concept graph";
        case Rule::V5: return "skos:narrower and skos:broader must be mutual inverses";
        case Rule::V6: return "only T-Box classes may be declared owl:Class";
        case Rule::V7: return "resources in sescore/skos statements must be typed";
    }
    return "";
}

std::size_t ValidationReport::error_count() const {
    return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == FindingSeverity::Error;
    }));
}

std::size_t ValidationReport::warning_count() const { return findings.size() - error_count(); }

std::size_t ValidationReport::count(Rule r) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [r](const Finding& f) { return f.rule == r; }));
}

std::string ValidationReport::to_text(const rdf::PrefixMap& pm) const {
    std::string out;
    for (const auto& f : findings) {
        out += std::string(rule_code(f.rule)) + "\t" +
               (f.severity == FindingSeverity::Error ? "error" : "warning") + "\t" +
               pm.compact(f.subject.value()) + "\t" + f.message + "\n";
    }
    out += std::to_string(findings.size()) + (findings.size() == 1 ? " finding\n" : " findings\n");
    return out;
}

ValidationReport validate(const rdf::Graph& g, const SesVocabulary& v) {
    ValidationReport report;
    auto add = [&](Rule r, FindingSeverity s, const Term& subject, std::string message) {
        report.findings.push_back({r, s, subject, std::move(message)});
    };
    auto typed_as = [&](const Term& t, const Term& cls) {
        return t.is_iri() && g.contains(t, vocab::rdf_type(), cls);
    };

    // V1
    for (const auto& local : g.subjects(vocab::rdf_type(), v.local_concept())) {
        const auto targets = g.objects(local, v.refers_to());
        if (targets.empty()) {
            add(Rule::V1, FindingSeverity::Error, local, "local concept has no refers_to");
        } else if (targets.size() > 1) {
            add(Rule::V1, FindingSeverity::Warning, local,
                "local concept refers to " + std::to_string(targets.size()) + " global concepts");
        }
    }

    // V2
    for (const auto& t : g.match(std::nullopt, v.refers_to(), std::nullopt)) {
        if (!typed_as(t.object(), v.global_concept())) {
            add(Rule::V2, FindingSeverity::Error, t.subject(),
                "refers_to target " + t.object().key() + " is not a GlobalConcept");
        }
    }

    // V3
    for (const auto& cg : g.subjects(vocab::rdf_type(), v.concept_graph())) {
        if (g.objects(cg, vocab::skos_member()).empty()) {
            add(Rule::V3, FindingSeverity::Error, cg, "concept graph has no skos:member");
        }
    }

    // V4
    for (const auto& study : g.subjects(vocab::rdf_type(), v.study())) {
        const auto described = g.objects(study, v.described_by());
        const bool ok = std::any_of(described.begin(), described.end(), [&](const Term& o) {
            return typed_as(o, v.concept_graph());
        });
        if (!ok) {
            add(Rule::V4, FindingSeverity::Error, study,
                described.empty() ? "study has no described_by"
                                  : "no described_by target is a ConceptGraph");
        }
    }

    // V5
    for (const auto& t : g.match(std::nullopt, vocab::skos_narrower(), std::nullopt)) {
        if (!t.object().is_iri() || !g.contains(t.object(), vocab::skos_broader(), t.subject())) {
            add(Rule::V5, FindingSeverity::Error, t.subject(),
                "skos:narrower " + t.object().key() + " has no skos:broader inverse");
        }
    }
    for (const auto& t : g.match(std::nullopt, vocab::skos_broader(), std::nullopt)) {
        if (!t.object().is_iri() || !g.contains(t.object(), vocab::skos_narrower(), t.subject())) {
            add(Rule::V5, FindingSeverity::Error, t.subject(),
                "skos:broader " + t.object().key() + " has no skos:narrower inverse");
        }
    }

    // V6
    for (const auto& cls : g.subjects(vocab::rdf_type(), vocab::owl_class())) {
        if (!v.is_tbox_class(cls)) {
            add(Rule::V6, FindingSeverity::Error, cls, "declared owl:Class outside the T-Box");
        }
    }

    // V7
    std::set<Term> untyped;
    auto check_typed = [&](const Term& t) {
        if (t.is_iri() && g.match(t, vocab::rdf_type(), std::nullopt).empty()) untyped.insert(t);
    };
    for (const auto& t : g) {
        const auto& p = t.predicate();
        if (v.in_sescore(p) || p.value().starts_with(vocab::kSkos)) {
            check_typed(t.subject());
            check_typed(t.object());
        }
    }
    for (const auto& t : untyped) {
        add(Rule::V7, FindingSeverity::Error, t, "resource has no rdf:type");
    }

    std::sort(report.findings.begin(), report.findings.end(), [](const Finding& a, const Finding& b) {
        if (a.rule != b.rule) return a.rule < b.rule;
        if (a.subject != b.subject) return a.subject < b.subject;
        return a.message < b.message;
    });
    return report;
}

} // namespace sesforge::model
