#include "sesforge/normalize/report.hpp"

#include <array>

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::normalize {

using rdf::Term;
namespace vocab = rdf::vocab;

namespace {

constexpr std::array<std::pair<ActionKind, std::string_view>, 10> kNames = {{
    {ActionKind::Demote, "DEMOTE"},
    {ActionKind::Drop, "DROP"},
    {ActionKind::Type, "TYPE"},
    {ActionKind::Rewrite, "REWRITE"},
    {ActionKind::AddBroader, "BROADER"},
    {ActionKind::AddNarrower, "NARROWER"},
    {ActionKind::Context, "CONTEXT"},
    {ActionKind::Mint, "MINT"},
    {ActionKind::Link, "LINK"},
    {ActionKind::Warn, "WARN"},
}};

bool has_note(ActionKind k) { return k == ActionKind::Mint || k == ActionKind::Warn; }

std::string sanitize(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

} // namespace

std::string_view action_name(ActionKind k) noexcept {
    for (const auto& [kind, name] : kNames) {
        if (kind == k) return name;
    }
    return "?";
}

std::optional<ActionKind> parse_action_name(std::string_view name) noexcept {
    for (const auto& [kind, n] : kNames) {
        if (n == name) return kind;
    }
    return std::nullopt;
}

void NormalizationReport::record(Action a) {
    switch (a.kind) {
        case ActionKind::Demote: demotions.push_back(a.subject); break;
        case ActionKind::Type: typed.emplace_back(a.subject, *a.object); break;
        case ActionKind::Mint: minted_globals.push_back(a.subject); break;
        case ActionKind::Link: linked.emplace_back(a.subject, *a.object); break;
        case ActionKind::AddBroader:
        case ActionKind::AddNarrower:
        case ActionKind::Context: ++hierarchy_fixed; break;
        case ActionKind::Warn: warnings.push_back(a.note); break;
        case ActionKind::Drop:
        case ActionKind::Rewrite: break;
    }
    actions.push_back(std::move(a));
}

std::string NormalizationReport::to_text(const rdf::PrefixMap& pm) const {
    std::string out;
    out += "demotions: " + std::to_string(demotions.size()) + "\n";
    out += "typed: " + std::to_string(typed.size()) + "\n";
    out += "minted globals: " + std::to_string(minted_globals.size()) + "\n";
    out += "linked: " + std::to_string(linked.size()) + "\n";
    out += "hierarchy fixed: " + std::to_string(hierarchy_fixed) + "\n";
    out += "warnings: " + std::to_string(warnings.size()) + "\n";
    for (const auto& a : actions) {
        out += std::string(action_name(a.kind)) + " " + pm.compact(a.subject.value());
        if (a.object) out += " " + pm.compact(a.object->value());
        if (!a.note.empty()) out += " \"" + sanitize(a.note) + "\"";
        out += "\n";
    }
    return out;
}

std::string NormalizationReport::to_tsv() const {
    std::string out;
    for (const auto& a : actions) {
        out += std::string(action_name(a.kind)) + "\t" + a.subject.value() + "\t" +
               (has_note(a.kind) ? sanitize(a.note) : a.object ? a.object->value() : std::string()) +
               "\n";
    }
    return out;
}

NormalizationReport NormalizationReport::from_tsv(std::string_view text) {
    NormalizationReport report;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty()) continue;

        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos) throw ParseError("expected three tab-separated fields", line_no);
        const auto kind = parse_action_name(line.substr(0, t1));
        if (!kind) throw ParseError("unknown action '" + std::string(line.substr(0, t1)) + "'", line_no);
        try {
            Action a{*kind, Term::iri(std::string(line.substr(t1 + 1, t2 - t1 - 1))), std::nullopt, {}};
            const auto rest = line.substr(t2 + 1);
            if (has_note(*kind)) {
                a.note = std::string(rest);
            } else if (!rest.empty()) {
                a.object = Term::iri(std::string(rest));
            }
            if (!has_note(*kind) && *kind != ActionKind::Drop && *kind != ActionKind::Demote &&
                !a.object) {
                throw ParseError("action needs an object", line_no);
            }
            report.record(std::move(a));
        } catch (const TermError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return report;
}

rdf::Graph replay(const rdf::Graph& raw, const NormalizationReport& report,
                  const model::SesVocabulary& v) {
    rdf::Graph g = raw;
    for (const auto& a : report.actions) {
        switch (a.kind) {
            case ActionKind::Demote:
                g.erase(rdf::Triple(a.subject, vocab::rdf_type(), vocab::owl_class()));
                break;
            case ActionKind::Drop:
                for (const auto& t : g.match(a.subject, std::nullopt, std::nullopt)) g.erase(t);
                break;
            case ActionKind::Type:
                g.insert(a.subject, vocab::rdf_type(), *a.object);
                break;
            case ActionKind::Rewrite:
                g.erase(rdf::Triple(a.subject, vocab::skos_member(), *a.object));
                g.insert(a.subject, vocab::skos_narrower(), *a.object);
                break;
            case ActionKind::AddBroader:
                g.insert(a.subject, vocab::skos_broader(), *a.object);
                break;
            case ActionKind::AddNarrower:
                g.insert(a.subject, vocab::skos_narrower(), *a.object);
                break;
            case ActionKind::Context:
                g.insert(a.subject, vocab::skos_broader(), *a.object);
                g.insert(*a.object, vocab::skos_narrower(), a.subject);
                break;
            case ActionKind::Link:
                g.insert(a.subject, v.refers_to(), *a.object);
                break;
            case ActionKind::Mint:
            case ActionKind::Warn:
                break;
        }
    }
    return g;
}

} // namespace sesforge::normalize
