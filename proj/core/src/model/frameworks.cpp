#include "sesforge/model/frameworks.hpp"

#include <map>
#include <set>

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::model {

using rdf::Term;
namespace vocab = rdf::vocab;

namespace {

FrameworkSeed make_seed(std::string id, std::initializer_list<TierEntry> entries) {
    return FrameworkSeed{std::move(id), std::vector<TierEntry>(entries)};
}

TierEntry top(std::string code, std::string label) {
    return {std::move(code), std::move(label), std::nullopt};
}

TierEntry sub(std::string code, std::string label, std::string parent) {
    return {std::move(code), std::move(label), std::move(parent)};
}

// Only the part of the 2007 framework used by the concept-map template example.
const FrameworkSeed& ostrom2007() {
    static const FrameworkSeed seed = make_seed(
        "Ostrom2007", {
                          top("RS", "Resource System"),
                          top("GS", "Governance System"),
                          top("U", "User"),
                          sub("RS1", "Sector", "RS"),
                          sub("RS9", "Location", "RS"),
                      });
    return seed;
}

// Labels as printed, including the '*' markers and the truncated GS8 label.
const FrameworkSeed& ostrom2009() {
    static const FrameworkSeed seed = make_seed(
        "Ostrom2009",
        {
            top("RS", "Resource systems"),
            top("RU", "Resource units"),
            top("GS", "Governance systems"),
            top("U", "Users"),
            sub("RS1", "Sector (e.g., water, forests, pasture, fish)", "RS"),
            sub("RS2", "Clarity of system boundaries", "RS"),
            sub("RS3", "Size of resource system*", "RS"),
            sub("RS4", "Human-constructed facilities", "RS"),
            sub("RS5", "Productivity of system*", "RS"),
            sub("RS6", "Equilibrium properties", "RS"),
            sub("RS7", "Predictability of system dynamics*", "RS"),
            sub("RS8", "Storage characteristics", "RS"),
            sub("RS9", "Location", "RS"),
            sub("RU1", "Resource unit mobility*", "RU"),
            sub("RU2", "Growth or replacement rate", "RU"),
            sub("RU3", "Interaction among resource units", "RU"),
            sub("RU4", "Economic value", "RU"),
            sub("RU5", "Number of units", "RU"),
            sub("RU6", "Distinctive markings", "RU"),
            sub("RU7", "Spatial and temporal distribution", "RU"),
            sub("GS1", "Government organizations", "GS"),
            sub("GS2", "Nongovernment organizations", "GS"),
            sub("GS3", "Network structure", "GS"),
            sub("GS4", "Property-rights systems", "GS"),
            sub("GS5", "Operational rules", "GS"),
            sub("GS6", "Collective-choice rules*", "GS"),
            sub("GS7", "Constitutional rules", "GS"),
            sub("GS8", "Monitoring and sanctioning pro", "GS"),
            sub("U1", "Number of users*", "U"),
            sub("U2", "Socioeconomic attributes of user", "U"),
            sub("U3", "History of use", "U"),
            sub("U4", "Location", "U"),
            sub("U5", "Leadership/entrepreneurship*", "U"),
            sub("U6", "Norms/social capital*", "U"),
            sub("U7", "Knowledge of SES/mental model", "U"),
            sub("U8", "Importance of resource*", "U"),
        });
    return seed;
}

// The printed table stops after RU4 and has no Actors second tier.
const FrameworkSeed& mcginnis_ostrom2014() {
    static const FrameworkSeed seed = make_seed(
        "McGinnisOstrom2014",
        {
            top("S", "Social, economic, and political settings"),
            top("RS", "Resource systems"),
            top("GS", "Governance systems"),
            top("RU", "Resource units"),
            sub("S1", "Economic development", "S"),
            sub("S2", "Demographic trends", "S"),
            sub("S3", "Political stability", "S"),
            sub("S4", "Other governance systems", "S"),
            sub("S5", "Markets", "S"),
            sub("S6", "Media organizations", "S"),
            sub("S7", "Technology", "S"),
            sub("RS1", "Sector (e.g., water, forests, pasture, fish)", "RS"),
            sub("RS2", "Clarity of system boundaries", "RS"),
            sub("RS3", "Size of resource system", "RS"),
            sub("RS4", "Human-constructed facilities", "RS"),
            sub("RS5", "Productivity of system", "RS"),
            sub("RS6", "Equilibrium properties", "RS"),
            sub("RS7", "Predictability of system dynamics", "RS"),
            sub("RS8", "Storage characteristics", "RS"),
            sub("RS9", "Location", "RS"),
            sub("GS1", "Government organizations", "GS"),
            sub("GS2", "Nongovernment organizations", "GS"),
            sub("GS3", "Network structure", "GS"),
            sub("GS4", "Property-rights systems", "GS"),
            sub("GS5", "Operational-choice rules", "GS"),
            sub("GS6", "Collective-choice rules", "GS"),
            sub("GS7", "Constitutional-choice rules", "GS"),
            sub("GS8", "Monitoring and sanctioning rules", "GS"),
            sub("RU1", "Resource unit mobility", "RU"),
            sub("RU2", "Growth or replacement rate", "RU"),
            sub("RU3", "Interaction among resource units", "RU"),
            sub("RU4", "Economic value", "RU"),
        });
    return seed;
}

bool is_alnum(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Label shown in rdfs:label: trailing '*' markers dropped.
std::string display_label(std::string_view label) {
    while (!label.empty() && (label.back() == '*' || label.back() == ' ')) label.remove_suffix(1);
    return std::string(label);
}

void check_seed(const FrameworkSeed& seed) {
    std::set<std::string> codes;
    for (const auto& e : seed.tiers) {
        if (e.code.empty()) throw Error(seed.framework_id + ": empty tier code");
        if (!codes.insert(e.code).second) {
            throw Error(seed.framework_id + ": duplicate tier code '" + e.code + "'");
        }
    }
    for (const auto& e : seed.tiers) {
        if (e.parent_code && !codes.contains(*e.parent_code)) {
            throw Error(seed.framework_id + ": parent '" + *e.parent_code + "' of '" + e.code +
                        "' is not defined");
        }
    }
}

} // namespace

std::vector<const TierEntry*> FrameworkSeed::first_tier() const {
    std::vector<const TierEntry*> out;
    for (const auto& e : tiers) {
        if (!e.parent_code) out.push_back(&e);
    }
    return out;
}

std::vector<const TierEntry*> FrameworkSeed::children_of(std::string_view code) const {
    std::vector<const TierEntry*> out;
    for (const auto& e : tiers) {
        if (e.parent_code && *e.parent_code == code) out.push_back(&e);
    }
    return out;
}

const std::vector<std::string>& builtin_framework_ids() {
    static const std::vector<std::string> ids = {"Ostrom2007", "Ostrom2009", "McGinnisOstrom2014"};
    return ids;
}

const FrameworkSeed& builtin_framework(std::string_view framework_id) {
    if (framework_id == "Ostrom2007") return ostrom2007();
    if (framework_id == "Ostrom2009") return ostrom2009();
    if (framework_id == "McGinnisOstrom2014") return mcginnis_ostrom2014();
    throw Error("unknown framework '" + std::string(framework_id) + "'");
}

FrameworkSeed parse_framework_table(std::string_view framework_id, std::string_view text) {
    FrameworkSeed seed{std::string(framework_id), {}};
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto bar1 = line.find('|');
        const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
        if (bar2 == std::string_view::npos || line.find('|', bar2 + 1) != std::string_view::npos) {
            throw ParseError("expected 'code | label | parent'", line_no);
        }
        TierEntry e;
        e.code = std::string(trim(line.substr(0, bar1)));
        e.label = std::string(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
        const auto parent = trim(line.substr(bar2 + 1));
        if (!parent.empty()) e.parent_code = std::string(parent);
        if (e.code.empty() || e.label.empty()) {
            throw ParseError("tier code and label must be non-empty", line_no);
        }
        seed.tiers.push_back(std::move(e));
    }
    try {
        check_seed(seed);
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
    return seed;
}

std::string format_framework_table(const FrameworkSeed& seed) {
    std::string out = "# " + seed.framework_id + "\n# code | label | parent\n";
    for (const auto& e : seed.tiers) {
        out += e.code + " | " + e.label + " |";
        if (e.parent_code) out += " " + *e.parent_code;
        out += "\n";
    }
    return out;
}

std::string camel_slug(std::string_view label) {
    std::string out;
    bool word_start = true;
    int paren = 0;
    for (char c : label) {
        if (c == '(') {
            ++paren;
            continue;
        }
        if (c == ')') {
            if (paren > 0) --paren;
            word_start = true;
            continue;
        }
        if (paren > 0) continue;
        if (!is_alnum(c)) {
            word_start = true;
            continue;
        }
        if (word_start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        out += c;
        word_start = false;
    }
    return out;
}

std::string tier_global_base(const TierEntry& entry) {
    const std::string slug = camel_slug(entry.label);
    return entry.parent_code ? entry.code + "_" + slug : slug;
}

std::string tier_local_name(const FrameworkSeed& seed, const TierEntry& entry) {
    return tier_global_base(entry) + "_" + seed.framework_id;
}

rdf::Graph seed_framework(const FrameworkSeed& seed, rdf::Graph& registry,
                          const SesVocabulary& v) {
    check_seed(seed);
    const std::string ns = v.namespaces().framework_ns(seed.framework_id);
    const Term framework = Term::iri(ns + seed.framework_id + "_SESFramework");
    const Term graph = Term::iri(ns + "ConceptGraph_" + seed.framework_id);

    rdf::Graph g;
    g.insert(framework, vocab::rdf_type(), v.framework());
    g.insert(framework, vocab::rdf_type(), v.study());
    g.insert(framework, vocab::rdfs_label(), Term::literal(seed.framework_id + " SES framework"));
    g.insert(framework, v.described_by(), graph);
    g.insert(graph, vocab::rdf_type(), v.concept_graph());
    g.insert(graph, vocab::rdfs_label(), Term::literal("Concept graph of " + seed.framework_id));

    std::map<std::string, Term> local_by_code;
    for (const auto& e : seed.tiers) {
        const Term local = Term::iri(ns + tier_local_name(seed, e));
        g.insert(local, vocab::rdf_type(), v.local_concept());
        g.insert(local, vocab::rdfs_label(), Term::literal(display_label(e.label)));
        g.insert(local, v.refers_to(), ensure_global(registry, v, tier_global_base(e)));
        local_by_code.emplace(e.code, local);
    }
    for (const auto& e : seed.tiers) {
        const Term& local = local_by_code.at(e.code);
        if (!e.parent_code) {
            g.insert(graph, vocab::skos_member(), local);
            continue;
        }
        const Term& parent = local_by_code.at(*e.parent_code);
        g.insert(parent, vocab::skos_narrower(), local);
        g.insert(local, vocab::skos_broader(), parent);
    }
    return g;
}

rdf::Graph seed_framework(std::string_view framework_id, rdf::Graph& registry,
                          const SesVocabulary& v) {
    return seed_framework(builtin_framework(framework_id), registry, v);
}

} // namespace sesforge::model
