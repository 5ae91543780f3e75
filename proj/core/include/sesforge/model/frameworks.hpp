#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sesforge/model/vocabulary.hpp"
#include "sesforge/rdf/graph.hpp"

namespace sesforge::model {

struct TierEntry {
    std::string code;   // "RS", "RS1"
    std::string label;  // as printed, e.g. "Sector (e.g., water, forests, pasture, fish)"
    std::optional<std::string> parent_code;

    friend bool operator==(const TierEntry&, const TierEntry&) = default;
};

struct FrameworkSeed {
    std::string framework_id;
    std::vector<TierEntry> tiers;

    std::vector<const TierEntry*> first_tier() const;
    std::vector<const TierEntry*> children_of(std::string_view code) const;

    friend bool operator==(const FrameworkSeed&, const FrameworkSeed&) = default;
};

// Ostrom2007, Ostrom2009, McGinnisOstrom2014.
const std::vector<std::string>& builtin_framework_ids();
// Throws Error for an unknown id.
const FrameworkSeed& builtin_framework(std::string_view framework_id);

// Lines of `code | label | parent` ('#' comments, empty parent for first tier).
// Throws ParseError with line numbers; checks unique codes and resolvable parents.
FrameworkSeed parse_framework_table(std::string_view framework_id, std::string_view text);
std::string format_framework_table(const FrameworkSeed& seed);

// Words of the label joined in CamelCase with any "(...)" and '*' removed:
// "Resource systems" -> "ResourceSystems".
std::string camel_slug(std::string_view label);

// Local names: "<Slug>_<id>" for first tier, "<Code>_<Slug>_<id>" for second tier.
std::string tier_local_name(const FrameworkSeed& seed, const TierEntry& entry);
// Base names of the corresponding global concepts (the local name without "_<id>").
std::string tier_global_base(const TierEntry& entry);

// Framework graph: the framework node (typed Framework and Study) described_by its
// ConceptGraph; one LocalConcept per tier entry; members from the ConceptGraph to
// the first tier; narrower/broader between tiers; refers_to to globals, which are
// minted into `registry` when absent.
rdf::Graph seed_framework(const FrameworkSeed& seed, rdf::Graph& registry,
                          const SesVocabulary& vocab);
rdf::Graph seed_framework(std::string_view framework_id, rdf::Graph& registry,
                          const SesVocabulary& vocab);

} // namespace sesforge::model
