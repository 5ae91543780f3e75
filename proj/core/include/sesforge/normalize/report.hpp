#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sesforge/model/vocabulary.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/prefix_map.hpp"

namespace sesforge::normalize {

enum class ActionKind {
    Demote,       // remove  s rdf:type owl:Class
    Drop,         // remove every triple with subject s (property declarations)
    Type,         // add     s rdf:type o
    Rewrite,      // replace s skos:member o  with  s skos:narrower o
    AddBroader,   // add     s skos:broader o
    AddNarrower,  // add     s skos:narrower o
    Context,      // add     s skos:broader o  and  o skos:narrower s
    Mint,         // registry gains global s (object: its label)
    Link,         // add     s sescore:refers_to o
    Warn,         // note about s (object: message)
};

std::string_view action_name(ActionKind k) noexcept;
std::optional<ActionKind> parse_action_name(std::string_view name) noexcept;

struct Action {
    ActionKind kind;
    rdf::Term subject;
    std::optional<rdf::Term> object;  // IRI for graph actions
    std::string note;                 // label for Mint, message for Warn

    friend bool operator==(const Action&, const Action&) = default;
};

// Audit of one normalization run. `actions` is the ordered log; the other members
// are views over it.
struct NormalizationReport {
    std::vector<Action> actions;
    std::vector<rdf::Term> demotions;
    std::vector<std::pair<rdf::Term, rdf::Term>> typed;
    std::vector<rdf::Term> minted_globals;
    std::vector<std::pair<rdf::Term, rdf::Term>> linked;
    std::size_t hierarchy_fixed = 0;
    std::vector<std::string> warnings;

    void record(Action a);

    // No demotions, typings or mintings.
    bool is_fixpoint() const noexcept {
        return demotions.empty() && typed.empty() && minted_globals.empty();
    }

    // Summary counts followed by one compacted line per action.
    std::string to_text(const rdf::PrefixMap& pm) const;
    // One `ACTION<TAB>subject<TAB>object` line per action, full IRIs.
    std::string to_tsv() const;
    // Inverse of to_tsv(). Throws ParseError.
    static NormalizationReport from_tsv(std::string_view text);
};

// Applies the graph-affecting actions of `report` to `raw`.
rdf::Graph replay(const rdf::Graph& raw, const NormalizationReport& report,
                  const model::SesVocabulary& vocab);

} // namespace sesforge::normalize
