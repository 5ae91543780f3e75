#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "sesforge/error.hpp"
#include "sesforge/model/frameworks.hpp"
#include "sesforge/model/validate.hpp"
#include "sesforge/model/vocabulary.hpp"
#include "sesforge/normalize/normalize.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/prefix_map.hpp"

namespace sesforge::store {

// Rejected registry mutation. findings() holds the validation report when the
// rejection came from a conformance check.
class RegistryError : public Error {
public:
    explicit RegistryError(const std::string& message, model::ValidationReport findings = {})
        : Error(message), findings_(std::move(findings)) {}

    const model::ValidationReport& findings() const noexcept { return findings_; }

private:
    model::ValidationReport findings_;
};

// [A-Za-z0-9][A-Za-z0-9_-]{0,63}
bool is_valid_case_id(std::string_view id) noexcept;

// Case registry: T-Box, seeded frameworks, cases and the shared global concepts.
//
// Every mutation validates the prospective union and commits all-or-nothing.
// Readers may run concurrently; mutation needs exclusive access.
class Registry {
public:
    explicit Registry(const rdf::Namespaces& ns = {});

    const model::SesVocabulary& vocabulary() const noexcept { return vocab_; }
    const rdf::Namespaces& namespaces() const noexcept { return vocab_.namespaces(); }

    const rdf::Graph& tbox() const noexcept { return tbox_; }
    const rdf::Graph& globals() const noexcept { return globals_; }
    const std::map<std::string, rdf::Graph>& frameworks() const noexcept { return frameworks_; }
    const std::map<std::string, rdf::Graph>& cases() const noexcept { return cases_; }
    // T-Box, globals, frameworks and cases merged.
    const rdf::Graph& union_graph() const noexcept { return union_; }

    bool has_case(std::string_view id) const { return cases_.contains(std::string(id)); }

    // Seeds (or re-seeds, which is a no-op for unchanged tables) a framework.
    void seed_framework(const model::FrameworkSeed& seed);

    // Stores an already-normalized case graph. Throws RegistryError on an invalid or
    // duplicate id, or when the union would carry error findings.
    void add_case(const std::string& case_id, const rdf::Graph& g);

    // Normalizes `raw` against the registry and stores it, atomically.
    normalize::NormalizeResult ingest_case(const std::string& case_id, const rdf::Graph& raw);

    // Built-in prefixes plus one per framework (its id) and per case ("case_<id>").
    rdf::PrefixMap prefixes() const;
    // Prefixes written into a stored case file.
    rdf::PrefixMap case_prefixes(std::string_view case_id) const;
    rdf::PrefixMap framework_prefixes(std::string_view framework_id) const;

    // Replaces the partitions wholesale (used by load()); recomputes the union.
    void assign(rdf::Graph tbox, rdf::Graph globals, std::map<std::string, rdf::Graph> frameworks,
                std::map<std::string, rdf::Graph> cases);

    friend bool operator==(const Registry& a, const Registry& b);

private:
    void rebuild_union();
    void commit_checked(const rdf::Graph& prospective_union, const std::string& what) const;

    model::SesVocabulary vocab_;
    rdf::Graph tbox_;
    rdf::Graph globals_;
    std::map<std::string, rdf::Graph> frameworks_;
    std::map<std::string, rdf::Graph> cases_;
    rdf::Graph union_;
};

// Registry directory: tbox.ttl, globals.ttl, frameworks/<id>.ttl, cases/<id>.ttl and
// manifest.txt (`id<TAB>sha256-hex`). Every file is written to a temporary name
// and renamed into place; the manifest is written last.
void save(const Registry& reg, const std::filesystem::path& dir);

// Missing or empty directory: empty registry with a fresh T-Box. Throws
// RegistryError naming the offending file (and line for syntax errors); never returns a partial
// registry.
Registry load(const std::filesystem::path& dir, const rdf::Namespaces& ns = {});

// Manifest text for the registry as save() would write it.
std::string manifest(const Registry& reg);

std::string sha256_hex(std::string_view data);

} // namespace sesforge::store
