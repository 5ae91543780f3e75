#include "sesforge/store/registry.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sesforge::store {

namespace {

rdf::Graph difference(const rdf::Graph& a, const rdf::Graph& b) {
    rdf::Graph out;
    for (const auto& t : a) {
        if (!b.contains(t)) out.insert(t);
    }
    return out;
}

} // namespace

bool is_valid_case_id(std::string_view id) noexcept {
    if (id.empty() || id.size() > 64) return false;
    auto alnum = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    };
    if (!alnum(id.front())) return false;
    return std::all_of(id.begin(), id.end(), [&](char c) { return alnum(c) || c == '_' || c == '-'; });
}

Registry::Registry(const rdf::Namespaces& ns) : vocab_(ns), tbox_(model::seed_tbox(vocab_)) {
    union_ = tbox_;
}

void Registry::commit_checked(const rdf::Graph& prospective, const std::string& what) const {
    // Only new error findings count, so a registry loaded with pre-existing issues
    // can still grow.
    auto after = model::validate(prospective, vocab_);
    if (after.error_count() == 0) return;
    auto before = model::validate(union_, vocab_);
    std::set<std::tuple<int, std::string, std::string>> known;
    for (const auto& f : before.findings) {
        known.emplace(static_cast<int>(f.rule), f.subject.key(), f.message);
    }
    model::ValidationReport regressions;
    for (const auto& f : after.findings) {
        if (f.severity != model::FindingSeverity::Error) continue;
        if (known.contains({static_cast<int>(f.rule), f.subject.key(), f.message})) continue;
        regressions.findings.push_back(f);
    }
    if (regressions.empty()) return;
    throw RegistryError(what + " rejected: " + std::to_string(regressions.error_count()) +
                            " validation error(s)",
                        std::move(regressions));
}

void Registry::seed_framework(const model::FrameworkSeed& seed) {
    rdf::Graph scratch = union_;
    rdf::Graph fg = model::seed_framework(seed, scratch, vocab_);
    if (auto it = frameworks_.find(seed.framework_id); it != frameworks_.end()) {
        if (it->second == fg) return;
        throw RegistryError("framework '" + seed.framework_id +
                            "' is already seeded with different content");
    }
    rdf::Graph minted = difference(scratch, union_);
    scratch.merge(fg);
    commit_checked(scratch, "framework '" + seed.framework_id + "'");
    globals_.merge(minted);
    frameworks_.emplace(seed.framework_id, std::move(fg));
    union_ = std::move(scratch);
}

void Registry::add_case(const std::string& case_id, const rdf::Graph& g) {
    if (!is_valid_case_id(case_id)) throw RegistryError("invalid case id '" + case_id + "'");
    if (has_case(case_id)) throw RegistryError("case '" + case_id + "' already exists");
    rdf::Graph prospective = union_ + g;
    commit_checked(prospective, "case '" + case_id + "'");
    cases_.emplace(case_id, g);
    union_ = std::move(prospective);
}

normalize::NormalizeResult Registry::ingest_case(const std::string& case_id, const rdf::Graph& raw) {
    if (!is_valid_case_id(case_id)) throw RegistryError("invalid case id '" + case_id + "'");
    if (has_case(case_id)) throw RegistryError("case '" + case_id + "' already exists");
    rdf::Graph scratch = union_;
    auto result = normalize::normalize(raw, scratch, case_id, vocab_);
    rdf::Graph minted = difference(scratch, union_);
    scratch.merge(result.graph);
    commit_checked(scratch, "case '" + case_id + "'");
    globals_.merge(minted);
    cases_.emplace(case_id, result.graph);
    union_ = std::move(scratch);
    return result;
}

rdf::PrefixMap Registry::prefixes() const {
    auto pm = rdf::PrefixMap::with_builtins(namespaces());
    for (const auto& [id, g] : frameworks_) {
        if (rdf::is_valid_prefix(id) && !pm.contains(id)) pm.bind(id, namespaces().framework_ns(id));
    }
    for (const auto& [id, g] : cases_) {
        const std::string prefix = "case_" + id;
        if (rdf::is_valid_prefix(prefix)) pm.bind(prefix, namespaces().case_ns(id));
    }
    return pm;
}

rdf::PrefixMap Registry::case_prefixes(std::string_view case_id) const {
    auto pm = rdf::PrefixMap::with_builtins(namespaces());
    pm.bind("case", namespaces().case_ns(case_id));
    return pm;
}

rdf::PrefixMap Registry::framework_prefixes(std::string_view framework_id) const {
    auto pm = rdf::PrefixMap::with_builtins(namespaces());
    pm.bind("fw", namespaces().framework_ns(framework_id));
    return pm;
}

void Registry::assign(rdf::Graph tbox, rdf::Graph globals,
                      std::map<std::string, rdf::Graph> frameworks,
                      std::map<std::string, rdf::Graph> cases) {
    tbox_ = std::move(tbox);
    globals_ = std::move(globals);
    frameworks_ = std::move(frameworks);
    cases_ = std::move(cases);
    rebuild_union();
}

void Registry::rebuild_union() {
    union_ = tbox_;
    union_.merge(globals_);
    for (const auto& [id, g] : frameworks_) union_.merge(g);
    for (const auto& [id, g] : cases_) union_.merge(g);
}

bool operator==(const Registry& a, const Registry& b) {
    return a.tbox_ == b.tbox_ && a.globals_ == b.globals_ && a.frameworks_ == b.frameworks_ &&
           a.cases_ == b.cases_;
}

} // namespace sesforge::store
