#include "sesforge/rdf/prefix_map.hpp"

#include "sesforge/error.hpp"
#include "sesforge/rdf/vocab.hpp"

namespace sesforge::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.'; }

} // namespace

bool is_valid_prefix(std::string_view prefix) noexcept {
    if (prefix.empty()) return true;  // the default ":" prefix
    if (!is_alpha(prefix.front()) || prefix.back() == '.') return false;
    for (char c : prefix) {
        if (!is_name_char(c)) return false;
    }
    return true;
}

bool is_valid_local(std::string_view local) noexcept {
    if (local.empty()) return true;
    if (local.front() == '.' || local.front() == '-' || local.back() == '.') return false;
    for (char c : local) {
        if (!is_name_char(c)) return false;
    }
    return true;
}

PrefixMap PrefixMap::with_builtins(const Namespaces& ns) {
    PrefixMap pm;
    pm.bind("sescore", ns.sescore);
    pm.bind("global", ns.global);
    pm.bind("skos", std::string(vocab::kSkos));
    pm.bind("rdf", std::string(vocab::kRdf));
    pm.bind("rdfs", std::string(vocab::kRdfs));
    pm.bind("owl", std::string(vocab::kOwl));
    pm.bind("xsd", std::string(vocab::kXsd));
    return pm;
}

void PrefixMap::bind(std::string prefix, std::string ns) {
    if (!is_valid_prefix(prefix)) {
        throw TermError("invalid prefix name '" + prefix + "'");
    }
    if (!is_absolute_iri(ns)) {
        throw TermError("namespace for prefix '" + prefix + "' is not an absolute IRI: " + ns);
    }
    map_.insert_or_assign(std::move(prefix), std::move(ns));
}

bool PrefixMap::contains(std::string_view prefix) const {
    return map_.find(prefix) != map_.end();
}

std::optional<std::string> PrefixMap::namespace_of(std::string_view prefix) const {
    auto it = map_.find(prefix);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

Term PrefixMap::expand(std::string_view curie) const {
    const auto colon = curie.find(':');
    if (colon == std::string_view::npos) {
        throw TermError("not a curie: '" + std::string(curie) + "'");
    }
    const auto prefix = curie.substr(0, colon);
    auto it = map_.find(prefix);
    if (it == map_.end()) throw PrefixError(std::string(prefix));
    return Term::iri(it->second + std::string(curie.substr(colon + 1)));
}

std::optional<std::string> PrefixMap::try_compact(std::string_view iri) const {
    const std::string* best_prefix = nullptr;
    std::size_t best_len = 0;
    for (const auto& [prefix, ns] : map_) {
        if (ns.size() > iri.size() || iri.compare(0, ns.size(), ns) != 0) continue;
        if (!is_valid_local(iri.substr(ns.size()))) continue;
        // map_ iterates prefixes in order, so strict '>' keeps the smallest on ties
        if (best_prefix == nullptr || ns.size() > best_len) {
            best_prefix = &prefix;
            best_len = ns.size();
        }
    }
    if (best_prefix == nullptr) return std::nullopt;
    return *best_prefix + ":" + std::string(iri.substr(best_len));
}

std::string PrefixMap::compact(std::string_view iri) const {
    if (auto c = try_compact(iri)) return *c;
    return std::string(iri);
}

} // namespace sesforge::rdf
