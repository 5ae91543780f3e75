#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_set>

#include "sesforge/rdf/vocab.hpp"
#include "sesforge/store/query.hpp"

namespace sesforge::store {

using rdf::Term;

std::vector<std::string> tokenize(std::string_view text) {
    auto lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
    auto upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };

    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (!alnum(c)) {
            flush();
            continue;
        }
        if (!cur.empty() && upper(c)) {
            const char prev = text[i - 1];
            const bool next_lower = i + 1 < text.size() && lower(text[i + 1]);
            // fooBar | HTTPServer -> HTTP Server
            if (lower(prev) || (upper(prev) && next_lower)) flush();
        }
        cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    flush();
    return tokens;
}

std::vector<SearchHit> keyword_search(const rdf::Graph& g, std::string_view text) {
    auto query = tokenize(text);
    std::sort(query.begin(), query.end());
    query.erase(std::unique(query.begin(), query.end()), query.end());
    std::vector<SearchHit> hits;
    if (query.empty()) return hits;

    std::set<Term> subjects;
    for (const auto& t : g) subjects.insert(t.subject());

    for (const auto& s : subjects) {
        std::unordered_set<std::string> tokens;
        for (auto& tok : tokenize(rdf::local_name(s.value()))) tokens.insert(std::move(tok));
        for (const auto& label : g.objects(s, rdf::vocab::rdfs_label())) {
            if (!label.is_literal()) continue;
            for (auto& tok : tokenize(label.value())) tokens.insert(std::move(tok));
        }
        std::size_t score = 0;
        for (const auto& q : query) {
            if (std::any_of(tokens.begin(), tokens.end(),
                            [&](const std::string& tok) { return tok.starts_with(q); })) {
                ++score;
            }
        }
        if (score > 0) hits.push_back({s, score});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.iri.value() < b.iri.value();
    });
    return hits;
}

std::vector<SearchHit> keyword_search(const Registry& reg, std::string_view text) {
    return keyword_search(reg.union_graph(), text);
}

std::vector<Term> hierarchy(const rdf::Graph& g, const Term& root, Direction direction) {
    if (!root.is_iri() || !g.mentions(root)) {
        throw RegistryError("unknown hierarchy root " + root.key());
    }
    const Term& edge =
        direction == Direction::Narrower ? rdf::vocab::skos_narrower() : rdf::vocab::skos_broader();
    std::vector<Term> out;
    std::set<Term> visited{root};
    std::deque<Term> frontier{root};
    while (!frontier.empty()) {
        Term node = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& next : g.objects(node, edge)) {
            if (!next.is_iri() || !visited.insert(next).second) continue;
            out.push_back(next);
            frontier.push_back(next);
        }
    }
    return out;
}

std::vector<Term> hierarchy(const Registry& reg, const Term& root, Direction direction) {
    return hierarchy(reg.union_graph(), root, direction);
}

} // namespace sesforge::store
