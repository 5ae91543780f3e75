#pragma once

// Fixture access, random generators, and brute-force oracles shared by the unit,
// integration and acceptance tests. Oracles deliberately avoid the library's
// indexes and tokenizer so they can catch mistakes there.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "sesforge/io/turtle.hpp"
#include "sesforge/model/vocabulary.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/vocab.hpp"
#include "sesforge/store/query.hpp"
#include "sesforge/store/registry.hpp"

namespace sesforge::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(SESFORGE_FIXTURE_DIR) / name;
}

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(SESFORGE_DATA_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture(const std::string& name) { return read_file(fixture_path(name)); }

// Fresh, empty scratch directory under the system temp dir, private to this process.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() /
               ("sesforge-test-" + std::to_string(::getpid()) + "-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline rdf::Term iri(const std::string& s) { return rdf::Term::iri(s); }

inline const model::SesVocabulary& default_vocab() {
    static const model::SesVocabulary v;
    return v;
}

inline rdf::Term ses(const std::string& local) { return iri(rdf::Namespaces{}.sescore + local); }
inline rdf::Term global(const std::string& local) { return iri(rdf::Namespaces{}.global + local); }
inline rdf::Term case_term(const std::string& case_id, const std::string& local) {
    return iri(rdf::Namespaces{}.case_ns(case_id) + local);
}
inline rdf::Term fw_term(const std::string& fw, const std::string& local) {
    return iri(rdf::Namespaces{}.framework_ns(fw) + local);
}

// --- random graphs ---------------------------------------------------------

class GraphGen {
public:
    explicit GraphGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    rdf::Term subject() {
        static const std::vector<std::string> bases = {
            "http://sescore.example/case/g/", "http://sescore.example/global/",
            "http://example.org/data#", "http://example.org/odd%20path/", "http://example.org/caf\xC3\xA9/", "urn:x-test:"};
        const auto& b = bases[pick(bases.size())];
        std::string local = "n" + std::to_string(pick(60));
        if (chance(0.1)) local += "-x.y";
        if (chance(0.05)) local = "." + local;  // not a valid curie local
        return iri(b + local);
    }

    rdf::Term predicate() {
        static const std::vector<std::string> preds = {
            "http://sescore.example/ontology#refers_to", "http://www.w3.org/2004/02/skos/core#member",
            "http://www.w3.org/2004/02/skos/core#narrower", "http://www.w3.org/2000/01/rdf-schema#label",
            "http://www.w3.org/1999/02/22-rdf-syntax-ns#type", "http://example.org/p#rel",
            "http://example.org/p#other"};
        return iri(preds[pick(preds.size())]);
    }

    std::string lexical() {
        static const std::vector<std::string> parts = {
            "Resource", "system", " ", "\"quoted\"", "back\\slash", "line\nbreak", "tab\there",
            "caf\xC3\xA9", "\xE6\xB0\xB4", "", "#hash", "@at", "<angle>", "\r", "\x01"};
        std::string s;
        const std::size_t n = pick(4);
        for (std::size_t i = 0; i < n; ++i) s += parts[pick(parts.size())];
        return s;
    }

    rdf::Term object() {
        switch (pick(5)) {
            case 0: return rdf::Term::literal(lexical());
            case 1: return rdf::Term::lang_literal(lexical(), chance(0.5) ? "en" : "es-MX");
            case 2:
                return rdf::Term::typed_literal(lexical(), chance(0.5)
                                                               ? "http://www.w3.org/2001/XMLSchema#integer"
                                                               : "http://example.org/dt#custom");
            default: return subject();
        }
    }

    rdf::Graph graph(std::size_t max_triples) {
        rdf::Graph g;
        const std::size_t n = pick(max_triples + 1);
        while (g.size() < n) g.insert(subject(), predicate(), object());
        return g;
    }

    // Case graph in the shape the concept-map template produces (before
    // normalization): study -> concept graph -> concepts -> subconcepts, with the
    // exporter's owl:Class noise and a mix of member/narrower/broader edges.
    rdf::Graph template_graph(const std::string& case_id) {
        namespace vocab = rdf::vocab;
        const rdf::Namespaces ns;
        const std::string cns = ns.case_ns(case_id);
        static const std::vector<std::string> words = {"Water", "Forest", "Fishery", "Pasture",
                                                       "Irrigation", "Canal", "Village", "Council",
                                                       "Rules", "Users", "Market", "Aquifer"};
        static const std::vector<std::string> tags = {"", "_Smith2012", "_Cox2014", "_Lee1999"};
        rdf::Graph g;
        auto node = [&](const std::string& local) { return iri(cns + local); };
        auto maybe_class = [&](const rdf::Term& t) {
            if (chance(0.7)) g.insert(t, vocab::rdf_type(), vocab::owl_class());
            if (chance(0.5)) g.insert(t, vocab::rdfs_label(), rdf::Term::literal(std::string(rdf::local_name(t.value()))));
        };

        const auto study = node("Study" + std::to_string(pick(100)) + (chance(0.3) ? "_SESFramework" : ""));
        const auto cg = node("ConceptGraph_" + case_id);
        g.insert(study, ses("described_by"), cg);
        maybe_class(study);
        maybe_class(cg);

        std::vector<rdf::Term> concepts;
        std::set<std::string> used;
        const std::size_t first = 1 + pick(4);
        auto fresh_concept = [&]() {
            std::string name;
            do {
                name = words[pick(words.size())] + std::to_string(pick(20)) + tags[pick(tags.size())];
            } while (!used.insert(name).second);
            return node(name);
        };
        for (std::size_t i = 0; i < first; ++i) {
            auto c = fresh_concept();
            g.insert(cg, vocab::skos_member(), c);
            maybe_class(c);
            concepts.push_back(c);
        }
        const std::size_t children = pick(8);
        for (std::size_t i = 0; i < children; ++i) {
            const auto parent = concepts[pick(concepts.size())];
            auto child = fresh_concept();
            switch (pick(3)) {
                case 0: g.insert(parent, vocab::skos_member(), child); break;
                case 1: g.insert(parent, vocab::skos_narrower(), child); break;
                default:
                    g.insert(parent, vocab::skos_narrower(), child);
                    g.insert(child, vocab::skos_broader(), parent);
                    break;
            }
            maybe_class(child);
            concepts.push_back(child);
        }
        return g;
    }

private:
    std::mt19937_64 rng_;
};

// --- bgp oracle ----------------------------------------------------------------

using OracleRow = std::map<std::string, rdf::Term>;

// Nested-loop join over a full scan of `g` for every pattern, no indexes.
inline std::set<OracleRow> nested_loop_join(const rdf::Graph& g, const store::QueryPattern& q) {
    std::vector<rdf::Triple> all(g.begin(), g.end());
    std::set<OracleRow> out;
    std::function<void(std::size_t, OracleRow&)> rec = [&](std::size_t i, OracleRow& row) {
        if (i == q.patterns.size()) {
            out.insert(row);
            return;
        }
        const auto& p = q.patterns[i];
        for (const auto& t : all) {
            OracleRow next = row;
            bool ok = true;
            auto unify = [&](const rdf::Term& pat, const rdf::Term& val) {
                if (!ok) return;
                if (!pat.is_variable()) {
                    ok = pat == val;
                    return;
                }
                auto [it, inserted] = next.emplace(pat.value(), val);
                if (!inserted) ok = it->second == val;
            };
            unify(p.subject, t.subject());
            unify(p.predicate, t.predicate());
            unify(p.object, t.object());
            if (ok) rec(i + 1, next);
        }
    };
    OracleRow empty;
    rec(0, empty);
    return out;
}

inline store::QueryPattern random_pattern(GraphGen& gen, const rdf::Graph& g, std::size_t max_patterns) {
    std::vector<rdf::Triple> all(g.begin(), g.end());
    static const std::vector<std::string> vars = {"a", "b", "c", "d"};
    store::QueryPattern q;
    const std::size_t n = 1 + gen.pick(max_patterns);
    for (std::size_t i = 0; i < n; ++i) {
        // Anchor on a real triple so most patterns have solutions, then blank out
        // positions with variables.
        const rdf::Triple& t = all[gen.pick(all.size())];
        auto pos = [&](const rdf::Term& actual) -> rdf::Term {
            if (gen.chance(0.55)) return rdf::Term::variable(vars[gen.pick(vars.size())]);
            if (gen.chance(0.05)) return iri("http://example.org/absent");
            return actual;
        };
        q.patterns.push_back({pos(t.subject()), pos(t.predicate()), pos(t.object())});
    }
    return q;
}

inline std::set<OracleRow> as_rows(const store::BindingSet& b) {
    return {b.rows.begin(), b.rows.end()};
}

// --- keyword oracle -------------------------------------------------------------

// Regex-based re-implementation of the search tokenizer.
inline std::vector<std::string> oracle_tokens(const std::string& text) {
    static const std::regex camel1("([a-z])([A-Z])");
    static const std::regex camel2("([A-Z])([A-Z][a-z])");
    std::string spaced = std::regex_replace(text, camel1, "$1 $2");
    spaced = std::regex_replace(spaced, camel2, "$1 $2");
    std::vector<std::string> out;
    std::string cur;
    for (char c : spaced + " ") {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    return out;
}

// subject IRI -> score, computed by scanning every triple.
inline std::map<std::string, std::size_t> keyword_oracle(const rdf::Graph& g, const std::string& text) {
    std::set<std::string> query;
    for (auto& t : oracle_tokens(text)) query.insert(t);
    std::map<std::string, std::set<std::string>> tokens;
    for (const auto& t : g) {
        auto& bag = tokens[t.subject().value()];
        const std::string& v = t.subject().value();
        const auto cut = v.find_last_of("#/");
        for (auto& tok : oracle_tokens(cut == std::string::npos ? v : v.substr(cut + 1))) bag.insert(tok);
        if (t.predicate() == rdf::vocab::rdfs_label() && t.object().is_literal()) {
            for (auto& tok : oracle_tokens(t.object().value())) bag.insert(tok);
        }
    }
    std::map<std::string, std::size_t> scores;
    for (const auto& [subject, bag] : tokens) {
        std::size_t s = 0;
        for (const auto& q : query) {
            for (const auto& tok : bag) {
                if (tok.compare(0, q.size(), q) == 0) {
                    ++s;
                    break;
                }
            }
        }
        if (s > 0) scores[subject] = s;
    }
    return scores;
}

}  // namespace sesforge::testing
