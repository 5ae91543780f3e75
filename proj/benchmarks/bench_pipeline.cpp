#include <benchmark/benchmark.h>

#include "sesforge/model/frameworks.hpp"
#include "sesforge/normalize/normalize.hpp"
#include "sesforge/rdf/vocab.hpp"
#include "sesforge/store/query.hpp"
#include "sesforge/store/registry.hpp"

using namespace sesforge;
using rdf::Term;
namespace vocab = sesforge::rdf::vocab;

namespace {

// Raw template-shaped case: study -> concept graph -> `width` concepts, each with
// `width` subconcepts, every node declared owl:Class.
rdf::Graph raw_case(const std::string& id, int width) {
    const rdf::Namespaces ns;
    auto node = [&](const std::string& l) { return Term::iri(ns.case_ns(id) + l); };
    const model::SesVocabulary v;
    rdf::Graph g;
    const auto study = node("Study_" + id), cg = node("ConceptGraph_" + id);
    g.insert(study, v.described_by(), cg);
    for (int i = 0; i < width; ++i) {
        const auto c = node("Concept" + std::to_string(i) + "_Bench2020");
        g.insert(cg, vocab::skos_member(), c);
        g.insert(c, vocab::rdf_type(), vocab::owl_class());
        for (int j = 0; j < width; ++j) {
            const auto s = node("Sub" + std::to_string(i) + "x" + std::to_string(j) + "_Bench2020");
            g.insert(c, vocab::skos_member(), s);
            g.insert(s, vocab::rdf_type(), vocab::owl_class());
        }
    }
    return g;
}

store::Registry populated() {
    store::Registry reg;
    for (const auto& id : model::builtin_framework_ids()) reg.seed_framework(model::builtin_framework(id));
    for (int i = 0; i < 10; ++i) reg.ingest_case("b" + std::to_string(i), raw_case("b" + std::to_string(i), 8));
    return reg;
}

void BM_Normalize(benchmark::State& state) {
    const model::SesVocabulary v;
    const auto raw = raw_case("bench", static_cast<int>(state.range(0)));
    const auto tbox = model::seed_tbox(v);
    for (auto _ : state) {
        rdf::Graph reg = tbox;
        benchmark::DoNotOptimize(normalize::normalize(raw, reg, "bench", v));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(raw.size()));
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32);

void BM_BgpJoin(benchmark::State& state) {
    const auto reg = populated();
    const auto q = store::parse_query("?l refers_to ?g . ?l skos:broader ?p . ?p refers_to ?pg", reg.prefixes());
    for (auto _ : state) benchmark::DoNotOptimize(store::bgp_query(reg, q));
}
BENCHMARK(BM_BgpJoin);

void BM_KeywordSearch(benchmark::State& state) {
    const auto reg = populated();
    for (auto _ : state) benchmark::DoNotOptimize(store::keyword_search(reg, "resource system sub"));
}
BENCHMARK(BM_KeywordSearch);

void BM_Hierarchy(benchmark::State& state) {
    const auto reg = populated();
    const auto root = Term::iri(reg.namespaces().framework_ns("Ostrom2009") + "ResourceSystems_Ostrom2009");
    for (auto _ : state) benchmark::DoNotOptimize(store::hierarchy(reg, root, store::Direction::Narrower));
}
BENCHMARK(BM_Hierarchy);

}  // namespace
