#include <benchmark/benchmark.h>

#include <random>

#include "sesforge/io/turtle.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/rdf/vocab.hpp"

using namespace sesforge;
using rdf::Term;

namespace {

// n subjects in a few namespaces, each with a type, a label and links to neighbours.
rdf::Graph synthetic(std::size_t n) {
    std::mt19937 rng(42);
    rdf::Graph g;
    const auto p = Term::iri("http://example.org/p#link");
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = Term::iri("http://example.org/n/" + std::to_string(i));
        g.insert(s, rdf::vocab::rdf_type(), Term::iri("http://example.org/C" + std::to_string(i % 7)));
        g.insert(s, rdf::vocab::rdfs_label(), Term::literal("node " + std::to_string(i)));
        g.insert(s, p, Term::iri("http://example.org/n/" + std::to_string(rng() % n)));
    }
    return g;
}

void BM_GraphInsert(benchmark::State& state) {
    const auto src = synthetic(static_cast<std::size_t>(state.range(0)));
    std::vector<rdf::Triple> triples(src.begin(), src.end());
    for (auto _ : state) {
        rdf::Graph g;
        for (const auto& t : triples) g.insert(t);
        benchmark::DoNotOptimize(g.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(triples.size()));
}
BENCHMARK(BM_GraphInsert)->Arg(1000)->Arg(10000);

void BM_GraphMatchByObject(benchmark::State& state) {
    const auto g = synthetic(static_cast<std::size_t>(state.range(0)));
    const auto cls = Term::iri("http://example.org/C3");
    for (auto _ : state) benchmark::DoNotOptimize(g.match(std::nullopt, rdf::vocab::rdf_type(), cls));
}
BENCHMARK(BM_GraphMatchByObject)->Arg(1000)->Arg(10000);

void BM_TurtleSerialize(benchmark::State& state) {
    const auto g = synthetic(static_cast<std::size_t>(state.range(0)));
    const auto pm = rdf::PrefixMap::with_builtins();
    for (auto _ : state) benchmark::DoNotOptimize(io::serialize_turtle(g, pm));
}
BENCHMARK(BM_TurtleSerialize)->Arg(1000)->Arg(10000);

void BM_TurtleParse(benchmark::State& state) {
    const auto text = io::serialize_turtle(synthetic(static_cast<std::size_t>(state.range(0))), rdf::PrefixMap::with_builtins());
    for (auto _ : state) benchmark::DoNotOptimize(io::parse_turtle(text, rdf::PrefixMap()));
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_TurtleParse)->Arg(1000)->Arg(10000);

}  // namespace
