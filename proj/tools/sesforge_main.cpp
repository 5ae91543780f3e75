// sesforge: convert, seed, validate, query, search, add, export, hierarchy, serve.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "sesforge/io/turtle.hpp"
#include "sesforge/model/frameworks.hpp"
#include "sesforge/model/validate.hpp"
#include "sesforge/service/pipeline.hpp"
#include "sesforge/service/server.hpp"
#include "sesforge/store/query.hpp"
#include "sesforge/store/registry.hpp"

namespace fs = std::filesystem;
using namespace sesforge;
using service::ExitCode;

namespace {

constexpr const char* kDefaultRegistry = "sesforge-registry";

// Bad arguments or unreadable inputs; exit 64.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Globals {
    std::string registry;
    std::string base_iri;
    std::string phrases;

    fs::path registry_dir() const {
        if (!registry.empty()) return registry;
        if (const char* env = std::getenv("SESFORGE_REGISTRY"); env && *env) return env;
        return kDefaultRegistry;
    }

    rdf::Namespaces namespaces() const {
        if (base_iri.empty()) return {};
        try {
            return rdf::Namespaces::for_base(base_iri);
        } catch (const TermError& e) {
            throw UsageError(e.what());
        }
    }

    store::Registry load() const { return store::load(registry_dir(), namespaces()); }
};

int code(ExitCode c) { return static_cast<int>(c); }

std::string read_input(const fs::path& path) {
    try {
        return service::read_text_file(path);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

service::InputFormat pick_format(const std::string& flag, const fs::path& input) {
    auto f = flag.empty() ? service::format_for_path(input) : service::parse_format(flag);
    if (!f) {
        throw UsageError(flag.empty() ? "cannot tell the format of " + input.string() + "; pass --format"
                                      : "unknown format '" + flag + "'");
    }
    return *f;
}

// Case id from the flag, else from the file name, else "default".
std::string pick_case_id(const std::string& flag, const fs::path& input) {
    if (!flag.empty()) {
        if (!store::is_valid_case_id(flag)) throw UsageError("invalid case id '" + flag + "'");
        return flag;
    }
    std::string stem = input.stem().string();
    return store::is_valid_case_id(stem) ? stem : "default";
}

rdf::Term resolve_term(std::string_view text, const rdf::PrefixMap& pm) {
    try {
        if (text.size() > 1 && text.front() == '<' && text.back() == '>') {
            return rdf::Term::iri(std::string(text.substr(1, text.size() - 2)));
        }
        if (auto colon = text.find(':'); colon != std::string_view::npos && pm.contains(text.substr(0, colon))) {
            return pm.expand(text);
        }
        return rdf::Term::iri(std::string(text));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << content)) throw UsageError("cannot write " + path.string());
}

io::PhraseTable phrases_for(const Globals& g) {
    try {
        return service::load_phrases(g.phrases, rdf::PrefixMap::with_builtins(g.namespaces()));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int run_convert(const Globals& g, const std::string& input, const std::string& format,
                const std::string& case_flag, const std::string& output, const std::string& report_tsv) {
    const auto fmt = pick_format(format, input);
    const auto case_id = pick_case_id(case_flag, input);
    const std::string text = read_input(input);
    const auto reg = g.load();
    const auto outcome = service::convert_document(reg, text, fmt, case_id, phrases_for(g));
    for (const auto& d : outcome.diagnostics) std::cerr << input << ": " << d.to_string() << '\n';
    if (outcome.status != ExitCode::Ok) {
        std::cerr << outcome.document;
        return code(outcome.status);
    }
    if (output.empty() || output == "-") {
        std::cout << outcome.document;
    } else {
        write_file(output, outcome.document);
    }
    if (!report_tsv.empty()) write_file(report_tsv, outcome.report_tsv);
    return 0;
}

int run_seed(const Globals& g, const std::vector<std::string>& ids, const std::string& table) {
    auto reg = g.load();
    if (!table.empty()) {
        if (ids.size() != 1) throw UsageError("--table needs exactly one framework id");
        reg.seed_framework(model::parse_framework_table(ids.front(), read_input(table)));
    } else {
        for (const auto& id : ids) {
            const model::FrameworkSeed* seed = nullptr;
            try {
                seed = &model::builtin_framework(id);
            } catch (const Error& e) {
                throw UsageError(e.what());
            }
            reg.seed_framework(*seed);
        }
    }
    store::save(reg, g.registry_dir());
    for (const auto& id : ids) {
        std::cout << id << '\t' << reg.frameworks().at(id).size() << " triples\n";
    }
    return 0;
}

int run_validate(const Globals& g, const std::string& file) {
    const auto reg = g.load();
    rdf::Graph target = reg.union_graph();
    if (!file.empty()) {
        io::TurtleOptions opts;
        opts.skolem_ns = reg.namespaces().skolem;
        target.merge(io::parse_turtle(read_input(file), reg.prefixes(), opts));
    }
    const auto report = model::validate(target, reg.vocabulary());
    std::cout << report.to_text(reg.prefixes());
    return report.error_count() > 0 ? code(ExitCode::Invalid) : 0;
}

int run_query(const Globals& g, const std::string& text, const std::string& file) {
    if (text.empty() == file.empty()) throw UsageError("give the query text or --file, not both");
    const auto reg = g.load();
    const auto pm = reg.prefixes();
    const auto q = store::parse_query(file.empty() ? text : read_input(file), pm);
    std::cout << store::bgp_query(reg, q).to_tsv(pm);
    return 0;
}

int run_search(const Globals& g, const std::vector<std::string>& words) {
    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    const auto reg = g.load();
    for (const auto& hit : store::keyword_search(reg, text)) {
        std::cout << hit.iri.value() << '\t' << hit.score << '\n';
    }
    return 0;
}

int run_add(const Globals& g, const std::string& case_id, const std::string& input, const std::string& format) {
    if (!store::is_valid_case_id(case_id)) throw UsageError("invalid case id '" + case_id + "'");
    const auto fmt = pick_format(format, input);
    const std::string text = read_input(input);
    auto reg = g.load();
    const auto raw = service::read_document(text, fmt, case_id, reg, phrases_for(g));
    for (const auto& d : raw.diagnostics) std::cerr << input << ": " << d.to_string() << '\n';
    const auto result = reg.ingest_case(case_id, raw.graph);
    store::save(reg, g.registry_dir());
    std::cout << result.report.to_text(reg.case_prefixes(case_id));
    return 0;
}

int run_export(const Globals& g, const std::string& case_id) {
    const auto reg = g.load();
    if (case_id.empty()) {
        std::cout << io::serialize_turtle(reg.union_graph(), reg.prefixes());
        return 0;
    }
    auto it = reg.cases().find(case_id);
    if (it == reg.cases().end()) throw UsageError("no case '" + case_id + "'");
    std::cout << io::serialize_turtle(it->second, reg.case_prefixes(case_id));
    return 0;
}

int run_hierarchy(const Globals& g, const std::string& root, bool broader) {
    const auto reg = g.load();
    const auto pm = reg.prefixes();
    const auto dir = broader ? store::Direction::Broader : store::Direction::Narrower;
    for (const auto& t : store::hierarchy(reg, resolve_term(root, pm), dir)) {
        std::cout << pm.compact(t.value()) << '\n';
    }
    return 0;
}

int run_serve(const Globals& g, const std::string& host, int port, std::size_t max_upload) {
    service::ServiceConfig cfg;
    cfg.host = host;
    cfg.port = port;
    cfg.registry_dir = g.registry_dir();
    cfg.namespaces = g.namespaces();
    cfg.phrases = g.phrases;
    cfg.max_upload_bytes = max_upload;
    service::Server server(cfg);
    const int bound = server.bind();
    std::cerr << "listening on " << host << ':' << bound << '\n';
    server.run();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SES knowledge-graph toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--registry", g.registry, "Registry directory (default: $SESFORGE_REGISTRY or ./sesforge-registry)");
    app.add_option("--base-iri", g.base_iri, "Base IRI of the sescore ontology");
    app.add_option("--phrases", g.phrases, "Linking-phrase table for concept maps");

    std::function<int()> action;

    std::string input, format, case_id, output, report_tsv;
    auto* convert = app.add_subcommand("convert", "Normalize a document against the registry (read-only)");
    convert->add_option("input", input, "Input document (.owl, .cxl, .ttl)")->required();
    convert->add_option("--format", format, "owl, cxl or ttl (default: from the extension)");
    convert->add_option("--case-id", case_id, "Case id for relative names (default: file stem)");
    convert->add_option("-o,--output", output, "Output Turtle file (default: stdout)");
    convert->add_option("--report-tsv", report_tsv, "Write the action log as TSV");
    convert->callback([&] { action = [&] { return run_convert(g, input, format, case_id, output, report_tsv); }; });

    std::vector<std::string> ids;
    std::string table;
    auto* seed = app.add_subcommand("seed", "Seed framework vocabularies into the registry");
    seed->add_option("framework", ids, "Framework ids (Ostrom2007, Ostrom2009, McGinnisOstrom2014)")->required();
    seed->add_option("--table", table, "Tier table file (code | label | parent) instead of the built-in");
    seed->callback([&] { action = [&] { return run_seed(g, ids, table); }; });

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check the registry (plus an optional Turtle file)");
    validate->add_option("file", file, "Turtle file to validate together with the registry");
    validate->callback([&] { action = [&] { return run_validate(g, file); }; });

    std::string query_text, query_file;
    auto* query = app.add_subcommand("query", "Run a basic graph pattern query");
    query->add_option("pattern", query_text, "Query text");
    query->add_option("--file", query_file, "Read the query from a file");
    query->callback([&] { action = [&] { return run_query(g, query_text, query_file); }; });

    std::vector<std::string> words;
    auto* search = app.add_subcommand("search", "Keyword search over labels and local names");
    search->add_option("keywords", words)->required();
    search->callback([&] { action = [&] { return run_search(g, words); }; });

    std::string add_id, add_input, add_format;
    auto* add = app.add_subcommand("add", "Normalize a document and store it as a case");
    add->add_option("case-id", add_id)->required();
    add->add_option("input", add_input)->required();
    add->add_option("--format", add_format, "owl, cxl or ttl (default: from the extension)");
    add->callback([&] { action = [&] { return run_add(g, add_id, add_input, add_format); }; });

    std::string export_id;
    auto* exp = app.add_subcommand("export", "Print a case (or the whole registry) as Turtle");
    exp->add_option("case-id", export_id);
    exp->callback([&] { action = [&] { return run_export(g, export_id); }; });

    std::string root;
    bool broader = false;
    auto* hier = app.add_subcommand("hierarchy", "List narrower (or broader) concepts transitively");
    hier->add_option("root", root, "Root concept as curie or <IRI>")->required();
    hier->add_flag("--broader", broader, "Follow skos:broader instead of skos:narrower");
    hier->callback([&] { action = [&] { return run_hierarchy(g, root, broader); }; });

    std::string host = "127.0.0.1";
    int port = 8080;
    std::size_t max_upload = 8u << 20;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--host", host);
    serve->add_option("--port", port);
    serve->add_option("--max-upload", max_upload, "Largest accepted request body in bytes")
        ->check(CLI::PositiveNumber);
    serve->callback([&] { action = [&] { return run_serve(g, host, port, max_upload); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitCode::Usage);
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "sesforge: " << e.what() << '\n';
        return code(ExitCode::Usage);
    } catch (const ParseError& e) {
        std::cerr << "sesforge: parse error: " << e.what() << '\n';
        return code(ExitCode::ParseFailure);
    } catch (const NormalizeError& e) {
        std::cerr << "sesforge: " << e.what() << '\n';
        return code(ExitCode::Invalid);
    } catch (const store::RegistryError& e) {
        std::cerr << "sesforge: " << e.what() << '\n';
        if (!e.findings().empty()) std::cerr << e.findings().to_text(rdf::PrefixMap::with_builtins());
        return code(ExitCode::Invalid);
    } catch (const std::exception& e) {
        std::cerr << "sesforge: " << e.what() << '\n';
        return code(ExitCode::ParseFailure);
    }
}
