#include "sesforge/service/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "sesforge/io/rdfxml.hpp"
#include "sesforge/io/turtle.hpp"
#include "sesforge/model/validate.hpp"
#include "sesforge/normalize/normalize.hpp"

namespace sesforge::service {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Every line of `text` as a Turtle comment.
std::string commented(std::string_view text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        out += line.empty() ? "#" : "# ";
        out += line;
        out += '\n';
        start = end + 1;
    }
    return out;
}

} // namespace

std::optional<InputFormat> parse_format(std::string_view name) {
    const std::string n = lower(name);
    if (n == "owl" || n == "rdf" || n == "rdfxml") return InputFormat::Owl;
    if (n == "cxl") return InputFormat::Cxl;
    if (n == "ttl" || n == "turtle") return InputFormat::Turtle;
    return std::nullopt;
}

std::optional<InputFormat> format_for_path(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    if (ext.empty()) return std::nullopt;
    return parse_format(std::string_view(ext).substr(1));
}

std::string_view format_name(InputFormat f) noexcept {
    switch (f) {
        case InputFormat::Owl: return "owl";
        case InputFormat::Cxl: return "cxl";
        case InputFormat::Turtle: return "ttl";
    }
    return "?";
}

RawDocument read_document(std::string_view text, InputFormat format, std::string_view case_id,
                          const store::Registry& reg, const io::PhraseTable& phrases) {
    const auto& ns = reg.namespaces();
    RawDocument doc;
    switch (format) {
        case InputFormat::Owl: {
            io::OwlReadOptions opts;
            opts.base = ns.case_ns(case_id);
            opts.skolem_ns = ns.skolem;
            doc.graph = io::parse_coe_owl(text, opts);
            break;
        }
        case InputFormat::Cxl: {
            auto parsed = io::parse_cxl(text);
            auto converted = io::conceptmap_to_graph(parsed.map, phrases, ns.case_ns(case_id),
                                                     reg.vocabulary().related_to());
            doc.graph = std::move(converted.graph);
            doc.diagnostics = std::move(parsed.diagnostics);
            doc.diagnostics.insert(doc.diagnostics.end(), converted.diagnostics.begin(),
                                   converted.diagnostics.end());
            break;
        }
        case InputFormat::Turtle: {
            io::TurtleOptions opts;
            opts.skolem_ns = ns.skolem;
            doc.graph = io::parse_turtle(text, reg.case_prefixes(case_id), opts);
            break;
        }
    }
    return doc;
}

ConvertOutcome convert_document(const store::Registry& reg, std::string_view text,
                                InputFormat format, std::string_view case_id,
                                const io::PhraseTable& phrases) {
    ConvertOutcome out;
    RawDocument raw;
    try {
        raw = read_document(text, format, case_id, reg, phrases);
    } catch (const ParseError& e) {
        out.status = ExitCode::ParseFailure;
        out.document = std::string("parse error: ") + e.what() + "\n";
        return out;
    } catch (const TermError& e) {
        out.status = ExitCode::ParseFailure;
        out.document = std::string("parse error: ") + e.what() + "\n";
        return out;
    }
    out.diagnostics = raw.diagnostics;

    const auto& vocab = reg.vocabulary();
    rdf::Graph scratch = reg.union_graph();
    normalize::NormalizeResult result;
    try {
        result = normalize::normalize(raw.graph, scratch, case_id, vocab);
    } catch (const NormalizeError& e) {
        out.status = ExitCode::Invalid;
        out.document = std::string(e.what()) + "\n";
        return out;
    }
    out.report_tsv = result.report.to_tsv();

    // The document carries the globals minted for it so it validates on its own.
    rdf::Graph doc = result.graph;
    for (const auto& t : scratch) {
        if (!reg.union_graph().contains(t)) doc.insert(t);
    }
    scratch.merge(result.graph);
    const auto findings = model::validate(scratch, vocab);
    const auto pm = reg.case_prefixes(case_id);
    if (findings.error_count() > 0) {
        out.status = ExitCode::Invalid;
        out.document = findings.to_text(pm);
        return out;
    }

    out.document = io::serialize_turtle(doc, pm);
    out.document += kReportDelimiter;
    out.document += '\n';
    for (const auto& d : out.diagnostics) out.document += commented(d.to_string());
    out.document += commented(result.report.to_text(pm));
    out.document += commented(findings.to_text(pm));
    return out;
}

io::PhraseTable load_phrases(const std::filesystem::path& path, const rdf::PrefixMap& pm) {
    if (path.empty()) return io::PhraseTable::defaults(pm);
    return io::PhraseTable::parse(read_text_file(path), pm);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace sesforge::service
