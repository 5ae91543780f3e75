#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sesforge/io/concept_map.hpp"
#include "sesforge/io/diagnostic.hpp"
#include "sesforge/normalize/report.hpp"
#include "sesforge/rdf/graph.hpp"
#include "sesforge/store/registry.hpp"

namespace sesforge::service {

enum class InputFormat { Owl, Cxl, Turtle };

// "owl", "cxl", "ttl" / "turtle" (case-insensitive).
std::optional<InputFormat> parse_format(std::string_view name);
// By file extension: .owl/.rdf, .cxl, .ttl.
std::optional<InputFormat> format_for_path(const std::filesystem::path& path);
std::string_view format_name(InputFormat f) noexcept;

// Process exit codes shared by every subcommand.
enum class ExitCode : int { Ok = 0, ParseFailure = 1, Invalid = 2, Usage = 64 };

// Raw graph plus the non-fatal diagnostics its reader produced.
struct RawDocument {
    rdf::Graph graph;
    io::Diagnostics diagnostics;
};

// Reads a document into a raw graph. Relative names resolve under the case
// namespace of `case_id`. Throws ParseError.
RawDocument read_document(std::string_view text, InputFormat format, std::string_view case_id,
                          const store::Registry& reg, const io::PhraseTable& phrases);

struct ConvertOutcome {
    ExitCode status = ExitCode::Ok;
    // Ok: canonical Turtle, a "#--- report ---" line, then the normalization and
    // validation reports as comments. Otherwise: the error text.
    std::string document;
    std::string report_tsv;  // machine-readable action log (Ok and Invalid)
    io::Diagnostics diagnostics;
};

inline constexpr std::string_view kReportDelimiter = "#--- report ---";

// Parse, normalize against a copy of the registry, validate. Never mutates `reg`.
// Both the CLI and the HTTP service return this document verbatim.
ConvertOutcome convert_document(const store::Registry& reg, std::string_view text,
                                InputFormat format, std::string_view case_id,
                                const io::PhraseTable& phrases);

// Phrase table from a file (or the built-in defaults when `path` is empty).
io::PhraseTable load_phrases(const std::filesystem::path& path, const rdf::PrefixMap& pm);

std::string read_text_file(const std::filesystem::path& path);

} // namespace sesforge::service
