#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sesforge::io {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    Severity severity = Severity::Warning;
    std::size_t line = 0;  // 1-based for textual sources
    std::string message;

    std::string to_string() const;
};

using Diagnostics = std::vector<ParseDiagnostic>;

} // namespace sesforge::io
