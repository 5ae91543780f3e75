#include "sesforge/io/diagnostic.hpp"

namespace sesforge::io {

std::string ParseDiagnostic::to_string() const {
    std::string out = severity == Severity::Error ? "error" : "warning";
    if (line > 0) out += ": line " + std::to_string(line);
    out += ": " + message;
    return out;
}

} // namespace sesforge::io
