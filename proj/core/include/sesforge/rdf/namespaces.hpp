#pragma once

#include <string>
#include <string_view>

namespace sesforge::rdf {

// Configurable namespace layout. Only the sescore base is exposed on the command
// line; the other roots default to siblings of it under the same authority.
struct Namespaces {
    std::string sescore = "http://sescore.example/ontology#";
    std::string global = "http://sescore.example/global/";
    std::string framework_root = "http://sescore.example/framework/";
    std::string case_root = "http://sescore.example/case/";
    std::string skolem = "http://sescore.example/skolem/";

    // Layout for a different sescore base: global/, framework/, case/ and skolem/
    // roots sit directly under the base's scheme and authority. Throws TermError
    // when `sescore_base` is not an absolute IRI.
    static Namespaces for_base(std::string sescore_base);

    std::string case_ns(std::string_view case_id) const;
    std::string framework_ns(std::string_view framework_id) const;
};

} // namespace sesforge::rdf
