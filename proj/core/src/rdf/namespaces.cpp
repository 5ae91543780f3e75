#include "sesforge/rdf/namespaces.hpp"

#include "sesforge/error.hpp"
#include "sesforge/rdf/term.hpp"

namespace sesforge::rdf {

Namespaces Namespaces::for_base(std::string sescore_base) {
    if (!is_absolute_iri(sescore_base)) {
        throw TermError("base IRI is not absolute: '" + sescore_base + "'");
    }
    std::string root;
    if (auto scheme = sescore_base.find("://"); scheme != std::string::npos) {
        auto path = sescore_base.find('/', scheme + 3);
        root = sescore_base.substr(0, path) + "/";
    } else {
        // urn:-style bases: keep the whole base as the root.
        root = sescore_base;
        if (root.back() != '/' && root.back() != ':' && root.back() != '#') root += '/';
    }
    Namespaces ns;
    ns.sescore = std::move(sescore_base);
    ns.global = root + "global/";
    ns.framework_root = root + "framework/";
    ns.case_root = root + "case/";
    ns.skolem = root + "skolem/";
    return ns;
}

std::string Namespaces::case_ns(std::string_view case_id) const {
    return case_root + std::string(case_id) + "/";
}

std::string Namespaces::framework_ns(std::string_view framework_id) const {
    return framework_root + std::string(framework_id) + "/";
}

} // namespace sesforge::rdf
