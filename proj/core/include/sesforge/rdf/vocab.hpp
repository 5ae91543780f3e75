#pragma once

#include <string_view>

#include "sesforge/rdf/term.hpp"

// Well-known W3C namespaces and the handful of terms the toolkit uses directly.
namespace sesforge::rdf::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

const Term& rdf_type();
const Term& rdfs_label();
const Term& rdfs_subclass_of();
const Term& owl_class();
const Term& owl_object_property();
const Term& owl_datatype_property();
const Term& owl_annotation_property();
const Term& rdf_property();
const Term& skos_member();
const Term& skos_narrower();
const Term& skos_broader();

} // namespace sesforge::rdf::vocab
