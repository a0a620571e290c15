#pragma once

#include <iosfwd>
#include <string>

#include "dqpair/scheme.hpp"

namespace dqpair {

struct LoadedScheme {
  AssociationScheme scheme;
  SchemeMeta meta;
};

/// Scheme file format (.scm):
///   scheme <order> <rank>
///   <order> lines of <order> space-separated relation indices
///   # key=value            (optional metadata: variant, n, a, b, labels)
/// Writers emit LF endings with no trailing spaces; readers accept CRLF.
void write_scm(std::ostream& os, const AssociationScheme& s, const SchemeMeta& meta);
std::string to_scm_string(const AssociationScheme& s, const SchemeMeta& meta);

/// Parses and fully validates a scheme file. FormatError on malformed input,
/// AxiomError when the colors do not form a scheme.
LoadedScheme read_scm(std::istream& is);
LoadedScheme read_scm_file(const std::string& path);
void write_scm_file(const std::string& path, const AssociationScheme& s, const SchemeMeta& meta);

}  // namespace dqpair
