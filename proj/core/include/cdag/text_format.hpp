#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdag/cluster_dag.hpp"

namespace cdag {

struct Diagnostic {
    int line = 0;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Parse result: the source lines, the graph when parsing succeeded, and the
/// collected diagnostics otherwise. Diagnostics are nonempty exactly when
/// `parsed` is absent.
struct CdagDocument {
    std::vector<std::string> source_lines;
    std::optional<ClusterDag> parsed;
    std::vector<Diagnostic> diagnostics;
};

/// Line-oriented cluster graph format, one statement per line, '#' comments:
///
///   cluster NAME size=N [selfloop] [bidiloop]
///   NAME -> NAME
///   NAME <-> NAME
///
/// An edge whose endpoints coincide declares the corresponding self-loop.
/// Unknown directives, duplicate clusters, undeclared endpoints, duplicate
/// edges and non-positive sizes are reported with their line numbers.
CdagDocument parse_cdag_document(std::string_view text);

/// Like parse_cdag_document but throws InputError carrying the diagnostics.
ClusterDag parse_cdag(std::string_view text);

/// Deterministic rendering; parse_cdag(render_cdag(c)) reproduces c exactly.
std::string render_cdag(const ClusterDag& c);

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace cdag
