// Command layer: the six operations behind the command-line tool.
//
// Each command takes a loaded document and produces a RunResult holding the
// process exit code, a deterministic JSON report, and a human-readable text
// rendering of the same content. Exit codes follow one contract everywhere:
// 0 success (all checks/memberships pass), 1 a membership test or
// verification check failed, 2 the input failed validation or a structural
// precondition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiloc/io.hpp"

namespace equiloc {

struct RunResult {
    int exit_code = 0;
    OrderedJson report;
    std::string text;
};

/// Class tables: generated from polytope data when present, otherwise the
/// supplied tables (validated). Fails (exit 2) when the document carries
/// neither.
RunResult cmd_classes(const InputDocument& doc);

/// The relation system: extracted from the resolved class table, or
/// assembled from the subtorus blocks when the document decomposes the
/// model. Includes the independence-count report in the residual grading.
RunResult cmd_relations(const InputDocument& doc);

/// Membership verdict for every candidate tuple in the document.
/// Exit 0 when all tuples pass, 1 when any fails.
RunResult cmd_check(const InputDocument& doc);

/// Full consistency report: genericity, Betti numbers and duality, the
/// vanishing integral of 1, table validation (generated, supplied, and
/// alternative), relation counts, truncated solution dimensions against the
/// graded series, and edge-congruence comparisons where the one-skeleton is
/// available. Exit 0 when every check passes, 1 otherwise.
RunResult cmd_verify(const InputDocument& doc, int degree_cap);

/// Betti numbers, duality, and graded dimension series.
RunResult cmd_betti(const InputDocument& doc, int degree_cap);

/// Exact fixed-point integration of the constant 1 and of every candidate
/// tuple in the residual grading.
RunResult cmd_integrate(const InputDocument& doc);

/// Load `input_path` and dispatch `command`, mapping thrown validation and
/// structural errors to an exit-2 error report. `xi_override` replaces the
/// document's xi.
RunResult run_command(const std::string& command, const std::string& input_path,
                      const std::optional<std::vector<Int>>& xi_override = std::nullopt,
                      int degree_cap = 6);

} // namespace equiloc
