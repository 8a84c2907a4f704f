#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mcurve/cli_io/document.hpp"
#include "mcurve/syzygy/rank_engine.hpp"

namespace mcurve {

using Json = nlohmann::ordered_json;

/// Version of the JSON report layout; bumped on incompatible changes.
inline constexpr int kSchemaVersion = 1;

struct RunOptions {
  RankMode mode = RankMode::ModularCertified;
  /// Seeds both the rank primes and the singular-point shears.
  std::uint64_t seed = kDefaultSeed;
  /// Echoed in the report, e.g. the input path.
  std::string input_name;
};

/// Exit codes shared by every command: 0 success or verdict true, 1 verdict
/// false; errors map through exit_code(ErrorKind).
inline constexpr int kExitVerdictTrue = 0;
inline constexpr int kExitVerdictFalse = 1;

struct CommandOutcome {
  int exit_code = kExitVerdictTrue;
  Json report;
};

/// Full pipeline: validate, singular points, weak combinatorics, Jacobian
/// invariants, constraint verdicts and Poincare data. Exit 0 iff the input
/// is an M-arrangement.
CommandOutcome cmd_certify(const ArrangementDocument& doc, const RunOptions& opts);

/// Singular points, weak combinatorics and conic traces only.
CommandOutcome cmd_combinatorics(const ArrangementDocument& doc, const RunOptions& opts);

/// Deletes conic number `conic` (1-based) and compares the Poincare
/// polynomial predicted for the deletion with the one recomputed from its
/// own combinatorics; a mismatch raises InternalInconsistency.
CommandOutcome cmd_delete_conic(const ArrangementDocument& doc, int conic, const RunOptions& opts);

/// Constraint verdicts for a weak-combinatorics string. Exit 0 iff all hold.
CommandOutcome cmd_check(std::string_view wc_text, const RunOptions& opts);

/// Admissible (n2, n3, n4) for d lines and one conic.
CommandOutcome cmd_enumerate(int d, const RunOptions& opts);

/// Report for a failed command.
Json error_report(const std::string& command, const Error& e);

/// Human-readable rendering of any report.
std::string render_text(const Json& report);

}  // namespace mcurve
