#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ginwb/coord_change.hpp"
#include "ginwb/lefschetz.hpp"

namespace ginwb {

enum class Command { gin, hilbert, reconstruct, lefschetz, criterion };
enum class OutputFormat { text, json };

struct RunConfig {
    Command command = Command::hilbert;
    OutputFormat format = OutputFormat::text;

    std::optional<std::string> input_path;   // file with one polynomial per line
    std::optional<std::string> inline_input; // ';'-separated polynomials
    std::optional<int> n;                    // arity (inferred from input when absent)
    std::optional<int> d;                    // degree for hilbert / reconstruct

    std::optional<std::uint64_t> seed; // default: GINWB_SEED env or 42
    int trials = 3;
    long coeff_bound = 10000;
    std::optional<int> degree_bound;
    ChangeKind kind = ChangeKind::general;
    bool expect_ci = false;

    LefschetzKind lefschetz_kind = LefschetzKind::strong;
    std::optional<std::string> element; // Lefschetz element, e.g. "x4"
};

struct RunReport {
    int exit_code = 0;
    std::string output; // complete text or JSON document, newline-terminated
};

// exit codes, also used by the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitNotRegular = 4;
inline constexpr int kExitDisagreement = 5;
inline constexpr int kExitInfeasible = 6;

/// Execute one command. Never throws: failures come back as a nonzero exit
/// code with a structured error report in the requested format. Identical
/// configurations (including the seed) produce byte-identical output.
RunReport run(const RunConfig& config);

} // namespace ginwb
