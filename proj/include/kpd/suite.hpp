#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kpd/report.hpp"

namespace kpd {

struct SuiteConfig {
    std::string suite_id;
    /// Unset: every suite runs on its default field(s).
    std::optional<Field> field;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t max_dim = 4;
    std::uint64_t m_max = 6;
    std::size_t jobs = 1;
    /// Replay directories for failing instances go below this path.
    std::string artifacts = "kpd-replay";
};

/// Suite ids accepted by run_suite, `all` included.
std::vector<std::string> suite_ids();

/// Runs a suite and writes one line per check:
///   <law-id> pass|FAIL <field> seed=<instance seed> <replay dir|-> [# note]
/// followed by a summary line. Returns 0 when every check passed and 1
/// otherwise. Configuration problems (unknown suite, a field the suite does
/// not support) raise kpd::Error before anything is written.
///
/// Inside `all`, suites that do not support the requested field fall back to
/// their default fields.
int run_suite(const SuiteConfig& config, std::ostream& out);

/// Re-runs the check stored in a replay directory and prints its line.
/// Returns 0 if the check now passes and 1 if the violation reproduces.
int replay(const std::string& dir, std::ostream& out);

/// Writes a replay directory for one report.
void write_replay(const std::string& dir, const LawReport& report, const Field& field, std::uint64_t seed);

/// Re-evaluates a report's law on its stored inputs and parameters.
LawReport rerun(const LawReport& stored, const Field& field);

}  // namespace kpd
