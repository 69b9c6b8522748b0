#pragma once

#include <string>

#include "jobs/config.hpp"
#include "jobs/report.hpp"

namespace qloop::jobs {

/// Relation suites, the two-path phi comparison, catalog rows, the
/// constant-term and plus/minus rules, and the twist rules for the
/// configured representation.
Report cmd_verify(const JobConfig& c);
/// One row per (basis vector, node) with the reconstructed Psi^{+-}.
Report cmd_lweights(const JobConfig& c);
/// Tensor product of the three sl3 oscillator representations against the
/// shifted evaluation highest l-weight.
Report cmd_factorize(const JobConfig& c);
/// The typo ledger as a table.
Report cmd_ledger(const JobConfig& c);

/// Dispatch on "verify", "lweights", "factorize", "ledger"; UsageError
/// otherwise.
Report run_command(const std::string& command, const JobConfig& c);

}  // namespace qloop::jobs
