// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "revoc/ledger.hpp"
#include "revoc/scenario.hpp"

namespace revoc {

// Every verifier verdict is checked against the authoritative revocation
// state for the day the evidence speaks for.
struct AuditLog {
    std::uint64_t checks = 0;
    std::uint64_t mismatches = 0;
    std::string first_mismatch;
};

struct RunResult {
    Scenario scenario;
    TrafficLedger ledger;
    AuditLog audit;
    std::uint64_t validations = 0;
    std::uint64_t proof_bytes_total = 0;
    std::uint64_t update_entries = 0;
    std::uint64_t nodes_touched = 0;
    std::size_t cert_size_bytes = 0;

    // peak Directory->user request rate, skipping the scenario's warm-up
    std::uint64_t peak_dir_user_requests() const;
    double avg_proof_bytes() const {
        return validations ? double(proof_bytes_total) / double(validations) : 0.0;
    }
};

RunResult run_simulation(const Scenario& scenario);

// Cost split by link class; one kilobyte is 1000 bytes.
struct CostReport {
    double ca_to_dir = 0.0;
    double dir_to_user = 0.0;
    double cert_distribution = 0.0;
    double other = 0.0;  // responder-to-responder edges and the like
    double total = 0.0;
    // revocation traffic (everything except certificate distribution) as a
    // fraction of total bytes
    double revocation_share = 0.0;
};

CostReport cost_report(const RunResult& result);

void write_summary(std::ostream& os, const RunResult& result);

// One row per scheme over a shared population; byte-identical for identical
// inputs.
std::vector<RunResult> run_comparison(const Scenario& base,
                                      const std::vector<SchemeKind>& schemes);
void write_compare_csv(std::ostream& os, const std::vector<RunResult>& results);

}  // namespace revoc
