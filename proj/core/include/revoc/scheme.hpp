// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "revoc/ledger.hpp"
#include "revoc/population.hpp"
#include "revoc/scenario.hpp"

namespace revoc {

enum class SchemeVerdict : std::uint8_t { Valid, Revoked, Unknown, Invalid };

// The behavioural contract every scheme exposes to the simulator: scheduled
// CA->Directory pushes, and one verifier validation that fetches whatever
// evidence the scheme needs, checks it, and reports which day the evidence
// speaks for.
class SchemeAdapter {
  public:
    struct Validation {
        SchemeVerdict verdict = SchemeVerdict::Invalid;
        Day basis_day = 0;          // the day the evidence is authoritative for
        std::uint64_t proof_bytes = 0;  // downstream bytes this validation cost
    };

    virtual ~SchemeAdapter() = default;

    virtual std::string_view name() const = 0;
    // scheme data embedded in every certificate beyond the base body
    virtual std::size_t cert_overhead_bytes() const { return 0; }
    // CA-side work scheduled at tick t (issuance, daily updates)
    virtual void on_tick(Tick t, TrafficLedger& ledger) = 0;
    // one validation of `serial` by `verifier` at tick t
    virtual Validation validate(std::uint64_t verifier, Serial serial, Tick t,
                                TrafficLedger& ledger) = 0;

    // telemetry for cross-scheme comparison
    virtual std::uint64_t update_entries() const { return 0; }  // CA->Dir entries pushed
    virtual std::uint64_t nodes_touched() const { return 0; }   // tree maintenance work
};

std::unique_ptr<SchemeAdapter> make_adapter(const Scenario& scenario,
                                            const PopulationModel& population);

}  // namespace revoc
