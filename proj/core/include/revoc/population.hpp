// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "revoc/cert.hpp"
#include "revoc/scenario.hpp"

namespace revoc {

// The certificate population and its revocation process: which serials get
// revoked on which day, plus optional hold intervals. Everything is fixed up
// front from the scenario seed, so the simulator can replay the authoritative
// state for any day.
class PopulationModel {
  public:
    PopulationModel(const Scenario& scenario, std::uint64_t seed);

    std::uint64_t size() const { return size_; }
    std::uint32_t ca_count() const { return ca_count_; }
    std::uint64_t users_per_ca() const { return users_per_ca_; }

    CaId issuer_of(Serial s) const { return s / users_per_ca_; }
    Serial local_index(Serial s) const { return s % users_per_ca_; }
    Serial ca_first_serial(CaId ca) const { return ca * users_per_ca_; }
    std::uint64_t ca_population(CaId ca) const;

    Day revocation_day(Serial s) const { return revocation_day_[s]; }
    bool revoked_at(Serial s, Day day) const { return revocation_day_[s] <= day; }
    const std::vector<Serial>& revoked_serials() const { return revoked_serials_; }
    const std::vector<HoldInterval>& holds() const { return holds_; }

    // Authoritative state of one CA's serial range as of `day`.
    RevocationState state_at(CaId ca, Day day) const;

  private:
    std::uint64_t size_;
    std::uint64_t users_per_ca_;
    std::uint32_t ca_count_;
    Day validity_days_;
    std::vector<Day> revocation_day_;      // kNeverDay when never revoked
    std::vector<Serial> revoked_serials_;  // sorted
    std::vector<HoldInterval> holds_;      // sorted by serial
};

}  // namespace revoc
