// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revoc/cert.hpp"

namespace revoc {

// Standard link names used by the simulator. OCSP adds per-edge names of its
// own ("r1->r2" etc).
inline constexpr std::string_view kLinkCaToDir = "ca->dir";
inline constexpr std::string_view kLinkDirToUser = "dir->user";
inline constexpr std::string_view kLinkCaToUser = "ca->user";  // certificate distribution

// Per-link, per-tick request and byte counters. One kilobyte is 1000 bytes
// for cost purposes.
class TrafficLedger {
  public:
    struct Counters {
        std::uint64_t requests = 0;
        std::uint64_t bytes = 0;
    };

    explicit TrafficLedger(Tick horizon_ticks) : horizon_(horizon_ticks) {}

    void add(std::string_view link, Tick t, std::uint64_t requests, std::uint64_t bytes);

    std::uint64_t total_bytes() const;
    std::uint64_t total_requests() const;
    std::uint64_t link_bytes(std::string_view link) const;
    std::uint64_t link_requests(std::string_view link) const;

    // highest per-tick request count on `link`, ignoring ticks before `from`
    std::uint64_t peak_requests(std::string_view link, Tick from = 0) const;
    std::vector<std::uint64_t> request_series(std::string_view link) const;

    double cost(double cost_per_kb) const { return double(total_bytes()) / 1000.0 * cost_per_kb; }
    double link_cost(std::string_view link, double cost_per_kb) const {
        return double(link_bytes(link)) / 1000.0 * cost_per_kb;
    }

    Tick horizon_ticks() const { return horizon_; }
    const std::map<std::string, std::vector<Counters>, std::less<>>& links() const {
        return links_;
    }

    // "tick,link,requests,bytes" rows; zero rows omitted
    void write_csv(std::ostream& os) const;

  private:
    Tick horizon_;
    std::map<std::string, std::vector<Counters>, std::less<>> links_;
};

}  // namespace revoc
