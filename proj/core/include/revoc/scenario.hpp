// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revoc/cert.hpp"

namespace revoc {

enum class SchemeKind : std::uint8_t {
    CrlFull,
    CrlDelta,
    CrlSegmented,
    CrlOverIssued,
    CrlOverIssuedDelta,
    Crs,
    Hcrs,
    Crt,
    NnAuthDict,
    Ocsp,
};

std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);  // throws std::invalid_argument

struct ConfigError : std::runtime_error {
    ConfigError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

// One simulation run: a certificate population, a revocation process, a
// verifier workload and a scheme. Parsed from "key = value" text files.
struct Scenario {
    std::string name = "scenario";
    std::uint64_t population = 1000;
    std::uint64_t users_per_ca = 1000;
    double revoked_fraction = 0.1;
    double validations_per_day = 5.0;
    double cost_per_kb = 0.02;
    SchemeKind scheme = SchemeKind::CrlFull;
    Day horizon_days = 30;
    Day warm_up_days = 0;
    std::uint64_t seed = 42;
    bool verifier_cache = true;
    Day validity_days = 365;
    std::size_t hash_width = 32;  // 13 = paper-mode chains, 32 = modern
    std::uint64_t cert_body_bytes = 512;
    double hold_fraction = 0.0;

    // scheme parameters
    Day crl_period_days = 14;
    std::uint32_t over_issue_factor = 1;
    std::uint32_t segment_count = 1;
    std::uint32_t stagger_count = 1;
    std::uint32_t crs_serial_bits = 0;  // 0 = smallest fit for users_per_ca
    Tick ocsp_ttl_ticks = 24;

    void validate() const;  // throws std::invalid_argument
    std::string describe() const;
};

Scenario parse_scenario(std::istream& in);          // throws ConfigError
Scenario parse_scenario_file(const std::string& path);  // adds file errors

}  // namespace revoc
