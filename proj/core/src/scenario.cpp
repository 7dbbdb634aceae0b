// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/scenario.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "revoc/digest.hpp"

namespace revoc {

namespace {

constexpr std::pair<SchemeKind, std::string_view> kSchemeNames[] = {
    {SchemeKind::CrlFull, "crl"},
    {SchemeKind::CrlDelta, "crl-delta"},
    {SchemeKind::CrlSegmented, "crl-segmented"},
    {SchemeKind::CrlOverIssued, "crl-overissued"},
    {SchemeKind::CrlOverIssuedDelta, "crl-overissued-delta"},
    {SchemeKind::Crs, "crs"},
    {SchemeKind::Hcrs, "hcrs"},
    {SchemeKind::Crt, "crt"},
    {SchemeKind::NnAuthDict, "nn"},
    {SchemeKind::Ocsp, "ocsp"},
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) {
    for (const auto& [k, n] : kSchemeNames)
        if (k == kind) return n;
    return "?";
}

SchemeKind parse_scheme(std::string_view name) {
    for (const auto& [k, n] : kSchemeNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

void Scenario::validate() const {
    if (population < 1) throw std::invalid_argument("population must be >= 1");
    if (users_per_ca < 1) throw std::invalid_argument("users_per_ca must be >= 1");
    if (revoked_fraction < 0.0 || revoked_fraction > 1.0)
        throw std::invalid_argument("revoked_fraction must lie in [0, 1]");
    if (validations_per_day < 0.0)
        throw std::invalid_argument("validations_per_day must be >= 0");
    if (cost_per_kb < 0.0) throw std::invalid_argument("cost_per_kb must be >= 0");
    if (horizon_days < 1) throw std::invalid_argument("horizon_days must be >= 1");
    if (warm_up_days >= horizon_days)
        throw std::invalid_argument("warm_up_days must be below horizon_days");
    if (validity_days < horizon_days)
        throw std::invalid_argument("validity_days must cover the horizon");
    if (hash_width < 1 || hash_width > Digest::kMaxBytes)
        throw std::invalid_argument("hash_width must be 1..32 octets");
    if (crl_period_days < 1) throw std::invalid_argument("crl_period_days must be >= 1");
    if (over_issue_factor < 1) throw std::invalid_argument("over_issue_factor must be >= 1");
    if (crl_period_days * kTicksPerDay % over_issue_factor != 0)
        throw std::invalid_argument("over_issue_factor must divide the period's tick count");
    if (segment_count < 1) throw std::invalid_argument("segment_count must be >= 1");
    if (stagger_count < 1 || stagger_count > segment_count)
        throw std::invalid_argument("stagger_count must be 1..segment_count");
    if (crl_period_days * kTicksPerDay % stagger_count != 0)
        throw std::invalid_argument("stagger_count must divide the period's tick count");
    if (hold_fraction < 0.0 || hold_fraction > 1.0)
        throw std::invalid_argument("hold_fraction must lie in [0, 1]");
    if (crs_serial_bits > 30) throw std::invalid_argument("crs_serial_bits must be <= 30");
}

std::string Scenario::describe() const {
    std::ostringstream os;
    os << "name = " << name << '\n'
       << "scheme = " << scheme_name(scheme) << '\n'
       << "population = " << population << '\n'
       << "users_per_ca = " << users_per_ca << '\n'
       << "revoked_fraction = " << revoked_fraction << '\n'
       << "validations_per_day = " << validations_per_day << '\n'
       << "cost_per_kb = " << cost_per_kb << '\n'
       << "horizon_days = " << horizon_days << '\n'
       << "warm_up_days = " << warm_up_days << '\n'
       << "seed = " << seed << '\n'
       << "verifier_cache = " << (verifier_cache ? "on" : "off") << '\n'
       << "validity_days = " << validity_days << '\n'
       << "hash_width = " << hash_width << '\n'
       << "cert_body_bytes = " << cert_body_bytes << '\n'
       << "hold_fraction = " << hold_fraction << '\n'
       << "crl_period_days = " << crl_period_days << '\n'
       << "over_issue_factor = " << over_issue_factor << '\n'
       << "segment_count = " << segment_count << '\n'
       << "stagger_count = " << stagger_count << '\n'
       << "crs_serial_bits = " << crs_serial_bits << '\n'
       << "ocsp_ttl_ticks = " << ocsp_ttl_ticks << '\n';
    return os.str();
}

Scenario parse_scenario(std::istream& in) {
    Scenario sc;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line, "expected 'key = value'");
        std::string key(trim(text.substr(0, eq)));
        std::string value(trim(text.substr(eq + 1)));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (value.empty()) throw ConfigError(line, "empty value for '" + key + "'");

        auto as_u64 = [&]() -> std::uint64_t {
            try {
                std::size_t used = 0;
                std::uint64_t v = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw ConfigError(line, "'" + key + "' needs an unsigned integer, got '" +
                                            value + "'");
            }
        };
        auto as_double = [&]() -> double {
            try {
                std::size_t used = 0;
                double v = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw ConfigError(line, "'" + key + "' needs a number, got '" + value + "'");
            }
        };
        auto as_bool = [&]() -> bool {
            if (value == "on" || value == "true" || value == "1") return true;
            if (value == "off" || value == "false" || value == "0") return false;
            throw ConfigError(line, "'" + key + "' needs on/off, got '" + value + "'");
        };

        if (key == "name") sc.name = value;
        else if (key == "population") sc.population = as_u64();
        else if (key == "users_per_ca") sc.users_per_ca = as_u64();
        else if (key == "revoked_fraction") sc.revoked_fraction = as_double();
        else if (key == "validations_per_day") sc.validations_per_day = as_double();
        else if (key == "cost_per_kb") sc.cost_per_kb = as_double();
        else if (key == "scheme") {
            try {
                sc.scheme = parse_scheme(value);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(line, e.what());
            }
        }
        else if (key == "horizon_days") sc.horizon_days = static_cast<Day>(as_u64());
        else if (key == "warm_up_days") sc.warm_up_days = static_cast<Day>(as_u64());
        else if (key == "seed") sc.seed = as_u64();
        else if (key == "verifier_cache") sc.verifier_cache = as_bool();
        else if (key == "validity_days") sc.validity_days = static_cast<Day>(as_u64());
        else if (key == "hash_width") sc.hash_width = static_cast<std::size_t>(as_u64());
        else if (key == "cert_body_bytes") sc.cert_body_bytes = as_u64();
        else if (key == "hold_fraction") sc.hold_fraction = as_double();
        else if (key == "crl_period_days") sc.crl_period_days = static_cast<Day>(as_u64());
        else if (key == "over_issue_factor") sc.over_issue_factor = static_cast<std::uint32_t>(as_u64());
        else if (key == "segment_count") sc.segment_count = static_cast<std::uint32_t>(as_u64());
        else if (key == "stagger_count") sc.stagger_count = static_cast<std::uint32_t>(as_u64());
        else if (key == "crs_serial_bits") sc.crs_serial_bits = static_cast<std::uint32_t>(as_u64());
        else if (key == "ocsp_ttl_ticks") sc.ocsp_ttl_ticks = static_cast<Tick>(as_u64());
        else throw ConfigError(line, "unknown key '" + key + "'");
    }
    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(line, e.what());
    }
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open scenario file '" + path + "'");
    return parse_scenario(in);
}

}  // namespace revoc
