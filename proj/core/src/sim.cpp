// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/sim.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "revoc/population.hpp"
#include "revoc/scheme.hpp"

namespace revoc {

std::uint64_t RunResult::peak_dir_user_requests() const {
    return ledger.peak_requests(kLinkDirToUser, scenario.warm_up_days * kTicksPerDay);
}

RunResult run_simulation(const Scenario& sc) {
    sc.validate();
    PopulationModel pop(sc, sc.seed);
    auto adapter = make_adapter(sc, pop);

    Tick horizon = sc.horizon_days * kTicksPerDay;
    RunResult rr{sc, TrafficLedger(horizon), {}, 0, 0, 0, 0, 0};
    rr.cert_size_bytes = sc.cert_body_bytes + adapter->cert_overhead_bytes();
    rr.ledger.add(kLinkCaToUser, 0, pop.size(), pop.size() * rr.cert_size_bytes);

    std::mt19937_64 rng(sc.seed ^ 0x76616c6964617465ull);
    std::uniform_int_distribution<Serial> target(0, pop.size() - 1);
    const double per_tick = sc.validations_per_day / double(kTicksPerDay);

    for (Tick t = 0; t < horizon; ++t) {
        adapter->on_tick(t, rr.ledger);
        if (per_tick <= 0.0) continue;
        std::poisson_distribution<int> arrivals(per_tick);
        for (std::uint64_t v = 0; v < pop.size(); ++v) {
            int n = arrivals(rng);
            for (int j = 0; j < n; ++j) {
                Serial s = target(rng);
                auto val = adapter->validate(v, s, t, rr.ledger);
                ++rr.validations;
                ++rr.audit.checks;
                rr.proof_bytes_total += val.proof_bytes;
                bool want_revoked = pop.revoked_at(s, val.basis_day);
                bool ok = want_revoked ? val.verdict == SchemeVerdict::Revoked
                                       : val.verdict == SchemeVerdict::Valid;
                if (!ok) {
                    ++rr.audit.mismatches;
                    if (rr.audit.first_mismatch.empty()) {
                        std::ostringstream os;
                        os << "serial " << s << " tick " << t << " basis day " << val.basis_day
                           << " verdict " << int(val.verdict) << " expected "
                           << (want_revoked ? "revoked" : "valid");
                        rr.audit.first_mismatch = os.str();
                    }
                }
            }
        }
    }
    rr.update_entries = adapter->update_entries();
    rr.nodes_touched = adapter->nodes_touched();
    return rr;
}

CostReport cost_report(const RunResult& rr) {
    CostReport cr;
    const double price = rr.scenario.cost_per_kb;
    std::uint64_t known = 0;
    cr.ca_to_dir = rr.ledger.link_cost(kLinkCaToDir, price);
    cr.dir_to_user = rr.ledger.link_cost(kLinkDirToUser, price);
    cr.cert_distribution = rr.ledger.link_cost(kLinkCaToUser, price);
    known += rr.ledger.link_bytes(kLinkCaToDir);
    known += rr.ledger.link_bytes(kLinkDirToUser);
    known += rr.ledger.link_bytes(kLinkCaToUser);
    std::uint64_t total_bytes = rr.ledger.total_bytes();
    cr.other = double(total_bytes - known) / 1000.0 * price;
    cr.total = double(total_bytes) / 1000.0 * price;
    std::uint64_t cert_bytes = rr.ledger.link_bytes(kLinkCaToUser);
    cr.revocation_share =
        total_bytes ? double(total_bytes - cert_bytes) / double(total_bytes) : 0.0;
    return cr;
}

void write_summary(std::ostream& os, const RunResult& rr) {
    CostReport cr = cost_report(rr);
    os << "scenario: " << rr.scenario.name << " (scheme " << scheme_name(rr.scenario.scheme)
       << ", seed " << rr.scenario.seed << ")\n";
    os << "population: " << rr.scenario.population << " across "
       << (rr.scenario.population + rr.scenario.users_per_ca - 1) / rr.scenario.users_per_ca
       << " CA(s), horizon " << rr.scenario.horizon_days << " day(s)\n";
    os << "certificate size: " << rr.cert_size_bytes << " bytes\n";
    os << "validations: " << rr.validations << ", audit mismatches: " << rr.audit.mismatches
       << "\n";
    if (!rr.audit.first_mismatch.empty())
        os << "first mismatch: " << rr.audit.first_mismatch << "\n";
    os << "bytes: ca->dir " << rr.ledger.link_bytes(kLinkCaToDir) << ", dir->user "
       << rr.ledger.link_bytes(kLinkDirToUser) << ", cert distribution "
       << rr.ledger.link_bytes(kLinkCaToUser) << ", total " << rr.ledger.total_bytes() << "\n";
    os << "peak dir->user requests/tick";
    if (rr.scenario.warm_up_days > 0)
        os << " (after day " << rr.scenario.warm_up_days << ")";
    os << ": " << rr.peak_dir_user_requests() << "\n";
    os << std::fixed << std::setprecision(1);
    os << "avg proof bytes per validation: " << rr.avg_proof_bytes() << "\n";
    os << std::setprecision(2);
    os << "cost @ " << rr.scenario.cost_per_kb << "/KB: ca->dir " << cr.ca_to_dir
       << ", dir->user " << cr.dir_to_user << ", cert distribution " << cr.cert_distribution;
    if (cr.other > 0.0) os << ", other " << cr.other;
    os << ", total " << cr.total << "\n";
    os << std::setprecision(4);
    os << "revocation share of traffic: " << cr.revocation_share << "\n";
    os << "note: monetary figures are model-dependent; they follow entirely from this "
          "scenario's size and price assumptions\n";
    os.unsetf(std::ios::fixed);
}

std::vector<RunResult> run_comparison(const Scenario& base,
                                      const std::vector<SchemeKind>& schemes) {
    std::vector<RunResult> out;
    out.reserve(schemes.size());
    for (SchemeKind kind : schemes) {
        Scenario sc = base;
        sc.scheme = kind;
        out.push_back(run_simulation(sc));
    }
    return out;
}

void write_compare_csv(std::ostream& os, const std::vector<RunResult>& results) {
    os << "scheme,cert_bytes,ca_to_dir_bytes,dir_to_user_bytes,cert_dist_bytes,other_bytes,"
          "total_bytes,peak_dir_user_requests,avg_proof_bytes,update_entries,nodes_touched,"
          "cost_total\n";
    for (const auto& rr : results) {
        CostReport cr = cost_report(rr);
        std::uint64_t known = rr.ledger.link_bytes(kLinkCaToDir) +
                              rr.ledger.link_bytes(kLinkDirToUser) +
                              rr.ledger.link_bytes(kLinkCaToUser);
        os << scheme_name(rr.scenario.scheme) << ',' << rr.cert_size_bytes << ','
           << rr.ledger.link_bytes(kLinkCaToDir) << ',' << rr.ledger.link_bytes(kLinkDirToUser)
           << ',' << rr.ledger.link_bytes(kLinkCaToUser) << ','
           << rr.ledger.total_bytes() - known << ',' << rr.ledger.total_bytes() << ','
           << rr.peak_dir_user_requests() << ',' << std::fixed << std::setprecision(1)
           << rr.avg_proof_bytes() << ',' << rr.update_entries << ',' << rr.nodes_touched << ','
           << std::setprecision(2) << cr.total << '\n';
        os.unsetf(std::ios::fixed);
    }
}

}  // namespace revoc
