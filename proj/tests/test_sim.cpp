// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "revoc/population.hpp"
#include "revoc/scheme.hpp"
#include "revoc/sim.hpp"

using namespace revoc;

namespace {

Scenario small_scenario(SchemeKind kind) {
    Scenario sc;
    sc.name = "unit";
    sc.population = 400;
    sc.users_per_ca = 200;  // two CAs
    sc.revoked_fraction = 0.15;
    sc.validations_per_day = 6;
    sc.horizon_days = 8;
    sc.validity_days = 8;
    sc.crl_period_days = 2;
    sc.over_issue_factor = 2;
    sc.segment_count = 4;
    sc.stagger_count = 2;
    sc.scheme = kind;
    sc.seed = 11;
    sc.hash_width = 13;
    return sc;
}

}  // namespace

TEST_CASE("every scheme runs clean through the audit") {
    for (SchemeKind kind :
         {SchemeKind::CrlFull, SchemeKind::CrlDelta, SchemeKind::CrlSegmented,
          SchemeKind::CrlOverIssued, SchemeKind::CrlOverIssuedDelta, SchemeKind::Crs,
          SchemeKind::Hcrs, SchemeKind::Crt, SchemeKind::NnAuthDict, SchemeKind::Ocsp}) {
        CAPTURE(scheme_name(kind));
        RunResult rr = run_simulation(small_scenario(kind));
        CHECK(rr.audit.checks == rr.validations);
        CHECK(rr.audit.mismatches == 0);
        if (rr.audit.mismatches) MESSAGE(rr.audit.first_mismatch);
        CHECK(rr.validations > 0);
        CHECK(rr.ledger.link_bytes(kLinkDirToUser) > 0);
    }
}

TEST_CASE("identical scenario and seed give identical artifacts") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    RunResult a = run_simulation(sc);
    RunResult b = run_simulation(sc);
    std::ostringstream csv_a, csv_b;
    a.ledger.write_csv(csv_a);
    b.ledger.write_csv(csv_b);
    CHECK(csv_a.str() == csv_b.str());

    auto cmp_a = run_comparison(sc, {SchemeKind::CrlFull, SchemeKind::Crs});
    auto cmp_b = run_comparison(sc, {SchemeKind::CrlFull, SchemeKind::Crs});
    std::ostringstream ca, cb;
    write_compare_csv(ca, cmp_a);
    write_compare_csv(cb, cmp_b);
    CHECK(ca.str() == cb.str());
    CHECK(ca.str().find("crl,") != std::string::npos);
    CHECK(ca.str().find("crs,") != std::string::npos);
}

TEST_CASE("ledger aggregates are sums of per-tick entries") {
    RunResult rr = run_simulation(small_scenario(SchemeKind::Crs));
    std::uint64_t total = 0;
    for (const auto& [link, series] : rr.ledger.links()) {
        std::uint64_t link_sum = 0;
        for (const auto& c : series) link_sum += c.bytes;
        CHECK(link_sum == rr.ledger.link_bytes(link));
        total += link_sum;
    }
    CHECK(total == rr.ledger.total_bytes());
}

TEST_CASE("no validations means no downstream traffic") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    sc.validations_per_day = 0;
    RunResult rr = run_simulation(sc);
    CHECK(rr.validations == 0);
    CHECK(rr.ledger.link_bytes(kLinkDirToUser) == 0);
    CHECK(rr.ledger.link_bytes(kLinkCaToDir) > 0);  // pushes still happen
}

TEST_CASE("cost equals bytes times the kilobyte price, exactly") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    sc.cost_per_kb = 0.02;
    RunResult rr = run_simulation(sc);
    CostReport cr = cost_report(rr);
    CHECK(cr.total == double(rr.ledger.total_bytes()) / 1000.0 * 0.02);

    sc.cost_per_kb = 0.0;
    RunResult free_run = run_simulation(sc);
    CHECK(cost_report(free_run).total == 0.0);
    CHECK(free_run.ledger.total_bytes() == rr.ledger.total_bytes());
}

TEST_CASE("cold caches make downstream bytes linear in the validation rate") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    sc.population = 2000;
    sc.users_per_ca = 2000;
    sc.verifier_cache = false;
    sc.validations_per_day = 5;
    RunResult lo = run_simulation(sc);
    sc.validations_per_day = 10;
    RunResult hi = run_simulation(sc);
    double ratio = double(hi.ledger.link_bytes(kLinkDirToUser)) /
                   double(lo.ledger.link_bytes(kLinkDirToUser));
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.1);
}

TEST_CASE("summary text carries the audit and the model-dependent banner") {
    RunResult rr = run_simulation(small_scenario(SchemeKind::Crs));
    std::ostringstream os;
    write_summary(os, rr);
    CHECK(os.str().find("audit mismatches: 0") != std::string::npos);
    CHECK(os.str().find("model-dependent") != std::string::npos);
}

TEST_CASE("scenario parsing and diagnostics") {
    SUBCASE("a full valid file") {
        std::istringstream in(
            "# demo\n"
            "name = parse-check\n"
            "scheme = crl-overissued\n"
            "population = 1000\n"
            "users_per_ca = 500\n"
            "revoked_fraction = 0.2\n"
            "validations_per_day = 5\n"
            "cost_per_kb = 0.02\n"
            "horizon_days = 10\n"
            "validity_days = 20\n"
            "crl_period_days = 2\n"
            "over_issue_factor = 4\n"
            "seed = 7\n");
        Scenario sc = parse_scenario(in);
        CHECK(sc.name == "parse-check");
        CHECK(sc.scheme == SchemeKind::CrlOverIssued);
        CHECK(sc.population == 1000);
        CHECK(sc.over_issue_factor == 4);
    }
    SUBCASE("unknown keys are rejected with the line number") {
        std::istringstream in("population = 10\nbogus_key = 3\n");
        try {
            parse_scenario(in);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
        }
    }
    SUBCASE("bad values are rejected") {
        std::istringstream in("population = many\n");
        CHECK_THROWS_AS((void)parse_scenario(in), ConfigError);
    }
    SUBCASE("invariant violations are rejected") {
        std::istringstream in("revoked_fraction = 1.5\n");
        CHECK_THROWS_AS((void)parse_scenario(in), ConfigError);
        std::istringstream in2("horizon_days = 30\nvalidity_days = 10\n");
        CHECK_THROWS_AS((void)parse_scenario(in2), ConfigError);
    }
    SUBCASE("scheme names round trip") {
        for (SchemeKind k :
             {SchemeKind::CrlFull, SchemeKind::CrlDelta, SchemeKind::CrlSegmented,
              SchemeKind::CrlOverIssued, SchemeKind::CrlOverIssuedDelta, SchemeKind::Crs,
              SchemeKind::Hcrs, SchemeKind::Crt, SchemeKind::NnAuthDict, SchemeKind::Ocsp})
            CHECK(parse_scheme(scheme_name(k)) == k);
        CHECK_THROWS_AS((void)parse_scheme("nope"), std::invalid_argument);
    }
}

TEST_CASE("population model is seed-deterministic and consistent") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    PopulationModel a(sc, sc.seed), b(sc, sc.seed);
    CHECK(a.revoked_serials() == b.revoked_serials());
    CHECK(a.revoked_serials().size() == std::uint64_t(400 * 0.15));
    CHECK(a.ca_count() == 2);
    for (Serial s : a.revoked_serials()) {
        Day d = a.revocation_day(s);
        CHECK(d >= 1);
        CHECK(d <= sc.horizon_days);
        CHECK(a.revoked_at(s, d));
        CHECK_FALSE(a.revoked_at(s, d - 1));
    }
    RevocationState st = a.state_at(0, sc.horizon_days);
    for (const auto& e : st.revoked) {
        CHECK(a.issuer_of(e.serial) == 0);
        CHECK(e.revocation_day <= sc.horizon_days);
    }
}

TEST_CASE("tree maintenance telemetry: daily rebuilds dwarf path updates") {
    Scenario sc = small_scenario(SchemeKind::Crt);
    RunResult crt = run_simulation(sc);
    sc.scheme = SchemeKind::NnAuthDict;
    RunResult nn = run_simulation(sc);
    CHECK(crt.nodes_touched > 0);
    CHECK(nn.nodes_touched > 0);
    CHECK(crt.nodes_touched >= nn.nodes_touched);
}

TEST_CASE("hierarchical updates ship fewer entries than per-certificate ones") {
    Scenario sc = small_scenario(SchemeKind::Hcrs);
    RunResult hcrs = run_simulation(sc);
    sc.scheme = SchemeKind::Crs;
    RunResult crs = run_simulation(sc);
    // one value per 1-bit certificate per day vs a cover of the clean leaves
    CHECK(crs.update_entries == std::uint64_t(sc.population) * sc.horizon_days);
    CHECK(hcrs.update_entries < crs.update_entries);
}

TEST_CASE("over-issuance lowers the post-warm-up peak") {
    Scenario sc = small_scenario(SchemeKind::CrlFull);
    sc.population = 2000;
    sc.users_per_ca = 2000;
    sc.validations_per_day = 20;
    sc.horizon_days = 10;
    sc.validity_days = 10;
    sc.crl_period_days = 1;
    sc.warm_up_days = 4;
    RunResult base = run_simulation(sc);
    sc.scheme = SchemeKind::CrlOverIssued;
    sc.over_issue_factor = 4;
    RunResult spread = run_simulation(sc);
    CHECK(spread.peak_dir_user_requests() < base.peak_dir_user_requests());
}
