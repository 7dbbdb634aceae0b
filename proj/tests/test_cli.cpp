// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "revoc_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = std::string(REVOC_CLI_BIN) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::string golden(const std::string& name) {
    return slurp(fs::path(REVOC_GOLDEN_DIR) / name);
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("demos match their golden traces and are deterministic") {
    CliResult crt = run_cli("demo-crt");
    CHECK(crt.exit_code == 0);
    CHECK(crt.out == golden("demo_crt.txt"));

    CliResult crt2 = run_cli("demo-crt");
    CHECK(crt2.out == crt.out);

    CliResult hcrs = run_cli("demo-hcrs");
    CHECK(hcrs.exit_code == 0);
    CHECK(hcrs.out == golden("demo_hcrs.txt"));

    CliResult hcrs2 = run_cli("demo-hcrs");
    CHECK(hcrs2.out == hcrs.out);
}

TEST_CASE("demo variants") {
    CliResult none = run_cli("demo-hcrs --revoked \"\"");
    CHECK(none.exit_code == 0);
    CHECK(none.out.find("verification nodes (1): (root)") != std::string::npos);

    CliResult all = run_cli("demo-hcrs --revoked all");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("verification nodes (0):") != std::string::npos);

    CliResult extra = run_cli("demo-crt --revoke 200:500");
    CHECK(extra.exit_code == 0);
    CHECK(extra.out.find("statements (12):") != std::string::npos);
}

TEST_CASE("prove/verify round trips, tampering trips the verifier") {
    fs::path dir = scratch_dir();
    write_text(dir / "revoked.csv", "serial,revocation_day,reason\n156,3,0\n343,5,1\n344,5,0\n");
    write_text(dir / "cas.csv", "ca,serial\n100,156\n100,343\n100,344\n300,987\n");

    SUBCASE("crl") {
        fs::path artifact = dir / "list.bin";
        CliResult p = run_cli("prove --scheme crl --revocations " + (dir / "revoked.csv").string() +
                              " --ca 7 --day 6 --period 14 --out " + artifact.string());
        REQUIRE(p.exit_code == 0);
        CHECK(run_cli("verify --proof " + artifact.string()).exit_code == 0);

        CliResult inspect = run_cli("inspect " + artifact.string() + " --format csv");
        CHECK(inspect.exit_code == 0);
        CHECK(inspect.out == "serial,revocation_day,reason\n156,3,0\n343,5,1\n344,5,0\n");

        auto bytes = slurp(artifact);
        bytes[bytes.size() / 2] ^= 0x20;
        write_text(artifact, bytes);
        CHECK(run_cli("verify --proof " + artifact.string()).exit_code == 3);
    }
    SUBCASE("crt") {
        fs::path artifact = dir / "crt.bin";
        CliResult p = run_cli("prove --scheme crt --revocations " + (dir / "cas.csv").string() +
                              " --ca 100 --serial 600 --out " + artifact.string());
        REQUIRE(p.exit_code == 0);
        CHECK(p.out.find("root ") != std::string::npos);
        CliResult v = run_cli("verify --proof " + artifact.string());
        CHECK(v.exit_code == 0);
        CHECK(v.out.find("valid") != std::string::npos);

        CliResult ins = run_cli("inspect " + artifact.string());
        CHECK(ins.exit_code == 0);
        CHECK(ins.out.find("query CA 100 serial 600") != std::string::npos);

        auto bytes = slurp(artifact);
        bytes[20] ^= 0x01;  // inside the root digest
        write_text(artifact, bytes);
        CHECK(run_cli("verify --proof " + artifact.string()).exit_code == 3);
    }
    SUBCASE("nn membership and non-membership") {
        fs::path member = dir / "nn_member.bin";
        CliResult p1 = run_cli("prove --scheme nn --revocations " +
                               (dir / "revoked.csv").string() + " --ca 7 --serial 343 --day 6" +
                               " --out " + member.string());
        REQUIRE(p1.exit_code == 0);
        CliResult v1 = run_cli("verify --proof " + member.string());
        CHECK(v1.exit_code == 0);
        CHECK(v1.out.find("revoked") != std::string::npos);

        fs::path absent = dir / "nn_absent.bin";
        CliResult p2 = run_cli("prove --scheme nn --revocations " +
                               (dir / "revoked.csv").string() + " --ca 7 --serial 200 --day 6" +
                               " --out " + absent.string());
        REQUIRE(p2.exit_code == 0);
        CliResult v2 = run_cli("verify --proof " + absent.string());
        CHECK(v2.exit_code == 0);
        CHECK(v2.out.find("valid") != std::string::npos);

        auto bytes = slurp(absent);
        bytes[bytes.size() - 3] ^= 0x40;
        write_text(absent, bytes);
        CHECK(run_cli("verify --proof " + absent.string()).exit_code == 3);
    }
}

TEST_CASE("simulate: summary, artifacts, csv") {
    fs::path dir = scratch_dir();
    write_text(dir / "tiny.scn",
               "name = tiny\n"
               "scheme = crl\n"
               "population = 200\n"
               "users_per_ca = 200\n"
               "revoked_fraction = 0.1\n"
               "validations_per_day = 4\n"
               "cost_per_kb = 0.02\n"
               "horizon_days = 4\n"
               "validity_days = 4\n"
               "crl_period_days = 2\n");
    fs::path out_dir = dir / "run1";
    CliResult r = run_cli("simulate --scenario " + (dir / "tiny.scn").string() + " --out " +
                          out_dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("audit mismatches: 0") != std::string::npos);
    CHECK(r.out.find("model-dependent") != std::string::npos);
    std::string ledger = slurp(out_dir / "ledger.csv");
    CHECK(ledger.rfind("tick,link,requests,bytes\n", 0) == 0);
    CHECK(slurp(out_dir / "summary.txt") == r.out);

    CliResult csv = run_cli("simulate --scenario " + (dir / "tiny.scn").string() +
                            " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == ledger);

    CliResult inspected = run_cli("inspect " + (dir / "tiny.scn").string());
    CHECK(inspected.exit_code == 0);
    CHECK(inspected.out.find("scheme = crl") != std::string::npos);
}

TEST_CASE("compare emits one deterministic row per scheme") {
    fs::path dir = scratch_dir();
    write_text(dir / "cmp.scn",
               "name = cmp\n"
               "population = 300\n"
               "users_per_ca = 300\n"
               "revoked_fraction = 0.1\n"
               "validations_per_day = 4\n"
               "horizon_days = 4\n"
               "validity_days = 4\n"
               "crl_period_days = 2\n"
               "hash_width = 13\n");
    CliResult a = run_cli("compare --scenario " + (dir / "cmp.scn").string() +
                          " --schemes crl,crs,nn");
    CHECK(a.exit_code == 0);
    std::istringstream lines(a.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("scheme,", 0) == 0);
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 3);
    CliResult b = run_cli("compare --scenario " + (dir / "cmp.scn").string() +
                          " --schemes crl,crs,nn");
    CHECK(b.out == a.out);
}

TEST_CASE("config errors carry line numbers and exit 2") {
    fs::path dir = scratch_dir();
    write_text(dir / "bad.scn", "population = 10\nwhatever = 3\n");
    CliResult r = run_cli("simulate --scenario " + (dir / "bad.scn").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    write_text(dir / "bad2.scn", "population = ten\n");
    CliResult r2 = run_cli("simulate --scenario " + (dir / "bad2.scn").string());
    CHECK(r2.exit_code == 2);
    CHECK(r2.err.find("line 1") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("simulate --no-such-flag").exit_code == 1);
    CHECK(run_cli("not-a-subcommand").exit_code == 1);
    CHECK(run_cli("prove --scheme hcrs --revocations x --out y").exit_code == 1);
}
