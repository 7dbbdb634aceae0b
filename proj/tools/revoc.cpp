// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
//
// revoc: run revocation-scheme simulations, reproduce the built-in worked
// examples, and generate/verify status proofs from files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "revoc/crl.hpp"
#include "revoc/crt.hpp"
#include "revoc/hcrs.hpp"
#include "revoc/population.hpp"
#include "revoc/scenario.hpp"
#include "revoc/sim.hpp"
#include "revoc/twothree.hpp"

namespace {

using namespace revoc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;

constexpr std::uint8_t kArtifactCrl = 1;
constexpr std::uint8_t kArtifactCrt = 2;
constexpr std::uint8_t kArtifactNn = 3;
constexpr char kMagic[4] = {'R', 'V', 'K', '1'};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

Bytes wrap_artifact(std::uint8_t scheme, std::size_t width, std::span<const std::uint8_t> body) {
    ByteWriter w;
    w.raw({reinterpret_cast<const std::uint8_t*>(kMagic), 4});
    w.u8(scheme);
    w.u8(static_cast<std::uint8_t>(width));
    w.raw(body);
    return w.take();
}

struct Artifact {
    std::uint8_t scheme = 0;
    std::size_t width = 0;
    Bytes body;
};

Artifact unwrap_artifact(std::span<const std::uint8_t> data) {
    ByteReader r(data);
    Bytes magic = r.raw(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0)
        throw DecodeError("not a revoc artifact (bad magic)");
    Artifact a;
    a.scheme = r.u8();
    a.width = r.u8();
    if (a.width < 1 || a.width > Digest::kMaxBytes) throw DecodeError("bad digest width octet");
    a.body = r.raw(r.remaining());
    return a;
}

// ---- revocation input files --------------------------------------------

// "serial,revocation_day[,reason]" per line for single-CA schemes
std::vector<RevokedEntry> load_entries_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<RevokedEntry> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line[0] == '#') continue;
        if (n == 1 && line.rfind("serial", 0) == 0) continue;  // header
        RevokedEntry e;
        char comma;
        std::istringstream is(line);
        unsigned reason = 0;
        if (!(is >> e.serial)) throw ConfigError(n, "expected a serial number");
        if (is >> comma) {
            if (comma != ',') throw ConfigError(n, "expected ','");
            if (!(is >> e.revocation_day)) throw ConfigError(n, "expected a revocation day");
            if (is >> comma) {
                if (comma != ',') throw ConfigError(n, "expected ','");
                if (!(is >> reason) || reason > 255) throw ConfigError(n, "bad reason code");
            }
        }
        e.reason = static_cast<std::uint8_t>(reason);
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(),
              [](const RevokedEntry& a, const RevokedEntry& b) { return a.serial < b.serial; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].serial == out[i - 1].serial)
            throw ConfigError(0, "duplicate serial " + std::to_string(out[i].serial));
    return out;
}

// "ca,serial" per line for the multi-CA tree
std::vector<std::pair<std::uint64_t, std::vector<Serial>>> load_ca_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::map<std::uint64_t, std::vector<Serial>> by_ca;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line[0] == '#') continue;
        if (n == 1 && line.rfind("ca", 0) == 0) continue;
        std::istringstream is(line);
        std::uint64_t ca;
        Serial serial;
        char comma;
        if (!(is >> ca >> comma >> serial) || comma != ',')
            throw ConfigError(n, "expected 'ca,serial'");
        by_ca[ca].push_back(serial);
    }
    std::vector<std::pair<std::uint64_t, std::vector<Serial>>> out;
    for (auto& [ca, serials] : by_ca) {
        std::sort(serials.begin(), serials.end());
        serials.erase(std::unique(serials.begin(), serials.end()), serials.end());
        out.emplace_back(ca, std::move(serials));
    }
    return out;
}

// ---- demo: certificate revocation tree ----------------------------------

int run_demo_crt(const std::vector<std::string>& extra_revocations, std::size_t width,
                 std::ostream& os) {
    std::map<std::uint64_t, std::vector<Serial>> by_ca = {
        {100, {156, 343, 344}},
        {200, {}},
        {300, {987}},
    };
    for (const auto& spec : extra_revocations) {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw UsageError("--revoke needs CA:SERIAL, got '" + spec + "'");
        std::uint64_t ca = std::stoull(spec.substr(0, colon));
        Serial serial = std::stoull(spec.substr(colon + 1));
        auto& list = by_ca[ca];
        if (std::find(list.begin(), list.end(), serial) == list.end()) list.push_back(serial);
        std::sort(list.begin(), list.end());
    }
    std::vector<std::pair<std::uint64_t, std::vector<Serial>>> cas(by_ca.begin(), by_ca.end());

    auto statements = crt_build_statements(cas);
    os << "statements (" << statements.size() << "):\n";
    for (std::size_t i = 0; i < statements.size(); ++i)
        os << "  N[0," << i << "] " << statements[i].to_string() << "\n";

    CrtTree tree = crt_build_tree(statements, width);
    os << "tree levels:";
    for (const auto& level : tree.levels) os << " " << level.size();
    os << "\n";
    os << "root N[" << tree.levels.size() - 1 << ",0] = " << tree.root().hex() << "\n";

    const std::uint64_t query_ca = 100;
    const Serial query_serial = 600;
    os << "query: CA hash " << query_ca << ", serial " << query_serial << "\n";
    CrtProof proof = crt_lookup(tree, query_ca, query_serial);
    os << "matched statement N[0," << proof.leaf_index << "]: " << proof.statement.to_string()
       << "\n";

    os << "supporting nodes:";
    {
        std::size_t j = proof.leaf_index;
        for (std::size_t level = 0; level < proof.co_path.size(); ++level) {
            auto side = proof.co_path[level].first;
            if (side == CrtProof::Side::Left)
                os << " N[" << level << "," << j - 1 << "]";
            else if (side == CrtProof::Side::Right)
                os << " N[" << level << "," << j + 1 << "]";
            j /= 2;
        }
        os << "\n";
    }

    // refold, narrating every step
    {
        std::size_t j = proof.leaf_index;
        Digest cur = crt_leaf_digest(proof.statement, width);
        os << "N[0," << j << "] = " << cur.hex() << "\n";
        for (std::size_t level = 0; level < proof.co_path.size(); ++level) {
            const auto& [side, sibling] = proof.co_path[level];
            std::size_t parent = j / 2;
            if (side == CrtProof::Side::Left) {
                cur = merkle_pair(sibling, cur);
                os << "N[" << level + 1 << "," << parent << "] = H(N[" << level << "," << j - 1
                   << "] | N[" << level << "," << j << "]) = " << cur.hex() << "\n";
            } else if (side == CrtProof::Side::Right) {
                cur = merkle_pair(cur, sibling);
                os << "N[" << level + 1 << "," << parent << "] = H(N[" << level << "," << j
                   << "] | N[" << level << "," << j + 1 << "]) = " << cur.hex() << "\n";
            } else {
                cur = merkle_single(cur);
                os << "N[" << level + 1 << "," << parent << "] = H(N[" << level << "," << j
                   << "]) = " << cur.hex() << "\n";
            }
            j = parent;
        }
    }

    CrtStatus status = crt_verify(tree.root(), proof, query_ca, query_serial);
    const char* verdict = status == CrtStatus::Valid      ? "valid"
                          : status == CrtStatus::Revoked  ? "revoked"
                          : status == CrtStatus::UnknownCa ? "unknown CA"
                                                           : "INVALID";
    os << "verification against the published root: " << verdict << "\n";
    return status == CrtStatus::Invalid ? kExitVerification : kExitOk;
}

// ---- demo: hierarchical scheme ------------------------------------------

int run_demo_hcrs(const std::string& revoked_arg, Day day, std::uint64_t seed,
                  std::ostream& os) {
    constexpr std::uint8_t depth = 4;
    std::vector<std::uint32_t> revoked;
    if (revoked_arg == "all") {
        for (std::uint32_t i = 0; i < 16; ++i) revoked.push_back(i);
    } else if (!revoked_arg.empty()) {
        std::istringstream is(revoked_arg);
        std::string item;
        while (std::getline(is, item, ',')) {
            auto node = TreeNodeId::parse(item, depth);
            if (!node || node->depth != depth)
                throw UsageError("--revoked items must be " + std::to_string(depth) +
                                 "-bit leaves, got '" + item + "'");
            revoked.push_back(node->path);
        }
    }
    std::sort(revoked.begin(), revoked.end());
    revoked.erase(std::unique(revoked.begin(), revoked.end()), revoked.end());

    os << "binary tree over " << (1u << depth) << " leaves\n";
    os << "revoked leaves:";
    if (revoked.empty()) os << " (none)";
    for (auto leaf : revoked) os << " " << TreeNodeId::leaf(leaf, depth).to_string();
    os << "\n";

    // ancestors of revoked leaves can no longer vouch for anyone
    std::set<TreeNodeId> excluded;
    for (auto leaf : revoked) {
        TreeNodeId n = TreeNodeId::leaf(leaf, depth);
        while (n.depth > 0) {
            n = n.parent();
            excluded.insert(n);
        }
    }
    std::vector<TreeNodeId> excluded_list(excluded.begin(), excluded.end());
    std::sort(excluded_list.begin(), excluded_list.end(),
              [](const TreeNodeId& a, const TreeNodeId& b) {
                  if (a.depth != b.depth) return a.depth > b.depth;
                  return a.path < b.path;
              });
    os << "excluded interior nodes:";
    if (excluded_list.empty()) os << " (none)";
    for (const auto& n : excluded_list) os << " " << n.to_string();
    os << "\n";

    auto cover = hcrs_cover(depth, revoked);
    os << "verification nodes (" << cover.size() << "):";
    if (cover.empty()) os << " (none)";
    for (const auto& n : cover) os << " " << n.to_string();
    os << "\n";

    ChainParams params{365, 104};
    HcrsAuthority authority(depth, params, Signer{7, params.octets()}, seed);
    for (auto leaf : revoked) authority.revoke(leaf);
    VerificationNodeSet update = authority.daily_update(day);
    os << "day-" << day << " values:\n";
    for (const auto& [node, value] : update.values)
        os << "  " << node.to_string() << " -> " << value.hex() << "\n";

    HcrsDirectory directory;
    directory.ingest(update, 7, depth);

    // condition 1: every non-revoked leaf has a covering ancestor
    // condition 2: no revoked leaf has one
    bool ok = true;
    for (std::uint32_t leaf = 0; leaf < (1u << depth); ++leaf) {
        bool is_revoked = std::binary_search(revoked.begin(), revoked.end(), leaf);
        auto ans = directory.answer(leaf);
        if (ans.refused != is_revoked) ok = false;
        if (!ans.refused) {
            auto path = authority.cert_path(leaf);
            if (hcrs_verify(path, ans.node, ans.value, day) != HcrsStatus::Valid) ok = false;
        }
    }
    os << "cover conditions and round-trip verification: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerification;
}

// ---- prove / verify ------------------------------------------------------

int run_prove(const std::string& scheme, const std::string& revocations, std::uint64_t ca,
              Serial serial, Day day, Day period, std::size_t width, const std::string& out) {
    if (scheme == "crl") {
        auto entries = load_entries_csv(revocations);
        RevocationState st;
        st.day = day;
        st.revoked = std::move(entries);
        Crl crl = issue_crl(st, day, IssuanceSchedule{period, 1, {}}, Signer{ca, width});
        write_file(out, wrap_artifact(kArtifactCrl, width, crl.encode()));
        std::cout << "crl: " << crl.entries.size() << " entries, day " << day << ", issuer "
                  << ca << "\n";
        return kExitOk;
    }
    if (scheme == "crt") {
        auto cas = load_ca_csv(revocations);
        CrtTree tree = crt_build_tree(crt_build_statements(cas), width);
        CrtProof proof = crt_lookup(tree, ca, serial);
        Signer signer{~std::uint64_t{0}, width};
        ByteWriter w;
        w.u64(signer.id);
        w.raw(tree.root().bytes());
        signer.sign(tree.root().bytes()).encode(w);
        w.u64(ca);
        w.u64(serial);
        w.blob(proof.encode());
        write_file(out, wrap_artifact(kArtifactCrt, width, w.bytes()));
        std::cout << "crt: root " << tree.root().hex() << ", statement N[0," << proof.leaf_index
                  << "]\n";
        return kExitOk;
    }
    if (scheme == "nn") {
        auto entries = load_entries_csv(revocations);
        TwoThreeTree tree(width);
        for (const auto& e : entries) tree.insert(e.serial, e.revocation_day);
        TtProof proof = tree.prove(serial);
        Signer signer{ca, width};
        Digest root = tree.root_hash();
        ByteWriter w;
        w.u64(signer.id);
        w.u32(day);
        w.raw(root.bytes());
        ByteWriter bulletin;
        bulletin.u32(day);
        bulletin.raw(root.bytes());
        signer.sign(bulletin.bytes()).encode(w);
        w.u64(serial);
        w.blob(proof.encode());
        write_file(out, wrap_artifact(kArtifactNn, width, w.bytes()));
        std::cout << "nn: root " << root.hex() << ", "
                  << (proof.kind == TtProof::Kind::Membership ? "membership" : "non-membership")
                  << " proof for serial " << serial << "\n";
        return kExitOk;
    }
    throw UsageError("prove supports schemes crl, crt, nn");
}

int run_verify(const std::string& path, const std::string& root_hex, std::ostream& os) {
    Artifact a = unwrap_artifact(read_file(path));
    if (a.scheme == kArtifactCrl) {
        Crl crl = Crl::decode(a.body, a.width);
        if (!crl.signature.verify(crl.issuer, crl.signed_payload())) {
            os << "signature check failed\n";
            return kExitVerification;
        }
        for (std::size_t i = 1; i < crl.entries.size(); ++i)
            if (crl.entries[i].serial <= crl.entries[i - 1].serial) {
                os << "entry order violated\n";
                return kExitVerification;
            }
        os << "crl ok: issuer " << crl.issuer << ", day " << crl.this_update << ", "
           << crl.entries.size() << " entries\n";
        return kExitOk;
    }
    if (a.scheme == kArtifactCrt) {
        ByteReader r(a.body);
        std::uint64_t signer = r.u64();
        Digest root{r.raw(a.width)};
        AuthBytes sig = AuthBytes::decode(r, a.width);
        std::uint64_t ca = r.u64();
        Serial serial = r.u64();
        Bytes proof_bytes = r.blob();
        r.expect_done();
        if (!root_hex.empty() && from_hex(root_hex) != Bytes(root.bytes().begin(),
                                                             root.bytes().end())) {
            os << "root digest differs from --root\n";
            return kExitVerification;
        }
        if (!sig.verify(signer, root.bytes())) {
            os << "root signature check failed\n";
            return kExitVerification;
        }
        CrtProof proof = CrtProof::decode(proof_bytes, a.width);
        CrtStatus status = crt_verify(root, proof, ca, serial);
        if (status == CrtStatus::Invalid) {
            os << "proof does not fold to the root\n";
            return kExitVerification;
        }
        os << "crt ok: CA " << ca << " serial " << serial << " -> "
           << (status == CrtStatus::Revoked    ? "revoked"
               : status == CrtStatus::UnknownCa ? "unknown CA"
                                                : "valid")
           << "\n";
        return kExitOk;
    }
    if (a.scheme == kArtifactNn) {
        ByteReader r(a.body);
        std::uint64_t signer = r.u64();
        Day day = r.u32();
        Digest root{r.raw(a.width)};
        AuthBytes sig = AuthBytes::decode(r, a.width);
        Serial serial = r.u64();
        Bytes proof_bytes = r.blob();
        r.expect_done();
        if (!root_hex.empty() && from_hex(root_hex) != Bytes(root.bytes().begin(),
                                                             root.bytes().end())) {
            os << "root digest differs from --root\n";
            return kExitVerification;
        }
        ByteWriter bulletin;
        bulletin.u32(day);
        bulletin.raw(root.bytes());
        if (!sig.verify(signer, bulletin.bytes())) {
            os << "bulletin signature check failed\n";
            return kExitVerification;
        }
        TtProof proof = TtProof::decode(proof_bytes, a.width);
        TtStatus status = tt_verify(root, proof, serial);
        if (status == TtStatus::Invalid) {
            os << "proof does not fold to the root\n";
            return kExitVerification;
        }
        os << "nn ok: serial " << serial << " -> "
           << (status == TtStatus::Revoked ? "revoked" : "valid") << "\n";
        return kExitOk;
    }
    os << "unknown artifact scheme tag " << unsigned(a.scheme) << "\n";
    return kExitVerification;
}

int run_inspect(const std::string& path, const std::string& format, std::ostream& os) {
    Bytes data = read_file(path);
    if (data.size() >= 4 && std::memcmp(data.data(), kMagic, 4) == 0) {
        Artifact a = unwrap_artifact(data);
        if (a.scheme == kArtifactCrl) {
            Crl crl = Crl::decode(a.body, a.width);
            if (format == "csv") {
                os << crl.to_csv();
            } else {
                os << "crl artifact: issuer " << crl.issuer << ", this_update "
                   << crl.this_update << ", next_update " << crl.next_update << ", "
                   << crl.entries.size() << " entries, width " << a.width << "\n";
            }
            return kExitOk;
        }
        if (a.scheme == kArtifactCrt) {
            ByteReader r(a.body);
            std::uint64_t signer = r.u64();
            Digest root{r.raw(a.width)};
            AuthBytes::decode(r, a.width);
            std::uint64_t ca = r.u64();
            Serial serial = r.u64();
            Bytes proof_bytes = r.blob();
            CrtProof proof = CrtProof::decode(proof_bytes, a.width);
            os << "crt proof artifact: signer " << signer << ", root " << root.hex()
               << ", query CA " << ca << " serial " << serial << ", statement N[0,"
               << proof.leaf_index << "], co-path length " << proof.co_path.size() << "\n"
               << "statement: " << proof.statement.to_string() << "\n";
            return kExitOk;
        }
        if (a.scheme == kArtifactNn) {
            ByteReader r(a.body);
            std::uint64_t signer = r.u64();
            Day day = r.u32();
            Digest root{r.raw(a.width)};
            AuthBytes::decode(r, a.width);
            Serial serial = r.u64();
            Bytes proof_bytes = r.blob();
            TtProof proof = TtProof::decode(proof_bytes, a.width);
            const char* kind = proof.kind == TtProof::Kind::Membership      ? "membership"
                               : proof.kind == TtProof::Kind::NonMembership ? "non-membership"
                                                                            : "empty-tree";
            os << "nn proof artifact: signer " << signer << ", day " << day << ", root "
               << root.hex() << ", query serial " << serial << ", " << kind << " proof\n";
            return kExitOk;
        }
        os << "unknown artifact scheme tag " << unsigned(a.scheme) << "\n";
        return kExitVerification;
    }
    // not an artifact: treat as a scenario file
    Scenario sc = parse_scenario_file(path);
    os << sc.describe();
    return kExitOk;
}

// ---- simulate / compare --------------------------------------------------

int run_simulate(const std::string& scenario_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed, const std::string& format) {
    Scenario sc = parse_scenario_file(scenario_path);
    if (seed) sc.seed = *seed;
    RunResult rr = run_simulation(sc);
    if (format == "csv")
        rr.ledger.write_csv(std::cout);
    else
        write_summary(std::cout, rr);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream ledger_csv(out_dir + "/ledger.csv");
        rr.ledger.write_csv(ledger_csv);
        std::ofstream summary(out_dir + "/summary.txt");
        write_summary(summary, rr);
    }
    return rr.audit.mismatches == 0 ? kExitOk : kExitVerification;
}

int run_compare(const std::string& scenario_path, const std::string& schemes_arg,
                const std::string& out_path, std::optional<std::uint64_t> seed) {
    Scenario base = parse_scenario_file(scenario_path);
    if (seed) base.seed = *seed;
    std::vector<SchemeKind> kinds;
    std::istringstream is(schemes_arg);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            kinds.push_back(parse_scheme(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (kinds.empty()) throw UsageError("--schemes needs a comma-separated list");
    auto results = run_comparison(base, kinds);
    if (out_path.empty()) {
        write_compare_csv(std::cout, results);
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write '" + out_path + "'");
        write_compare_csv(out, results);
    }
    for (const auto& rr : results)
        if (rr.audit.mismatches != 0) return kExitVerification;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate revocation paradigms: simulator, demos and proof tools"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    bool seed_set = false;
    app.add_flag_callback("--version", [] {
        std::cout << "revoc 0.1.0\n";
        std::exit(kExitOk);
    });

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run one scenario and report traffic/cost");
    std::string sim_scenario, sim_out, sim_format = "text";
    simulate->add_option("--scenario", sim_scenario, "scenario file")->required();
    simulate->add_option("--out", sim_out, "directory for ledger.csv and summary.txt");
    simulate->add_option("--format", sim_format, "stdout format")
        ->check(CLI::IsMember({"text", "csv"}));
    simulate->add_option("--seed", seed, "override the scenario seed")
        ->each([&seed_set](const std::string&) { seed_set = true; });

    // compare
    auto* compare = app.add_subcommand("compare", "run several schemes over one scenario");
    std::string cmp_scenario, cmp_schemes, cmp_out;
    compare->add_option("--scenario", cmp_scenario, "scenario file")->required();
    compare->add_option("--schemes", cmp_schemes, "comma-separated scheme list")->required();
    compare->add_option("--out", cmp_out, "CSV output path (default stdout)");
    compare->add_option("--seed", seed, "override the scenario seed")
        ->each([&seed_set](const std::string&) { seed_set = true; });

    // demo-crt
    auto* demo_crt = app.add_subcommand("demo-crt", "three-CA revocation tree walk-through");
    std::vector<std::string> crt_extra;
    demo_crt->add_option("--revoke", crt_extra, "extra revocation CA:SERIAL (repeatable)");

    // demo-hcrs
    auto* demo_hcrs =
        app.add_subcommand("demo-hcrs", "16-leaf hierarchical scheme walk-through");
    std::string hcrs_revoked = "0100,0101,1111";
    Day hcrs_day = 1;
    demo_hcrs->add_option("--revoked", hcrs_revoked,
                          "comma-separated leaf bit strings, or 'all', or ''");
    demo_hcrs->add_option("--day", hcrs_day, "chain day to open")->check(CLI::Range(1, 365));
    demo_hcrs->add_option("--seed", seed, "CA master seed");

    // prove
    auto* prove = app.add_subcommand("prove", "build a status artifact from a revocation file");
    std::string prove_scheme, prove_revocations, prove_out;
    std::uint64_t prove_ca = 0;
    Serial prove_serial = 0;
    Day prove_day = 1, prove_period = 14;
    std::size_t prove_width = kModernWidthBytes;
    prove->add_option("--scheme", prove_scheme, "crl, crt or nn")->required();
    prove->add_option("--revocations", prove_revocations, "CSV of revocations")->required();
    prove->add_option("--ca", prove_ca, "CA id (crl/nn signer, crt query CA hash)");
    prove->add_option("--serial", prove_serial, "serial to prove (crt/nn)");
    prove->add_option("--day", prove_day, "issuance day");
    prove->add_option("--period", prove_period, "validity period in days (crl)");
    prove->add_option("--width", prove_width, "digest width in octets")->check(CLI::Range(1, 32));
    prove->add_option("--out", prove_out, "artifact output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a status artifact");
    std::string verify_path, verify_root;
    verify->add_option("--proof", verify_path, "artifact path")->required();
    verify->add_option("--root", verify_root, "expected root digest (hex)");

    // inspect
    auto* inspect = app.add_subcommand("inspect", "describe an artifact or scenario file");
    std::string inspect_path, inspect_format = "text";
    inspect->add_option("file", inspect_path, "artifact or scenario file")->required();
    inspect->add_option("--format", inspect_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed())
            return run_simulate(sim_scenario, sim_out,
                                seed_set ? std::optional(seed) : std::nullopt, sim_format);
        if (compare->parsed())
            return run_compare(cmp_scenario, cmp_schemes, cmp_out,
                               seed_set ? std::optional(seed) : std::nullopt);
        if (demo_crt->parsed()) return run_demo_crt(crt_extra, kModernWidthBytes, std::cout);
        if (demo_hcrs->parsed()) return run_demo_hcrs(hcrs_revoked, hcrs_day, seed, std::cout);
        if (prove->parsed())
            return run_prove(prove_scheme, prove_revocations, prove_ca, prove_serial, prove_day,
                             prove_period, prove_width, prove_out);
        if (verify->parsed()) {
            try {
                return run_verify(verify_path, verify_root, std::cout);
            } catch (const DecodeError& e) {
                std::cout << "artifact decode failed: " << e.what() << "\n";
                return kExitVerification;
            }
        }
        if (inspect->parsed()) return run_inspect(inspect_path, inspect_format, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
