// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/scheme.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "revoc/crl.hpp"
#include "revoc/crs.hpp"
#include "revoc/crt.hpp"
#include "revoc/hcrs.hpp"
#include "revoc/ocsp.hpp"
#include "revoc/twothree.hpp"

namespace revoc {

namespace {

Day day_at(Tick t) { return t / kTicksPerDay + 1; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

bool entry_contains(const std::vector<RevokedEntry>& entries, Serial s) {
    auto it = std::lower_bound(entries.begin(), entries.end(), s,
                               [](const RevokedEntry& e, Serial v) { return e.serial < v; });
    return it != entries.end() && it->serial == s;
}

// ---- CRL family ---------------------------------------------------------

struct CrlInstance {
    Crl crl;
    Tick expiry = 0;
    std::uint64_t bytes = 0;
};

// Plain and over-issued full CRLs. Verifiers hold a copy until its validity
// window ends and re-fetch the newest instance on their next validation;
// initial copies are spread uniformly over the instances alive at tick 0, so
// the run starts from the steady state instead of a synchronized cold start.
class CrlFullAdapter : public SchemeAdapter {
  public:
    CrlFullAdapter(const Scenario& sc, const PopulationModel& pop, bool over_issued)
        : pop_(pop),
          cache_(sc.verifier_cache),
          period_ticks_(sc.crl_period_days * kTicksPerDay),
          k_(over_issued ? sc.over_issue_factor : 1),
          schedule_{sc.crl_period_days, over_issued ? sc.over_issue_factor : 1, {}},
          width_(sc.hash_width),
          name_(over_issued ? "crl-overissued" : "crl") {
        sub_ticks_ = period_ticks_ / k_;
        registry_.resize(pop_.ca_count());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            RevocationState empty;
            empty.day = 0;
            for (std::uint32_t j = 1; j < k_; ++j) {
                CrlInstance inst;
                inst.crl = issue_crl(empty, 0, schedule_, signer);
                inst.expiry = j * sub_ticks_;
                inst.bytes = inst.crl.encode().size();
                registry_[ca].push_back(std::move(inst));
            }
        }
        slots_.assign(pop_.size() * pop_.ca_count(), 0);
        for (std::uint64_t v = 0; v < pop_.size(); ++v) {
            auto cohort = static_cast<std::int32_t>(splitmix64(v ^ sc.seed) % k_);
            for (CaId ca = 0; ca < pop_.ca_count(); ++ca)
                slots_[v * pop_.ca_count() + ca] = cohort;
        }
    }

    std::string_view name() const override { return name_; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % sub_ticks_ != 0) return;
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            CrlInstance inst;
            inst.crl = issue_crl(pop_.state_at(ca, day_at(t)), day_at(t), schedule_, signer);
            inst.expiry = t + period_ticks_;
            inst.bytes = inst.crl.encode().size();
            update_entries_ += inst.crl.entries.size();
            ledger.add(kLinkCaToDir, t, 1, inst.bytes);
            registry_[ca].push_back(std::move(inst));
        }
    }

    Validation validate(std::uint64_t v, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        auto& reg = registry_[ca];
        std::int32_t& slot = slots_[v * pop_.ca_count() + ca];
        Validation out;
        if (!cache_ || slot < 0 || reg[slot].expiry <= t) {
            slot = static_cast<std::int32_t>(reg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, reg[slot].bytes);
            out.proof_bytes = reg[slot].bytes;
        }
        const CrlInstance& inst = reg[slot];
        out.verdict = inst.crl.contains(s) ? SchemeVerdict::Revoked : SchemeVerdict::Valid;
        out.basis_day = inst.crl.this_update;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    bool cache_;
    Tick period_ticks_;
    std::uint32_t k_;
    Tick sub_ticks_;
    IssuanceSchedule schedule_;
    std::size_t width_;
    std::string_view name_;
    std::vector<std::vector<CrlInstance>> registry_;
    std::vector<std::int32_t> slots_;
    std::uint64_t update_entries_ = 0;
};

// Segments, optionally staggered over the period. Verifiers cache per
// segment and fetch the segment a validation needs when their copy is stale.
class CrlSegmentedAdapter : public SchemeAdapter {
  public:
    CrlSegmentedAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop),
          cache_(sc.verifier_cache),
          period_ticks_(sc.crl_period_days * kTicksPerDay),
          segments_(sc.segment_count),
          groups_(sc.stagger_count),
          schedule_{sc.crl_period_days, 1, {}},
          width_(sc.hash_width) {
        for (std::uint32_t g = 1; g < groups_; ++g)
            schedule_.stagger_offsets.push_back(double(g) / groups_);
        registry_.resize(std::size_t{pop_.ca_count()} * segments_);
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            RevocationState empty;
            for (std::uint32_t seg = 0; seg < segments_; ++seg) {
                CrlInstance inst;
                inst.crl = issue_crl(empty, 0, schedule_, signer);
                inst.expiry = offset_of(seg);
                inst.bytes = inst.crl.encode().size();
                registry_[ca * segments_ + seg].push_back(std::move(inst));
            }
        }
        slots_.assign(pop_.size() * pop_.ca_count() * segments_, 0);
    }

    std::string_view name() const override { return "crl-segmented"; }

    Tick offset_of(std::uint32_t seg) const {
        return (seg % groups_) * (period_ticks_ / groups_);
    }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        for (std::uint32_t seg = 0; seg < segments_; ++seg) {
            if (t % period_ticks_ != offset_of(seg)) continue;
            for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
                Signer signer{ca, width_};
                RevocationState part;
                part.day = day_at(t);
                for (const auto& e : pop_.state_at(ca, day_at(t)).revoked)
                    if (e.serial % segments_ == seg) part.revoked.push_back(e);
                CrlInstance inst;
                inst.crl = issue_crl(part, day_at(t), schedule_, signer);
                inst.expiry = t + period_ticks_;
                inst.bytes = inst.crl.encode().size();
                update_entries_ += inst.crl.entries.size();
                ledger.add(kLinkCaToDir, t, 1, inst.bytes);
                registry_[ca * segments_ + seg].push_back(std::move(inst));
            }
        }
    }

    Validation validate(std::uint64_t v, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        auto seg = static_cast<std::uint32_t>(s % segments_);
        auto& reg = registry_[ca * segments_ + seg];
        std::int32_t& slot = slots_[(v * pop_.ca_count() + ca) * segments_ + seg];
        Validation out;
        if (!cache_ || slot < 0 || reg[slot].expiry <= t) {
            slot = static_cast<std::int32_t>(reg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, reg[slot].bytes);
            out.proof_bytes = reg[slot].bytes;
        }
        const CrlInstance& inst = reg[slot];
        out.verdict = inst.crl.contains(s) ? SchemeVerdict::Revoked : SchemeVerdict::Valid;
        out.basis_day = inst.crl.this_update;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    bool cache_;
    Tick period_ticks_;
    std::uint32_t segments_;
    std::uint32_t groups_;
    IssuanceSchedule schedule_;
    std::size_t width_;
    std::vector<std::vector<CrlInstance>> registry_;
    std::vector<std::int32_t> slots_;
    std::uint64_t update_entries_ = 0;
};

struct DeltaInstance {
    DeltaCrl delta;
    Tick expiry = 0;
    std::uint64_t bytes = 0;
    std::vector<RevokedEntry> merged;  // base + delta view (daily-delta variant)
};

// Base CRL per period plus a daily difference list against the latest base.
class CrlDeltaAdapter : public SchemeAdapter {
  public:
    CrlDeltaAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop),
          cache_(sc.verifier_cache),
          period_ticks_(sc.crl_period_days * kTicksPerDay),
          schedule_{sc.crl_period_days, 1, {}},
          width_(sc.hash_width) {
        bases_.resize(pop_.ca_count());
        deltas_.resize(pop_.ca_count());
        base_slot_.assign(pop_.size() * pop_.ca_count(), -1);
        delta_slot_.assign(pop_.size() * pop_.ca_count(), -1);
    }

    std::string_view name() const override { return "crl-delta"; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            Day day = day_at(t);
            if (t % period_ticks_ == 0) {
                CrlInstance inst;
                inst.crl = issue_crl(pop_.state_at(ca, day), day, schedule_, signer);
                inst.expiry = t + period_ticks_;
                inst.bytes = inst.crl.encode().size();
                update_entries_ += inst.crl.entries.size();
                ledger.add(kLinkCaToDir, t, 1, inst.bytes);
                bases_[ca].push_back(std::move(inst));
            }
            if (t % kTicksPerDay == 0) {
                const Crl& base = bases_[ca].back().crl;
                DeltaInstance d;
                d.delta = issue_delta(pop_.state_at(ca, day), base, day, signer);
                d.expiry = t + kTicksPerDay;
                d.bytes = d.delta.encode().size();
                d.merged = reconstruct(base, d.delta);
                update_entries_ += d.delta.added.size();
                ledger.add(kLinkCaToDir, t, 1, d.bytes);
                deltas_[ca].push_back(std::move(d));
            }
        }
    }

    Validation validate(std::uint64_t v, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        std::size_t key = v * pop_.ca_count() + ca;
        auto& dreg = deltas_[ca];
        auto& breg = bases_[ca];
        Validation out;
        std::int32_t& dslot = delta_slot_[key];
        if (!cache_ || dslot < 0 || dreg[dslot].expiry <= t) {
            dslot = static_cast<std::int32_t>(dreg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, dreg[dslot].bytes);
            out.proof_bytes += dreg[dslot].bytes;
        }
        const DeltaInstance& d = dreg[dslot];
        std::int32_t& bslot = base_slot_[key];
        if (!cache_ || bslot < 0 || breg[bslot].crl.this_update != d.delta.base_ref) {
            bslot = static_cast<std::int32_t>(breg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, breg[bslot].bytes);
            out.proof_bytes += breg[bslot].bytes;
        }
        out.verdict =
            entry_contains(d.merged, s) ? SchemeVerdict::Revoked : SchemeVerdict::Valid;
        out.basis_day = d.delta.this_update;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    bool cache_;
    Tick period_ticks_;
    IssuanceSchedule schedule_;
    std::size_t width_;
    std::vector<std::vector<CrlInstance>> bases_;
    std::vector<std::vector<DeltaInstance>> deltas_;
    std::vector<std::int32_t> base_slot_, delta_slot_;
    std::uint64_t update_entries_ = 0;
};

// Over-issued full CRLs, each accompanied by a difference list whose base is
// the oldest not-yet-expired full CRL. Any alive full CRL plus the newest
// delta gives the current view, so verifiers keep their cohort spread.
class CrlOverIssuedDeltaAdapter : public SchemeAdapter {
  public:
    CrlOverIssuedDeltaAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop),
          cache_(sc.verifier_cache),
          period_ticks_(sc.crl_period_days * kTicksPerDay),
          k_(sc.over_issue_factor),
          schedule_{sc.crl_period_days, sc.over_issue_factor, {}},
          width_(sc.hash_width) {
        sub_ticks_ = period_ticks_ / k_;
        fulls_.resize(pop_.ca_count());
        deltas_.resize(pop_.ca_count());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            RevocationState empty;
            for (std::uint32_t j = 1; j < k_; ++j) {
                CrlInstance inst;
                inst.crl = issue_crl(empty, 0, schedule_, signer);
                inst.expiry = j * sub_ticks_;
                inst.bytes = inst.crl.encode().size();
                fulls_[ca].push_back(std::move(inst));
            }
        }
        full_slot_.assign(pop_.size() * pop_.ca_count(), 0);
        for (std::uint64_t v = 0; v < pop_.size(); ++v) {
            auto cohort = static_cast<std::int32_t>(splitmix64(v ^ sc.seed) % k_);
            for (CaId ca = 0; ca < pop_.ca_count(); ++ca)
                full_slot_[v * pop_.ca_count() + ca] = cohort;
        }
        delta_slot_.assign(pop_.size() * pop_.ca_count(), -1);
    }

    std::string_view name() const override { return "crl-overissued-delta"; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % sub_ticks_ != 0) return;
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            Day day = day_at(t);
            RevocationState st = pop_.state_at(ca, day);
            CrlInstance inst;
            inst.crl = issue_crl(st, day, schedule_, signer);
            inst.expiry = t + period_ticks_;
            inst.bytes = inst.crl.encode().size();
            update_entries_ += inst.crl.entries.size();
            ledger.add(kLinkCaToDir, t, 1, inst.bytes);
            fulls_[ca].push_back(std::move(inst));

            const Crl& oldest = oldest_alive(ca, t).crl;
            DeltaInstance d;
            d.delta = issue_delta(st, oldest, day, signer);
            d.expiry = t + sub_ticks_;
            d.bytes = d.delta.encode().size();
            update_entries_ += d.delta.added.size();
            ledger.add(kLinkCaToDir, t, 1, d.bytes);
            deltas_[ca].push_back(std::move(d));
        }
    }

    const CrlInstance& oldest_alive(CaId ca, Tick t) const {
        for (const auto& inst : fulls_[ca])
            if (inst.expiry > t) return inst;
        return fulls_[ca].back();
    }

    Validation validate(std::uint64_t v, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        std::size_t key = v * pop_.ca_count() + ca;
        auto& freg = fulls_[ca];
        auto& dreg = deltas_[ca];
        Validation out;
        std::int32_t& fslot = full_slot_[key];
        if (!cache_ || fslot < 0 || freg[fslot].expiry <= t) {
            fslot = static_cast<std::int32_t>(freg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, freg[fslot].bytes);
            out.proof_bytes += freg[fslot].bytes;
        }
        std::int32_t& dslot = delta_slot_[key];
        if (!cache_ || dslot < 0 || dreg[dslot].expiry <= t) {
            dslot = static_cast<std::int32_t>(dreg.size() - 1);
            ledger.add(kLinkDirToUser, t, 1, dreg[dslot].bytes);
            out.proof_bytes += dreg[dslot].bytes;
        }
        // the delta's base is the oldest alive full CRL, so the union with
        // any alive full CRL is the complete view as of the delta's day
        bool revoked = freg[fslot].crl.contains(s) || entry_contains(dreg[dslot].delta.added, s);
        out.verdict = revoked ? SchemeVerdict::Revoked : SchemeVerdict::Valid;
        out.basis_day = dreg[dslot].delta.this_update;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    bool cache_;
    Tick period_ticks_;
    std::uint32_t k_;
    Tick sub_ticks_;
    IssuanceSchedule schedule_;
    std::size_t width_;
    std::vector<std::vector<CrlInstance>> fulls_;
    std::vector<std::vector<DeltaInstance>> deltas_;
    std::vector<std::int32_t> full_slot_, delta_slot_;
    std::uint64_t update_entries_ = 0;
};

// ---- CRS ----------------------------------------------------------------

class CrsAdapter : public SchemeAdapter {
  public:
    CrsAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop), width_(sc.hash_width) {
        ChainParams params{sc.validity_days, static_cast<std::uint32_t>(sc.hash_width * 8)};
        std::uint32_t bits = sc.crs_serial_bits;
        if (bits == 0)
            bits = std::max<std::uint32_t>(
                1, static_cast<std::uint32_t>(std::bit_width(pop_.users_per_ca() - 1)));
        // chain caching is a pure CA-side speed/memory trade
        bool cache = (std::uint64_t(sc.validity_days) + 1) * pop_.users_per_ca() * width_ <=
                     (std::uint64_t{64} << 20);
        exts_.resize(pop_.size());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            authorities_.emplace_back(params, bits, signer, sc.seed ^ (0xc25ull + ca), cache);
            directories_.emplace_back();
            Serial first = pop_.ca_first_serial(ca);
            for (Serial local = 0; local < pop_.ca_population(ca); ++local)
                exts_[first + local] = authorities_[ca].issue(local, 0);
        }
        bitmap_bytes_ = ((std::size_t{1} << bits) + 7) / 8;
    }

    std::string_view name() const override { return "crs"; }
    std::size_t cert_overhead_bytes() const override { return 2 * width_ + 4; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % kTicksPerDay != 0) return;
        Day day = day_at(t);
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Serial first = pop_.ca_first_serial(ca);
            for (Serial local = 0; local < pop_.ca_population(ca); ++local)
                if (pop_.revocation_day(first + local) == day)
                    authorities_[ca].revoke(local, day);
            CrsDailyUpdate update = authorities_[ca].daily_update(day);
            update_entries_ += update.values.size();
            std::uint64_t bytes = update.encode().size();
            ledger.add(kLinkCaToDir, t, 1, bytes);
            directories_[ca].ingest(std::move(update), ca);
        }
    }

    Validation validate(std::uint64_t, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        auto ans = directories_[ca].answer(pop_.local_index(s));
        Validation out;
        std::uint64_t bytes;
        if (ans.value) {
            bytes = 1 + 4 + width_;
            switch (crs_verify(exts_[s], *ans.value, ans.day)) {
                case CrsStatus::Valid: out.verdict = SchemeVerdict::Valid; break;
                case CrsStatus::Revoked: out.verdict = SchemeVerdict::Revoked; break;
                case CrsStatus::Invalid: out.verdict = SchemeVerdict::Invalid; break;
            }
        } else {
            bytes = 1 + 4 + bitmap_bytes_ + AuthBytes::encoded_size(width_);
            out.verdict = SchemeVerdict::Unknown;
        }
        ledger.add(kLinkDirToUser, t, 1, bytes);
        out.proof_bytes = bytes;
        out.basis_day = ans.day;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    std::size_t width_;
    std::size_t bitmap_bytes_;
    std::vector<CrsAuthority> authorities_;
    std::vector<CrsDirectory> directories_;
    std::vector<CrsCertExtension> exts_;
    std::uint64_t update_entries_ = 0;
};

// ---- HCRS ---------------------------------------------------------------

class HcrsAdapter : public SchemeAdapter {
  public:
    HcrsAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop), width_(sc.hash_width) {
        ChainParams params{sc.validity_days, static_cast<std::uint32_t>(sc.hash_width * 8)};
        cert_paths_.resize(pop_.size());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            auto leaves = pop_.ca_population(ca);
            auto depth = static_cast<std::uint8_t>(
                std::max<std::uint32_t>(1, std::bit_width(leaves - 1)));
            Signer signer{ca, width_};
            authorities_.emplace_back(depth, params, signer, sc.seed ^ (0x4c5ull + ca));
            directories_.emplace_back();
            // pad to a full tree with permanently revoked virtual leaves
            for (std::uint32_t leaf = leaves; leaf < (1u << depth); ++leaf)
                authorities_[ca].revoke(leaf);
        }
    }

    std::string_view name() const override { return "hcrs"; }
    std::size_t cert_overhead_bytes() const override {
        return (authorities_[0].tree_depth() + 1) * width_ + 4;
    }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % kTicksPerDay != 0) return;
        Day day = day_at(t);
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Serial first = pop_.ca_first_serial(ca);
            for (Serial local = 0; local < pop_.ca_population(ca); ++local)
                if (pop_.revocation_day(first + local) == day)
                    authorities_[ca].revoke(static_cast<std::uint32_t>(local));
            VerificationNodeSet set = authorities_[ca].daily_update(day);
            update_entries_ += set.values.size();
            std::uint64_t bytes = set.encode().size();
            ledger.add(kLinkCaToDir, t, 1, bytes);
            directories_[ca].ingest(std::move(set), ca, authorities_[ca].tree_depth());
        }
    }

    Validation validate(std::uint64_t, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        auto local = static_cast<std::uint32_t>(pop_.local_index(s));
        auto ans = directories_[ca].answer(local);
        Validation out;
        out.basis_day = ans.day;
        std::uint64_t bytes;
        if (ans.refused) {
            bytes = 1 + 4;
            out.verdict = SchemeVerdict::Revoked;  // no value exists for a revoked leaf
        } else {
            bytes = 1 + 4 + 1 + 4 + width_;
            if (!cert_paths_[s]) cert_paths_[s] = authorities_[ca].cert_path(local);
            out.verdict = hcrs_verify(*cert_paths_[s], ans.node, ans.value, ans.day) ==
                                  HcrsStatus::Valid
                              ? SchemeVerdict::Valid
                              : SchemeVerdict::Invalid;
        }
        ledger.add(kLinkDirToUser, t, 1, bytes);
        out.proof_bytes = bytes;
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }

  private:
    const PopulationModel& pop_;
    std::size_t width_;
    std::vector<HcrsAuthority> authorities_;
    std::vector<HcrsDirectory> directories_;
    std::vector<std::optional<HcrsCertPath>> cert_paths_;
    std::uint64_t update_entries_ = 0;
};

// ---- CRT ----------------------------------------------------------------

class CrtAdapter : public SchemeAdapter {
  public:
    CrtAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop), width_(sc.hash_width), signer_{~std::uint64_t{0}, sc.hash_width} {
        // CA identity is a hash of the CA key; order CAs by it
        ca_hash_.resize(pop_.ca_count());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            ByteWriter w;
            w.u64(0x6361ull);  // context
            w.u64(ca);
            Digest d = derive_digest(w.bytes(), 8);
            std::uint64_t h = 0;
            for (std::uint8_t b : d.bytes()) h = (h << 8) | b;
            ca_hash_[ca] = h;
        }
        order_.resize(pop_.ca_count());
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) order_[ca] = ca;
        std::sort(order_.begin(), order_.end(),
                  [this](CaId a, CaId b) { return ca_hash_[a] < ca_hash_[b]; });
    }

    std::string_view name() const override { return "crt"; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % kTicksPerDay != 0) return;
        day_ = day_at(t);
        std::vector<std::pair<std::uint64_t, std::vector<Serial>>> cas;
        std::uint64_t list_bytes = 0;
        for (CaId ca : order_) {
            std::vector<Serial> serials;
            for (const auto& e : pop_.state_at(ca, day_).revoked) serials.push_back(e.serial);
            list_bytes += 4 + 13 * serials.size();
            cas.emplace_back(ca_hash_[ca], std::move(serials));
        }
        tree_ = crt_build_tree(crt_build_statements(cas), width_);
        nodes_touched_ += tree_->nodes_touched;
        update_entries_ += tree_->statements.size();
        root_sig_ = signer_.sign(tree_->root().bytes());
        // the CAs ship their lists to the tree issuer, which publishes a root
        ledger.add(kLinkCaToDir, t, pop_.ca_count(),
                   list_bytes + 4 + width_ + AuthBytes::encoded_size(width_));
    }

    Validation validate(std::uint64_t, Serial s, Tick t, TrafficLedger& ledger) override {
        CrtProof proof = crt_lookup(*tree_, ca_hash_[pop_.issuer_of(s)], s);
        std::uint64_t bytes =
            proof.encode().size() + 4 + width_ + AuthBytes::encoded_size(width_);
        ledger.add(kLinkDirToUser, t, 1, bytes);
        Validation out;
        out.proof_bytes = bytes;
        out.basis_day = day_;
        if (!root_sig_.verify(signer_.id, tree_->root().bytes())) {
            out.verdict = SchemeVerdict::Invalid;
            return out;
        }
        switch (crt_verify(tree_->root(), proof, ca_hash_[pop_.issuer_of(s)], s)) {
            case CrtStatus::Valid: out.verdict = SchemeVerdict::Valid; break;
            case CrtStatus::Revoked: out.verdict = SchemeVerdict::Revoked; break;
            case CrtStatus::UnknownCa: out.verdict = SchemeVerdict::Unknown; break;
            case CrtStatus::Invalid: out.verdict = SchemeVerdict::Invalid; break;
        }
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }
    std::uint64_t nodes_touched() const override { return nodes_touched_; }

  private:
    const PopulationModel& pop_;
    std::size_t width_;
    Signer signer_;
    std::vector<std::uint64_t> ca_hash_;
    std::vector<CaId> order_;
    std::optional<CrtTree> tree_;
    AuthBytes root_sig_;
    Day day_ = 0;
    std::uint64_t update_entries_ = 0;
    std::uint64_t nodes_touched_ = 0;
};

// ---- 2-3 tree dictionary ------------------------------------------------

class NnAdapter : public SchemeAdapter {
  public:
    NnAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop), width_(sc.hash_width) {
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            trees_.emplace_back(width_);
            bulletins_.emplace_back();
        }
    }

    std::string_view name() const override { return "nn"; }

    Bytes bulletin_payload(Day day, const Digest& root) const {
        ByteWriter w;
        w.u32(day);
        w.raw(root.bytes());
        return w.take();
    }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        if (t % kTicksPerDay != 0) return;
        day_ = day_at(t);
        for (CaId ca = 0; ca < pop_.ca_count(); ++ca) {
            Signer signer{ca, width_};
            std::size_t recomputed = 0;
            Serial first = pop_.ca_first_serial(ca);
            for (Serial local = 0; local < pop_.ca_population(ca); ++local) {
                Serial s = first + local;
                if (pop_.revocation_day(s) == day_) {
                    recomputed += trees_[ca].insert(s, day_).recomputed_digests;
                    ++update_entries_;
                }
            }
            nodes_touched_ += recomputed;
            bulletins_[ca] = signer.sign(bulletin_payload(day_, trees_[ca].root_hash()));
            // refreshed path nodes plus the signed root bulletin
            std::uint64_t bytes = recomputed * (width_ + 17) + 4 + width_ +
                                  AuthBytes::encoded_size(width_);
            ledger.add(kLinkCaToDir, t, 1, bytes);
        }
    }

    Validation validate(std::uint64_t, Serial s, Tick t, TrafficLedger& ledger) override {
        CaId ca = pop_.issuer_of(s);
        TtProof proof = trees_[ca].prove(s);
        std::uint64_t bytes =
            proof.encode().size() + 4 + width_ + AuthBytes::encoded_size(width_);
        ledger.add(kLinkDirToUser, t, 1, bytes);
        Validation out;
        out.proof_bytes = bytes;
        out.basis_day = day_;
        Digest root = trees_[ca].root_hash();
        if (!bulletins_[ca].verify(ca, bulletin_payload(day_, root))) {
            out.verdict = SchemeVerdict::Invalid;
            return out;
        }
        switch (tt_verify(root, proof, s)) {
            case TtStatus::Revoked: out.verdict = SchemeVerdict::Revoked; break;
            case TtStatus::Valid: out.verdict = SchemeVerdict::Valid; break;
            case TtStatus::Invalid: out.verdict = SchemeVerdict::Invalid; break;
        }
        return out;
    }

    std::uint64_t update_entries() const override { return update_entries_; }
    std::uint64_t nodes_touched() const override { return nodes_touched_; }

  private:
    const PopulationModel& pop_;
    std::size_t width_;
    std::vector<TwoThreeTree> trees_;
    std::vector<AuthBytes> bulletins_;
    Day day_ = 0;
    std::uint64_t update_entries_ = 0;
    std::uint64_t nodes_touched_ = 0;
};

// ---- OCSP ---------------------------------------------------------------

class PopulationSource : public AuthoritativeSource {
  public:
    explicit PopulationSource(const PopulationModel& pop) : pop_(pop) {}

    OcspVerdict status_at(CaId issuer, Serial serial, Tick now) const override {
        if (serial >= pop_.size() || pop_.issuer_of(serial) != issuer)
            return OcspVerdict::Unknown;
        return pop_.revoked_at(serial, day_at(now)) ? OcspVerdict::Revoked : OcspVerdict::Good;
    }

  private:
    const PopulationModel& pop_;
};

// Client -> r1 -> r2 -> co-located responder chain.
class OcspAdapter : public SchemeAdapter {
  public:
    OcspAdapter(const Scenario& sc, const PopulationModel& pop)
        : pop_(pop),
          width_(sc.hash_width),
          ttl_(sc.ocsp_ttl_ticks),
          source_(pop),
          net_(source_, sc.hash_width, sc.ocsp_ttl_ticks) {
        std::size_t colo = net_.add_responder("ca", true);
        std::size_t r2 = net_.add_responder("r2", false, {colo});
        entry_ = net_.add_responder("r1", false, {r2});
    }

    std::string_view name() const override { return "ocsp"; }

    void on_tick(Tick t, TrafficLedger& ledger) override {
        (void)ledger;
        if (t % kTicksPerDay == 0) net_.invalidate_all(t);
    }

    Validation validate(std::uint64_t, Serial s, Tick t, TrafficLedger& ledger) override {
        StatusRequest req{pop_.issuer_of(s), s, ttl_};
        StatusResponse resp = net_.handle(entry_, req, t, &ledger);
        std::uint64_t bytes = StatusRequest::encoded_size() + StatusResponse::encoded_size(width_);
        ledger.add(kLinkDirToUser, t, 1, bytes);
        Validation out;
        out.proof_bytes = bytes;
        out.basis_day = day_at(resp.produced_at);
        switch (resp.verdict) {
            case OcspVerdict::Good: out.verdict = SchemeVerdict::Valid; break;
            case OcspVerdict::Revoked: out.verdict = SchemeVerdict::Revoked; break;
            case OcspVerdict::Unknown: out.verdict = SchemeVerdict::Unknown; break;
        }
        return out;
    }

  private:
    const PopulationModel& pop_;
    std::size_t width_;
    Tick ttl_;
    PopulationSource source_;
    OcspNetwork net_;
    std::size_t entry_ = 0;
};

}  // namespace

std::unique_ptr<SchemeAdapter> make_adapter(const Scenario& sc, const PopulationModel& pop) {
    switch (sc.scheme) {
        case SchemeKind::CrlFull: return std::make_unique<CrlFullAdapter>(sc, pop, false);
        case SchemeKind::CrlOverIssued: return std::make_unique<CrlFullAdapter>(sc, pop, true);
        case SchemeKind::CrlSegmented: return std::make_unique<CrlSegmentedAdapter>(sc, pop);
        case SchemeKind::CrlDelta: return std::make_unique<CrlDeltaAdapter>(sc, pop);
        case SchemeKind::CrlOverIssuedDelta:
            return std::make_unique<CrlOverIssuedDeltaAdapter>(sc, pop);
        case SchemeKind::Crs: return std::make_unique<CrsAdapter>(sc, pop);
        case SchemeKind::Hcrs: return std::make_unique<HcrsAdapter>(sc, pop);
        case SchemeKind::Crt: return std::make_unique<CrtAdapter>(sc, pop);
        case SchemeKind::NnAuthDict: return std::make_unique<NnAdapter>(sc, pop);
        case SchemeKind::Ocsp: return std::make_unique<OcspAdapter>(sc, pop);
    }
    throw std::invalid_argument("unknown scheme kind");
}

}  // namespace revoc
