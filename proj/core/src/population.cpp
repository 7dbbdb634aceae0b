// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/population.hpp"

#include <algorithm>
#include <random>

namespace revoc {

PopulationModel::PopulationModel(const Scenario& sc, std::uint64_t seed)
    : size_(sc.population),
      users_per_ca_(sc.users_per_ca),
      ca_count_(static_cast<std::uint32_t>((sc.population + sc.users_per_ca - 1) /
                                           sc.users_per_ca)),
      validity_days_(sc.validity_days),
      revocation_day_(sc.population, kNeverDay) {
    std::mt19937_64 rng(seed ^ 0x7265766f6b656431ull);

    // pick exactly floor(population * fraction) serials by partial shuffle
    auto pick = [&rng, this](std::uint64_t count) {
        std::vector<Serial> ids(size_);
        for (Serial s = 0; s < size_; ++s) ids[s] = s;
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uniform_int_distribution<std::uint64_t> d(i, size_ - 1);
            std::swap(ids[i], ids[d(rng)]);
        }
        ids.resize(count);
        return ids;
    };

    auto revoked_count =
        static_cast<std::uint64_t>(static_cast<double>(size_) * sc.revoked_fraction);
    revoked_serials_ = pick(revoked_count);
    std::uniform_int_distribution<Day> day_of(1, sc.horizon_days);
    for (Serial s : revoked_serials_) revocation_day_[s] = day_of(rng);
    std::sort(revoked_serials_.begin(), revoked_serials_.end());

    auto hold_count = static_cast<std::uint64_t>(static_cast<double>(size_) * sc.hold_fraction);
    if (hold_count > 0 && sc.horizon_days >= 3) {
        std::uniform_int_distribution<Day> start_of(1, sc.horizon_days - 2);
        std::uniform_int_distribution<Day> len_of(1, 3);
        for (Serial s : pick(hold_count)) {
            Day start = start_of(rng);
            holds_.push_back({s, start, start + len_of(rng)});
        }
        std::sort(holds_.begin(), holds_.end(),
                  [](const HoldInterval& a, const HoldInterval& b) { return a.serial < b.serial; });
    }
}

std::uint64_t PopulationModel::ca_population(CaId ca) const {
    Serial first = ca_first_serial(ca);
    return std::min<std::uint64_t>(users_per_ca_, size_ - first);
}

RevocationState PopulationModel::state_at(CaId ca, Day day) const {
    RevocationState st;
    st.day = day;
    Serial first = ca_first_serial(ca);
    Serial last = first + ca_population(ca);
    auto lo = std::lower_bound(revoked_serials_.begin(), revoked_serials_.end(), first);
    auto hi = std::lower_bound(revoked_serials_.begin(), revoked_serials_.end(), last);
    for (auto it = lo; it != hi; ++it)
        if (revocation_day_[*it] <= day) st.revoked.push_back({*it, revocation_day_[*it], 0});
    st.issued_unexpired.reserve(last - first);
    for (Serial s = first; s < last; ++s) st.issued_unexpired.push_back(s);
    for (const auto& h : holds_)
        if (h.serial >= first && h.serial < last && h.start <= day) st.holds.push_back(h);
    return st;
}

}  // namespace revoc
