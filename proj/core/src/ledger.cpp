// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/ledger.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace revoc {

void TrafficLedger::add(std::string_view link, Tick t, std::uint64_t requests,
                        std::uint64_t bytes) {
    if (t >= horizon_ && horizon_ > 0) throw std::out_of_range("tick beyond ledger horizon");
    auto it = links_.find(link);
    if (it == links_.end())
        it = links_.emplace(std::string(link), std::vector<Counters>(horizon_)).first;
    it->second[t].requests += requests;
    it->second[t].bytes += bytes;
}

std::uint64_t TrafficLedger::total_bytes() const {
    std::uint64_t sum = 0;
    for (const auto& [name, series] : links_)
        for (const auto& c : series) sum += c.bytes;
    return sum;
}

std::uint64_t TrafficLedger::total_requests() const {
    std::uint64_t sum = 0;
    for (const auto& [name, series] : links_)
        for (const auto& c : series) sum += c.requests;
    return sum;
}

std::uint64_t TrafficLedger::link_bytes(std::string_view link) const {
    auto it = links_.find(link);
    if (it == links_.end()) return 0;
    std::uint64_t sum = 0;
    for (const auto& c : it->second) sum += c.bytes;
    return sum;
}

std::uint64_t TrafficLedger::link_requests(std::string_view link) const {
    auto it = links_.find(link);
    if (it == links_.end()) return 0;
    std::uint64_t sum = 0;
    for (const auto& c : it->second) sum += c.requests;
    return sum;
}

std::uint64_t TrafficLedger::peak_requests(std::string_view link, Tick from) const {
    auto it = links_.find(link);
    if (it == links_.end()) return 0;
    std::uint64_t peak = 0;
    for (std::size_t t = from; t < it->second.size(); ++t)
        peak = std::max(peak, it->second[t].requests);
    return peak;
}

std::vector<std::uint64_t> TrafficLedger::request_series(std::string_view link) const {
    std::vector<std::uint64_t> out(horizon_, 0);
    auto it = links_.find(link);
    if (it == links_.end()) return out;
    for (std::size_t t = 0; t < it->second.size(); ++t) out[t] = it->second[t].requests;
    return out;
}

void TrafficLedger::write_csv(std::ostream& os) const {
    os << "tick,link,requests,bytes\n";
    for (Tick t = 0; t < horizon_; ++t)
        for (const auto& [name, series] : links_) {
            const Counters& c = series[t];
            if (c.requests == 0 && c.bytes == 0) continue;
            os << t << ',' << name << ',' << c.requests << ',' << c.bytes << '\n';
        }
}

}  // namespace revoc
