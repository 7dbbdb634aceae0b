// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revoc/auth.hpp"
#include "revoc/cert.hpp"
#include "revoc/ledger.hpp"

namespace revoc {

struct StatusRequest {
    CaId issuer = 0;
    Serial serial = 0;
    Tick max_age = 0;  // oldest acceptable production tick distance

    Bytes encode() const;
    static std::size_t encoded_size() { return 8 + 8 + 4; }
};

enum class OcspVerdict : std::uint8_t { Good = 0, Revoked = 1, Unknown = 2 };

struct StatusResponse {
    OcspVerdict verdict = OcspVerdict::Unknown;
    Tick produced_at = 0;
    std::uint64_t responder = 0;
    AuthBytes signature;

    Bytes encode() const;
    static std::size_t encoded_size(std::size_t width) {
        return 1 + 4 + 8 + AuthBytes::encoded_size(width);
    }
};

// The CA database a co-located responder reads from.
class AuthoritativeSource {
  public:
    virtual ~AuthoritativeSource() = default;
    virtual OcspVerdict status_at(CaId issuer, Serial serial, Tick now) const = 0;
};

// A set of responders wired into an explicit digraph. A co-located responder
// answers from the CA database; the others serve their cache or forward to
// their neighbours in order, caching definitive answers on the way back.
class OcspNetwork {
  public:
    OcspNetwork(const AuthoritativeSource& source, std::size_t width, Tick retention,
                int hop_limit = 8);

    std::size_t add_responder(std::string name, bool co_located,
                              std::vector<std::size_t> neighbours = {});

    StatusResponse handle(std::size_t node, const StatusRequest& req, Tick now,
                          TrafficLedger* ledger = nullptr);

    // evicts cache entries older than the retention window
    void invalidate_on_update(std::size_t node, Tick now);
    void invalidate_all(Tick now);

    std::uint64_t upstream_requests() const { return upstream_requests_; }
    std::size_t cache_size(std::size_t node) const { return nodes_.at(node).cache.size(); }

  private:
    struct Responder {
        std::string name;
        bool co_located = false;
        std::vector<std::size_t> neighbours;
        std::map<std::pair<CaId, Serial>, StatusResponse> cache;
    };

    StatusResponse make_response(OcspVerdict v, Tick now, std::uint64_t responder_id) const;
    StatusResponse handle_inner(std::size_t node, const StatusRequest& req, Tick now,
                                TrafficLedger* ledger, std::vector<char>& visited, int hops);

    const AuthoritativeSource& source_;
    std::size_t width_;
    Tick retention_;
    int hop_limit_;
    std::uint64_t upstream_requests_ = 0;
    std::vector<Responder> nodes_;
};

}  // namespace revoc
