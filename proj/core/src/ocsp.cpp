// Copyright 2026 the revoc project contributors. Licensed under the
// Apache License, Version 2.0. See the COPYING file at the root of this
// distribution or at http://www.apache.org/licenses/LICENSE-2.0
#include "revoc/ocsp.hpp"

#include <stdexcept>

namespace revoc {

Bytes StatusRequest::encode() const {
    ByteWriter w;
    w.u64(issuer);
    w.u64(serial);
    w.u32(max_age);
    return w.take();
}

Bytes StatusResponse::encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(verdict));
    w.u32(produced_at);
    w.u64(responder);
    signature.encode(w);
    return w.take();
}

OcspNetwork::OcspNetwork(const AuthoritativeSource& source, std::size_t width, Tick retention,
                         int hop_limit)
    : source_(source), width_(width), retention_(retention), hop_limit_(hop_limit) {}

std::size_t OcspNetwork::add_responder(std::string name, bool co_located,
                                       std::vector<std::size_t> neighbours) {
    for (std::size_t n : neighbours)
        if (n >= nodes_.size()) throw std::out_of_range("neighbour id does not exist yet");
    nodes_.push_back(Responder{std::move(name), co_located, std::move(neighbours), {}});
    return nodes_.size() - 1;
}

StatusResponse OcspNetwork::make_response(OcspVerdict v, Tick now,
                                          std::uint64_t responder_id) const {
    StatusResponse r;
    r.verdict = v;
    r.produced_at = now;
    r.responder = responder_id;
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(v));
    w.u32(now);
    w.u64(responder_id);
    r.signature = AuthBytes::sign(responder_id, w.bytes(), width_);
    return r;
}

StatusResponse OcspNetwork::handle(std::size_t node, const StatusRequest& req, Tick now,
                                   TrafficLedger* ledger) {
    std::vector<char> visited(nodes_.size(), 0);
    return handle_inner(node, req, now, ledger, visited, 0);
}

StatusResponse OcspNetwork::handle_inner(std::size_t node, const StatusRequest& req, Tick now,
                                         TrafficLedger* ledger, std::vector<char>& visited,
                                         int hops) {
    Responder& r = nodes_.at(node);
    visited[node] = 1;

    auto key = std::make_pair(req.issuer, req.serial);
    if (auto it = r.cache.find(key); it != r.cache.end()) {
        Tick age = now - it->second.produced_at;
        if (age <= req.max_age) return it->second;
    }

    if (r.co_located) {
        StatusResponse resp = make_response(source_.status_at(req.issuer, req.serial, now), now,
                                            node);
        r.cache[key] = resp;
        return resp;
    }

    if (hops >= hop_limit_) return make_response(OcspVerdict::Unknown, now, node);

    for (std::size_t nb : r.neighbours) {
        if (visited[nb]) continue;
        ++upstream_requests_;
        if (ledger) {
            std::string edge = r.name + "->" + nodes_[nb].name;
            ledger->add(edge, now, 1, StatusRequest::encoded_size());
        }
        StatusResponse resp = handle_inner(nb, req, now, ledger, visited, hops + 1);
        if (ledger) {
            std::string edge = nodes_[nb].name + "->" + r.name;
            ledger->add(edge, now, 0, StatusResponse::encoded_size(width_));
        }
        if (resp.verdict != OcspVerdict::Unknown) {
            nodes_[node].cache[key] = resp;  // cache on the way back to the client
            return resp;
        }
    }
    return make_response(OcspVerdict::Unknown, now, node);
}

void OcspNetwork::invalidate_on_update(std::size_t node, Tick now) {
    auto& cache = nodes_.at(node).cache;
    for (auto it = cache.begin(); it != cache.end();)
        if (now - it->second.produced_at > retention_)
            it = cache.erase(it);
        else
            ++it;
}

void OcspNetwork::invalidate_all(Tick now) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) invalidate_on_update(i, now);
}

}  // namespace revoc
