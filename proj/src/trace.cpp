// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ccsim/trace.hpp>

namespace ccsim {
namespace {

nlohmann::json frame_to_json(const Frame& f)
{
    return {{"contract", f.contract.str()}, {"method", f.method}, {"sender", f.sender.str()},
        {"value", f.value}, {"depth", f.depth}};
}

struct EventJson {
    nlohmann::json operator()(const ReadEvent& e) const
    {
        return {{"kind", "read"}, {"contract", e.contract.str()}, {"key", e.key},
            {"value", scalar_to_json(e.value)}};
    }
    nlohmann::json operator()(const WriteEvent& e) const
    {
        return {{"kind", "write"}, {"contract", e.contract.str()}, {"key", e.key},
            {"old", scalar_to_json(e.old_value)}, {"new", scalar_to_json(e.new_value)}};
    }
    nlohmann::json operator()(const SendEvent& e) const
    {
        return {{"kind", "send"}, {"from", e.from.str()}, {"to", e.to.str()},
            {"amount", e.amount}, {"fallback_invoked", e.fallback_invoked},
            {"success", e.success}};
    }
    nlohmann::json operator()(const CallEnterEvent& e) const
    {
        return {{"kind", "call_enter"}, {"frame", frame_to_json(e.frame)}};
    }
    nlohmann::json operator()(const CallExitEvent& e) const
    {
        nlohmann::json j{{"kind", "call_exit"}, {"frame", frame_to_json(e.frame)}, {"ok", e.ok}};
        if (e.ret)
            j["ret"] = scalar_to_json(*e.ret);
        return j;
    }
    nlohmann::json operator()(const OracleQueryEvent& e) const
    {
        return {{"kind", "oracle_query"}, {"query_id", e.query_id}, {"spec", e.spec}};
    }
    nlohmann::json operator()(const BlockObserveEvent& e) const
    {
        return {{"kind", "block_observe"}, {"number", e.number}};
    }
    nlohmann::json operator()(const ThrowEvent& e) const
    {
        return {{"kind", "throw"}, {"frame", frame_to_json(e.frame)}};
    }
};

}  // namespace

const char* to_string(TxStatus status)
{
    return status == TxStatus::Committed ? "committed" : "reverted";
}

const char* to_string(RevertReason reason)
{
    switch (reason)
    {
    case RevertReason::Throw: return "throw";
    case RevertReason::OutOfSteps: return "out_of_steps";
    case RevertReason::DepthCap: return "depth_cap";
    case RevertReason::InsufficientValue: return "insufficient_value";
    }
    return "unknown";
}

nlohmann::json event_to_json(const Event& event)
{
    nlohmann::json j = std::visit(EventJson{}, event.data);
    j["seq"] = event.seq;
    return j;
}

nlohmann::json transaction_to_json(const Transaction& tx)
{
    nlohmann::json args = nlohmann::json::array();
    for (const auto& a : tx.args)
        args.push_back(scalar_to_json(a));
    return {{"origin", tx.origin.str()}, {"target", tx.target.str()}, {"method", tx.method},
        {"args", std::move(args)}, {"value", tx.value}, {"span", tx.span}, {"actor", tx.actor}};
}

nlohmann::json trace_to_json(const Trace& trace)
{
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : trace.events)
        events.push_back(event_to_json(e));
    nlohmann::json j{{"tx", transaction_to_json(trace.tx)}, {"events", std::move(events)},
        {"status", to_string(trace.status)}, {"steps_used", trace.steps_used}};
    if (trace.revert_reason)
        j["revert_reason"] = to_string(*trace.revert_reason);
    return j;
}

}  // namespace ccsim
