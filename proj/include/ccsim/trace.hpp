// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/scalar.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ccsim {

/// One atomic invocation: the unit the explorer schedules.
struct Transaction {
    Address origin;
    Address target;
    std::string method;  // empty: pure value transfer
    std::vector<Scalar> args;
    Value value = 0;
    std::int64_t step_budget = 10000;
    std::string span;   // logical multi-tx client operation this tx belongs to
    std::string actor;  // client id, or "oracle"
};

/// One open activation: a method or fallback body in flight.
/// A nested call deepens the frame; a send-triggered fallback runs at the
/// sender's depth (value transfer is not a call).
struct Frame {
    Address contract;
    std::string method;
    Address sender;
    Value value = 0;
    int depth = 0;
};

struct ReadEvent {
    Address contract;
    std::string key;
    Scalar value;
};

struct WriteEvent {
    Address contract;
    std::string key;
    Scalar old_value;
    Scalar new_value;
};

struct SendEvent {
    Address from;
    Address to;
    Value amount = 0;
    bool fallback_invoked = false;
    bool success = false;
};

struct CallEnterEvent {
    Frame frame;
};

struct CallExitEvent {
    Frame frame;
    bool ok = false;
    std::optional<Scalar> ret;
};

struct OracleQueryEvent {
    std::uint64_t query_id = 0;
    std::string spec;
};

struct BlockObserveEvent {
    std::int64_t number = 0;
};

struct ThrowEvent {
    Frame frame;
};

using EventData = std::variant<ReadEvent, WriteEvent, SendEvent, CallEnterEvent, CallExitEvent,
    OracleQueryEvent, BlockObserveEvent, ThrowEvent>;

/// Observable step; seq is the global index within the trace.
struct Event {
    std::uint32_t seq = 0;
    EventData data;
};

enum class TxStatus {
    Committed,
    Reverted,
};

enum class RevertReason {
    Throw,
    OutOfSteps,
    DepthCap,
    InsufficientValue,
};

const char* to_string(TxStatus status);
const char* to_string(RevertReason reason);

/// Full effect log of one executed transaction. The events survive a
/// revert; only the world rolls back.
struct Trace {
    Transaction tx;
    std::vector<Event> events;
    TxStatus status = TxStatus::Committed;
    std::optional<RevertReason> revert_reason;
    std::int64_t steps_used = 0;
};

struct PendingQuery {
    std::uint64_t query_id = 0;
    Address contract;
};

struct TxResult {
    TxStatus status = TxStatus::Committed;
    std::optional<RevertReason> revert_reason;
    std::optional<Scalar> ret;
    std::vector<PendingQuery> emitted_queries;  // nonempty only when committed
};

nlohmann::json event_to_json(const Event& event);
nlohmann::json transaction_to_json(const Transaction& tx);
nlohmann::json trace_to_json(const Trace& trace);

}  // namespace ccsim
