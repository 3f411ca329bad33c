// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/contracts.hpp>
#include <ccsim/trace.hpp>
#include <ccsim/world.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccsim {

enum class SendMode {
    InvokeFallback,  // sends run the recipient's fallback (the DAO vector)
    TransferOnly,    // sends move value, no code runs
};

const char* to_string(SendMode mode);

struct ExecConfig {
    SendMode send_mode = SendMode::InvokeFallback;
    std::int64_t step_budget = 10000;
    int depth_cap = 8;
};

struct CallOutcome {
    bool ok = false;
    std::optional<Scalar> ret;
};

/// The effect API handed to contract bodies. All storage access, value
/// movement, nested calls and oracle queries go through here; each one
/// appends a trace event and consumes one step of the budget.
class Env {
public:
    virtual ~Env() = default;

    /// Reads one cell of the current contract; an absent key observes
    /// `default_value` (Solidity zero-value semantics).
    virtual Scalar storage_read(const std::string& key, const Scalar& default_value) = 0;
    virtual void storage_write(const std::string& key, const Scalar& value) = 0;

    std::int64_t read_int(const std::string& key)
    {
        return std::get<std::int64_t>(storage_read(key, std::int64_t{0}));
    }
    Address read_addr(const std::string& key)
    {
        return std::get<Address>(storage_read(key, Address::null()));
    }
    bool read_bool(const std::string& key) { return std::get<bool>(storage_read(key, false)); }

    /// Moves amount from the current contract to `to`; may run the
    /// recipient's fallback. False (nothing moved) on insufficient balance
    /// or fallback failure.
    virtual bool send(const Address& to, Value amount) = 0;

    /// Runs a nested method to completion before returning. The callee's
    /// effects roll back on failure; the caller's stay.
    virtual CallOutcome call(
        const Address& to, const std::string& method, std::vector<Scalar> args, Value value) = 0;

    virtual std::uint64_t emit_oracle_query(const std::string& spec) = 0;
    virtual std::int64_t block_number() = 0;

    /// Aborts the current frame, rolling back its effects.
    [[noreturn]] virtual void contract_throw() = 0;

    virtual const Address& self() const = 0;
    virtual const Address& sender() const = 0;
    virtual Value msg_value() const = 0;
    virtual Value self_balance() const = 0;
};

struct ExecResult {
    Trace trace;
    TxResult result;
};

/// Runs one transaction atomically: all effects commit, or the world is
/// byte-identical to its pre-state. Deterministic in (world, tx, config,
/// next_query_id). `next_query_id` is the scenario-global oracle counter,
/// advanced only when the transaction commits.
ExecResult execute(WorldState& world, const Transaction& tx, const ContractRegistry& registry,
    const ExecConfig& config, std::uint64_t& next_query_id);

}  // namespace ccsim
