// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/scalar.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ccsim {

struct ContractInstance {
    std::string type;  // corpus contract name, immutable after deployment
    std::map<std::string, Scalar> storage;

    bool operator==(const ContractInstance&) const = default;
};

struct Account {
    Value balance = 0;
    std::optional<ContractInstance> contract;

    bool operator==(const Account&) const = default;
};

/// Handle produced by WorldState::snapshot. Restoring it invalidates
/// every token taken after it.
struct SnapshotToken {
    std::uint64_t world_id = 0;
    std::uint64_t serial = 0;
    std::size_t journal_pos = 0;
};

/// The blockchain as shared memory: balances, contract storage, and the
/// current block number, with an undo journal for atomic rollback.
///
/// Single-writer: one exploration run mutates one world at a time.
/// Copies are independent (fresh identity, existing tokens do not apply).
class WorldState {
public:
    WorldState();
    WorldState(const WorldState& other);
    WorldState& operator=(const WorldState& other);
    WorldState(WorldState&&) = default;
    WorldState& operator=(WorldState&&) = default;

    // Setup only; not journaled. Precondition: empty journal.
    void add_account(const Address& addr, Account account);

    bool has_account(const Address& addr) const;
    const Account& account(const Address& addr) const;
    Value balance(const Address& addr) const;
    bool is_contract(const Address& addr) const;
    std::optional<Scalar> cell(const Address& addr, const std::string& key) const;
    std::int64_t block_number() const { return block_number_; }
    const std::map<Address, Account>& accounts() const { return accounts_; }

    void set_balance(const Address& addr, Value v);

    /// Moves amount between accounts. Returns false (world untouched) when
    /// the source balance is insufficient; total value is conserved.
    bool transfer(const Address& from, const Address& to, Value amount);

    /// Writes one storage cell. A cell's tag is fixed by its first write;
    /// a mismatched later write is an engine fault.
    void put_cell(const Address& addr, const std::string& key, const Scalar& value);

    void set_block_number(std::int64_t number);

    Value total_value() const;

    SnapshotToken snapshot();
    void restore(const SnapshotToken& token);

    /// Drops all undo state at a transaction boundary. Outstanding tokens
    /// become invalid.
    void clear_journal();
    std::size_t journal_size() const { return journal_.size(); }

private:
    struct BalanceUndo {
        Address addr;
        Value old_balance;
    };
    struct CellUndo {
        Address addr;
        std::string key;
        std::optional<Scalar> old_value;  // nullopt: cell was absent
    };
    struct BlockUndo {
        std::int64_t old_number;
    };
    using UndoEntry = std::variant<BalanceUndo, CellUndo, BlockUndo>;

    Account& account_mut(const Address& addr);

    std::map<Address, Account> accounts_;
    std::int64_t block_number_ = 0;
    std::vector<UndoEntry> journal_;
    std::uint64_t id_ = 0;
    std::uint64_t next_serial_ = 1;
    std::uint64_t max_restorable_serial_ = 0;
};

/// Canonical serialization: key-ordered JSON, addresses and storage keys
/// sorted lexicographically, so hashes agree across platforms.
nlohmann::json world_to_json(const WorldState& world);
std::string world_canonical(const WorldState& world);
std::uint64_t world_hash(const WorldState& world);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace ccsim
