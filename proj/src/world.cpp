// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ccsim/world.hpp>

#include <atomic>

namespace ccsim {
namespace {

std::uint64_t next_world_id()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

}  // namespace

WorldState::WorldState() : id_(next_world_id()) {}

WorldState::WorldState(const WorldState& other)
  : accounts_(other.accounts_),
    block_number_(other.block_number_),
    journal_(other.journal_),
    id_(next_world_id()),
    next_serial_(other.next_serial_),
    max_restorable_serial_(other.max_restorable_serial_)
{}

WorldState& WorldState::operator=(const WorldState& other)
{
    if (this != &other)
    {
        accounts_ = other.accounts_;
        block_number_ = other.block_number_;
        journal_ = other.journal_;
        id_ = next_world_id();
        next_serial_ = other.next_serial_;
        max_restorable_serial_ = other.max_restorable_serial_;
    }
    return *this;
}

void WorldState::add_account(const Address& addr, Account account)
{
    if (!journal_.empty())
        throw EngineFault("add_account after execution started");
    if (addr.is_null())
        throw EngineFault("cannot create the null address");
    if (accounts_.contains(addr))
        throw EngineFault("duplicate account " + addr.str());
    if (account.balance < 0)
        throw EngineFault("negative initial balance for " + addr.str());
    accounts_.emplace(addr, std::move(account));
}

bool WorldState::has_account(const Address& addr) const
{
    return accounts_.contains(addr);
}

const Account& WorldState::account(const Address& addr) const
{
    const auto it = accounts_.find(addr);
    if (it == accounts_.end())
        throw EngineFault("unknown account " + addr.str());
    return it->second;
}

Account& WorldState::account_mut(const Address& addr)
{
    const auto it = accounts_.find(addr);
    if (it == accounts_.end())
        throw EngineFault("unknown account " + addr.str());
    return it->second;
}

Value WorldState::balance(const Address& addr) const
{
    return account(addr).balance;
}

bool WorldState::is_contract(const Address& addr) const
{
    const auto it = accounts_.find(addr);
    return it != accounts_.end() && it->second.contract.has_value();
}

std::optional<Scalar> WorldState::cell(const Address& addr, const std::string& key) const
{
    const auto& acct = account(addr);
    if (!acct.contract)
        throw EngineFault("storage access on non-contract account " + addr.str());
    const auto it = acct.contract->storage.find(key);
    if (it == acct.contract->storage.end())
        return std::nullopt;
    return it->second;
}

void WorldState::set_balance(const Address& addr, Value v)
{
    if (v < 0)
        throw EngineFault("negative balance for " + addr.str());
    auto& acct = account_mut(addr);
    journal_.push_back(BalanceUndo{addr, acct.balance});
    acct.balance = v;
}

bool WorldState::transfer(const Address& from, const Address& to, Value amount)
{
    if (amount < 0)
        throw EngineFault("negative transfer amount");
    if (from.is_null() || to.is_null())
        throw EngineFault("transfer involving the null address");
    const Value from_balance = balance(from);
    const Value to_balance = balance(to);
    if (from_balance < amount)
        return false;
    if (amount == 0)
        return true;
    set_balance(from, checked_sub(from_balance, amount));
    set_balance(to, checked_add(to_balance, amount));
    return true;
}

void WorldState::put_cell(const Address& addr, const std::string& key, const Scalar& value)
{
    auto& acct = account_mut(addr);
    if (!acct.contract)
        throw EngineFault("storage write on non-contract account " + addr.str());
    auto& storage = acct.contract->storage;
    const auto it = storage.find(key);
    if (it == storage.end())
    {
        journal_.push_back(CellUndo{addr, key, std::nullopt});
        storage.emplace(key, value);
    }
    else
    {
        if (!same_tag(it->second, value))
            throw EngineFault("storage tag change at " + addr.str() + "." + key + ": " +
                              scalar_type_name(it->second) + " -> " + scalar_type_name(value));
        journal_.push_back(CellUndo{addr, key, it->second});
        it->second = value;
    }
}

void WorldState::set_block_number(std::int64_t number)
{
    if (number < block_number_)
        throw EngineFault("block number must be non-decreasing");
    journal_.push_back(BlockUndo{block_number_});
    block_number_ = number;
}

Value WorldState::total_value() const
{
    Value total = 0;
    for (const auto& [addr, acct] : accounts_)
        total = checked_add(total, acct.balance);
    return total;
}

SnapshotToken WorldState::snapshot()
{
    SnapshotToken token{id_, next_serial_++, journal_.size()};
    max_restorable_serial_ = token.serial;
    return token;
}

void WorldState::restore(const SnapshotToken& token)
{
    if (token.world_id != id_)
        throw EngineFault("snapshot token from a foreign world");
    if (token.serial == 0 || token.serial > max_restorable_serial_)
        throw EngineFault("stale snapshot token");
    if (token.journal_pos > journal_.size())
        throw EngineFault("snapshot token past journal end");

    while (journal_.size() > token.journal_pos)
    {
        const UndoEntry entry = std::move(journal_.back());
        journal_.pop_back();
        if (const auto* b = std::get_if<BalanceUndo>(&entry))
        {
            account_mut(b->addr).balance = b->old_balance;
        }
        else if (const auto* c = std::get_if<CellUndo>(&entry))
        {
            auto& storage = account_mut(c->addr).contract->storage;
            if (c->old_value)
                storage[c->key] = *c->old_value;
            else
                storage.erase(c->key);
        }
        else
        {
            block_number_ = std::get<BlockUndo>(entry).old_number;
        }
    }
    max_restorable_serial_ = token.serial - 1;
}

void WorldState::clear_journal()
{
    journal_.clear();
    max_restorable_serial_ = 0;
}

nlohmann::json world_to_json(const WorldState& world)
{
    nlohmann::json accounts = nlohmann::json::object();
    for (const auto& [addr, acct] : world.accounts())
    {
        nlohmann::json a;
        a["balance"] = acct.balance;
        if (acct.contract)
        {
            nlohmann::json storage = nlohmann::json::object();
            for (const auto& [key, value] : acct.contract->storage)
                storage[key] = scalar_to_json(value);
            a["contract"] = {{"type", acct.contract->type}, {"storage", std::move(storage)}};
        }
        accounts[addr.str()] = std::move(a);
    }
    return {{"accounts", std::move(accounts)}, {"block_number", world.block_number()}};
}

std::string world_canonical(const WorldState& world)
{
    return world_to_json(world).dump();
}

std::uint64_t world_hash(const WorldState& world)
{
    return fnv1a64(world_canonical(world));
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : bytes)
    {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i)
    {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace ccsim
