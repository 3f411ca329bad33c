// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ccsim/corpus.hpp>
#include <ccsim/runtime.hpp>

namespace ccsim {
namespace {

using Storage = std::map<std::string, Scalar>;

Address addr_param(const nlohmann::json& params, const char* key)
{
    if (!params.contains(key) || !params[key].is_string())
        throw ScenarioError(std::string("contract init needs address parameter '") + key + "'");
    return Address{params[key].get<std::string>()};
}

std::int64_t int_param(const nlohmann::json& params, const char* key, std::int64_t fallback)
{
    if (!params.contains(key))
        return fallback;
    if (!params[key].is_number_integer())
        throw ScenarioError(std::string("contract init parameter '") + key + "' must be integer");
    return params[key].get<std::int64_t>();
}

std::int64_t arg_int(const std::vector<Scalar>& args, std::size_t i)
{
    if (i >= args.size() || !std::holds_alternative<std::int64_t>(args[i]))
        throw EngineFault("bad method argument " + std::to_string(i));
    return std::get<std::int64_t>(args[i]);
}

// -- Counter (Fig. 2-left) ----------------------------------------------

std::optional<Scalar> counter_get(Env& env, const std::vector<Scalar>&)
{
    return Scalar{env.read_int("balance")};
}

std::optional<Scalar> counter_set(Env& env, const std::vector<Scalar>&)
{
    const std::int64_t t = env.read_int("balance");
    env.storage_write("balance", env.msg_value());
    if (!env.send(env.sender(), t))
        env.contract_throw();
    return Scalar{t};
}

Storage counter_init(const nlohmann::json& params)
{
    Storage storage;
    if (params.contains("balance"))
        storage["balance"] = int_param(params, "balance", 0);
    return storage;
}

// -- CASCounter (Fig. 2-right) --------------------------------------------

std::optional<Scalar> cas_test_and_set(Env& env, const std::vector<Scalar>& args)
{
    const std::int64_t expected = arg_int(args, 0);
    const std::int64_t t = env.read_int("balance");
    if (t != expected)
        env.contract_throw();
    env.storage_write("balance", env.msg_value());
    if (!env.send(env.sender(), t))
        env.contract_throw();
    return Scalar{t};
}

// -- OwnedCounter (Fig. 3-left) --------------------------------------------

void require_owner(Env& env)
{
    if (env.sender() != env.read_addr("owner"))
        env.contract_throw();
}

Storage owned_init(const nlohmann::json& params)
{
    Storage storage = counter_init(params);
    storage["owner"] = addr_param(params, "owner");
    return storage;
}

// -- RWLockCounter (Fig. 3-right) -------------------------------------------

std::string reader_key(const Address& a)
{
    return "readers." + a.str();
}

std::optional<Scalar> rwlock_acquire_read(Env& env, const std::vector<Scalar>&)
{
    if (!env.read_addr("writer").is_null())
        return Scalar{false};
    if (env.read_bool(reader_key(env.sender())))
        return Scalar{true};  // already held
    env.storage_write(reader_key(env.sender()), true);
    env.storage_write("readerCount", env.read_int("readerCount") + 1);
    return Scalar{true};
}

std::optional<Scalar> rwlock_release_read(Env& env, const std::vector<Scalar>&)
{
    if (!env.read_bool(reader_key(env.sender())))
        return Scalar{false};
    env.storage_write(reader_key(env.sender()), false);
    env.storage_write("readerCount", env.read_int("readerCount") - 1);
    return Scalar{true};
}

std::optional<Scalar> rwlock_acquire_write(Env& env, const std::vector<Scalar>&)
{
    if (!env.read_addr("writer").is_null() || env.read_int("readerCount") != 0)
        return Scalar{false};
    env.storage_write("writer", env.sender());
    return Scalar{true};
}

std::optional<Scalar> rwlock_release_write(Env& env, const std::vector<Scalar>&)
{
    if (env.read_addr("writer") != env.sender())
        return Scalar{false};
    env.storage_write("writer", Address::null());
    return Scalar{true};
}

std::optional<Scalar> rwlock_get(Env& env, const std::vector<Scalar>&)
{
    const bool is_writer = env.read_addr("writer") == env.sender();
    if (!is_writer && !env.read_bool(reader_key(env.sender())))
        env.contract_throw();
    return Scalar{env.read_int("balance")};
}

std::optional<Scalar> rwlock_set(Env& env, const std::vector<Scalar>&)
{
    if (env.read_addr("writer") != env.sender())
        env.contract_throw();
    return counter_set(env, {});
}

Storage rwlock_init(const nlohmann::json& params)
{
    Storage storage = counter_init(params);
    storage["writer"] = Address::null();
    std::int64_t count = 0;
    if (params.contains("readers"))
    {
        for (const auto& r : params["readers"])
        {
            storage[reader_key(Address{r.get<std::string>()})] = true;
            ++count;
        }
    }
    storage["readerCount"] = count;
    return storage;
}

// -- DAO / FixedDAO ----------------------------------------------------------

std::string balance_key(const Address& a)
{
    return "balances." + a.str();
}

std::optional<Scalar> dao_deposit(Env& env, const std::vector<Scalar>&)
{
    env.storage_write(balance_key(env.sender()),
        env.read_int(balance_key(env.sender())) + env.msg_value());
    env.storage_write("totalSupply", env.read_int("totalSupply") + env.msg_value());
    return std::nullopt;
}

// The vulnerable statement order: pay out first, zero the books after.
std::optional<Scalar> dao_withdraw(Env& env, const std::vector<Scalar>&)
{
    const std::int64_t amount = env.read_int(balance_key(env.sender()));
    if (!env.send(env.sender(), amount))
        env.contract_throw();
    env.storage_write("totalSupply",
        env.read_int("totalSupply") - env.read_int(balance_key(env.sender())));
    env.storage_write(balance_key(env.sender()), std::int64_t{0});
    env.storage_write("paidOut." + env.sender().str(), std::int64_t{0});
    return Scalar{true};
}

// Checks-effects-interactions: zero the books, then pay.
std::optional<Scalar> fixed_dao_withdraw(Env& env, const std::vector<Scalar>&)
{
    const std::int64_t amount = env.read_int(balance_key(env.sender()));
    env.storage_write("totalSupply", env.read_int("totalSupply") - amount);
    env.storage_write(balance_key(env.sender()), std::int64_t{0});
    env.storage_write("paidOut." + env.sender().str(), std::int64_t{0});
    if (!env.send(env.sender(), amount))
        env.contract_throw();
    return Scalar{true};
}

Storage dao_init(const nlohmann::json& params)
{
    Storage storage;
    std::int64_t total = 0;
    if (params.contains("balances"))
    {
        for (const auto& [label, v] : params["balances"].items())
        {
            const std::int64_t amount = v.get<std::int64_t>();
            storage[balance_key(Address{label})] = amount;
            total += amount;
        }
    }
    storage["totalSupply"] = int_param(params, "totalSupply", total);
    return storage;
}

// -- Attacker ----------------------------------------------------------------

std::optional<Scalar> attacker_fallback(Env& env, const std::vector<Scalar>&)
{
    const std::int64_t count = env.read_int("count");
    if (count < env.read_int("bound"))
    {
        env.storage_write("count", count + 1);
        env.call(env.read_addr("victim"), "withdraw", {}, 0);  // Failure swallowed
    }
    return std::nullopt;
}

Storage attacker_init(const nlohmann::json& params)
{
    Storage storage;
    storage["victim"] = addr_param(params, "victim");
    storage["bound"] = int_param(params, "reentry_bound", 0);
    storage["count"] = std::int64_t{0};
    return storage;
}

// -- BlockKing (Fig. 1) --------------------------------------------------------

std::optional<Scalar> blockking_enter(Env& env, const std::vector<Scalar>&)
{
    if (env.msg_value() < blockking_min_payment)
    {
        env.send(env.sender(), env.msg_value());  // refund, result ignored
        return std::nullopt;
    }
    env.storage_write("warrior", env.sender());
    env.storage_write("warriorGold", env.msg_value());
    env.storage_write("warriorBlock", env.block_number());
    env.emit_oracle_query("WolframAlpha: random number between 1 and 9");
    return std::nullopt;
}

void blockking_process_payment(Env& env)
{
    const std::int64_t warrior_block = env.read_int("warriorBlock");
    const std::int64_t single_digit_block = warrior_block % 10;
    env.storage_write("singleDigitBlock", single_digit_block);
    if (single_digit_block == env.read_int("randomNumber"))
    {
        std::int64_t reward_percent = 50;
        if (env.read_int("warriorGold") > blockking_big_bet)
            reward_percent = 75;
        env.storage_write("rewardPercent", reward_percent);
        env.storage_write("king", env.read_addr("warrior"));
        env.storage_write("kingBlock", warrior_block);
    }
    const std::int64_t reward_percent = env.read_int("rewardPercent");
    const Value pot = env.self_balance();
    const Value king_cut = pot * reward_percent / 100;
    env.send(env.read_addr("king"), king_cut);
    env.send(env.read_addr("owner"), pot - king_cut);
}

std::optional<Scalar> blockking_callback(Env& env, const std::vector<Scalar>& args)
{
    if (env.sender() != env.read_addr("oracleAddr"))
        env.contract_throw();
    env.storage_write("randomNumber", arg_int(args, 1));
    blockking_process_payment(env);
    return std::nullopt;
}

Storage blockking_init(const nlohmann::json& params)
{
    Storage storage;
    const Address owner = addr_param(params, "owner");
    storage["owner"] = owner;
    storage["oracleAddr"] = addr_param(params, "oracle");
    storage["king"] = owner;  // the contract writer starts as king
    return storage;
}

ContractRegistry build_registry()
{
    ContractRegistry registry;

    registry.add({"Counter", "Fig. 2-left", "unsynchronized get/set counter", counter_init,
        {{"get", counter_get}, {"set", counter_set}}, std::nullopt});

    registry.add({"CASCounter", "Fig. 2-right", "counter with a testAndSet synchronizer",
        counter_init,
        {{"get", counter_get}, {"set", counter_set}, {"testAndSet", cas_test_and_set}},
        std::nullopt});

    registry.add({"OwnedCounter", "Fig. 3-left", "counter restricted to its owner", owned_init,
        {{"get",
             [](Env& env, const std::vector<Scalar>& args) {
                 require_owner(env);
                 return counter_get(env, args);
             }},
            {"set",
                [](Env& env, const std::vector<Scalar>& args) {
                    require_owner(env);
                    return counter_set(env, args);
                }}},
        std::nullopt});

    registry.add({"RWLockCounter", "Fig. 3-right", "counter behind a read/write lock",
        rwlock_init,
        {{"acquireReadLock", rwlock_acquire_read}, {"releaseReadLock", rwlock_release_read},
            {"acquireWriteLock", rwlock_acquire_write},
            {"releaseWriteLock", rwlock_release_write}, {"get", rwlock_get},
            {"set", rwlock_set}},
        std::nullopt});

    registry.add({"DAO", "DAO fragment", "deposit/withdraw pool, pays before zeroing", dao_init,
        {{"deposit", dao_deposit}, {"withdraw", dao_withdraw}}, std::nullopt});

    registry.add({"FixedDAO", "DAO fragment, checks-effects-interactions order",
        "deposit/withdraw pool, zeroes before paying", dao_init,
        {{"deposit", dao_deposit}, {"withdraw", fixed_dao_withdraw}}, std::nullopt});

    registry.add({"Attacker", "Sec. 2.2 malicious recipient",
        "fallback re-enters victim.withdraw up to a bound", attacker_init, {},
        attacker_fallback});

    registry.add({"BlockKing", "Fig. 1", "oracle-backed gambling game", blockking_init,
        {{"enter", blockking_enter}, {"__callback", blockking_callback}}, std::nullopt});

    return registry;
}

}  // namespace

const ContractRegistry& builtin_contracts()
{
    static const ContractRegistry registry = build_registry();
    return registry;
}

}  // namespace ccsim
