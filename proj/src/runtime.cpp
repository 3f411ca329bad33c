// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <ccsim/runtime.hpp>

namespace ccsim {
namespace {

// Internal control flow; never escapes execute().
struct ThrowSignal {};
struct OutOfStepsSignal {};

class TxEngine final : public Env {
public:
    TxEngine(WorldState& world, const Transaction& tx, const ContractRegistry& registry,
        const ExecConfig& config, std::uint64_t first_query_id)
      : world_(world), tx_(tx), registry_(registry), config_(config), next_qid_(first_query_id)
    {}

    ExecResult run()
    {
        if (tx_.step_budget <= 0)
            throw EngineFault("transaction step budget must be positive");
        if (world_.journal_size() != 0)
            throw EngineFault("execute requires an empty journal");

        const SnapshotToken before = world_.snapshot();
        const Frame root{tx_.target, tx_.method, tx_.origin, tx_.value, 0};

        TxResult result;
        try
        {
            append(CallEnterEvent{root});
            frames_.push_back(root);

            if (!world_.transfer(tx_.origin, tx_.target, tx_.value))
            {
                frames_.pop_back();
                append(CallExitEvent{root, false, {}});
                revert(before, RevertReason::InsufficientValue, result);
                return finish(result);
            }

            if (!tx_.method.empty())
            {
                const MethodBody& body = resolve_method(tx_.target, tx_.method);
                std::optional<Scalar> ret;
                try
                {
                    ret = body(*this, tx_.args);
                }
                catch (const ThrowSignal&)
                {
                    frames_.pop_back();
                    append(CallExitEvent{root, false, {}});
                    revert(before, RevertReason::Throw, result);
                    return finish(result);
                }
                frames_.pop_back();
                append(CallExitEvent{root, true, ret});
                result.ret = ret;
            }
            else
            {
                if (world_.is_contract(tx_.target))
                    throw EngineFault("pure transfer to contract account " + tx_.target.str());
                frames_.pop_back();
                append(CallExitEvent{root, true, {}});
            }

            result.status = TxStatus::Committed;
            result.emitted_queries = emitted_;
            world_.clear_journal();
        }
        catch (const OutOfStepsSignal&)
        {
            revert(before, RevertReason::OutOfSteps, result);
        }
        return finish(result);
    }

    // -- Env ----------------------------------------------------------------

    Scalar storage_read(const std::string& key, const Scalar& default_value) override
    {
        const Address& contract = current_contract();
        const auto stored = world_.cell(contract, key);
        Scalar observed = default_value;
        if (stored)
        {
            if (!same_tag(*stored, default_value))
                throw EngineFault("storage tag mismatch reading " + contract.str() + "." + key);
            observed = *stored;
        }
        append(ReadEvent{contract, key, observed});
        return observed;
    }

    void storage_write(const std::string& key, const Scalar& value) override
    {
        const Address& contract = current_contract();
        const auto stored = world_.cell(contract, key);
        Scalar old_value = value;  // tag template for the default
        if (stored)
        {
            old_value = *stored;
        }
        else
        {
            // Absent cell: the old value is the type's zero value.
            if (std::holds_alternative<std::int64_t>(value))
                old_value = std::int64_t{0};
            else if (std::holds_alternative<bool>(value))
                old_value = false;
            else
                old_value = Address::null();
        }
        append(WriteEvent{contract, key, old_value, value});
        world_.put_cell(contract, key, value);
    }

    bool send(const Address& to, Value amount) override
    {
        if (to.is_null())
            throw EngineFault("send to the null address");
        const Address from = current_contract();
        const std::size_t event_idx = append(SendEvent{from, to, amount, false, false});

        if (world_.balance(from) < amount)
            return false;

        const EngineMark mark = save_mark();
        if (!world_.transfer(from, to, amount))
            return false;

        const ContractSpec* spec = deployed_spec(to);
        if (config_.send_mode == SendMode::InvokeFallback && spec && spec->fallback)
        {
            send_event(event_idx).fallback_invoked = true;
            // The fallback runs at the sender's depth: a value transfer is
            // a yield point, not a call.
            const Frame frame{to, "fallback", from, amount, frames_.back().depth};
            const CallOutcome out = run_frame(frame, *spec->fallback, {});
            if (!out.ok)
            {
                rollback_to(mark);
                return false;
            }
        }
        send_event(event_idx).success = true;
        return true;
    }

    CallOutcome call(const Address& to, const std::string& method, std::vector<Scalar> args,
        Value value) override
    {
        const int depth = frames_.back().depth + 1;
        if (depth >= config_.depth_cap)
            return {false, {}};

        const MethodBody& body = resolve_method(to, method);
        const EngineMark mark = save_mark();
        if (!world_.transfer(current_contract(), to, value))
            return {false, {}};

        const Frame frame{to, method, current_contract(), value, depth};
        const CallOutcome out = run_frame(frame, body, args);
        if (!out.ok)
            rollback_to(mark);
        return out;
    }

    std::uint64_t emit_oracle_query(const std::string& spec) override
    {
        const std::uint64_t qid = next_qid_++;
        append(OracleQueryEvent{qid, spec});
        emitted_.push_back({qid, current_contract()});
        return qid;
    }

    std::int64_t block_number() override
    {
        const std::int64_t number = world_.block_number();
        append(BlockObserveEvent{number});
        return number;
    }

    [[noreturn]] void contract_throw() override
    {
        append(ThrowEvent{frames_.back()});
        throw ThrowSignal{};
    }

    const Address& self() const override { return current_contract(); }
    const Address& sender() const override { return frames_.back().sender; }
    Value msg_value() const override { return frames_.back().value; }
    Value self_balance() const override { return world_.balance(current_contract()); }

    std::uint64_t next_query_id() const { return next_qid_; }

private:
    // Nested-frame rollback covers the world, emitted queries, and the
    // query-id counter together.
    struct EngineMark {
        SnapshotToken world;
        std::size_t emitted_count = 0;
        std::uint64_t next_qid = 0;
    };

    EngineMark save_mark() { return {world_.snapshot(), emitted_.size(), next_qid_}; }

    void rollback_to(const EngineMark& mark)
    {
        world_.restore(mark.world);
        emitted_.resize(mark.emitted_count);
        next_qid_ = mark.next_qid;
    }

    CallOutcome run_frame(const Frame& frame, const MethodBody& body,
        const std::vector<Scalar>& args)
    {
        append(CallEnterEvent{frame});
        frames_.push_back(frame);
        try
        {
            const std::optional<Scalar> ret = body(*this, args);
            frames_.pop_back();
            append(CallExitEvent{frame, true, ret});
            return {true, ret};
        }
        catch (const ThrowSignal&)
        {
            frames_.pop_back();
            append(CallExitEvent{frame, false, {}});
            return {false, {}};
        }
    }

    const Address& current_contract() const { return frames_.back().contract; }

    const ContractSpec* deployed_spec(const Address& addr) const
    {
        if (!world_.is_contract(addr))
            return nullptr;
        const std::string& type = world_.account(addr).contract->type;
        if (!registry_.has(type))
            throw EngineFault("account " + addr.str() + " deploys unknown contract " + type);
        return &registry_.get(type);
    }

    const MethodBody& resolve_method(const Address& addr, const std::string& method) const
    {
        const ContractSpec* spec = deployed_spec(addr);
        if (!spec)
            throw EngineFault("method call on non-contract account " + addr.str());
        const auto it = spec->methods.find(method);
        if (it == spec->methods.end())
            throw EngineFault("contract " + spec->name + " has no method " + method);
        return it->second;
    }

    std::size_t append(EventData data)
    {
        if (static_cast<std::int64_t>(events_.size()) >= tx_.step_budget)
            throw OutOfStepsSignal{};
        const std::size_t idx = events_.size();
        events_.push_back({static_cast<std::uint32_t>(idx), std::move(data)});
        return idx;
    }

    SendEvent& send_event(std::size_t idx) { return std::get<SendEvent>(events_[idx].data); }

    void revert(const SnapshotToken& before, RevertReason reason, TxResult& result)
    {
        world_.restore(before);
        world_.clear_journal();
        result.status = TxStatus::Reverted;
        result.revert_reason = reason;
        result.ret.reset();
        result.emitted_queries.clear();
        emitted_.clear();
    }

    ExecResult finish(TxResult result)
    {
        Trace trace;
        trace.tx = tx_;
        trace.events = std::move(events_);
        trace.status = result.status;
        trace.revert_reason = result.revert_reason;
        trace.steps_used = static_cast<std::int64_t>(trace.events.size());
        return {std::move(trace), std::move(result)};
    }

    WorldState& world_;
    const Transaction& tx_;
    const ContractRegistry& registry_;
    const ExecConfig& config_;
    std::vector<Frame> frames_;
    std::vector<Event> events_;
    std::vector<PendingQuery> emitted_;
    std::uint64_t next_qid_;
};

}  // namespace

const char* to_string(SendMode mode)
{
    return mode == SendMode::InvokeFallback ? "invoke_fallback" : "transfer_only";
}

ExecResult execute(WorldState& world, const Transaction& tx, const ContractRegistry& registry,
    const ExecConfig& config, std::uint64_t& next_query_id)
{
    if (!world.has_account(tx.origin))
        throw EngineFault("transaction origin " + tx.origin.str() + " does not exist");
    if (!world.has_account(tx.target))
        throw EngineFault("transaction target " + tx.target.str() + " does not exist");

    TxEngine engine(world, tx, registry, config, next_query_id);
    ExecResult out = engine.run();
    if (out.result.status == TxStatus::Committed)
        next_query_id = engine.next_query_id();
    return out;
}

void ContractRegistry::add(ContractSpec spec)
{
    const std::string name = spec.name;
    if (!specs_.emplace(name, std::move(spec)).second)
        throw EngineFault("duplicate contract spec " + name);
}

bool ContractRegistry::has(const std::string& name) const
{
    return specs_.contains(name);
}

const ContractSpec& ContractRegistry::get(const std::string& name) const
{
    const auto it = specs_.find(name);
    if (it == specs_.end())
        throw EngineFault("unknown contract spec " + name);
    return it->second;
}

}  // namespace ccsim
