// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/errors.hpp>

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>

namespace ccsim {

/// Account identifier. Opaque short label; "0x0" is the reserved null
/// address (never owns funds, never a valid send target).
class Address {
public:
    Address() : id_("0x0") {}
    explicit Address(std::string id) : id_(std::move(id)) {}

    static const Address& null()
    {
        static const Address a;
        return a;
    }

    bool is_null() const { return id_ == "0x0"; }
    const std::string& str() const { return id_; }

    auto operator<=>(const Address&) const = default;

private:
    std::string id_;
};

/// Abstract currency amount. Single integer unit; scenarios pick the scale.
/// Never negative, arithmetic checked.
using Value = std::int64_t;

inline Value checked_add(Value a, Value b)
{
    if (a < 0 || b < 0 || a > std::numeric_limits<Value>::max() - b)
        throw EngineFault("value overflow in addition");
    return a + b;
}

inline Value checked_sub(Value a, Value b)
{
    if (a < 0 || b < 0 || a < b)
        throw EngineFault("value underflow in subtraction");
    return a - b;
}

/// Tagged scalar: the universe of storage cells, method args and returns.
using Scalar = std::variant<std::int64_t, Address, bool>;

inline const char* scalar_type_name(const Scalar& s)
{
    switch (s.index())
    {
    case 0: return "int";
    case 1: return "address";
    default: return "bool";
    }
}

inline bool same_tag(const Scalar& a, const Scalar& b)
{
    return a.index() == b.index();
}

inline nlohmann::json scalar_to_json(const Scalar& s)
{
    if (const auto* i = std::get_if<std::int64_t>(&s))
        return *i;
    if (const auto* a = std::get_if<Address>(&s))
        return a->str();
    return std::get<bool>(s);
}

inline Scalar scalar_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return j.get<std::int64_t>();
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_string())
        return Address{j.get<std::string>()};
    throw ScenarioError("scalar must be integer, boolean, or address string");
}

}  // namespace ccsim
