// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/scalar.hpp>

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccsim {

class Env;

/// A native contract method body. Touches state only through Env so every
/// effect is intercepted and logged. Returns the method's result, if any.
using MethodBody = std::function<std::optional<Scalar>(Env&, const std::vector<Scalar>&)>;

/// Builds the initial storage for a deployment from scenario parameters.
using InitFn = std::function<std::map<std::string, Scalar>(const nlohmann::json& params)>;

/// One corpus entry: a contract shape addressable by name from scenarios.
struct ContractSpec {
    std::string name;
    std::string figure;  // source figure, shown by `ccsim list-contracts`
    std::string summary;
    InitFn init;
    std::map<std::string, MethodBody> methods;
    std::optional<MethodBody> fallback;  // runs on incoming sends
};

/// Name -> spec table. Value type; tests may extend a copy with probes.
class ContractRegistry {
public:
    void add(ContractSpec spec);
    bool has(const std::string& name) const;
    const ContractSpec& get(const std::string& name) const;
    const std::map<std::string, ContractSpec>& all() const { return specs_; }

private:
    std::map<std::string, ContractSpec> specs_;
};

}  // namespace ccsim
