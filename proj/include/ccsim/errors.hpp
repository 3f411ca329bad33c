// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ccsim {

/// Broken engine invariant: stale snapshot token, storage tag mismatch,
/// value overflow. Aborts the run; never caught as a contract failure.
class EngineFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Invalid user input (scenario file, history file, CLI args).
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ccsim
