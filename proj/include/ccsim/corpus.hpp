// ccsim: deterministic smart-contract transaction-interleaving simulator
// Copyright 2026 The ccsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ccsim/contracts.hpp>

namespace ccsim {

/// The built-in contract corpus: Counter, CASCounter, OwnedCounter,
/// RWLockCounter, DAO, FixedDAO, Attacker, BlockKing.
const ContractRegistry& builtin_contracts();

/// BlockKing's entry threshold: payments below this are refunded.
inline constexpr Value blockking_min_payment = 50;

/// BlockKing pays 75% instead of 50% above this warrior gold.
inline constexpr Value blockking_big_bet = 999;

}  // namespace ccsim
