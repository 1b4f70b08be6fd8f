/*
 * Copyright 2026 The Oblisig Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBLISIG_GAMES_SUITE_HPP_
#define OBLISIG_GAMES_SUITE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oblisig/games/games.hpp"

namespace oblisig {

// One executed (adversary, game) cell with its invariant verdict.
struct SuiteRecord {
  std::string adversary;
  std::string game;  // "legacy", "sequential", "base", "ds", "ambiguity",
                     // "interleaving"
  int bit = 0;
  GameFlags flags;              // base game only
  std::string outcome = "none";  // reduction outcome kind
  std::string end;               // how the game run finished
  std::uint64_t seed = 0;
  bool ok = false;     // run matched its expectation and invariants
  std::string detail;  // human-readable context (expectations, rates)
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Switches the scheme hash to the brute-forceable family and enables
  // the collision-planting adversaries.
  bool weak_hash = false;
  int ambiguity_trials = 10000;
};

struct SuiteReport {
  std::vector<SuiteRecord> records;
  bool all_ok = true;
};

// Runs the full adversary x game matrix:
//  - honest-user and trivial-reuse against legacy, sequential and base
//    games (the legacy game scores the reuse attack as a win; the
//    other two refuse it);
//  - the key-leak self-signing forgers against sequential and base
//    games (finalize-phase and output-phase variants);
//  - with weak_hash: commitment-collision, leaf-collision and
//    path-collision adversaries (finalize and output variants);
//  - the DS backend game (honest ed25519 run, symmetric-stub break);
//  - ambiguity estimation for guessing, commitment-grinding and
//    leaked-state adversaries;
//  - the interleaving demonstration.
// Every record checks bit/flags/outcome against the expectation table,
// verifies extracted artifacts by recomputation, and confirms the
// sequential and base games agree bit-for-bit.
SuiteReport run_suite(const SuiteOptions& options);

// Re-verifies an extracted artifact against the parameters: forged DS
// pairs must verify and be absent from the oracle log, commitment
// collisions must collide with differing openings, hash collisions
// must collide on distinct inputs. Returns false on any mismatch.
bool validate_outcome(const OsPublicParams& pp, const BaseGameResult& result);

}  // namespace oblisig

#endif  // OBLISIG_GAMES_SUITE_HPP_
