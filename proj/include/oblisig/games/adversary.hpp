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

#ifndef OBLISIG_GAMES_ADVERSARY_HPP_
#define OBLISIG_GAMES_ADVERSARY_HPP_

#include <optional>
#include <string>
#include <variant>

#include "oblisig/scheme.hpp"

namespace oblisig {

// Moves an unforgeability adversary can make against the challenger.
// SignAction opens a signing session (list + first message); the reply
// or oracle-bottom arrives via on_second_message. FinAction submits a
// candidate (message, signature) to the finalize oracle. OutputAction
// ends the game with the adversary's final forgery attempt. AbortAction
// gives up (game output 0).
struct SignAction {
  MessageList list;
  FirstMessage first;
};

struct FinAction {
  Bytes message;
  ObliviousSignature sig;
};

struct OutputAction {
  Bytes message;
  ObliviousSignature sig;
};

struct AbortAction {};

using AdversaryAction =
    std::variant<SignAction, FinAction, OutputAction, AbortAction>;

// Deterministic given its construction-time seed. The same instance
// must not be reused across games; runners take a fresh one per run.
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::string name() const = 0;

  virtual void on_start(const OsPublicParams& pp, const Bytes& vk) {
    (void)pp;
    (void)vk;
  }

  // White-box adversaries model a corrupted signer: the runner hands
  // them the signing key right after keygen. Everyone else never sees
  // it.
  virtual bool wants_signing_key() const { return false; }
  virtual void on_signing_key(const Bytes& sk) { (void)sk; }

  virtual AdversaryAction next_action() = 0;

  // Reply to the most recent SignAction; nullopt is oracle-bottom
  // (sequencing violation or invalid list).
  virtual void on_second_message(const std::optional<SecondMessage>& second) {
    (void)second;
  }
};

}  // namespace oblisig

#endif  // OBLISIG_GAMES_ADVERSARY_HPP_
