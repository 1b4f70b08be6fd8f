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

#ifndef OBLISIG_NET_CLIENT_HPP_
#define OBLISIG_NET_CLIENT_HPP_

#include <cstdint>
#include <string>

#include "oblisig/net/wire.hpp"
#include "oblisig/rng.hpp"
#include "oblisig/scheme.hpp"

namespace oblisig {

// Exact bytes exchanged on the wire, frame headers included.
struct Transcript {
  Bytes to_server;
  Bytes from_server;
};

struct ClientOptions {
  int timeout_ms = 5000;
  bool capture_transcript = false;
};

struct SignOutcome {
  Bytes message;            // the chosen message
  ObliviousSignature sig;   // verified before returning
  Transcript transcript;    // populated when capture_transcript is set
};

// Runs the user's side of one signing session end to end: first
// message, network round trip, derivation, and a final verify. Throws
// Error("io") on connect/socket failures, Error("timeout") when the
// server goes quiet, Error("reject-duplicate-message"),
// Error("reject-limits") or Error("reject-malformed") on a reject
// frame, and Error("signer-cheated") when the response does not
// verify.
SignOutcome request_signature(const std::string& host, std::uint16_t port,
                              const OsPublicParams& pp, const Bytes& vk,
                              const MessageList& list,
                              std::uint32_t chosen_index, RandomSource& rng,
                              const ClientOptions& options = {});

// Fetches the signer's public key file and returns the verifying key.
// Throws Error("bad-key-encoding") when the advertised scheme does not
// match the parameters.
Bytes fetch_public_key(const std::string& host, std::uint16_t port,
                       const OsPublicParams& pp,
                       const ClientOptions& options = {});

}  // namespace oblisig

#endif  // OBLISIG_NET_CLIENT_HPP_
