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

#ifndef OBLISIG_SCHEME_HPP_
#define OBLISIG_SCHEME_HPP_

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "oblisig/bytes.hpp"
#include "oblisig/commit.hpp"
#include "oblisig/ds.hpp"
#include "oblisig/hash.hpp"
#include "oblisig/merkle.hpp"
#include "oblisig/rng.hpp"

namespace oblisig {

// 1-out-of-n oblivious signing. The user reveals a list of n distinct
// candidate messages plus a commitment to the one it wants signed; the
// signer answers with one round of signatures and never learns which
// candidate was chosen. Two interchangeable variants:
//
//   tree_single: the signer signs (tree root over the padded list,
//     commitment) once; the user's output signature carries the
//     authentication path for its chosen leaf. Response size is
//     independent of n.
//
//   per_message: the signer signs every (candidate, commitment) pair;
//     the response holds n signatures and the user keeps the one for
//     its choice. Baseline for the size comparison.
enum class Variant : std::uint8_t {
  tree_single = 1,
  per_message = 2,
};

// "tree" / "per-message", as used by CLIs and reports.
const char* variant_name(Variant variant);

// Domain-separating prefixes for the strings handed to ds_sign, so a
// signature from one variant can never verify in the other.
inline constexpr std::uint8_t kSignTreeTag = 0x52;
inline constexpr std::uint8_t kSignListTag = 0x5A;

struct OsPublicParams {
  Variant variant = Variant::tree_single;
  HashParams hash;
  CommitKey ck;
  DsPublicParams ds;

  std::size_t digest_len() const { return hash.digest_len(); }
  bool operator==(const OsPublicParams&) const = default;
};

struct MessageList {
  std::vector<Bytes> messages;

  std::size_t n() const { return messages.size(); }
  bool contains(ByteView m) const;
  bool operator==(const MessageList&) const = default;
};

// First protocol message, user -> signer: the commitment alone.
struct FirstMessage {
  Commitment c;
  bool operator==(const FirstMessage&) const = default;
};

// Second protocol message, signer -> user: one signature for
// tree_single, n signatures (list order) for per_message.
struct SecondMessage {
  std::vector<DsSignature> sigs;
  bool operator==(const SecondMessage&) const = default;
};

// What the user must remember between the two rounds.
struct UserState {
  MessageList list;
  std::uint32_t chosen_index = 0;
  Commitment c;
  CommitRandomness r;
};

struct TreeSignature {
  Root root;
  Commitment c;
  DsSignature ds_sig;
  MerklePath path;
  std::uint32_t index = 0;
  CommitRandomness r;
  bool operator==(const TreeSignature&) const = default;
};

struct ListSignature {
  Commitment c;
  CommitRandomness r;
  DsSignature ds_sig;
  bool operator==(const ListSignature&) const = default;
};

struct ObliviousSignature {
  Variant variant = Variant::tree_single;
  std::variant<TreeSignature, ListSignature> value;
  bool operator==(const ObliviousSignature&) const = default;
};

OsPublicParams os_setup(Variant variant, const HashParams& hash,
                        DsSchemeId ds_scheme = DsSchemeId::ed25519);
DsKeyPair os_keygen(const OsPublicParams& pp, RandomSource& rng);

// Validates the list (size, duplicates, reserved prefix) and the index,
// commits to list[chosen_index]. Throws Error("bad-list-size"),
// Error("duplicate-message"), Error("reserved-prefix"),
// Error("bad-index").
std::pair<FirstMessage, UserState> os_u1(const OsPublicParams& pp,
                                         ByteView vk, const MessageList& list,
                                         std::uint32_t chosen_index,
                                         RandomSource& rng);

// Signer's round. Re-validates the list; throws the same codes as
// os_u1 (minus bad-index), plus Error("malformed-encoding") for a
// commitment of the wrong width.
SecondMessage os_s2(const OsPublicParams& pp, ByteView vk, ByteView sk,
                    const MessageList& list, const FirstMessage& first);

// Derives the final signature on the chosen message. Checks every
// signature the signer returned; a response of the wrong shape or with
// an invalid signature throws Error("signer-cheated").
std::pair<Bytes, ObliviousSignature> os_uder(const OsPublicParams& pp,
                                             ByteView vk,
                                             const UserState& state,
                                             const SecondMessage& second);

// Returns 1 or 0 and never throws: malformed structure verifies as 0.
int os_verify(const OsPublicParams& pp, ByteView vk, ByteView message,
              const ObliviousSignature& sig);

// Strings the signer actually signs.
Bytes tree_signing_bytes(const Root& root, const Commitment& c);
Bytes list_signing_bytes(ByteView message, const Commitment& c);

// Canonical wire encodings. Parsers consume exactly the stated layout
// and throw Error("malformed-encoding") otherwise.
Bytes serialize_message_list(const MessageList& list);
MessageList parse_message_list(ByteReader& in, std::uint32_t max_n,
                               std::uint32_t max_message_bytes);

Bytes serialize_first_message(const FirstMessage& first);
FirstMessage parse_first_message(const OsPublicParams& pp, ByteReader& in);

Bytes serialize_second_message(const SecondMessage& second);
SecondMessage parse_second_message(const OsPublicParams& pp, std::size_t n,
                                   ByteView data);

Bytes serialize_signature(const ObliviousSignature& sig);
ObliviousSignature parse_signature(const OsPublicParams& pp, ByteView data);

Bytes serialize_public_params(const OsPublicParams& pp);
OsPublicParams parse_public_params(ByteView data);

}  // namespace oblisig

#endif  // OBLISIG_SCHEME_HPP_
