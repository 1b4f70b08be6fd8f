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

#ifndef OBLISIG_DS_HPP_
#define OBLISIG_DS_HPP_

#include <cstdint>

#include "oblisig/bytes.hpp"
#include "oblisig/rng.hpp"

namespace oblisig {

// Deterministic signature backends. ed25519 is the production scheme
// (64-byte signatures, 32-byte verifying key, secret key stored as the
// 32-byte seed). hmac_stub is a test-only MAC posing as a signature:
// vk = sk, so anyone holding the "public" key can also sign. It exists
// so the unforgeability games can plant controlled forgeries.
enum class DsSchemeId : std::uint8_t {
  ed25519 = 1,
  hmac_stub = 2,
};

struct DsPublicParams {
  DsSchemeId scheme_id = DsSchemeId::ed25519;
  bool operator==(const DsPublicParams&) const = default;
};

struct DsSignature {
  Bytes bytes;
  bool operator==(const DsSignature&) const = default;
};

struct DsKeyPair {
  Bytes vk;
  Bytes sk;
};

DsPublicParams ds_setup(DsSchemeId scheme_id);
std::size_t ds_signature_len(DsSchemeId scheme_id);
std::size_t ds_vk_len(DsSchemeId scheme_id);
std::size_t ds_sk_len(DsSchemeId scheme_id);

DsKeyPair ds_keygen(const DsPublicParams& pp, RandomSource& rng);
// Throws Error("bad-key-encoding") on wrong sk width. Deterministic:
// equal (sk, message) always yields equal bytes.
DsSignature ds_sign(const DsPublicParams& pp, ByteView sk, ByteView message);
// Returns 1 (valid) or 0. Wrong signature width throws
// Error("bad-signature-encoding"); a wrong-width vk returns 0.
int ds_verify(const DsPublicParams& pp, ByteView vk, ByteView message,
              const DsSignature& sig);

}  // namespace oblisig

#endif  // OBLISIG_DS_HPP_
