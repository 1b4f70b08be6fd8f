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

#include "oblisig/ds.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

void ensure_sodium() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
  });
}

const std::uint8_t* nonnull(ByteView b) {
  static const std::uint8_t kEmpty = 0;
  return b.empty() ? &kEmpty : b.data();
}

void check_scheme(DsSchemeId id) {
  if (id != DsSchemeId::ed25519 && id != DsSchemeId::hmac_stub) {
    throw Error("bad-key-encoding", "unknown signature scheme id");
  }
}

}  // namespace

DsPublicParams ds_setup(DsSchemeId scheme_id) {
  check_scheme(scheme_id);
  return DsPublicParams{scheme_id};
}

std::size_t ds_signature_len(DsSchemeId scheme_id) {
  check_scheme(scheme_id);
  return scheme_id == DsSchemeId::ed25519 ? crypto_sign_BYTES
                                          : crypto_auth_hmacsha256_BYTES;
}

std::size_t ds_vk_len(DsSchemeId scheme_id) {
  check_scheme(scheme_id);
  return scheme_id == DsSchemeId::ed25519 ? crypto_sign_PUBLICKEYBYTES
                                          : crypto_auth_hmacsha256_KEYBYTES;
}

std::size_t ds_sk_len(DsSchemeId scheme_id) {
  check_scheme(scheme_id);
  return scheme_id == DsSchemeId::ed25519 ? crypto_sign_SEEDBYTES
                                          : crypto_auth_hmacsha256_KEYBYTES;
}

DsKeyPair ds_keygen(const DsPublicParams& pp, RandomSource& rng) {
  ensure_sodium();
  if (pp.scheme_id == DsSchemeId::ed25519) {
    Bytes seed = rng.bytes(crypto_sign_SEEDBYTES);
    Bytes pk(crypto_sign_PUBLICKEYBYTES);
    Bytes full_sk(crypto_sign_SECRETKEYBYTES);
    crypto_sign_seed_keypair(pk.data(), full_sk.data(), seed.data());
    sodium_memzero(full_sk.data(), full_sk.size());
    return DsKeyPair{pk, seed};
  }
  // Stub scheme: the key is symmetric, so vk == sk.
  Bytes key = rng.bytes(crypto_auth_hmacsha256_KEYBYTES);
  return DsKeyPair{key, key};
}

DsSignature ds_sign(const DsPublicParams& pp, ByteView sk, ByteView message) {
  ensure_sodium();
  if (sk.size() != ds_sk_len(pp.scheme_id)) {
    throw Error("bad-key-encoding", "wrong signing key length");
  }
  if (pp.scheme_id == DsSchemeId::ed25519) {
    Bytes pk(crypto_sign_PUBLICKEYBYTES);
    Bytes full_sk(crypto_sign_SECRETKEYBYTES);
    crypto_sign_seed_keypair(pk.data(), full_sk.data(), sk.data());
    Bytes sig(crypto_sign_BYTES);
    crypto_sign_detached(sig.data(), nullptr, nonnull(message),
                         message.size(), full_sk.data());
    sodium_memzero(full_sk.data(), full_sk.size());
    return DsSignature{sig};
  }
  Bytes sig(crypto_auth_hmacsha256_BYTES);
  crypto_auth_hmacsha256(sig.data(), nonnull(message), message.size(),
                         sk.data());
  return DsSignature{sig};
}

int ds_verify(const DsPublicParams& pp, ByteView vk, ByteView message,
              const DsSignature& sig) {
  ensure_sodium();
  if (sig.bytes.size() != ds_signature_len(pp.scheme_id)) {
    throw Error("bad-signature-encoding", "wrong signature length");
  }
  if (vk.size() != ds_vk_len(pp.scheme_id)) return 0;
  if (pp.scheme_id == DsSchemeId::ed25519) {
    int rc = crypto_sign_verify_detached(sig.bytes.data(), nonnull(message),
                                         message.size(), vk.data());
    return rc == 0 ? 1 : 0;
  }
  int rc = crypto_auth_hmacsha256_verify(sig.bytes.data(), nonnull(message),
                                         message.size(), vk.data());
  return rc == 0 ? 1 : 0;
}

}  // namespace oblisig
