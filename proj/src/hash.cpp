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

#include "oblisig/hash.hpp"

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

void validate(const HashParams& params) {
  switch (params.family) {
    case HashFamily::production:
      if (params.output_bits == 256) return;
      break;
    case HashFamily::weak_test:
      if (params.output_bits == 16 || params.output_bits == 32) return;
      break;
  }
  throw Error("bad-hash-params", "unsupported family/width combination");
}

}  // namespace

HashParams make_hash_params(HashFamily family, std::uint16_t output_bits) {
  HashParams params{family, output_bits};
  validate(params);
  return params;
}

Bytes hash_digest(const HashParams& params, ByteView input) {
  validate(params);
  ensure_sodium();
  // Empty spans may carry a null data pointer; hand libsodium a real one.
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* ptr = input.empty() ? &kEmpty : input.data();
  Bytes full(crypto_hash_sha256_BYTES);
  crypto_hash_sha256(full.data(), ptr, input.size());
  full.resize(params.digest_len());
  return full;
}

Bytes serialize_hash_params(const HashParams& params) {
  validate(params);
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(params.family));
  put_u16_be(out, params.output_bits);
  return out;
}

HashParams parse_hash_params(ByteReader& in) {
  std::uint8_t family = in.u8();
  std::uint16_t bits = in.u16_be();
  if (family != static_cast<std::uint8_t>(HashFamily::production) &&
      family != static_cast<std::uint8_t>(HashFamily::weak_test)) {
    throw Error("malformed-encoding", "unknown hash family");
  }
  HashParams params{static_cast<HashFamily>(family), bits};
  try {
    validate(params);
  } catch (const Error&) {
    throw Error("malformed-encoding", "bad hash width");
  }
  return params;
}

}  // namespace oblisig
