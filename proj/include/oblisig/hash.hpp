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

#ifndef OBLISIG_HASH_HPP_
#define OBLISIG_HASH_HPP_

#include <cstdint>

#include "oblisig/bytes.hpp"

namespace oblisig {

// Two hash families share one interface. "production" is SHA-256 at
// full width. "weak_test" is SHA-256 truncated to 16 or 32 bits; its
// collisions are brute-forceable by design so the security games can
// exercise their collision branches for real.
enum class HashFamily : std::uint8_t {
  production = 1,
  weak_test = 2,
};

struct HashParams {
  HashFamily family = HashFamily::production;
  std::uint16_t output_bits = 256;

  std::size_t digest_len() const { return output_bits / 8u; }
  bool operator==(const HashParams&) const = default;
};

// Throws Error("bad-hash-params") on unsupported combinations:
// production is 256-bit only, weak_test allows 16 or 32.
HashParams make_hash_params(HashFamily family, std::uint16_t output_bits);
inline HashParams production_hash() {
  return make_hash_params(HashFamily::production, 256);
}
inline HashParams weak_hash(std::uint16_t output_bits = 16) {
  return make_hash_params(HashFamily::weak_test, output_bits);
}

Bytes hash_digest(const HashParams& params, ByteView input);

Bytes serialize_hash_params(const HashParams& params);
HashParams parse_hash_params(ByteReader& in);

}  // namespace oblisig

#endif  // OBLISIG_HASH_HPP_
