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

#ifndef OBLISIG_COMMIT_HPP_
#define OBLISIG_COMMIT_HPP_

#include <cstdint>

#include "oblisig/bytes.hpp"
#include "oblisig/hash.hpp"
#include "oblisig/rng.hpp"

namespace oblisig {

// Hash commitment c = H(0x02 || len(m) as u64 BE || m || r).
// The length prefix keeps the (m, r) split unambiguous; the tag byte
// separates the commitment domain from the tree domains (0x00 leaf,
// 0x01 inner node). Randomness width equals the digest width, so
// hiding degrades in lockstep with the hash family: under weak_test
// parameters openings are brute-forceable on purpose.
inline constexpr std::uint8_t kCommitDomainTag = 0x02;

struct CommitKey {
  HashParams hash;
  std::uint8_t domain_tag = kCommitDomainTag;

  std::size_t randomness_len() const { return hash.digest_len(); }
  bool operator==(const CommitKey&) const = default;
};

struct CommitRandomness {
  Bytes bytes;
  bool operator==(const CommitRandomness&) const = default;
};

struct Commitment {
  Bytes digest;
  bool operator==(const Commitment&) const = default;
};

CommitKey com_keygen(const HashParams& params);
CommitRandomness sample_commit_randomness(const CommitKey& ck,
                                          RandomSource& rng);
// Throws Error("bad-randomness-length") when |r| != randomness_len().
Commitment commit(const CommitKey& ck, ByteView message,
                  const CommitRandomness& r);
// Opening check: recompute and compare. Returns 1 or 0, never throws
// for wrong-length randomness (that is just a failed opening).
int commit_open(const CommitKey& ck, const Commitment& c, ByteView message,
                const CommitRandomness& r);

Bytes serialize_commit_key(const CommitKey& ck);
CommitKey parse_commit_key(ByteReader& in);

}  // namespace oblisig

#endif  // OBLISIG_COMMIT_HPP_
