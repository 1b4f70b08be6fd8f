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

#include "oblisig/commit.hpp"

#include "oblisig/error.hpp"

namespace oblisig {

CommitKey com_keygen(const HashParams& params) {
  return CommitKey{params, kCommitDomainTag};
}

CommitRandomness sample_commit_randomness(const CommitKey& ck,
                                          RandomSource& rng) {
  return CommitRandomness{rng.bytes(ck.randomness_len())};
}

Commitment commit(const CommitKey& ck, ByteView message,
                  const CommitRandomness& r) {
  if (r.bytes.size() != ck.randomness_len()) {
    throw Error("bad-randomness-length");
  }
  Bytes preimage;
  preimage.reserve(1 + 8 + message.size() + r.bytes.size());
  preimage.push_back(ck.domain_tag);
  put_u64_be(preimage, message.size());
  append(preimage, message);
  append(preimage, r.bytes);
  return Commitment{hash_digest(ck.hash, preimage)};
}

int commit_open(const CommitKey& ck, const Commitment& c, ByteView message,
                const CommitRandomness& r) {
  if (r.bytes.size() != ck.randomness_len()) return 0;
  return commit(ck, message, r) == c ? 1 : 0;
}

Bytes serialize_commit_key(const CommitKey& ck) {
  Bytes out = serialize_hash_params(ck.hash);
  out.push_back(ck.domain_tag);
  return out;
}

CommitKey parse_commit_key(ByteReader& in) {
  CommitKey ck;
  ck.hash = parse_hash_params(in);
  ck.domain_tag = in.u8();
  if (ck.domain_tag != kCommitDomainTag) {
    throw Error("malformed-encoding", "bad commitment domain tag");
  }
  return ck;
}

}  // namespace oblisig
