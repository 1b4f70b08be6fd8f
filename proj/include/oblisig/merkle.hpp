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

#ifndef OBLISIG_MERKLE_HPP_
#define OBLISIG_MERKLE_HPP_

#include <cstdint>
#include <vector>

#include "oblisig/bytes.hpp"
#include "oblisig/hash.hpp"

namespace oblisig {

// Complete binary hash tree over exactly 2^k leaves, k >= 1.
// Domain separation: leaf digest H(0x00 || m), inner node
// H(0x01 || left || right). Authentication paths list siblings from
// the root end downward: entry 0 is the sibling of the depth-1 node on
// the leaf's root path, entry k-1 is the leaf's own sibling.
inline constexpr std::uint8_t kLeafDomainTag = 0x00;
inline constexpr std::uint8_t kNodeDomainTag = 0x01;

// Lists are padded to the next power of two with reserved messages
// 0xFF || counter(u32 BE), counter starting at 1. Real messages must
// not start with 0xFF.
inline constexpr std::uint8_t kPaddingPrefix = 0xFF;

inline constexpr std::size_t kMaxTreeDepth = 32;

struct Root {
  Bytes digest;
  bool operator==(const Root&) const = default;
};

struct MerklePath {
  std::vector<Bytes> siblings;  // root-adjacent sibling first

  std::size_t depth() const { return siblings.size(); }
  bool operator==(const MerklePath&) const = default;
};

// Index -> direction bits b1..bk, most significant first. bit l tells
// whether the depth-l node on the root path is a right child (1) or
// left child (0). Throws Error("index-out-of-range") if i >= 2^k.
std::vector<std::uint8_t> index_bits(std::uint64_t index, std::size_t depth);

// ceil(log2(n)) for n >= 1.
std::size_t ceil_log2(std::uint64_t n);

// Pads to the next power of two (identity when already a power of two,
// minimum list size 2). Throws Error("bad-list-size") for n < 2 and
// Error("reserved-prefix") if a real message starts with 0xFF.
std::vector<Bytes> pad_list(const std::vector<Bytes>& messages);

class MerkleTree {
 public:
  // Leaves must number exactly 2^k, k >= 1 (throws
  // Error("unpadded-list") otherwise, Error("index-out-of-range") past
  // kMaxTreeDepth).
  MerkleTree(const HashParams& params, std::vector<Bytes> leaves);

  const HashParams& params() const { return params_; }
  std::size_t depth() const { return depth_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  const std::vector<Bytes>& leaves() const { return leaves_; }
  Root root() const { return Root{levels_[0][0]}; }

  // Digest of the idx-th node at the given level (level 0 is the root,
  // level depth() the leaf digests). Bounds-checked.
  const Bytes& node(std::size_t level, std::uint64_t idx) const;

  MerklePath path(std::uint64_t index) const;

 private:
  HashParams params_;
  std::size_t depth_;
  std::vector<Bytes> leaves_;
  std::vector<std::vector<Bytes>> levels_;  // levels_[l].size() == 2^l
};

// Folds a candidate leaf up the path. Wrong inputs produce a
// non-matching root; index out of range for the path depth throws.
Root root_reconstruct(const HashParams& params, const MerklePath& path,
                      ByteView message, std::uint64_t index);

// One hash evaluation in a path fold, bottom-up: entry 0 consumes the
// leaf digest, entry depth-1 produces the root.
struct FoldStep {
  Bytes input;   // full preimage including the node domain tag
  Bytes output;  // its digest
};
std::vector<FoldStep> fold_steps(const HashParams& params,
                                 const MerklePath& path, ByteView message,
                                 std::uint64_t index);

// A verified collision: two distinct inputs with equal digests.
// Construction checks both properties and throws
// Error("not-a-collision-pair") if either fails.
class HashCollision {
 public:
  HashCollision(const HashParams& params, Bytes first, Bytes second);

  const Bytes& first() const { return first_; }
  const Bytes& second() const { return second_; }

 private:
  Bytes first_;
  Bytes second_;
};

// Extractor for a forged path: message not at leaf `index` of the
// honest tree, yet its path folds to the honest root. Walks the fold
// against the honest tree bottom-up and returns the lowest level where
// two different preimages hash to the same digest. Throws
// Error("not-a-forgery") when preconditions fail.
HashCollision extract_leaf_collision(const MerkleTree& honest,
                                     ByteView message,
                                     const MerklePath& path,
                                     std::uint64_t index);

// Extractor for two different equal-depth paths that authenticate the
// same (message, index) to the same root. Returns the first level
// where the running digests coincide on different inputs. Throws
// Error("not-a-collision-pair") when preconditions fail.
HashCollision extract_path_collision(const HashParams& params,
                                     ByteView message, std::uint64_t index,
                                     const MerklePath& path_a,
                                     const MerklePath& path_b);

}  // namespace oblisig

#endif  // OBLISIG_MERKLE_HPP_
