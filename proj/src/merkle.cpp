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

#include "oblisig/merkle.hpp"

#include <utility>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

Bytes leaf_preimage(ByteView message) {
  Bytes pre;
  pre.reserve(1 + message.size());
  pre.push_back(kLeafDomainTag);
  append(pre, message);
  return pre;
}

Bytes node_preimage(ByteView left, ByteView right) {
  Bytes pre;
  pre.reserve(1 + left.size() + right.size());
  pre.push_back(kNodeDomainTag);
  append(pre, left);
  append(pre, right);
  return pre;
}

}  // namespace

std::vector<std::uint8_t> index_bits(std::uint64_t index, std::size_t depth) {
  if (depth > kMaxTreeDepth ||
      (depth < 64 && index >= (std::uint64_t{1} << depth))) {
    throw Error("index-out-of-range");
  }
  std::vector<std::uint8_t> bits(depth);
  for (std::size_t l = 0; l < depth; ++l) {
    bits[l] = static_cast<std::uint8_t>((index >> (depth - 1 - l)) & 1);
  }
  return bits;
}

std::size_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw Error("bad-list-size", "empty list");
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

std::vector<Bytes> pad_list(const std::vector<Bytes>& messages) {
  if (messages.size() < 2) {
    throw Error("bad-list-size", "need at least two messages");
  }
  for (const Bytes& m : messages) {
    if (!m.empty() && m[0] == kPaddingPrefix) {
      throw Error("reserved-prefix", "message starts with the padding byte");
    }
  }
  std::size_t k = ceil_log2(messages.size());
  if (k > kMaxTreeDepth) throw Error("bad-list-size", "list too large");
  std::size_t target = std::size_t{1} << k;
  std::vector<Bytes> padded = messages;
  padded.reserve(target);
  for (std::uint32_t i = 1; padded.size() < target; ++i) {
    Bytes filler;
    filler.push_back(kPaddingPrefix);
    put_u32_be(filler, i);
    padded.push_back(std::move(filler));
  }
  return padded;
}

MerkleTree::MerkleTree(const HashParams& params, std::vector<Bytes> leaves)
    : params_(params), leaves_(std::move(leaves)) {
  std::size_t n = leaves_.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw Error("unpadded-list", "leaf count is not a power of two >= 2");
  }
  depth_ = ceil_log2(n);
  if (depth_ > kMaxTreeDepth) throw Error("index-out-of-range", "tree depth");
  levels_.resize(depth_ + 1);
  levels_[depth_].reserve(n);
  for (const Bytes& m : leaves_) {
    levels_[depth_].push_back(hash_digest(params_, leaf_preimage(m)));
  }
  for (std::size_t l = depth_; l-- > 0;) {
    const auto& below = levels_[l + 1];
    levels_[l].reserve(below.size() / 2);
    for (std::size_t i = 0; i < below.size(); i += 2) {
      levels_[l].push_back(
          hash_digest(params_, node_preimage(below[i], below[i + 1])));
    }
  }
}

const Bytes& MerkleTree::node(std::size_t level, std::uint64_t idx) const {
  if (level >= levels_.size() || idx >= levels_[level].size()) {
    throw Error("index-out-of-range", "tree node");
  }
  return levels_[level][idx];
}

MerklePath MerkleTree::path(std::uint64_t index) const {
  if (index >= leaves_.size()) throw Error("index-out-of-range");
  MerklePath p;
  p.siblings.reserve(depth_);
  for (std::size_t l = 1; l <= depth_; ++l) {
    std::uint64_t on_path = index >> (depth_ - l);
    p.siblings.push_back(levels_[l][on_path ^ 1]);
  }
  return p;
}

std::vector<FoldStep> fold_steps(const HashParams& params,
                                 const MerklePath& path, ByteView message,
                                 std::uint64_t index) {
  std::size_t k = path.depth();
  auto bits = index_bits(index, k);
  std::vector<FoldStep> steps;
  steps.reserve(k);
  Bytes digest = hash_digest(params, leaf_preimage(message));
  for (std::size_t l = k; l >= 1; --l) {
    const Bytes& sibling = path.siblings[l - 1];
    Bytes input = bits[l - 1] == 0 ? node_preimage(digest, sibling)
                                   : node_preimage(sibling, digest);
    digest = hash_digest(params, input);
    steps.push_back(FoldStep{std::move(input), digest});
  }
  return steps;
}

Root root_reconstruct(const HashParams& params, const MerklePath& path,
                      ByteView message, std::uint64_t index) {
  if (path.depth() == 0) throw Error("index-out-of-range", "empty path");
  auto steps = fold_steps(params, path, message, index);
  return Root{steps.back().output};
}

HashCollision::HashCollision(const HashParams& params, Bytes first,
                             Bytes second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_ == second_) {
    throw Error("not-a-collision-pair", "inputs are identical");
  }
  if (hash_digest(params, first_) != hash_digest(params, second_)) {
    throw Error("not-a-collision-pair", "digests differ");
  }
}

HashCollision extract_leaf_collision(const MerkleTree& honest,
                                     ByteView message, const MerklePath& path,
                                     std::uint64_t index) {
  std::size_t k = honest.depth();
  if (path.depth() != k || index >= honest.leaf_count()) {
    throw Error("not-a-forgery", "path shape mismatch");
  }
  const Bytes& honest_leaf = honest.leaves()[static_cast<std::size_t>(index)];
  Bytes forged_pre = leaf_preimage(message);
  if (forged_pre == leaf_preimage(honest_leaf)) {
    throw Error("not-a-forgery", "message is the honest leaf");
  }
  if (!(root_reconstruct(honest.params(), path, message, index) ==
        honest.root())) {
    throw Error("not-a-forgery", "path does not reach the honest root");
  }
  // Leaf digests equal on different preimages: done.
  Bytes forged_digest = hash_digest(honest.params(), forged_pre);
  if (forged_digest == honest.node(k, index)) {
    return HashCollision(honest.params(), forged_pre,
                         leaf_preimage(honest_leaf));
  }
  // Otherwise the forged running digest differs from the honest node
  // entering every fold until some level reconciles the two; the first
  // reconciliation is a collision. The root level reconciles at the
  // latest, so the walk cannot fall through.
  auto steps = fold_steps(honest.params(), path, message, index);
  for (std::size_t t = 0; t < steps.size(); ++t) {
    std::size_t out_level = k - 1 - t;
    std::uint64_t parent = index >> (t + 1);
    if (steps[t].output == honest.node(out_level, parent)) {
      Bytes honest_input = node_preimage(honest.node(k - t, 2 * parent),
                                         honest.node(k - t, 2 * parent + 1));
      return HashCollision(honest.params(), steps[t].input, honest_input);
    }
  }
  throw Error("not-a-forgery", "fold never met the honest tree");
}

HashCollision extract_path_collision(const HashParams& params,
                                     ByteView message, std::uint64_t index,
                                     const MerklePath& path_a,
                                     const MerklePath& path_b) {
  if (path_a.depth() != path_b.depth() || path_a.depth() == 0) {
    throw Error("not-a-collision-pair", "path depth mismatch");
  }
  if (path_a == path_b) {
    throw Error("not-a-collision-pair", "paths are identical");
  }
  auto steps_a = fold_steps(params, path_a, message, index);
  auto steps_b = fold_steps(params, path_b, message, index);
  if (steps_a.back().output != steps_b.back().output) {
    throw Error("not-a-collision-pair", "roots differ");
  }
  // Both folds start from the same leaf digest. Some level must join
  // two different inputs into one digest; the last fold joins them at
  // the shared root if nothing lower did.
  for (std::size_t t = 0; t < steps_a.size(); ++t) {
    if (steps_a[t].output == steps_b[t].output &&
        steps_a[t].input != steps_b[t].input) {
      return HashCollision(params, steps_a[t].input, steps_b[t].input);
    }
  }
  throw Error("not-a-collision-pair", "folds are identical");
}

}  // namespace oblisig
