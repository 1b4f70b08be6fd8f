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

#include <doctest.h>

#include "oblisig/error.hpp"
#include "oblisig/merkle.hpp"

using namespace oblisig;

namespace {

Bytes leaf_of(const HashParams& params, ByteView m) {
  Bytes pre;
  pre.push_back(kLeafDomainTag);
  append(pre, m);
  return hash_digest(params, pre);
}

Bytes node_of(const HashParams& params, ByteView l, ByteView r) {
  Bytes pre;
  pre.push_back(kNodeDomainTag);
  append(pre, l);
  append(pre, r);
  return hash_digest(params, pre);
}

Bytes be2(std::uint64_t v) {
  return Bytes{static_cast<std::uint8_t>(v >> 8),
               static_cast<std::uint8_t>(v)};
}

}  // namespace

TEST_CASE("index bits are big-endian direction flags") {
  CHECK(index_bits(0, 3) == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(index_bits(5, 3) == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(index_bits(1, 1) == std::vector<std::uint8_t>{1});
  CHECK_THROWS_AS(index_bits(8, 3), Error);
}

TEST_CASE("ceil_log2") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(1024) == 10);
  CHECK(ceil_log2(1025) == 11);
}

TEST_CASE("padding fills to the next power of two with reserved names") {
  std::vector<Bytes> three = {to_bytes("a"), to_bytes("b"), to_bytes("c")};
  std::vector<Bytes> padded = pad_list(three);
  REQUIRE(padded.size() == 4);
  CHECK(padded[3] == Bytes{0xff, 0x00, 0x00, 0x00, 0x01});

  std::vector<Bytes> five(5, Bytes{});
  for (int i = 0; i < 5; ++i) five[i] = to_bytes(std::string(1, 'a' + i));
  std::vector<Bytes> p8 = pad_list(five);
  REQUIRE(p8.size() == 8);
  CHECK(p8[5] == Bytes{0xff, 0x00, 0x00, 0x00, 0x01});
  CHECK(p8[6] == Bytes{0xff, 0x00, 0x00, 0x00, 0x02});
  CHECK(p8[7] == Bytes{0xff, 0x00, 0x00, 0x00, 0x03});

  std::vector<Bytes> two = {to_bytes("a"), to_bytes("b")};
  CHECK(pad_list(two).size() == 2);  // identity on powers of two

  CHECK_THROWS_AS(pad_list({to_bytes("solo")}), Error);
  std::vector<Bytes> reserved = {Bytes{0xff, 'x'}, to_bytes("b")};
  CHECK_THROWS_AS(pad_list(reserved), Error);
}

TEST_CASE("two-leaf tree root matches the frozen digest") {
  HashParams h = production_hash();
  MerkleTree tree(h, {to_bytes("alpha"), to_bytes("beta")});
  CHECK(to_hex(tree.node(1, 0)) ==
        "2a158d8afd48e3f88cb4195dfdb2a9e4817d95fa57fd34440d93f9aae5c4f82b");
  CHECK(to_hex(tree.node(1, 1)) ==
        "e23537b050e84af2cbaab46f2f83d8d3b5febc8e5ac6200d306284f687d46924");
  CHECK(to_hex(tree.root().digest) ==
        "983cb57c04cddd52634edab38a7bef85708a974f114bbd9aa9ec5d4ce6656b4b");
}

TEST_CASE("four-leaf tree agrees with the direct formula") {
  HashParams h = production_hash();
  std::vector<Bytes> leaves = {to_bytes("m0"), to_bytes("m1"), to_bytes("m2"),
                               to_bytes("m3")};
  MerkleTree tree(h, leaves);
  Bytes l0 = leaf_of(h, leaves[0]), l1 = leaf_of(h, leaves[1]);
  Bytes l2 = leaf_of(h, leaves[2]), l3 = leaf_of(h, leaves[3]);
  Bytes n0 = node_of(h, l0, l1), n1 = node_of(h, l2, l3);
  CHECK(tree.root().digest == node_of(h, n0, n1));

  // Path for leaf 2: sibling of the depth-1 node first.
  MerklePath p = tree.path(2);
  REQUIRE(p.depth() == 2);
  CHECK(p.siblings[0] == n0);
  CHECK(p.siblings[1] == l3);
}

TEST_CASE("tree construction validates shape") {
  HashParams h = production_hash();
  CHECK_THROWS_AS(MerkleTree(h, {to_bytes("one")}), Error);
  CHECK_THROWS_AS(
      MerkleTree(h, {to_bytes("a"), to_bytes("b"), to_bytes("c")}), Error);
  std::vector<Bytes> empty;
  CHECK_THROWS_AS(MerkleTree(h, empty), Error);
}

TEST_CASE("every path folds back to the root") {
  HashParams h = production_hash();
  std::vector<Bytes> leaves;
  for (int i = 0; i < 8; ++i) {
    leaves.push_back(to_bytes("leaf-" + std::to_string(i)));
  }
  MerkleTree tree(h, leaves);
  for (std::uint64_t i = 0; i < 8; ++i) {
    MerklePath p = tree.path(i);
    CHECK(root_reconstruct(h, p, leaves[i], i) == tree.root());
    // Wrong message or wrong slot must not fold to the root.
    CHECK_FALSE(root_reconstruct(h, p, to_bytes("other"), i) == tree.root());
    CHECK_FALSE(
        root_reconstruct(h, p, leaves[i], (i + 1) % 8) == tree.root());
  }
  CHECK_THROWS_AS(tree.path(8), Error);
  CHECK_THROWS_AS(root_reconstruct(h, MerklePath{}, leaves[0], 0), Error);
  CHECK_THROWS_AS(root_reconstruct(h, tree.path(0), leaves[0], 8), Error);
}

TEST_CASE("fold steps expose every hashed preimage bottom-up") {
  HashParams h = production_hash();
  std::vector<Bytes> leaves = {to_bytes("w"), to_bytes("x"), to_bytes("y"),
                               to_bytes("z")};
  MerkleTree tree(h, leaves);
  std::vector<FoldStep> steps = fold_steps(h, tree.path(1), leaves[1], 1);
  REQUIRE(steps.size() == 2);
  // Entry 0 consumes the leaf digest as the right child of its parent.
  Bytes l1 = leaf_of(h, leaves[1]);
  Bytes pre0;
  pre0.push_back(kNodeDomainTag);
  append(pre0, tree.node(2, 0));
  append(pre0, l1);
  CHECK(steps[0].input == pre0);
  CHECK(steps[0].output == tree.node(1, 0));
  CHECK(steps[1].output == tree.root().digest);
  CHECK(hash_digest(h, steps[0].input) == steps[0].output);
  CHECK(hash_digest(h, steps[1].input) == steps[1].output);
}

TEST_CASE("collision wrapper verifies its pair") {
  HashParams h = production_hash();
  CHECK_THROWS_AS(HashCollision(h, to_bytes("same"), to_bytes("same")),
                  Error);
  CHECK_THROWS_AS(HashCollision(h, to_bytes("a"), to_bytes("b")), Error);
}

TEST_CASE("leaf collision extraction under the weak hash") {
  HashParams h = weak_hash(16);
  std::vector<Bytes> leaves = {to_bytes("first"), to_bytes("second")};
  MerkleTree tree(h, leaves);
  // Second preimage of leaf 0's digest among counter messages.
  Bytes target = leaf_of(h, leaves[0]);
  Bytes forged;
  for (std::uint64_t x = 0;; ++x) {
    Bytes candidate = to_bytes("probe-" + std::to_string(x));
    if (candidate != leaves[0] && leaf_of(h, candidate) == target) {
      forged = candidate;
      break;
    }
  }
  HashCollision coll = extract_leaf_collision(tree, forged, tree.path(0), 0);
  CHECK(coll.first() != coll.second());
  CHECK(hash_digest(h, coll.first()) == hash_digest(h, coll.second()));

  // An honestly listed message is not a forgery.
  CHECK_THROWS_AS(extract_leaf_collision(tree, leaves[0], tree.path(0), 0),
                  Error);
  // A message that does not fold to the root is not one either.
  CHECK_THROWS_AS(extract_leaf_collision(tree, to_bytes("junk"),
                                         tree.path(0), 0),
                  Error);
}

TEST_CASE("path collision extraction under the weak hash") {
  HashParams h = weak_hash(16);
  // Search over candidate partners until some sibling value other than
  // the honest one folds leaf 0 to the same root.
  Bytes m0 = to_bytes("path-base");
  Bytes h0 = leaf_of(h, m0);
  Bytes honest_sibling, forged_sibling, root;
  for (std::uint64_t v = 0;; ++v) {
    Bytes partner = to_bytes("partner-" + std::to_string(v));
    Bytes h1 = leaf_of(h, partner);
    Bytes candidate_root = node_of(h, h0, h1);
    bool found = false;
    for (std::uint64_t s = 0; s < 65536 && !found; ++s) {
      Bytes sib = be2(s);
      if (sib != h1 && node_of(h, h0, sib) == candidate_root) {
        honest_sibling = h1;
        forged_sibling = sib;
        root = candidate_root;
        found = true;
      }
    }
    if (found) break;
  }
  MerklePath pa{{honest_sibling}};
  MerklePath pb{{forged_sibling}};
  HashCollision coll = extract_path_collision(h, m0, 0, pa, pb);
  CHECK(coll.first() != coll.second());
  CHECK(hash_digest(h, coll.first()) == hash_digest(h, coll.second()));

  CHECK_THROWS_AS(extract_path_collision(h, m0, 0, pa, pa), Error);
  MerklePath deeper{{honest_sibling, honest_sibling}};
  CHECK_THROWS_AS(extract_path_collision(h, m0, 0, pa, deeper), Error);
}
