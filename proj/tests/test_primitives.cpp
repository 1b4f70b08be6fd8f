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

#include <array>
#include <cstdio>
#include <set>

#include <doctest.h>

#include "oblisig/bytes.hpp"
#include "oblisig/commit.hpp"
#include "oblisig/ds.hpp"
#include "oblisig/error.hpp"
#include "oblisig/hash.hpp"
#include "oblisig/keyfile.hpp"
#include "oblisig/rng.hpp"

using namespace oblisig;

namespace {

// Hands out a fixed byte string, for driving key generation from
// published test vectors.
class ScriptedRandom : public RandomSource {
 public:
  explicit ScriptedRandom(Bytes script) : script_(std::move(script)) {}

  void fill(std::uint8_t* out, std::size_t len) override {
    REQUIRE(pos_ + len <= script_.size());
    std::copy(script_.begin() + pos_, script_.begin() + pos_ + len, out);
    pos_ += len;
  }

 private:
  Bytes script_;
  std::size_t pos_ = 0;
};

}  // namespace

TEST_CASE("hex encoding round trips") {
  Bytes data = {0x00, 0x01, 0xab, 0xff};
  CHECK(to_hex(data) == "0001abff");
  CHECK(from_hex("0001abff") == data);
  CHECK(from_hex("") == Bytes{});
  CHECK_THROWS_AS(from_hex("abc"), Error);    // odd length
  CHECK_THROWS_AS(from_hex("zz"), Error);     // non-hex
}

TEST_CASE("big-endian integer writers") {
  Bytes out;
  put_u16_be(out, 0x0102);
  put_u32_be(out, 0x03040506);
  put_u64_be(out, 0x0708090a0b0c0d0eull);
  CHECK(to_hex(out) == "010203040506" "0708090a0b0c0d0e");
}

TEST_CASE("byte reader consumes the exact layout") {
  Bytes data = from_hex("01" "0203" "04050607" "ff");
  ByteReader in(data);
  CHECK(in.u8() == 0x01);
  CHECK(in.u16_be() == 0x0203);
  CHECK(in.u32_be() == 0x04050607);
  CHECK(in.remaining() == 1);
  CHECK(in.take(1) == Bytes{0xff});
  CHECK_NOTHROW(in.expect_end());

  ByteReader short_in(data);
  short_in.take(8);
  CHECK_THROWS_AS(short_in.u8(), Error);  // underflow

  ByteReader trailing(data);
  trailing.u8();
  CHECK_THROWS_AS(trailing.expect_end(), Error);
}

TEST_CASE("sha-256 reference vectors") {
  // Published digests for the empty string and "abc".
  CHECK(to_hex(hash_digest(production_hash(), Bytes{})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(hash_digest(production_hash(), to_bytes("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("weak family truncates the production digest") {
  CHECK(to_hex(hash_digest(weak_hash(16), to_bytes("abc"))) == "ba78");
  Bytes full = hash_digest(production_hash(), to_bytes("abc"));
  Bytes w32 = hash_digest(weak_hash(32), to_bytes("abc"));
  CHECK(Bytes(full.begin(), full.begin() + 4) == w32);
  CHECK(weak_hash(16).digest_len() == 2);
}

TEST_CASE("hash parameter validation") {
  CHECK_THROWS_AS(make_hash_params(HashFamily::production, 128), Error);
  CHECK_THROWS_AS(make_hash_params(HashFamily::weak_test, 8), Error);
  CHECK_THROWS_AS(make_hash_params(HashFamily::weak_test, 64), Error);
  CHECK_NOTHROW(make_hash_params(HashFamily::weak_test, 32));

  Bytes enc = serialize_hash_params(weak_hash(32));
  ByteReader in(enc);
  CHECK(parse_hash_params(in) == weak_hash(32));
}

TEST_CASE("commitment opens only with its message and randomness") {
  CommitKey ck = com_keygen(production_hash());
  CommitRandomness r{from_hex(
      "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f")};
  Commitment c = commit(ck, to_bytes("oblivious"), r);
  // Frozen digest for this exact (message, randomness) pair.
  CHECK(to_hex(c.digest) ==
        "bbf7ddd89ce543f0cfde695efc7fe3b993be6e11e402daf99a2692b4119bb888");

  CHECK(commit_open(ck, c, to_bytes("oblivious"), r) == 1);
  CHECK(commit_open(ck, c, to_bytes("oblivioux"), r) == 0);
  CommitRandomness other{Bytes(32, 0x55)};
  CHECK(commit_open(ck, c, to_bytes("oblivious"), other) == 0);
  CommitRandomness narrow{Bytes(16, 0x00)};
  CHECK_THROWS_AS(commit(ck, to_bytes("x"), narrow), Error);
  CHECK(commit_open(ck, c, to_bytes("oblivious"), narrow) == 0);
}

TEST_CASE("length framing separates message from randomness") {
  // Without the length prefix these two would collide.
  CommitKey ck = com_keygen(production_hash());
  CommitRandomness r1{Bytes(32, 0xaa)};
  Bytes m1 = to_bytes("ab");
  Bytes m2 = to_bytes("a");
  CommitRandomness r2{to_bytes("b")};
  append(r2.bytes, ByteView(r1.bytes.data(), r1.bytes.size() - 1));
  CHECK(commit(ck, m1, r1).digest != commit(ck, m2, r2).digest);
}

TEST_CASE("commitment digests spread evenly across byte values") {
  CommitKey ck = com_keygen(production_hash());
  SeededRandom rng(2026);
  std::array<std::size_t, 256> bins{};
  const int kRuns = 10000;
  for (int i = 0; i < kRuns; ++i) {
    CommitRandomness r{rng.bytes(ck.randomness_len())};
    Commitment c = commit(ck, to_bytes("fixed message"), r);
    for (std::uint8_t b : c.digest) ++bins[b];
  }
  double expected = (kRuns * 32.0) / 256.0;
  double chi2 = 0.0;
  for (std::size_t count : bins) {
    double d = static_cast<double>(count) - expected;
    chi2 += d * d / expected;
  }
  // 99th percentile of chi-square with 255 degrees of freedom.
  CHECK(chi2 < 310.45738821990585);
}

TEST_CASE("ed25519 matches the published test vector") {
  DsPublicParams pp = ds_setup(DsSchemeId::ed25519);
  Bytes seed = from_hex(
      "9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60");
  ScriptedRandom rng(seed);
  DsKeyPair keys = ds_keygen(pp, rng);
  CHECK(to_hex(keys.vk) ==
        "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");
  DsSignature sig = ds_sign(pp, keys.sk, Bytes{});
  CHECK(to_hex(sig.bytes) ==
        "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e06522490155"
        "5fb8821590a33bacc61e39701cf9b46bd25bf5f0595bbe24655141438e7a100b");
  CHECK(ds_verify(pp, keys.vk, Bytes{}, sig) == 1);
}

TEST_CASE("ed25519 rejects tampering") {
  DsPublicParams pp = ds_setup(DsSchemeId::ed25519);
  SeededRandom rng(3);
  DsKeyPair keys = ds_keygen(pp, rng);
  Bytes message = to_bytes("sign me");
  DsSignature sig = ds_sign(pp, keys.sk, message);
  CHECK(ds_verify(pp, keys.vk, message, sig) == 1);
  CHECK(ds_verify(pp, keys.vk, to_bytes("sign mE"), sig) == 0);
  DsSignature bent = sig;
  bent.bytes[0] ^= 0x01;
  CHECK(ds_verify(pp, keys.vk, message, bent) == 0);
  DsSignature narrow;
  narrow.bytes = Bytes(16, 0);
  CHECK_THROWS_AS(ds_verify(pp, keys.vk, message, narrow), Error);
  Bytes wrong_vk(16, 0);
  CHECK(ds_verify(pp, wrong_vk, message, sig) == 0);
}

TEST_CASE("symmetric stub signs and verifies with the same key") {
  DsPublicParams pp = ds_setup(DsSchemeId::hmac_stub);
  SeededRandom rng(4);
  DsKeyPair keys = ds_keygen(pp, rng);
  CHECK(keys.vk == keys.sk);  // the property the DS game exploits
  Bytes message = to_bytes("stub message");
  DsSignature sig = ds_sign(pp, keys.sk, message);
  CHECK(ds_verify(pp, keys.vk, message, sig) == 1);
  CHECK(ds_verify(pp, keys.vk, to_bytes("other"), sig) == 0);
  CHECK(ds_signature_len(DsSchemeId::hmac_stub) == 32);
  CHECK(ds_signature_len(DsSchemeId::ed25519) == 64);
}

TEST_CASE("key files round trip and validate") {
  SeededRandom rng(5);
  DsKeyPair keys = ds_keygen(ds_setup(DsSchemeId::ed25519), rng);
  KeyFile kf{DsSchemeId::ed25519, keys.vk, keys.sk};
  Bytes enc = serialize_key_file(kf);
  KeyFile back = parse_key_file(enc);
  CHECK(back.vk == kf.vk);
  CHECK(back.sk == kf.sk);
  CHECK(back.has_secret());

  KeyFile pub = public_only(kf);
  CHECK_FALSE(pub.has_secret());
  CHECK(parse_key_file(serialize_key_file(pub)).vk == kf.vk);

  Bytes bad = enc;
  bad[0] = 'X';
  CHECK_THROWS_AS(parse_key_file(bad), Error);
  Bytes truncated(enc.begin(), enc.begin() + 8);
  CHECK_THROWS_AS(parse_key_file(truncated), Error);

  std::string path = "key_file_test.tmp";
  write_key_file(path, kf);
  KeyFile loaded = read_key_file(path);
  CHECK(loaded.vk == kf.vk);
  CHECK(loaded.sk == kf.sk);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_key_file("does/not/exist.key"), Error);
}

TEST_CASE("seeded randomness is reproducible") {
  SeededRandom a(99), b(99), c(100);
  Bytes xa = a.bytes(48);
  CHECK(xa == b.bytes(48));
  CHECK(xa != c.bytes(48));

  SeededRandom r(7);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = r.below(17);
    CHECK(v < 17);
  }
  std::set<Bytes> distinct;
  SystemRandom sys;
  for (int i = 0; i < 8; ++i) distinct.insert(sys.bytes(16));
  CHECK(distinct.size() == 8);
}
