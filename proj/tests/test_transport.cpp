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

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include "oblisig/error.hpp"
#include "oblisig/hash.hpp"
#include "oblisig/keyfile.hpp"
#include "oblisig/net/client.hpp"
#include "oblisig/net/server.hpp"
#include "oblisig/net/wire.hpp"
#include "oblisig/rng.hpp"
#include "oblisig/scheme.hpp"

using namespace oblisig;

namespace {

struct SocketPair {
  int a = -1;
  int b = -1;
  SocketPair() {
    int fds[2];
    REQUIRE(::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) == 0);
    a = fds[0];
    b = fds[1];
  }
  ~SocketPair() {
    if (a >= 0) ::close(a);
    if (b >= 0) ::close(b);
  }
  void close_a() {
    ::close(a);
    a = -1;
  }
};

MessageList make_list(std::size_t n, const std::string& stem = "net") {
  MessageList list;
  for (std::size_t i = 0; i < n; ++i) {
    list.messages.push_back(to_bytes(stem + "-" + std::to_string(i)));
  }
  return list;
}

KeyFile fresh_key(DsSchemeId scheme, std::uint64_t seed) {
  SeededRandom rng(seed);
  DsKeyPair keys = ds_keygen(ds_setup(scheme), rng);
  return KeyFile{scheme, keys.vk, keys.sk};
}

// Raw one-shot exchange against a live server, for malformed frames
// the client API cannot produce.
Bytes raw_exchange(std::uint16_t port, const Bytes& wire) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  REQUIRE(fd >= 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  ::inet_pton(AF_INET, "127.0.0.1", &addr.sin_addr);
  REQUIRE(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) ==
          0);
  REQUIRE(write_all(fd, wire));
  ::shutdown(fd, SHUT_WR);
  Bytes reply;
  std::uint8_t buf[512];
  for (;;) {
    ssize_t r = ::recv(fd, buf, sizeof buf, 0);
    if (r <= 0) break;
    reply.insert(reply.end(), buf, buf + r);
  }
  ::close(fd);
  return reply;
}

}  // namespace

TEST_CASE("frames round trip over a socket") {
  SocketPair sp;
  Bytes payload = to_bytes("hello frame");
  REQUIRE(write_all(sp.a, encode_frame(FrameType::sign_response, payload)));
  Frame frame;
  CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::ok);
  CHECK(frame.type == FrameType::sign_response);
  CHECK(frame.payload == payload);

  // Empty payload is legal: the frame still carries its type byte.
  REQUIRE(write_all(sp.a, encode_frame(FrameType::pubkey_request, Bytes{})));
  CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::ok);
  CHECK(frame.type == FrameType::pubkey_request);
  CHECK(frame.payload.empty());
}

TEST_CASE("frame reader classifies failure modes") {
  {
    SocketPair sp;
    sp.close_a();
    Frame frame;
    CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::eof);
  }
  {
    SocketPair sp;
    Bytes torn = {0x00, 0x00};  // half a length header
    REQUIRE(write_all(sp.a, torn));
    sp.close_a();
    Frame frame;
    CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::error);
  }
  {
    SocketPair sp;
    Bytes header = {0x00, 0x00, 0x00, 0x10};  // promises 16 bytes
    REQUIRE(write_all(sp.a, header));
    sp.close_a();  // never delivers them
    Frame frame;
    CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::error);
  }
  {
    SocketPair sp;
    Bytes zero = {0x00, 0x00, 0x00, 0x00};  // a frame without a type
    REQUIRE(write_all(sp.a, zero));
    Frame frame;
    CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::error);
  }
  {
    SocketPair sp;
    Bytes huge = {0x7f, 0xff, 0xff, 0xff};
    REQUIRE(write_all(sp.a, huge));
    Frame frame;
    CHECK(read_frame(sp.b, 64, frame) == ReadStatus::oversize);
  }
  {
    SocketPair sp;
    timeval tv{};
    tv.tv_usec = 50 * 1000;
    ::setsockopt(sp.b, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
    Frame frame;
    CHECK(read_frame(sp.b, 1024, frame) == ReadStatus::timeout);
  }
}

TEST_CASE("sign request encoding round trips") {
  SeededRandom rng(31);
  OsPublicParams pp = os_setup(Variant::tree_single, production_hash());
  DsKeyPair keys = os_keygen(pp, rng);
  MessageList list = make_list(3);
  auto [first, state] = os_u1(pp, keys.vk, list, 1, rng);
  (void)state;

  SignRequest request{pp.variant, list, first};
  Bytes payload = encode_sign_request(request);
  // The commitment digest sits at the very end of the payload.
  CHECK(Bytes(payload.end() - 32, payload.end()) == first.c.digest);

  SignRequest back = parse_sign_request(payload, 32, 1024, 65536);
  CHECK(back.variant == request.variant);
  CHECK(back.list == request.list);
  CHECK(back.first == request.first);

  Bytes bad_variant = payload;
  bad_variant[0] = 0x09;
  CHECK_THROWS_AS(
      static_cast<void>(parse_sign_request(bad_variant, 32, 1024, 65536)),
      Error);

  Bytes trailing = payload;
  trailing.push_back(0x00);
  CHECK_THROWS_AS(
      static_cast<void>(parse_sign_request(trailing, 32, 1024, 65536)),
      Error);

  try {
    (void)parse_sign_request(payload, 32, 2, 65536);
    FAIL("expected limits");
  } catch (const Error& e) {
    CHECK(e.code() == "limits");
  }
}

TEST_CASE("loopback signing session, both variants") {
  for (Variant variant : {Variant::tree_single, Variant::per_message}) {
    CAPTURE(static_cast<int>(variant));
    OsPublicParams pp = os_setup(variant, production_hash());
    KeyFile key = fresh_key(DsSchemeId::ed25519, 101);
    ServerConfig config;
    config.port = 0;
    SignerServer server(pp, key, config);
    server.start();

    SeededRandom rng(55);
    MessageList list = make_list(4);
    ClientOptions options;
    options.capture_transcript = true;
    SignOutcome outcome = request_signature("127.0.0.1", server.port(), pp,
                                            key.vk, list, 2, rng, options);
    CHECK(outcome.message == to_bytes("net-2"));
    CHECK(os_verify(pp, key.vk, outcome.message, outcome.sig) == 1);
    CHECK_FALSE(outcome.transcript.to_server.empty());
    CHECK_FALSE(outcome.transcript.from_server.empty());

    // Off-list message never verifies against the fetched signature.
    CHECK(os_verify(pp, key.vk, to_bytes("net-0"), outcome.sig) == 0);

    Bytes vk = fetch_public_key("127.0.0.1", server.port(), pp);
    CHECK(vk == key.vk);

    server.stop();  // drains handlers, so the counters are final
    ServerStats stats = server.stats();
    CHECK(stats.connections == 2);
    CHECK(stats.sign_responses == 1);
    CHECK(stats.rejects == 0);
  }
}

TEST_CASE("server rejects bad requests with coded reasons") {
  OsPublicParams pp = os_setup(Variant::tree_single, production_hash());
  KeyFile key = fresh_key(DsSchemeId::ed25519, 102);
  ServerConfig config;
  config.port = 0;
  config.max_n = 4;
  config.max_message_bytes = 64;
  SignerServer server(pp, key, config);
  server.start();
  SeededRandom rng(66);

  // Duplicate candidate.
  {
    MessageList dup = make_list(2);
    dup.messages[1] = dup.messages[0];
    // os_u1 refuses to build this, so hand-roll the request.
    MessageList good = make_list(2);
    auto [first, state] = os_u1(pp, key.vk, good, 0, rng);
    (void)state;
    SignRequest request{pp.variant, dup, first};
    Bytes reply = raw_exchange(
        server.port(),
        encode_frame(FrameType::sign_request, encode_sign_request(request)));
    REQUIRE(reply.size() == 6);
    CHECK(reply[4] == static_cast<std::uint8_t>(FrameType::reject));
    CHECK(reply[5] ==
          static_cast<std::uint8_t>(RejectReason::duplicate_message));
  }

  // Over the list-size limit.
  {
    MessageList big = make_list(5);
    try {
      (void)request_signature("127.0.0.1", server.port(), pp, key.vk, big, 0,
                              rng);
      FAIL("expected reject");
    } catch (const Error& e) {
      CHECK(e.code() == "reject-limits");
    }
  }

  // Variant mismatch: a per-message request against a tree signer.
  {
    OsPublicParams lp = os_setup(Variant::per_message, production_hash());
    MessageList list = make_list(2);
    try {
      (void)request_signature("127.0.0.1", server.port(), lp, key.vk, list, 0,
                              rng);
      FAIL("expected reject");
    } catch (const Error& e) {
      CHECK(e.code() == "reject-malformed");
    }
  }

  // Unknown frame type.
  {
    Bytes reply =
        raw_exchange(server.port(), encode_frame(static_cast<FrameType>(0x77),
                                                 to_bytes("?")));
    REQUIRE(reply.size() == 6);
    CHECK(reply[5] == static_cast<std::uint8_t>(RejectReason::malformed));
  }

  // Garbage payload in a well-typed frame.
  {
    Bytes reply = raw_exchange(
        server.port(),
        encode_frame(FrameType::sign_request, to_bytes("not a request")));
    REQUIRE(reply.size() == 6);
    CHECK(reply[5] == static_cast<std::uint8_t>(RejectReason::malformed));
  }

  server.stop();
  ServerStats stats = server.stats();
  CHECK(stats.sign_responses == 0);
  CHECK(stats.rejects == 5);
}

TEST_CASE("server stays up across failed connections") {
  OsPublicParams pp = os_setup(Variant::tree_single, production_hash());
  KeyFile key = fresh_key(DsSchemeId::ed25519, 103);
  ServerConfig config;
  config.port = 0;
  SignerServer server(pp, key, config);
  server.start();

  // A connection that opens and closes without a byte.
  (void)raw_exchange(server.port(), Bytes{});
  // A torn frame header.
  (void)raw_exchange(server.port(), Bytes{0x00, 0x01});

  SeededRandom rng(77);
  MessageList list = make_list(2);
  SignOutcome outcome =
      request_signature("127.0.0.1", server.port(), pp, key.vk, list, 1, rng);
  CHECK(os_verify(pp, key.vk, outcome.message, outcome.sig) == 1);
  server.stop();
}

TEST_CASE("server config parsing") {
  std::string path = "server_config_test.tmp.json";
  {
    std::ofstream out(path);
    out << R"({"listen_address":"127.0.0.1","port":7777,)"
        << R"("key_file":"k.bin","variant":"per-message","max_n":16,)"
        << R"("max_message_bytes":128,"io_timeout_ms":250})";
  }
  ServerConfig config = load_server_config(path);
  CHECK(config.listen_address == "127.0.0.1");
  CHECK(config.port == 7777);
  CHECK(config.key_file == "k.bin");
  CHECK(config.variant == Variant::per_message);
  CHECK(config.max_n == 16);
  CHECK(config.max_message_bytes == 128);
  CHECK(config.io_timeout_ms == 250);

  {
    std::ofstream out(path);
    out << R"({"key_file":"k.bin"})";
  }
  ServerConfig defaulted = load_server_config(path);
  CHECK(defaulted.variant == Variant::tree_single);
  CHECK(defaulted.port == 0);
  CHECK(defaulted.max_n == 1024);
  CHECK(defaulted.io_timeout_ms == 5000);

  {
    std::ofstream out(path);
    out << R"({"key_file":"k.bin","io_timeout_ms":0})";
  }
  CHECK_THROWS_AS(load_server_config(path), Error);

  {
    std::ofstream out(path);
    out << R"({"key_file":"k.bin","variant":"bogus"})";
  }
  CHECK_THROWS_AS(load_server_config(path), Error);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_server_config(path), Error);
  {
    std::ofstream out(path);
    out << R"({"port": 1})";  // key_file missing
  }
  CHECK_THROWS_AS(load_server_config(path), Error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_server_config("missing.json"), Error);
}

TEST_CASE("client reports a dead endpoint as an io error") {
  OsPublicParams pp = os_setup(Variant::tree_single, production_hash());
  SeededRandom rng(88);
  MessageList list = make_list(2);
  // Bind a listener-less port: connect must fail fast.
  try {
    (void)request_signature("127.0.0.1", 1, pp, Bytes(32, 0), list, 0, rng);
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == "io");
  }
}
