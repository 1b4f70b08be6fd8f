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

#include "oblisig/net/client.hpp"

#include <cerrno>
#include <cstring>

#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include "oblisig/ds.hpp"
#include "oblisig/error.hpp"
#include "oblisig/keyfile.hpp"

namespace oblisig {

namespace {

class FdGuard {
 public:
  explicit FdGuard(int fd) : fd_(fd) {}
  ~FdGuard() {
    if (fd_ >= 0) ::close(fd_);
  }
  FdGuard(const FdGuard&) = delete;
  FdGuard& operator=(const FdGuard&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

int connect_to(const std::string& host, std::uint16_t port, int timeout_ms) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  std::string service = std::to_string(port);
  int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &result);
  if (rc != 0) {
    throw Error("io", std::string("cannot resolve ") + host + ": " +
                          ::gai_strerror(rc));
  }
  int fd = -1;
  int last_errno = 0;
  for (addrinfo* ai = result; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      last_errno = errno;
      continue;
    }
    timeval tv{};
    tv.tv_sec = timeout_ms / 1000;
    tv.tv_usec = (timeout_ms % 1000) * 1000;
    ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
    ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    last_errno = errno;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(result);
  if (fd < 0) {
    throw Error("io", std::string("cannot connect to ") + host + ": " +
                          std::strerror(last_errno));
  }
  return fd;
}

[[noreturn]] void throw_reject(const Frame& frame) {
  if (frame.payload.size() == 1) {
    switch (static_cast<RejectReason>(frame.payload[0])) {
      case RejectReason::duplicate_message:
        throw Error("reject-duplicate-message",
                    "server rejected: duplicate message in list");
      case RejectReason::limits:
        throw Error("reject-limits", "server rejected: limits exceeded");
      case RejectReason::malformed:
        throw Error("reject-malformed", "server rejected: malformed request");
    }
  }
  throw Error("malformed-encoding", "unintelligible reject frame");
}

Frame exchange(int fd, const Bytes& out_frame, std::size_t max_reply,
               Transcript* transcript) {
  if (!write_all(fd, out_frame)) {
    throw Error("io", "short write to server");
  }
  if (transcript) transcript->to_server = out_frame;
  Frame reply;
  switch (read_frame(fd, max_reply, reply)) {
    case ReadStatus::ok:
      break;
    case ReadStatus::timeout:
      throw Error("timeout", "server did not answer in time");
    case ReadStatus::oversize:
      throw Error("limits", "server reply exceeds the expected size");
    default:
      throw Error("io", "connection closed before a full reply");
  }
  // Frame encoding is canonical, so re-encoding reproduces the exact
  // bytes received.
  if (transcript) {
    transcript->from_server = encode_frame(reply.type, reply.payload);
  }
  return reply;
}

}  // namespace

SignOutcome request_signature(const std::string& host, std::uint16_t port,
                              const OsPublicParams& pp, const Bytes& vk,
                              const MessageList& list,
                              std::uint32_t chosen_index, RandomSource& rng,
                              const ClientOptions& options) {
  auto [first, state] = os_u1(pp, vk, list, chosen_index, rng);

  SignRequest request{pp.variant, list, first};
  Bytes out_frame =
      encode_frame(FrameType::sign_request, encode_sign_request(request));

  FdGuard fd(connect_to(host, port, options.timeout_ms));

  std::size_t per_sig = ds_signature_len(pp.ds.scheme_id);
  std::size_t expected = pp.variant == Variant::per_message
                             ? per_sig * list.n()
                             : per_sig;
  SignOutcome outcome;
  Transcript* transcript =
      options.capture_transcript ? &outcome.transcript : nullptr;
  Frame reply = exchange(fd.get(), out_frame, expected + 64, transcript);

  if (reply.type == FrameType::reject) throw_reject(reply);
  if (reply.type != FrameType::sign_response) {
    throw Error("malformed-encoding", "unexpected reply frame type");
  }
  SecondMessage second = parse_second_message(pp, list.n(), reply.payload);
  auto [message, sig] = os_uder(pp, vk, state, second);
  if (os_verify(pp, vk, message, sig) != 1) {
    throw Error("signer-cheated", "derived signature fails verification");
  }
  outcome.message = std::move(message);
  outcome.sig = std::move(sig);
  return outcome;
}

Bytes fetch_public_key(const std::string& host, std::uint16_t port,
                       const OsPublicParams& pp,
                       const ClientOptions& options) {
  FdGuard fd(connect_to(host, port, options.timeout_ms));
  Bytes out_frame = encode_frame(FrameType::pubkey_request, Bytes{});
  Frame reply = exchange(fd.get(), out_frame, 4096, nullptr);
  if (reply.type == FrameType::reject) throw_reject(reply);
  if (reply.type != FrameType::pubkey_response) {
    throw Error("malformed-encoding", "unexpected reply frame type");
  }
  KeyFile kf = parse_key_file(reply.payload);
  if (kf.scheme_id != pp.ds.scheme_id) {
    throw Error("bad-key-encoding",
                "server key scheme does not match parameters");
  }
  return kf.vk;
}

}  // namespace oblisig
