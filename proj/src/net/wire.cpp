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

#include "oblisig/net/wire.hpp"

#include <cerrno>
#include <cstring>

#include <sys/socket.h>
#include <sys/types.h>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

ReadStatus read_exact(int fd, std::uint8_t* dst, std::size_t len,
                      bool* got_any) {
  std::size_t done = 0;
  while (done < len) {
    ssize_t r = ::recv(fd, dst + done, len - done, 0);
    if (r > 0) {
      done += static_cast<std::size_t>(r);
      if (got_any) *got_any = true;
      continue;
    }
    if (r == 0) {
      // Clean close mid-object is torn unless nothing arrived at all.
      return (got_any && !*got_any) ? ReadStatus::eof : ReadStatus::error;
    }
    if (errno == EINTR) continue;
    if (errno == EAGAIN || errno == EWOULDBLOCK) return ReadStatus::timeout;
    return ReadStatus::error;
  }
  return ReadStatus::ok;
}

}  // namespace

Bytes encode_frame(FrameType type, ByteView payload) {
  Bytes out;
  out.reserve(5 + payload.size());
  put_u32_be(out, static_cast<std::uint32_t>(1 + payload.size()));
  out.push_back(static_cast<std::uint8_t>(type));
  append(out, payload);
  return out;
}

ReadStatus read_frame(int fd, std::size_t max_payload, Frame& out) {
  std::uint8_t header[4];
  bool got_any = false;
  ReadStatus st = read_exact(fd, header, sizeof header, &got_any);
  if (st != ReadStatus::ok) return st;
  std::uint32_t len = (std::uint32_t{header[0]} << 24) |
                      (std::uint32_t{header[1]} << 16) |
                      (std::uint32_t{header[2]} << 8) | std::uint32_t{header[3]};
  if (len == 0) return ReadStatus::error;
  if (len > 1 + max_payload) return ReadStatus::oversize;
  Bytes body(len);
  st = read_exact(fd, body.data(), body.size(), &got_any);
  if (st != ReadStatus::ok) {
    return st == ReadStatus::eof ? ReadStatus::error : st;
  }
  out.type = static_cast<FrameType>(body[0]);
  out.payload.assign(body.begin() + 1, body.end());
  return ReadStatus::ok;
}

bool write_all(int fd, ByteView data) {
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t w = ::send(fd, data.data() + done, data.size() - done,
                       MSG_NOSIGNAL);
    if (w > 0) {
      done += static_cast<std::size_t>(w);
      continue;
    }
    if (w < 0 && errno == EINTR) continue;
    return false;
  }
  return true;
}

Bytes encode_sign_request(const SignRequest& request) {
  Bytes payload;
  payload.push_back(static_cast<std::uint8_t>(request.variant));
  append(payload, serialize_message_list(request.list));
  append(payload, request.first.c.digest);
  return payload;
}

SignRequest parse_sign_request(ByteView payload, std::size_t digest_len,
                               std::uint32_t max_n,
                               std::uint32_t max_message_bytes) {
  ByteReader in(payload);
  SignRequest request;
  std::uint8_t variant = in.u8();
  if (variant != static_cast<std::uint8_t>(Variant::tree_single) &&
      variant != static_cast<std::uint8_t>(Variant::per_message)) {
    throw Error("malformed-encoding", "unknown protocol variant byte");
  }
  request.variant = static_cast<Variant>(variant);
  request.list = parse_message_list(in, max_n, max_message_bytes);
  request.first.c.digest = in.take(digest_len);
  in.expect_end();
  return request;
}

}  // namespace oblisig
