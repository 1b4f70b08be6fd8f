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

#ifndef OBLISIG_NET_WIRE_HPP_
#define OBLISIG_NET_WIRE_HPP_

#include <cstdint>

#include "oblisig/bytes.hpp"
#include "oblisig/scheme.hpp"

namespace oblisig {

// Framing: [length u32 BE][type 1 byte][payload]. The length counts
// the type byte plus the payload, so a frame is never empty.
enum class FrameType : std::uint8_t {
  sign_request = 0x01,   // variant byte, message list, commitment
  sign_response = 0x02,  // raw second-round payload
  reject = 0x03,         // one reason byte
  pubkey_request = 0x04,
  pubkey_response = 0x05,  // public-only key file bytes
};

enum class RejectReason : std::uint8_t {
  duplicate_message = 0x01,
  limits = 0x02,
  malformed = 0x03,
};

struct Frame {
  FrameType type = FrameType::reject;
  Bytes payload;
};

enum class ReadStatus {
  ok,
  eof,       // clean close before any frame byte
  oversize,  // declared length exceeds the cap; nothing consumed past it
  timeout,
  error,  // torn read or socket error
};

Bytes encode_frame(FrameType type, ByteView payload);

// Reads one frame. max_payload caps the allocation; a larger declared
// length reports oversize without reading the body.
ReadStatus read_frame(int fd, std::size_t max_payload, Frame& out);

// Loops until everything is written. False on any socket error.
bool write_all(int fd, ByteView data);

struct SignRequest {
  Variant variant = Variant::tree_single;
  MessageList list;
  FirstMessage first;
};

// Payload layout: variant byte, message list, commitment digest last,
// so two requests for the same list differ only in the tail bytes.
Bytes encode_sign_request(const SignRequest& request);

// Throws Error("malformed-encoding") on shape violations and
// Error("limits") when the list exceeds the stated bounds.
SignRequest parse_sign_request(ByteView payload, std::size_t digest_len,
                               std::uint32_t max_n,
                               std::uint32_t max_message_bytes);

}  // namespace oblisig

#endif  // OBLISIG_NET_WIRE_HPP_
