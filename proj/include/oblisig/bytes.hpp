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

#ifndef OBLISIG_BYTES_HPP_
#define OBLISIG_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oblisig {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView b);

std::string to_hex(ByteView b);
Bytes from_hex(std::string_view hex);  // throws Error("malformed-encoding")

// Big-endian integer append. All wire formats in this project are
// big-endian with fixed widths.
void put_u16_be(Bytes& out, std::uint16_t v);
void put_u32_be(Bytes& out, std::uint32_t v);
void put_u64_be(Bytes& out, std::uint64_t v);
void append(Bytes& out, ByteView b);

// Bounds-checked sequential reader over a byte view. Every getter
// throws Error("malformed-encoding") instead of reading past the end.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16_be();
  std::uint32_t u32_be();
  std::uint64_t u64_be();
  Bytes take(std::size_t n);
  std::size_t remaining() const { return data_.size() - pos_; }
  // Throws unless the whole input has been consumed.
  void expect_end() const;

 private:
  void need(std::size_t n) const;

  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace oblisig

#endif  // OBLISIG_BYTES_HPP_
