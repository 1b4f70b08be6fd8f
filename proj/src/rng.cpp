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

#include "oblisig/rng.hpp"

#include <sodium.h>

#include <stdexcept>

namespace oblisig {

Bytes RandomSource::bytes(std::size_t len) {
  Bytes out(len);
  if (len > 0) fill(out.data(), len);
  return out;
}

std::uint64_t RandomSource::u64() {
  std::uint8_t buf[8];
  fill(buf, sizeof(buf));
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
  return v;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: zero bound");
  // Reject values in the final partial copy of [0, bound).
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    std::uint64_t v = u64();
    if (v < limit) return v % bound;
  }
}

bool RandomSource::coin() {
  std::uint8_t b;
  fill(&b, 1);
  return (b & 1) != 0;
}

void SystemRandom::fill(std::uint8_t* out, std::size_t len) {
  if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
  randombytes_buf(out, len);
}

void SeededRandom::fill(std::uint8_t* out, std::size_t len) {
  std::size_t i = 0;
  while (i < len) {
    std::uint64_t word = gen_();
    for (int b = 0; b < 8 && i < len; ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word >> (8 * b));
    }
  }
}

}  // namespace oblisig
