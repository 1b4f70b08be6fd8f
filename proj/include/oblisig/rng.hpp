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

#ifndef OBLISIG_RNG_HPP_
#define OBLISIG_RNG_HPP_

#include <cstdint>
#include <random>

#include "oblisig/bytes.hpp"

namespace oblisig {

// Byte source abstraction so every randomized operation can run either
// off the OS entropy pool (production) or off a seed (tests, games,
// benchmarks, which must be reproducible).
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::uint8_t* out, std::size_t len) = 0;

  Bytes bytes(std::size_t len);
  std::uint64_t u64();
  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  bool coin();
};

class SystemRandom : public RandomSource {
 public:
  void fill(std::uint8_t* out, std::size_t len) override;
};

// Deterministic stream from a 64-bit seed. Identical seeds give
// identical byte streams across platforms (mt19937_64 is pinned by the
// standard; bytes are extracted little-endian from each 64-bit word).
class SeededRandom : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : gen_(seed) {}
  void fill(std::uint8_t* out, std::size_t len) override;

 private:
  std::mt19937_64 gen_;
};

}  // namespace oblisig

#endif  // OBLISIG_RNG_HPP_
