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

#ifndef OBLISIG_BENCH_BENCH_HPP_
#define OBLISIG_BENCH_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oblisig/rng.hpp"
#include "oblisig/scheme.hpp"

namespace oblisig {

// Measured serialized sizes from one honest protocol run, next to the
// analytical bit counts the construction promises. The analytical
// count ignores byte alignment and fixed-width framing; the byte
// layout costs a known constant on top (depth byte plus the index
// field's slack), recorded as overhead_bits.
struct SizeRow {
  Variant variant = Variant::tree_single;
  std::size_t n = 0;
  std::size_t k = 0;  // ceil(log2 n)
  std::size_t vk_bytes = 0;
  std::size_t first_bytes = 0;   // user -> signer payload
  std::size_t second_bytes = 0;  // signer -> user payload
  std::size_t sig_bytes = 0;     // final signature encoding
  std::size_t model_sig_bits = 0;
  std::size_t measured_sig_bits = 0;
  std::size_t overhead_bits = 0;  // measured - model
};

struct SizeReport {
  std::vector<SizeRow> rows;
};

// Analytical final-signature size in bits for security parameter 256.
//   tree variant: root + commitment + DS signature + (k+1) digests
//                 (path and commitment randomness) + k index bits
//   per-message variant: commitment + randomness + one DS signature
std::size_t model_sig_bits(Variant variant, std::size_t n,
                           std::size_t ds_sig_bits = 512);

// Byte-layout slack on top of the model: the depth byte (8) plus the
// fixed 32-bit index field (32 - k) for the tree variant, zero for the
// per-message variant.
std::size_t expected_overhead_bits(Variant variant, std::size_t n);

// Runs one honest session per (variant, n) cell and serializes every
// artifact. The chosen index is sampled per cell.
SizeReport measure(const std::vector<std::size_t>& sizes,
                   const std::vector<Variant>& variants, DsSchemeId scheme,
                   RandomSource& rng);

struct AsymptoticsCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Exact structural checks over a report:
//  - tree second round is one DS signature regardless of n, while the
//    per-message second round is exactly n of them;
//  - tree signature grows by one digest per doubling of the padded
//    list, per-message stays flat;
//  - verifying key and first message are constant;
//  - measured minus model equals the expected layout slack, bit for
//    bit, on every row.
AsymptoticsCheck check_asymptotics(const SizeReport& report);

std::string render_table(const SizeReport& report);
std::string render_json_lines(const SizeReport& report);

}  // namespace oblisig

#endif  // OBLISIG_BENCH_BENCH_HPP_
