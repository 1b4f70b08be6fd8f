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

#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "oblisig/bench/bench.hpp"
#include "oblisig/rng.hpp"

using namespace oblisig;

TEST_CASE("analytical signature sizes") {
  // tree: 2 digests + DS signature + (k+1) digests + k index bits
  CHECK(model_sig_bits(Variant::tree_single, 2) == 1537);
  CHECK(model_sig_bits(Variant::tree_single, 3) == 1794);
  CHECK(model_sig_bits(Variant::tree_single, 4) == 1794);
  CHECK(model_sig_bits(Variant::tree_single, 8) == 2051);
  CHECK(model_sig_bits(Variant::tree_single, 1024) == 3850);
  // list: commitment + randomness + one DS signature, n-independent
  CHECK(model_sig_bits(Variant::per_message, 2) == 1024);
  CHECK(model_sig_bits(Variant::per_message, 1024) == 1024);
  // Other signature widths feed straight through.
  CHECK(model_sig_bits(Variant::per_message, 2, 2048) == 2560);

  CHECK(expected_overhead_bits(Variant::tree_single, 2) == 39);
  CHECK(expected_overhead_bits(Variant::tree_single, 8) == 37);
  CHECK(expected_overhead_bits(Variant::tree_single, 1024) == 30);
  CHECK(expected_overhead_bits(Variant::per_message, 8) == 0);
}

TEST_CASE("measured sizes match the model plus known layout slack") {
  SeededRandom rng(9);
  std::vector<std::size_t> sizes = {2, 3, 4, 8, 16};
  std::vector<Variant> variants = {Variant::tree_single,
                                   Variant::per_message};
  SizeReport report = measure(sizes, variants, DsSchemeId::ed25519, rng);
  REQUIRE(report.rows.size() == sizes.size() * variants.size());

  for (const SizeRow& row : report.rows) {
    CAPTURE(row.n);
    CHECK(row.vk_bytes == 32);
    CHECK(row.first_bytes == 32);
    CHECK(row.measured_sig_bits == row.sig_bytes * 8);
    CHECK(row.overhead_bits == expected_overhead_bits(row.variant, row.n));
    if (row.variant == Variant::tree_single) {
      CHECK(row.second_bytes == 64);
      CHECK(row.sig_bytes == 165 + 32 * row.k);
    } else {
      CHECK(row.second_bytes == 64 * row.n);
      CHECK(row.sig_bytes == 128);
    }
  }

  AsymptoticsCheck check = check_asymptotics(report);
  CHECK(check.ok);
  CHECK(check.failures.empty());
}

TEST_CASE("structural checks catch a doctored report") {
  SeededRandom rng(10);
  std::vector<std::size_t> sizes = {2, 4};
  SizeReport report = measure(sizes, {Variant::tree_single},
                              DsSchemeId::ed25519, rng);
  report.rows[1].sig_bytes += 1;
  report.rows[1].measured_sig_bits += 8;
  AsymptoticsCheck check = check_asymptotics(report);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.failures.empty());
}

TEST_CASE("report rendering") {
  SeededRandom rng(11);
  SizeReport report = measure({2, 4}, {Variant::tree_single},
                              DsSchemeId::ed25519, rng);

  std::string table = render_table(report);
  CHECK(table.find("variant") != std::string::npos);
  CHECK(table.find("measured") != std::string::npos);
  CHECK(table.find("tree") != std::string::npos);

  std::string lines = render_json_lines(report);
  std::istringstream in(lines);
  std::string line;
  std::size_t parsed = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row = nlohmann::json::parse(line);
    CHECK(row.at("variant") == "tree");
    CHECK(row.at("n").get<std::size_t>() == report.rows[parsed].n);
    CHECK(row.at("sig_bytes").get<std::size_t>() ==
          report.rows[parsed].sig_bytes);
    CHECK(row.contains("model_sig_bits"));
    CHECK(row.contains("overhead_bits"));
    ++parsed;
  }
  CHECK(parsed == report.rows.size());
}
