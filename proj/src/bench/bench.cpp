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

#include "oblisig/bench/bench.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "oblisig/ds.hpp"
#include "oblisig/merkle.hpp"

namespace oblisig {

std::size_t model_sig_bits(Variant variant, std::size_t n,
                           std::size_t ds_sig_bits) {
  constexpr std::size_t lambda = 256;
  if (variant == Variant::per_message) {
    return 2 * lambda + ds_sig_bits;  // commitment, randomness, signature
  }
  std::size_t k = ceil_log2(n);
  return 2 * lambda + ds_sig_bits + (k + 1) * lambda + k;
}

std::size_t expected_overhead_bits(Variant variant, std::size_t n) {
  if (variant == Variant::per_message) return 0;
  // One depth byte plus the slack of a fixed 32-bit index field.
  return 8 + (32 - ceil_log2(n));
}

SizeReport measure(const std::vector<std::size_t>& sizes,
                   const std::vector<Variant>& variants, DsSchemeId scheme,
                   RandomSource& rng) {
  SizeReport report;
  std::size_t ds_bits = 8 * ds_signature_len(scheme);
  for (Variant variant : variants) {
    OsPublicParams pp = os_setup(variant, production_hash(), scheme);
    DsKeyPair keys = os_keygen(pp, rng);
    for (std::size_t n : sizes) {
      MessageList list;
      list.messages.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        list.messages.push_back(to_bytes("size-probe-" + std::to_string(n) +
                                         "-" + std::to_string(i)));
      }
      std::uint32_t j = static_cast<std::uint32_t>(rng.below(n));
      auto [first, state] = os_u1(pp, keys.vk, list, j, rng);
      SecondMessage second = os_s2(pp, keys.vk, keys.sk, list, first);
      auto [message, sig] = os_uder(pp, keys.vk, state, second);
      if (os_verify(pp, keys.vk, message, sig) != 1) {
        throw std::logic_error("honest protocol run failed to verify");
      }

      SizeRow row;
      row.variant = variant;
      row.n = n;
      row.k = ceil_log2(n);
      row.vk_bytes = keys.vk.size();
      row.first_bytes = serialize_first_message(first).size();
      row.second_bytes = serialize_second_message(second).size();
      row.sig_bytes = serialize_signature(sig).size();
      row.model_sig_bits = model_sig_bits(variant, n, ds_bits);
      row.measured_sig_bits = 8 * row.sig_bytes;
      row.overhead_bits = row.measured_sig_bits - row.model_sig_bits;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

void require(AsymptoticsCheck& check, bool cond, const std::string& what) {
  if (!cond) {
    check.ok = false;
    check.failures.push_back(what);
  }
}

std::string row_tag(const SizeRow& row) {
  return std::string(variant_name(row.variant)) + " n=" +
         std::to_string(row.n);
}

}  // namespace

AsymptoticsCheck check_asymptotics(const SizeReport& report) {
  AsymptoticsCheck check;
  const SizeRow* prev_tree = nullptr;
  const SizeRow* prev_list = nullptr;
  const SizeRow* any = nullptr;

  for (const SizeRow& row : report.rows) {
    if (any) {
      require(check, row.vk_bytes == any->vk_bytes,
              row_tag(row) + ": verifying key size changed");
      require(check, row.first_bytes == any->first_bytes,
              row_tag(row) + ": first message size changed");
    }
    any = &row;

    require(check,
            row.measured_sig_bits ==
                row.model_sig_bits + expected_overhead_bits(row.variant, row.n),
            row_tag(row) + ": layout overhead is not the expected slack");

    if (row.variant == Variant::tree_single) {
      if (prev_tree) {
        require(check, row.second_bytes == prev_tree->second_bytes,
                row_tag(row) + ": tree response size depends on n");
        require(check, row.n >= prev_tree->n,
                row_tag(row) + ": rows not ordered by n");
        std::size_t expected_growth = 32 * (row.k - prev_tree->k);
        require(check,
                row.sig_bytes == prev_tree->sig_bytes + expected_growth,
                row_tag(row) + ": tree signature growth is not one digest "
                               "per doubling");
      }
      prev_tree = &row;
    } else {
      require(check, row.second_bytes % row.n == 0,
              row_tag(row) + ": response not a whole number of signatures");
      std::size_t per = row.second_bytes / row.n;
      if (prev_list) {
        require(check, per == prev_list->second_bytes / prev_list->n,
                row_tag(row) + ": per-signature response cost changed");
        require(check, row.sig_bytes == prev_list->sig_bytes,
                row_tag(row) + ": per-message signature size depends on n");
      }
      prev_list = &row;
    }
  }
  return check;
}

std::string render_table(const SizeReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "variant" << std::right << std::setw(6)
      << "n" << std::setw(4) << "k" << std::setw(7) << "vk(B)" << std::setw(9)
      << "u->s(B)" << std::setw(9) << "s->u(B)" << std::setw(8) << "sig(B)"
      << std::setw(13) << "model(bit)" << std::setw(14) << "measured(bit)"
      << std::setw(14) << "overhead(bit)" << "\n";
  for (const SizeRow& row : report.rows) {
    out << std::left << std::setw(12) << variant_name(row.variant)
        << std::right << std::setw(6) << row.n << std::setw(4) << row.k
        << std::setw(7) << row.vk_bytes << std::setw(9) << row.first_bytes
        << std::setw(9) << row.second_bytes << std::setw(8) << row.sig_bytes
        << std::setw(13) << row.model_sig_bits << std::setw(14)
        << row.measured_sig_bits << std::setw(14) << row.overhead_bits
        << "\n";
  }
  return out.str();
}

std::string render_json_lines(const SizeReport& report) {
  std::ostringstream out;
  for (const SizeRow& row : report.rows) {
    out << "{\"variant\":\"" << variant_name(row.variant)
        << "\",\"n\":" << row.n << ",\"k\":" << row.k
        << ",\"vk_bytes\":" << row.vk_bytes
        << ",\"first_bytes\":" << row.first_bytes
        << ",\"second_bytes\":" << row.second_bytes
        << ",\"sig_bytes\":" << row.sig_bytes
        << ",\"model_sig_bits\":" << row.model_sig_bits
        << ",\"measured_sig_bits\":" << row.measured_sig_bits
        << ",\"overhead_bits\":" << row.overhead_bits << "}\n";
  }
  return out.str();
}

}  // namespace oblisig
