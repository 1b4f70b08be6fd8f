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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oblisig/bench/bench.hpp"
#include "oblisig/ds.hpp"
#include "oblisig/error.hpp"
#include "oblisig/games/suite.hpp"
#include "oblisig/keyfile.hpp"
#include "oblisig/net/client.hpp"
#include "oblisig/net/server.hpp"
#include "oblisig/rng.hpp"
#include "oblisig/scheme.hpp"

namespace {

using namespace oblisig;

constexpr char kSigMagic[4] = {'O', 'S', 'S', '1'};

std::unique_ptr<RandomSource> make_rng(bool seeded, std::uint64_t seed) {
  if (seeded) return std::make_unique<SeededRandom>(seed);
  return std::make_unique<SystemRandom>();
}

DsSchemeId parse_scheme(const std::string& name) {
  if (name == "ed25519") return DsSchemeId::ed25519;
  if (name == "hmac-stub") return DsSchemeId::hmac_stub;
  throw Error("bad-config", "unknown scheme: " + name);
}

Variant parse_variant(const std::string& name) {
  if (name == "tree") return Variant::tree_single;
  if (name == "per-message") return Variant::per_message;
  throw Error("bad-config", "unknown variant: " + name);
}

// One message per line; empty lines are skipped.
MessageList read_message_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open messages file: " + path);
  MessageList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    list.messages.push_back(to_bytes(line));
  }
  return list;
}

void write_sig_file(const std::string& path, const ObliviousSignature& sig) {
  Bytes data(kSigMagic, kSigMagic + 4);
  data.push_back(static_cast<std::uint8_t>(sig.variant));
  append(data, serialize_signature(sig));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot write signature file: " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("io", "short write to signature file: " + path);
}

// The signature file carries its own variant, so verification does not
// need to be told which protocol produced it.
ObliviousSignature read_sig_file(const std::string& path,
                                 DsSchemeId scheme) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open signature file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  if (raw.size() < 5 || !std::equal(kSigMagic, kSigMagic + 4, raw.begin())) {
    throw Error("malformed-encoding", "not a signature file: " + path);
  }
  std::uint8_t variant_byte = static_cast<std::uint8_t>(raw[4]);
  if (variant_byte != static_cast<std::uint8_t>(Variant::tree_single) &&
      variant_byte != static_cast<std::uint8_t>(Variant::per_message)) {
    throw Error("malformed-encoding", "unknown variant in signature file");
  }
  Variant variant = static_cast<Variant>(variant_byte);
  OsPublicParams pp = os_setup(variant, production_hash(), scheme);
  Bytes body(raw.begin() + 5, raw.end());
  return parse_signature(pp, body);
}

std::pair<std::string, std::uint16_t> split_addr(const std::string& addr) {
  auto colon = addr.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= addr.size()) {
    throw Error("bad-config", "address must look like host:port");
  }
  int port = 0;
  try {
    port = std::stoi(addr.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error("bad-config", "port is not a number in: " + addr);
  }
  if (port < 1 || port > 65535) {
    throw Error("bad-config", "port out of range in: " + addr);
  }
  return {addr.substr(0, colon), static_cast<std::uint16_t>(port)};
}

std::string json_escape(const std::string& s) {
  std::ostringstream out;
  for (char ch : s) {
    switch (ch) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char hex[8];
          std::snprintf(hex, sizeof hex, "\\u%04x", ch);
          out << hex;
        } else {
          out << ch;
        }
    }
  }
  return out.str();
}

int cmd_keygen(const std::string& out_path, const std::string& scheme_name,
               bool seeded, std::uint64_t seed) {
  DsSchemeId scheme = parse_scheme(scheme_name);
  auto rng = make_rng(seeded, seed);
  DsKeyPair keys = ds_keygen(ds_setup(scheme), *rng);
  KeyFile kf{scheme, keys.vk, keys.sk};
  write_key_file(out_path, kf);
  write_key_file(out_path + ".pub", public_only(kf));
  std::cout << "wrote " << out_path << " (signing) and " << out_path
            << ".pub (verifying), scheme " << scheme_name << "\n";
  return 0;
}

int cmd_serve(const std::string& config_path) {
  ServerConfig config = load_server_config(config_path);
  KeyFile key = read_key_file(config.key_file);
  if (!key.has_secret()) {
    throw Error("bad-config",
                "key file has no signing key: " + config.key_file);
  }
  OsPublicParams pp =
      os_setup(config.variant, production_hash(), key.scheme_id);
  SignerServer server(pp, key, config);
  server.start();
  std::cout << "listening on " << config.listen_address << ":"
            << server.port() << " variant " << variant_name(config.variant)
            << "\n"
            << std::flush;
  server.wait();
  return 0;
}

int cmd_request(const std::string& addr, const std::string& vk_path,
                const std::string& messages_path, std::uint32_t choose,
                const std::string& out_path, const std::string& variant_name_,
                bool seeded, std::uint64_t seed, int timeout_ms) {
  auto [host, port] = split_addr(addr);
  KeyFile kf = read_key_file(vk_path);
  MessageList list = read_message_lines(messages_path);
  Variant variant = parse_variant(variant_name_);
  OsPublicParams pp = os_setup(variant, production_hash(), kf.scheme_id);
  auto rng = make_rng(seeded, seed);

  ClientOptions options;
  options.timeout_ms = timeout_ms;
  SignOutcome outcome =
      request_signature(host, port, pp, kf.vk, list, choose, *rng, options);
  write_sig_file(out_path, outcome.sig);
  std::cout << "signed message " << choose << " of " << list.n() << " (\""
            << to_string(outcome.message) << "\"), signature in " << out_path
            << " (" << serialize_signature(outcome.sig).size() + 5
            << " bytes)\n";
  return 0;
}

int cmd_verify(const std::string& vk_path, const std::string& message,
               const std::string& sig_path) {
  KeyFile kf = read_key_file(vk_path);
  ObliviousSignature sig = read_sig_file(sig_path, kf.scheme_id);
  OsPublicParams pp =
      os_setup(sig.variant, production_hash(), kf.scheme_id);
  int valid = os_verify(pp, kf.vk, to_bytes(message), sig);
  std::cout << (valid == 1 ? "valid" : "invalid") << "\n";
  return valid == 1 ? 0 : 1;
}

int cmd_games(std::uint64_t seed, bool weak, int trials) {
  SuiteOptions options;
  options.seed = seed;
  options.weak_hash = weak;
  options.ambiguity_trials = trials;
  SuiteReport report = run_suite(options);
  for (const SuiteRecord& r : report.records) {
    std::cout << "{\"adversary\":\"" << json_escape(r.adversary)
              << "\",\"game\":\"" << r.game << "\",\"bit\":" << r.bit
              << ",\"flags\":{\"final_output\":"
              << (r.flags.final_output ? "true" : "false")
              << ",\"ds_reuse\":" << (r.flags.ds_reuse ? "true" : "false")
              << ",\"ds_forge\":" << (r.flags.ds_forge ? "true" : "false")
              << ",\"com_coll\":" << (r.flags.com_coll ? "true" : "false")
              << "},\"outcome\":\"" << r.outcome << "\",\"end\":\""
              << json_escape(r.end) << "\",\"seed\":" << r.seed
              << ",\"ok\":" << (r.ok ? "true" : "false") << ",\"detail\":\""
              << json_escape(r.detail) << "\"}\n";
  }
  std::cout << "{\"records\":" << report.records.size()
            << ",\"all_ok\":" << (report.all_ok ? "true" : "false") << "}\n";
  return report.all_ok ? 0 : 1;
}

int cmd_bench(const std::vector<std::size_t>& ns,
              const std::string& variant_sel, const std::string& scheme_name,
              std::uint64_t seed, bool json) {
  std::vector<Variant> variants;
  if (variant_sel == "both") {
    variants = {Variant::tree_single, Variant::per_message};
  } else {
    variants = {parse_variant(variant_sel)};
  }
  SeededRandom rng(seed);
  SizeReport report = measure(ns, variants, parse_scheme(scheme_name), rng);
  if (json) {
    std::cout << render_json_lines(report);
  } else {
    std::cout << render_table(report);
  }
  AsymptoticsCheck check = check_asymptotics(report);
  for (const std::string& failure : check.failures) {
    std::cerr << "size check failed: " << failure << "\n";
  }
  return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "1-of-n oblivious signing: key tools, signer daemon, requesting "
      "client, security game harness and size benchmarks"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool seeded = false;

  // keygen
  auto* keygen = app.add_subcommand("keygen", "generate a signing key pair");
  std::string kg_out;
  std::string kg_scheme = "ed25519";
  keygen->add_option("--out", kg_out, "output path; .pub is added for the "
                                      "public half")->required();
  keygen->add_option("--scheme", kg_scheme, "ed25519 or hmac-stub")
      ->check(CLI::IsMember({"ed25519", "hmac-stub"}));
  auto* kg_seed = keygen->add_option("--seed", seed,
                                     "deterministic keys for testing");

  // serve
  auto* serve = app.add_subcommand("serve", "run the signer daemon");
  std::string sv_config;
  serve->add_option("--config", sv_config, "JSON server configuration")
      ->required();

  // request
  auto* request =
      app.add_subcommand("request", "obtain a signature on one of n messages");
  std::string rq_addr, rq_vk, rq_messages, rq_out;
  std::string rq_variant = "tree";
  std::uint32_t rq_choose = 0;
  int rq_timeout = 5000;
  request->add_option("--addr", rq_addr, "signer address host:port")
      ->required();
  request->add_option("--vk", rq_vk, "signer public key file")->required();
  request->add_option("--messages", rq_messages,
                      "candidate messages, one per line")
      ->required();
  request->add_option("--choose", rq_choose, "index of the message to sign")
      ->required();
  request->add_option("--out", rq_out, "signature output file")->required();
  request->add_option("--variant", rq_variant, "tree or per-message")
      ->check(CLI::IsMember({"tree", "per-message"}));
  auto* rq_seed = request->add_option("--seed", seed,
                                      "deterministic randomness for testing");
  request->add_option("--timeout-ms", rq_timeout, "socket timeout");

  // verify
  auto* verify = app.add_subcommand("verify", "check a signature file");
  std::string vf_vk, vf_message, vf_sig;
  verify->add_option("--vk", vf_vk, "signer public key file")->required();
  verify->add_option("--message", vf_message, "the signed message")
      ->required();
  verify->add_option("--sig", vf_sig, "signature file")->required();

  // games
  auto* games = app.add_subcommand(
      "games", "run the security game suite, one JSON line per record");
  std::uint64_t gm_seed = 1;
  bool gm_weak = false;
  int gm_trials = 10000;
  games->add_option("--seed", gm_seed, "suite seed");
  games->add_flag("--weak-hash", gm_weak,
                  "brute-forceable hash family, enables the "
                  "collision-planting adversaries");
  games->add_option("--trials", gm_trials, "ambiguity experiment trials");

  // bench
  auto* bench =
      app.add_subcommand("bench", "serialized size measurements by list size");
  std::vector<std::size_t> bn_ns = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  std::string bn_variant = "both";
  std::string bn_scheme = "ed25519";
  std::uint64_t bn_seed = 1;
  bool bn_json = false;
  bench->add_option("--n-list", bn_ns, "list sizes to measure")
      ->delimiter(',');
  bench->add_option("--variant", bn_variant, "tree, per-message or both")
      ->check(CLI::IsMember({"tree", "per-message", "both"}));
  bench->add_option("--scheme", bn_scheme, "ed25519 or hmac-stub")
      ->check(CLI::IsMember({"ed25519", "hmac-stub"}));
  bench->add_option("--seed", bn_seed, "index sampling seed");
  bench->add_flag("--json", bn_json, "JSON lines instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Help and version exit cleanly; anything else is a usage error.
    return code == 0 ? 0 : 2;
  }

  try {
    if (keygen->parsed()) {
      seeded = kg_seed->count() > 0;
      return cmd_keygen(kg_out, kg_scheme, seeded, seed);
    }
    if (serve->parsed()) return cmd_serve(sv_config);
    if (request->parsed()) {
      seeded = rq_seed->count() > 0;
      return cmd_request(rq_addr, rq_vk, rq_messages, rq_choose, rq_out,
                         rq_variant, seeded, seed, rq_timeout);
    }
    if (verify->parsed()) return cmd_verify(vf_vk, vf_message, vf_sig);
    if (games->parsed()) return cmd_games(gm_seed, gm_weak, gm_trials);
    if (bench->parsed()) {
      return cmd_bench(bn_ns, bn_variant, bn_scheme, bn_seed, bn_json);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
