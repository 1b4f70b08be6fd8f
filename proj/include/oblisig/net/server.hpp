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

#ifndef OBLISIG_NET_SERVER_HPP_
#define OBLISIG_NET_SERVER_HPP_

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>

#include "oblisig/keyfile.hpp"
#include "oblisig/net/wire.hpp"
#include "oblisig/scheme.hpp"

namespace oblisig {

struct ServerConfig {
  std::string listen_address = "127.0.0.1";
  std::uint16_t port = 0;  // 0 picks an ephemeral port
  std::string key_file;
  Variant variant = Variant::tree_single;
  std::uint32_t max_n = 1024;
  std::uint32_t max_message_bytes = 65536;
  int io_timeout_ms = 5000;
};

// JSON object with keys listen_address, port, key_file, variant
// ("tree" or "per-message"), max_n, max_message_bytes. Only key_file
// is required. Throws Error("io") / Error("bad-config").
ServerConfig load_server_config(const std::string& path);

struct ServerStats {
  std::uint64_t connections = 0;
  std::uint64_t sign_responses = 0;
  std::uint64_t rejects = 0;
};

// Signer daemon. One request frame per connection:
//   sign_request   -> sign_response carrying the second-round payload,
//                     or reject (duplicate-message, limits, malformed)
//   pubkey_request -> pubkey_response with the public-only key file
// The signer never learns which listed message the commitment binds.
class SignerServer {
 public:
  // pp.variant is authoritative for what the signer will serve; key
  // scheme must match pp. Throws Error("bad-config") otherwise.
  SignerServer(const OsPublicParams& pp, const KeyFile& key,
               const ServerConfig& config);
  ~SignerServer();

  SignerServer(const SignerServer&) = delete;
  SignerServer& operator=(const SignerServer&) = delete;

  // Binds and starts accepting. Throws Error("io") on bind failure.
  void start();
  // Stops accepting, waits for in-flight connections to drain.
  void stop();
  // Blocks until stop() is called from elsewhere (for the daemon CLI).
  void wait();

  std::uint16_t port() const { return port_; }
  ServerStats stats() const;

 private:
  void accept_loop();
  void handle_connection(int fd);
  void send_reject(int fd, RejectReason reason);

  OsPublicParams pp_;
  KeyFile key_;
  ServerConfig config_;
  std::size_t max_payload_ = 0;

  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::thread acceptor_;
  std::atomic<bool> running_{false};

  std::atomic<std::uint64_t> connections_{0};
  std::atomic<std::uint64_t> sign_responses_{0};
  std::atomic<std::uint64_t> rejects_{0};

  mutable std::mutex mu_;
  std::condition_variable idle_cv_;
  std::condition_variable stop_cv_;
  int active_ = 0;
  bool stopped_ = false;
};

}  // namespace oblisig

#endif  // OBLISIG_NET_SERVER_HPP_
