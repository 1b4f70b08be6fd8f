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

#include "oblisig/net/server.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <json.hpp>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

void set_io_timeouts(int fd, int timeout_ms) {
  timeval tv{};
  tv.tv_sec = timeout_ms / 1000;
  tv.tv_usec = (timeout_ms % 1000) * 1000;
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
}

}  // namespace

ServerConfig load_server_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-config", std::string("config is not valid JSON: ") +
                                  e.what());
  }
  ServerConfig config;
  try {
    if (doc.contains("listen_address")) {
      config.listen_address = doc.at("listen_address").get<std::string>();
    }
    if (doc.contains("port")) {
      config.port = doc.at("port").get<std::uint16_t>();
    }
    config.key_file = doc.at("key_file").get<std::string>();
    if (doc.contains("variant")) {
      std::string v = doc.at("variant").get<std::string>();
      if (v == "tree") {
        config.variant = Variant::tree_single;
      } else if (v == "per-message") {
        config.variant = Variant::per_message;
      } else {
        throw Error("bad-config", "variant must be tree or per-message");
      }
    }
    if (doc.contains("max_n")) {
      config.max_n = doc.at("max_n").get<std::uint32_t>();
    }
    if (doc.contains("max_message_bytes")) {
      config.max_message_bytes =
          doc.at("max_message_bytes").get<std::uint32_t>();
    }
    if (doc.contains("io_timeout_ms")) {
      config.io_timeout_ms = doc.at("io_timeout_ms").get<int>();
    }
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-config", std::string("config field error: ") + e.what());
  }
  if (config.max_n < 2) throw Error("bad-config", "max_n must be at least 2");
  if (config.io_timeout_ms <= 0) {
    throw Error("bad-config", "io_timeout_ms must be positive");
  }
  return config;
}

SignerServer::SignerServer(const OsPublicParams& pp, const KeyFile& key,
                           const ServerConfig& config)
    : pp_(pp), key_(key), config_(config) {
  if (key_.scheme_id != pp_.ds.scheme_id) {
    throw Error("bad-config", "key file scheme does not match parameters");
  }
  if (!key_.has_secret()) {
    throw Error("bad-config", "server key file lacks the signing key");
  }
  // Upper bound on a well-formed request frame under the configured
  // limits: variant byte, list header, per-message headers and bodies,
  // commitment digest.
  max_payload_ = 1 + 4 +
                 static_cast<std::size_t>(config_.max_n) *
                     (4 + static_cast<std::size_t>(config_.max_message_bytes)) +
                 pp_.digest_len();
}

SignerServer::~SignerServer() { stop(); }

void SignerServer::start() {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw Error("io", "socket() failed");
  int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(config_.port);
  if (::inet_pton(AF_INET, config_.listen_address.c_str(), &addr.sin_addr) !=
      1) {
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw Error("bad-config",
                "listen_address is not an IPv4 address: " +
                    config_.listen_address);
  }
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) !=
      0) {
    int err = errno;
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw Error("io", std::string("bind failed: ") + std::strerror(err));
  }
  if (::listen(listen_fd_, SOMAXCONN) != 0) {
    int err = errno;
    ::close(listen_fd_);
    listen_fd_ = -1;
    throw Error("io", std::string("listen failed: ") + std::strerror(err));
  }
  sockaddr_in bound{};
  socklen_t len = sizeof bound;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
  port_ = ntohs(bound.sin_port);

  running_.store(true);
  stopped_ = false;
  acceptor_ = std::thread([this] { accept_loop(); });
}

void SignerServer::stop() {
  bool was_running = running_.exchange(false);
  if (was_running && listen_fd_ >= 0) {
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
  }
  if (acceptor_.joinable()) acceptor_.join();
  std::unique_lock<std::mutex> lock(mu_);
  idle_cv_.wait(lock, [this] { return active_ == 0; });
  if (!stopped_) {
    stopped_ = true;
    stop_cv_.notify_all();
  }
}

void SignerServer::wait() {
  std::unique_lock<std::mutex> lock(mu_);
  stop_cv_.wait(lock, [this] { return stopped_; });
}

ServerStats SignerServer::stats() const {
  ServerStats s;
  s.connections = connections_.load();
  s.sign_responses = sign_responses_.load();
  s.rejects = rejects_.load();
  return s;
}

void SignerServer::accept_loop() {
  while (running_.load()) {
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      // Listening socket was shut down or failed; leave the loop.
      break;
    }
    connections_.fetch_add(1);
    {
      std::lock_guard<std::mutex> lock(mu_);
      ++active_;
    }
    std::thread([this, fd] {
      handle_connection(fd);
      std::lock_guard<std::mutex> lock(mu_);
      if (--active_ == 0) idle_cv_.notify_all();
    }).detach();
  }
}

void SignerServer::send_reject(int fd, RejectReason reason) {
  Bytes payload{static_cast<std::uint8_t>(reason)};
  write_all(fd, encode_frame(FrameType::reject, payload));
  rejects_.fetch_add(1);
}

void SignerServer::handle_connection(int fd) {
  set_io_timeouts(fd, config_.io_timeout_ms);
  Frame frame;
  ReadStatus st = read_frame(fd, max_payload_, frame);
  if (st == ReadStatus::oversize) {
    send_reject(fd, RejectReason::limits);
    ::close(fd);
    return;
  }
  if (st != ReadStatus::ok) {
    // Nothing well-formed to answer.
    ::close(fd);
    return;
  }
  switch (frame.type) {
    case FrameType::pubkey_request: {
      Bytes payload = serialize_key_file(public_only(key_));
      write_all(fd, encode_frame(FrameType::pubkey_response, payload));
      break;
    }
    case FrameType::sign_request: {
      try {
        SignRequest request =
            parse_sign_request(frame.payload, pp_.digest_len(), config_.max_n,
                               config_.max_message_bytes);
        if (request.variant != pp_.variant) {
          send_reject(fd, RejectReason::malformed);
          break;
        }
        SecondMessage second =
            os_s2(pp_, key_.vk, key_.sk, request.list, request.first);
        Bytes payload = serialize_second_message(second);
        if (write_all(fd, encode_frame(FrameType::sign_response, payload))) {
          sign_responses_.fetch_add(1);
        }
      } catch (const Error& e) {
        if (e.code() == "duplicate-message") {
          send_reject(fd, RejectReason::duplicate_message);
        } else if (e.code() == "limits" || e.code() == "bad-list-size") {
          send_reject(fd, RejectReason::limits);
        } else {
          send_reject(fd, RejectReason::malformed);
        }
      }
      break;
    }
    default:
      send_reject(fd, RejectReason::malformed);
      break;
  }
  ::close(fd);
}

}  // namespace oblisig
