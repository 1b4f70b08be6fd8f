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

#include "oblisig/keyfile.hpp"

#include <fstream>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {
constexpr char kMagic[4] = {'O', 'S', 'K', '1'};
}

Bytes serialize_key_file(const KeyFile& kf) {
  if (kf.vk.size() != ds_vk_len(kf.scheme_id)) {
    throw Error("bad-key-encoding", "wrong verifying key length");
  }
  if (!kf.sk.empty() && kf.sk.size() != ds_sk_len(kf.scheme_id)) {
    throw Error("bad-key-encoding", "wrong signing key length");
  }
  Bytes out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(static_cast<std::uint8_t>(kf.scheme_id));
  put_u16_be(out, static_cast<std::uint16_t>(kf.vk.size()));
  append(out, kf.vk);
  put_u16_be(out, static_cast<std::uint16_t>(kf.sk.size()));
  append(out, kf.sk);
  return out;
}

KeyFile parse_key_file(ByteView data) {
  ByteReader in(data);
  Bytes magic = in.take(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    throw Error("malformed-encoding", "bad key file magic");
  }
  std::uint8_t scheme = in.u8();
  if (scheme != static_cast<std::uint8_t>(DsSchemeId::ed25519) &&
      scheme != static_cast<std::uint8_t>(DsSchemeId::hmac_stub)) {
    throw Error("malformed-encoding", "unknown signature scheme id");
  }
  KeyFile kf;
  kf.scheme_id = static_cast<DsSchemeId>(scheme);
  kf.vk = in.take(in.u16_be());
  kf.sk = in.take(in.u16_be());
  in.expect_end();
  if (kf.vk.size() != ds_vk_len(kf.scheme_id)) {
    throw Error("malformed-encoding", "wrong verifying key length");
  }
  if (!kf.sk.empty() && kf.sk.size() != ds_sk_len(kf.scheme_id)) {
    throw Error("malformed-encoding", "wrong signing key length");
  }
  return kf;
}

void write_key_file(const std::string& path, const KeyFile& kf) {
  Bytes data = serialize_key_file(kf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("io", "short write to " + path);
}

KeyFile read_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  return parse_key_file(data);
}

}  // namespace oblisig
