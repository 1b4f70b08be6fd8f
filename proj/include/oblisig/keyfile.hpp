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

#ifndef OBLISIG_KEYFILE_HPP_
#define OBLISIG_KEYFILE_HPP_

#include <string>

#include "oblisig/bytes.hpp"
#include "oblisig/ds.hpp"

namespace oblisig {

// Binary key file: "OSK1" magic, scheme id byte, then vk and sk each
// as u16 BE length + bytes. A public-only file carries sk length 0.
struct KeyFile {
  DsSchemeId scheme_id = DsSchemeId::ed25519;
  Bytes vk;
  Bytes sk;  // empty in public-only files

  bool has_secret() const { return !sk.empty(); }
};

Bytes serialize_key_file(const KeyFile& kf);
// Throws Error("malformed-encoding") on bad magic/shape, and checks
// stored key lengths against the scheme's expected widths.
KeyFile parse_key_file(ByteView data);

void write_key_file(const std::string& path, const KeyFile& kf);
KeyFile read_key_file(const std::string& path);  // Error("io") if unreadable

inline KeyFile public_only(const KeyFile& kf) {
  return KeyFile{kf.scheme_id, kf.vk, {}};
}

}  // namespace oblisig

#endif  // OBLISIG_KEYFILE_HPP_
