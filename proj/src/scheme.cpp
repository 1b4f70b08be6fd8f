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

#include "oblisig/scheme.hpp"

#include <algorithm>
#include <set>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

void validate_list(const MessageList& list) {
  if (list.n() < 2) {
    throw Error("bad-list-size", "need at least two messages");
  }
  if (list.n() > (std::uint64_t{1} << kMaxTreeDepth)) {
    throw Error("bad-list-size", "list too large");
  }
  std::set<Bytes> seen;
  for (const Bytes& m : list.messages) {
    if (!m.empty() && m[0] == kPaddingPrefix) {
      throw Error("reserved-prefix", "message starts with the padding byte");
    }
    if (!seen.insert(m).second) throw Error("duplicate-message");
  }
}

void check_commitment_width(const OsPublicParams& pp, const Commitment& c) {
  if (c.digest.size() != pp.digest_len()) {
    throw Error("malformed-encoding", "wrong commitment width");
  }
}

}  // namespace

bool MessageList::contains(ByteView m) const {
  return std::any_of(messages.begin(), messages.end(), [&](const Bytes& x) {
    return x.size() == m.size() && std::equal(x.begin(), x.end(), m.begin());
  });
}

const char* variant_name(Variant variant) {
  return variant == Variant::per_message ? "per-message" : "tree";
}

OsPublicParams os_setup(Variant variant, const HashParams& hash,
                        DsSchemeId ds_scheme) {
  OsPublicParams pp;
  pp.variant = variant;
  pp.hash = hash;
  pp.ck = com_keygen(hash);
  pp.ds = ds_setup(ds_scheme);
  return pp;
}

DsKeyPair os_keygen(const OsPublicParams& pp, RandomSource& rng) {
  return ds_keygen(pp.ds, rng);
}

std::pair<FirstMessage, UserState> os_u1(const OsPublicParams& pp,
                                         ByteView vk, const MessageList& list,
                                         std::uint32_t chosen_index,
                                         RandomSource& rng) {
  (void)vk;  // the first round does not consume the key; kept for symmetry
  validate_list(list);
  if (chosen_index >= list.n()) throw Error("bad-index");
  UserState state;
  state.list = list;
  state.chosen_index = chosen_index;
  state.r = sample_commit_randomness(pp.ck, rng);
  state.c = commit(pp.ck, list.messages[chosen_index], state.r);
  return {FirstMessage{state.c}, state};
}

SecondMessage os_s2(const OsPublicParams& pp, ByteView vk, ByteView sk,
                    const MessageList& list, const FirstMessage& first) {
  (void)vk;
  validate_list(list);
  check_commitment_width(pp, first.c);
  SecondMessage second;
  if (pp.variant == Variant::tree_single) {
    MerkleTree tree(pp.hash, pad_list(list.messages));
    second.sigs.push_back(
        ds_sign(pp.ds, sk, tree_signing_bytes(tree.root(), first.c)));
    return second;
  }
  second.sigs.reserve(list.n());
  for (const Bytes& m : list.messages) {
    second.sigs.push_back(ds_sign(pp.ds, sk, list_signing_bytes(m, first.c)));
  }
  return second;
}

std::pair<Bytes, ObliviousSignature> os_uder(const OsPublicParams& pp,
                                             ByteView vk,
                                             const UserState& state,
                                             const SecondMessage& second) {
  const Bytes& chosen = state.list.messages.at(state.chosen_index);
  if (pp.variant == Variant::tree_single) {
    if (second.sigs.size() != 1) {
      throw Error("signer-cheated", "expected exactly one signature");
    }
    MerkleTree tree(pp.hash, pad_list(state.list.messages));
    Root root = tree.root();
    if (ds_verify(pp.ds, vk, tree_signing_bytes(root, state.c),
                  second.sigs[0]) != 1) {
      throw Error("signer-cheated", "signature does not cover (root, c)");
    }
    TreeSignature sig;
    sig.root = root;
    sig.c = state.c;
    sig.ds_sig = second.sigs[0];
    sig.path = tree.path(state.chosen_index);
    sig.index = state.chosen_index;
    sig.r = state.r;
    return {chosen, ObliviousSignature{Variant::tree_single, sig}};
  }
  if (second.sigs.size() != state.list.n()) {
    throw Error("signer-cheated", "expected one signature per message");
  }
  for (std::size_t i = 0; i < state.list.n(); ++i) {
    if (ds_verify(pp.ds, vk,
                  list_signing_bytes(state.list.messages[i], state.c),
                  second.sigs[i]) != 1) {
      throw Error("signer-cheated", "signature invalid for listed message");
    }
  }
  ListSignature sig;
  sig.c = state.c;
  sig.r = state.r;
  sig.ds_sig = second.sigs[state.chosen_index];
  return {chosen, ObliviousSignature{Variant::per_message, sig}};
}

int os_verify(const OsPublicParams& pp, ByteView vk, ByteView message,
              const ObliviousSignature& sig) {
  try {
    if (sig.variant != pp.variant) return 0;
    // Padding messages are derivable tree leaves but were never listed
    // by the user, so no signature on them may count as valid.
    if (!message.empty() && message[0] == kPaddingPrefix) return 0;
    if (pp.variant == Variant::tree_single) {
      const auto& s = std::get<TreeSignature>(sig.value);
      std::size_t k = s.path.depth();
      if (k == 0 || k > kMaxTreeDepth) return 0;
      if (s.root.digest.size() != pp.digest_len()) return 0;
      for (const Bytes& sib : s.path.siblings) {
        if (sib.size() != pp.digest_len()) return 0;
      }
      if (s.index >= (std::uint64_t{1} << k)) return 0;
      if (!(root_reconstruct(pp.hash, s.path, message, s.index) == s.root)) {
        return 0;
      }
      if (commit_open(pp.ck, s.c, message, s.r) != 1) return 0;
      return ds_verify(pp.ds, vk, tree_signing_bytes(s.root, s.c), s.ds_sig);
    }
    const auto& s = std::get<ListSignature>(sig.value);
    if (commit_open(pp.ck, s.c, message, s.r) != 1) return 0;
    return ds_verify(pp.ds, vk, list_signing_bytes(message, s.c), s.ds_sig);
  } catch (...) {
    return 0;
  }
}

Bytes tree_signing_bytes(const Root& root, const Commitment& c) {
  Bytes out;
  out.reserve(1 + root.digest.size() + c.digest.size());
  out.push_back(kSignTreeTag);
  append(out, root.digest);
  append(out, c.digest);
  return out;
}

Bytes list_signing_bytes(ByteView message, const Commitment& c) {
  Bytes out;
  out.reserve(1 + 4 + message.size() + c.digest.size());
  out.push_back(kSignListTag);
  put_u32_be(out, static_cast<std::uint32_t>(message.size()));
  append(out, message);
  append(out, c.digest);
  return out;
}

Bytes serialize_message_list(const MessageList& list) {
  Bytes out;
  put_u32_be(out, static_cast<std::uint32_t>(list.n()));
  for (const Bytes& m : list.messages) {
    put_u32_be(out, static_cast<std::uint32_t>(m.size()));
    append(out, m);
  }
  return out;
}

MessageList parse_message_list(ByteReader& in, std::uint32_t max_n,
                               std::uint32_t max_message_bytes) {
  std::uint32_t n = in.u32_be();
  if (n > max_n) throw Error("limits", "message count over limit");
  MessageList list;
  list.messages.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t len = in.u32_be();
    if (len > max_message_bytes) {
      throw Error("limits", "message length over limit");
    }
    list.messages.push_back(in.take(len));
  }
  return list;
}

Bytes serialize_first_message(const FirstMessage& first) {
  return first.c.digest;
}

FirstMessage parse_first_message(const OsPublicParams& pp, ByteReader& in) {
  return FirstMessage{Commitment{in.take(pp.digest_len())}};
}

Bytes serialize_second_message(const SecondMessage& second) {
  Bytes out;
  for (const DsSignature& sig : second.sigs) append(out, sig.bytes);
  return out;
}

SecondMessage parse_second_message(const OsPublicParams& pp, std::size_t n,
                                   ByteView data) {
  std::size_t width = ds_signature_len(pp.ds.scheme_id);
  std::size_t count = pp.variant == Variant::tree_single ? 1 : n;
  if (data.size() != width * count) {
    throw Error("malformed-encoding", "wrong response length");
  }
  SecondMessage second;
  ByteReader in(data);
  for (std::size_t i = 0; i < count; ++i) {
    second.sigs.push_back(DsSignature{in.take(width)});
  }
  return second;
}

Bytes serialize_signature(const ObliviousSignature& sig) {
  Bytes out;
  if (sig.variant == Variant::tree_single) {
    const auto& s = std::get<TreeSignature>(sig.value);
    append(out, s.root.digest);
    append(out, s.c.digest);
    append(out, s.ds_sig.bytes);
    out.push_back(static_cast<std::uint8_t>(s.path.depth()));
    for (const Bytes& sib : s.path.siblings) append(out, sib);
    put_u32_be(out, s.index);
    append(out, s.r.bytes);
    return out;
  }
  const auto& s = std::get<ListSignature>(sig.value);
  append(out, s.c.digest);
  append(out, s.r.bytes);
  append(out, s.ds_sig.bytes);
  return out;
}

ObliviousSignature parse_signature(const OsPublicParams& pp, ByteView data) {
  std::size_t dlen = pp.digest_len();
  std::size_t slen = ds_signature_len(pp.ds.scheme_id);
  ByteReader in(data);
  if (pp.variant == Variant::tree_single) {
    TreeSignature s;
    s.root.digest = in.take(dlen);
    s.c.digest = in.take(dlen);
    s.ds_sig.bytes = in.take(slen);
    std::uint8_t k = in.u8();
    if (k == 0 || k > kMaxTreeDepth) {
      throw Error("malformed-encoding", "bad path depth");
    }
    for (std::uint8_t i = 0; i < k; ++i) s.path.siblings.push_back(in.take(dlen));
    s.index = in.u32_be();
    s.r.bytes = in.take(dlen);
    in.expect_end();
    return ObliviousSignature{Variant::tree_single, s};
  }
  ListSignature s;
  s.c.digest = in.take(dlen);
  s.r.bytes = in.take(dlen);
  s.ds_sig.bytes = in.take(slen);
  in.expect_end();
  return ObliviousSignature{Variant::per_message, s};
}

Bytes serialize_public_params(const OsPublicParams& pp) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(pp.variant));
  append(out, serialize_hash_params(pp.hash));
  append(out, serialize_commit_key(pp.ck));
  out.push_back(static_cast<std::uint8_t>(pp.ds.scheme_id));
  return out;
}

OsPublicParams parse_public_params(ByteView data) {
  ByteReader in(data);
  std::uint8_t variant = in.u8();
  if (variant != static_cast<std::uint8_t>(Variant::tree_single) &&
      variant != static_cast<std::uint8_t>(Variant::per_message)) {
    throw Error("malformed-encoding", "unknown variant");
  }
  OsPublicParams pp;
  pp.variant = static_cast<Variant>(variant);
  pp.hash = parse_hash_params(in);
  pp.ck = parse_commit_key(in);
  std::uint8_t scheme = in.u8();
  if (scheme != static_cast<std::uint8_t>(DsSchemeId::ed25519) &&
      scheme != static_cast<std::uint8_t>(DsSchemeId::hmac_stub)) {
    throw Error("malformed-encoding", "unknown signature scheme id");
  }
  pp.ds = DsPublicParams{static_cast<DsSchemeId>(scheme)};
  in.expect_end();
  return pp;
}

}  // namespace oblisig
