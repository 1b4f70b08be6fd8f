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

#include "oblisig/games/suite.hpp"

#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "oblisig/error.hpp"

namespace oblisig {

namespace {

Bytes be_bytes(std::uint64_t value, std::size_t width) {
  Bytes out(width);
  for (std::size_t i = 0; i < width; ++i) {
    out[width - 1 - i] = static_cast<std::uint8_t>(value >> (8 * i));
  }
  return out;
}

Bytes leaf_digest(const HashParams& params, ByteView message) {
  Bytes pre;
  pre.push_back(kLeafDomainTag);
  append(pre, message);
  return hash_digest(params, pre);
}

Bytes node_digest(const HashParams& params, ByteView left, ByteView right) {
  Bytes pre;
  pre.push_back(kNodeDomainTag);
  append(pre, left);
  append(pre, right);
  return hash_digest(params, pre);
}

// Shared plumbing for scripted adversaries: actions queue up, the game
// drains them, an empty queue aborts.
class Scripted : public Adversary {
 public:
  explicit Scripted(std::uint64_t seed) : rng_(seed) {}

  AdversaryAction next_action() override {
    if (pending_.empty()) plan();
    if (pending_.empty()) return AbortAction{};
    AdversaryAction action = std::move(pending_.front());
    pending_.pop_front();
    return action;
  }

  void on_start(const OsPublicParams& pp, const Bytes& vk) override {
    pp_ = pp;
    vk_ = vk;
    prepare();
  }

 protected:
  // Called once keys are known; collision searches happen here.
  virtual void prepare() {}
  // Called whenever the queue runs dry; push the next move(s).
  virtual void plan() {}

  SeededRandom rng_;
  OsPublicParams pp_;
  Bytes vk_;
  std::deque<AdversaryAction> pending_;
};

// Runs honest sessions and finally resubmits its first derived pair,
// losing every game. Baseline for "completeness inside the games".
class HonestUser : public Scripted {
 public:
  HonestUser(std::uint64_t seed, int runs) : Scripted(seed), runs_(runs) {}

  std::string name() const override { return "honest-user"; }

 protected:
  void plan() override {
    if (started_ < runs_) {
      MessageList list;
      std::string tag = "honest-" + std::to_string(started_);
      list.messages = {to_bytes(tag + "-0"), to_bytes(tag + "-1")};
      std::uint32_t j = static_cast<std::uint32_t>(started_ % 2);
      auto [first, state] = os_u1(pp_, vk_, list, j, rng_);
      state_ = state;
      ++started_;
      pending_.push_back(SignAction{list, first});
      return;
    }
    if (!derived_.empty() && !output_done_) {
      output_done_ = true;
      pending_.push_back(OutputAction{derived_[0].first, derived_[0].second});
    }
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second) return;
    auto [message, sig] = os_uder(pp_, vk_, state_, *second);
    derived_.emplace_back(message, sig);
    pending_.push_back(FinAction{message, sig});
  }

 private:
  int runs_;
  int started_ = 0;
  bool output_done_ = false;
  UserState state_;
  std::vector<std::pair<Bytes, ObliviousSignature>> derived_;
};

// Two sessions over one list; the second finalize call replays the
// first session's pair and the final output is the second derived
// signature. The legacy game scores this a win because its ledger only
// ever saw the first message.
class TrivialReuse : public Scripted {
 public:
  explicit TrivialReuse(std::uint64_t seed) : Scripted(seed) {
    list_.messages = {to_bytes("reuse-0"), to_bytes("reuse-1")};
  }

  std::string name() const override { return "trivial-reuse"; }

 protected:
  void plan() override {
    if (started_ < 2) {
      auto [first, state] =
          os_u1(pp_, vk_, list_, static_cast<std::uint32_t>(started_), rng_);
      state_ = state;
      ++started_;
      pending_.push_back(SignAction{list_, first});
      return;
    }
    if (derived_.size() == 2 && !output_done_) {
      output_done_ = true;
      pending_.push_back(OutputAction{derived_[1].first, derived_[1].second});
    }
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second) return;
    auto [message, sig] = os_uder(pp_, vk_, state_, *second);
    derived_.emplace_back(message, sig);
    // Both finalize calls submit the first session's pair.
    pending_.push_back(FinAction{derived_[0].first, derived_[0].second});
  }

 private:
  MessageList list_;
  int started_ = 0;
  bool output_done_ = false;
  UserState state_;
  std::vector<std::pair<Bytes, ObliviousSignature>> derived_;
};

// Models a leaked signing key: signs its own (root, commitment) pair
// over a private list and submits the result on an unlisted message.
// The finalize variant opens one cover session first; the output
// variant answers with the forgery straight away.
class SelfSignForger : public Scripted {
 public:
  SelfSignForger(std::uint64_t seed, bool via_finalize)
      : Scripted(seed), via_finalize_(via_finalize) {}

  std::string name() const override {
    return via_finalize_ ? "key-leak-self-sign-fin"
                         : "key-leak-self-sign-output";
  }

  bool wants_signing_key() const override { return true; }
  void on_signing_key(const Bytes& sk) override { sk_ = sk; }

 protected:
  void plan() override {
    if (via_finalize_ && !session_opened_) {
      session_opened_ = true;
      MessageList cover;
      cover.messages = {to_bytes("cover-0"), to_bytes("cover-1")};
      auto [first, state] = os_u1(pp_, vk_, cover, 0, rng_);
      (void)state;
      pending_.push_back(SignAction{cover, first});
      return;
    }
    if (!via_finalize_ && !done_) {
      done_ = true;
      auto [message, sig] = forge();
      pending_.push_back(OutputAction{message, sig});
    }
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second || done_) return;
    done_ = true;
    auto [message, sig] = forge();
    pending_.push_back(FinAction{message, sig});
  }

 private:
  std::pair<Bytes, ObliviousSignature> forge() {
    Bytes target = to_bytes("self-signed-target");
    MessageList own;
    own.messages = {target, to_bytes("self-signed-filler")};
    MerkleTree tree(pp_.hash, pad_list(own.messages));
    CommitRandomness r = sample_commit_randomness(pp_.ck, rng_);
    Commitment c = commit(pp_.ck, target, r);
    DsSignature ds_sig =
        ds_sign(pp_.ds, sk_, tree_signing_bytes(tree.root(), c));
    TreeSignature sig{tree.root(), c, ds_sig, tree.path(0), 0, r};
    return {target, ObliviousSignature{Variant::tree_single, sig}};
  }

  bool via_finalize_;
  bool session_opened_ = false;
  bool done_ = false;
  Bytes sk_;
};

// Brute-forces two openings of one commitment (weak hash), lists both
// messages in session 1, collects the signer's signature over
// (root, c), then re-rolls that same signature onto the second message
// in a context where it is unlisted: a second session for the finalize
// variant, the final output otherwise.
class CommitCollisionForger : public Scripted {
 public:
  CommitCollisionForger(std::uint64_t seed, bool via_finalize)
      : Scripted(seed), via_finalize_(via_finalize) {}

  std::string name() const override {
    return via_finalize_ ? "commit-collision-fin" : "commit-collision-output";
  }

 protected:
  void prepare() override {
    std::map<Bytes, std::pair<Bytes, CommitRandomness>> seen;
    for (std::uint64_t x = 0;; ++x) {
      Bytes m = to_bytes("cc-" + std::to_string(x));
      CommitRandomness r{rng_.bytes(pp_.ck.randomness_len())};
      Commitment c = commit(pp_.ck, m, r);
      auto it = seen.find(c.digest);
      if (it != seen.end()) {
        // Counter-derived messages are pairwise distinct.
        message_a_ = it->second.first;
        r_a_ = it->second.second;
        message_b_ = m;
        r_b_ = r;
        c_ = c;
        return;
      }
      seen.emplace(c.digest, std::make_pair(m, r));
    }
  }

  void plan() override {
    if (step_ == 0) {
      step_ = 1;
      MessageList list;
      list.messages = {message_a_, message_b_};
      pending_.push_back(SignAction{list, FirstMessage{c_}});
      return;
    }
    if (step_ == 2) {
      step_ = 3;
      if (via_finalize_) {
        MessageList fresh;
        fresh.messages = {to_bytes("cc-fresh-0"), to_bytes("cc-fresh-1")};
        pending_.push_back(SignAction{fresh, FirstMessage{c_}});
      } else {
        pending_.push_back(OutputAction{message_b_, second_sig()});
      }
    }
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second) return;
    if (step_ == 1) {
      step_ = 2;
      ds_sig_ = second->sigs[0];
      MessageList list;
      list.messages = {message_a_, message_b_};
      MerkleTree tree(pp_.hash, pad_list(list.messages));
      root_ = tree.root();
      path_a_ = tree.path(0);
      path_b_ = tree.path(1);
      TreeSignature sig{root_, c_, ds_sig_, path_a_, 0, r_a_};
      pending_.push_back(
          FinAction{message_a_, ObliviousSignature{Variant::tree_single, sig}});
      return;
    }
    if (step_ == 3 && via_finalize_) {
      step_ = 4;
      pending_.push_back(FinAction{message_b_, second_sig()});
    }
  }

 private:
  ObliviousSignature second_sig() const {
    TreeSignature sig{root_, c_, ds_sig_, path_b_, 1, r_b_};
    return ObliviousSignature{Variant::tree_single, sig};
  }

  bool via_finalize_;
  int step_ = 0;
  Bytes message_a_;
  Bytes message_b_;
  CommitRandomness r_a_;
  CommitRandomness r_b_;
  Commitment c_;
  DsSignature ds_sig_;
  Root root_;
  MerklePath path_a_;
  MerklePath path_b_;
};

// Brute-forces a leaf second preimage (weak hash): an unlisted message
// whose leaf digest equals that of a listed one, commits to the
// unlisted message, and finalizes session 1 with the session's own
// signed (root, c). The base game's current-session shortcut fires and
// the honest-tree extractor produces the collision.
class LeafCollisionForger : public Scripted {
 public:
  explicit LeafCollisionForger(std::uint64_t seed) : Scripted(seed) {}

  std::string name() const override { return "leaf-collision-fin"; }

 protected:
  void prepare() override {
    cover_ = to_bytes("leaf-a");
    Bytes target = leaf_digest(pp_.hash, cover_);
    for (std::uint64_t x = 0;; ++x) {
      Bytes candidate = to_bytes("leaf-x-" + std::to_string(x));
      if (candidate != cover_ && leaf_digest(pp_.hash, candidate) == target) {
        forged_ = candidate;
        break;
      }
    }
    r_ = sample_commit_randomness(pp_.ck, rng_);
    c_ = commit(pp_.ck, forged_, r_);
  }

  void plan() override {
    if (started_) return;
    started_ = true;
    MessageList list;
    list.messages = {cover_, to_bytes("leaf-b")};
    pending_.push_back(SignAction{list, FirstMessage{c_}});
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second) return;
    MessageList list;
    list.messages = {cover_, to_bytes("leaf-b")};
    MerkleTree tree(pp_.hash, pad_list(list.messages));
    TreeSignature sig{tree.root(), c_, second->sigs[0], tree.path(0), 0, r_};
    pending_.push_back(
        FinAction{forged_, ObliviousSignature{Variant::tree_single, sig}});
  }

 private:
  bool started_ = false;
  Bytes cover_;
  Bytes forged_;
  CommitRandomness r_;
  Commitment c_;
};

// Brute-forces a sibling second preimage (weak hash): a fake sibling
// digest that folds the honest leaf to the honest root, giving two
// different paths for one (message, index, root). Searches over
// candidate lists until one admits a solution, since the sibling is
// confined to digest width.
class PathCollisionForger : public Scripted {
 public:
  PathCollisionForger(std::uint64_t seed, bool via_finalize)
      : Scripted(seed), via_finalize_(via_finalize) {}

  std::string name() const override {
    return via_finalize_ ? "path-collision-fin" : "path-collision-output";
  }

 protected:
  void prepare() override {
    message_ = to_bytes("path-a");
    Bytes h0 = leaf_digest(pp_.hash, message_);
    std::size_t width = pp_.hash.digest_len();
    std::uint64_t space = std::uint64_t{1} << (8 * width);
    for (std::uint64_t v = 0;; ++v) {
      partner_ = to_bytes("path-b-" + std::to_string(v));
      Bytes h1 = leaf_digest(pp_.hash, partner_);
      Bytes root = node_digest(pp_.hash, h0, h1);
      for (std::uint64_t s = 0; s < space; ++s) {
        Bytes sibling = be_bytes(s, width);
        if (sibling != h1 && node_digest(pp_.hash, h0, sibling) == root) {
          forged_sibling_ = sibling;
          honest_sibling_ = h1;
          root_ = Root{root};
          r_ = sample_commit_randomness(pp_.ck, rng_);
          c_ = commit(pp_.ck, message_, r_);
          return;
        }
      }
    }
  }

  void plan() override {
    if (step_ == 0) {
      step_ = 1;
      MessageList list;
      list.messages = {message_, partner_};
      pending_.push_back(SignAction{list, FirstMessage{c_}});
      return;
    }
    if (step_ == 2) {
      step_ = 3;
      if (via_finalize_) {
        MessageList fresh;
        fresh.messages = {to_bytes("path-fresh-0"), to_bytes("path-fresh-1")};
        pending_.push_back(SignAction{fresh, FirstMessage{c_}});
      } else {
        pending_.push_back(OutputAction{message_, forged_path_sig()});
      }
    }
  }

  void on_second_message(const std::optional<SecondMessage>& second) override {
    if (!second) return;
    if (step_ == 1) {
      step_ = 2;
      ds_sig_ = second->sigs[0];
      MerklePath honest;
      honest.siblings = {honest_sibling_};
      TreeSignature sig{root_, c_, ds_sig_, honest, 0, r_};
      pending_.push_back(
          FinAction{message_, ObliviousSignature{Variant::tree_single, sig}});
      return;
    }
    if (step_ == 3 && via_finalize_) {
      step_ = 4;
      pending_.push_back(FinAction{message_, forged_path_sig()});
    }
  }

 private:
  ObliviousSignature forged_path_sig() const {
    MerklePath forged;
    forged.siblings = {forged_sibling_};
    TreeSignature sig{root_, c_, ds_sig_, forged, 0, r_};
    return ObliviousSignature{Variant::tree_single, sig};
  }

  bool via_finalize_;
  int step_ = 0;
  Bytes message_;
  Bytes partner_;
  Bytes honest_sibling_;
  Bytes forged_sibling_;
  Root root_;
  CommitRandomness r_;
  Commitment c_;
  DsSignature ds_sig_;
};

class HonestDsProbe : public DsGameAdversary {
 public:
  std::string name() const override { return "ds-honest-probe"; }

  void on_start(const DsPublicParams& pp, const Bytes& vk) override {
    (void)pp;
    (void)vk;
  }

  std::optional<Bytes> next_query() override {
    if (issued_ >= 2) return std::nullopt;
    ++issued_;
    return to_bytes("ds-probe-" + std::to_string(issued_));
  }

  void on_signature(const Bytes& message, const DsSignature& sig) override {
    log_.emplace_back(message, sig);
  }

  std::pair<Bytes, DsSignature> forgery() override {
    return log_.front();  // replay, always rejected
  }

 private:
  int issued_ = 0;
  std::vector<std::pair<Bytes, DsSignature>> log_;
};

// Breaks the symmetric stub: its verifying key doubles as the signing
// key, so signing any fresh message with it is a clean forgery. The
// same adversary cannot touch ed25519.
class SymmetricKeyForger : public DsGameAdversary {
 public:
  std::string name() const override { return "ds-symmetric-key-forger"; }

  void on_start(const DsPublicParams& pp, const Bytes& vk) override {
    pp_ = pp;
    vk_ = vk;
  }

  std::optional<Bytes> next_query() override { return std::nullopt; }

  void on_signature(const Bytes&, const DsSignature&) override {}

  std::pair<Bytes, DsSignature> forgery() override {
    Bytes message = to_bytes("stub-forged-message");
    return {message, ds_sign(pp_, vk_, message)};
  }

 private:
  DsPublicParams pp_;
  Bytes vk_;
};

class CoinGuesser : public AmbiguityAdversary {
 public:
  std::string name() const override { return "ambiguity-coin-guess"; }

  Choice choose(const OsPublicParams&, const Bytes&, const Bytes&,
                RandomSource&) override {
    Choice choice;
    choice.list.messages = {to_bytes("amb-0"), to_bytes("amb-1")};
    choice.i0 = 0;
    choice.i1 = 1;
    return choice;
  }

  int guess(const FirstMessage&, RandomSource& rng) override {
    return rng.coin() ? 1 : 0;
  }
};

// Probes random openings of the first candidate against the received
// commitment. At production width a hit never happens and the win
// rate stays at a coin flip.
class CommitGrinder : public AmbiguityAdversary {
 public:
  explicit CommitGrinder(int probes) : probes_(probes) {}

  std::string name() const override { return "ambiguity-commit-grind"; }

  Choice choose(const OsPublicParams& pp, const Bytes&, const Bytes&,
                RandomSource&) override {
    ck_ = pp.ck;
    Choice choice;
    choice.list.messages = {to_bytes("amb-0"), to_bytes("amb-1")};
    choice.i0 = 0;
    choice.i1 = 1;
    candidate_ = choice.list.messages[0];
    return choice;
  }

  int guess(const FirstMessage& first, RandomSource& rng) override {
    for (int i = 0; i < probes_; ++i) {
      CommitRandomness r{rng.bytes(ck_.randomness_len())};
      if (commit(ck_, candidate_, r) == first.c) return 0;
    }
    return rng.coin() ? 1 : 0;
  }

 private:
  int probes_;
  CommitKey ck_;
  Bytes candidate_;
};

// Receives the user's commitment randomness (a modeled state leak) and
// re-opens the commitment, distinguishing perfectly. Documents exactly
// which secret the hiding property rests on.
class StateLeakDistinguisher : public AmbiguityAdversary {
 public:
  std::string name() const override { return "ambiguity-state-leak"; }

  Choice choose(const OsPublicParams& pp, const Bytes&, const Bytes&,
                RandomSource&) override {
    ck_ = pp.ck;
    Choice choice;
    choice.list.messages = {to_bytes("amb-0"), to_bytes("amb-1")};
    choice.i0 = 0;
    choice.i1 = 1;
    candidate_ = choice.list.messages[0];
    return choice;
  }

  bool wants_user_state() const override { return true; }
  void on_user_state(const UserState& state) override { r_ = state.r; }

  int guess(const FirstMessage& first, RandomSource&) override {
    return commit(ck_, candidate_, r_) == first.c ? 0 : 1;
  }

 private:
  CommitKey ck_;
  Bytes candidate_;
  CommitRandomness r_;
};

std::string flags_text(const GameFlags& f) {
  std::ostringstream out;
  out << "final=" << f.final_output << " reuse=" << f.ds_reuse
      << " forge=" << f.ds_forge << " coll=" << f.com_coll;
  return out.str();
}

}  // namespace

bool validate_outcome(const OsPublicParams& pp, const BaseGameResult& result) {
  const ReductionOutcome& outcome = result.outcome;
  switch (outcome.kind) {
    case ReductionOutcome::Kind::none:
      return result.bit == 0;
    case ReductionOutcome::Kind::ds_forgery: {
      if (!outcome.ds) return false;
      if (ds_verify(pp.ds, result.vk, outcome.ds->message, outcome.ds->sig) !=
          1) {
        return false;
      }
      for (const auto& issued : result.ds_oracle_log) {
        if (issued.first == outcome.ds->message &&
            issued.second == outcome.ds->sig) {
          return false;
        }
      }
      return true;
    }
    case ReductionOutcome::Kind::com_collision: {
      if (!outcome.com) return false;
      const ComCollision& c = *outcome.com;
      if (c.message_a == c.message_b && c.r_a == c.r_b) return false;
      return commit(pp.ck, c.message_a, c.r_a) ==
             commit(pp.ck, c.message_b, c.r_b);
    }
    case ReductionOutcome::Kind::hash_collision: {
      if (!outcome.hash) return false;
      if (outcome.hash->first == outcome.hash->second) return false;
      return hash_digest(pp.hash, outcome.hash->first) ==
             hash_digest(pp.hash, outcome.hash->second);
    }
  }
  return false;
}

namespace {

struct MatrixEntry {
  std::string name;
  std::function<std::unique_ptr<Adversary>(std::uint64_t)> make;
  bool weak_only = false;
  bool run_legacy = false;
  int legacy_bit = 0;
  int expected_bit = 0;  // sequential and base agree by design
  GameEnd sequential_end = GameEnd::output_lose;
  GameFlags base_flags;
  ReductionOutcome::Kind outcome = ReductionOutcome::Kind::none;
};

std::uint64_t row_seed(std::uint64_t base, std::size_t row) {
  // splitmix64 step over the row index, so rows decorrelate.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (row + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  HashParams hash = options.weak_hash ? weak_hash(16) : production_hash();
  OsPublicParams pp = os_setup(Variant::tree_single, hash);
  OsPublicParams production_pp =
      os_setup(Variant::tree_single, production_hash());

  auto add_record = [&](SuiteRecord record) {
    report.all_ok = report.all_ok && record.ok;
    report.records.push_back(std::move(record));
  };

  std::vector<MatrixEntry> matrix;
  {
    MatrixEntry honest;
    honest.name = "honest-user";
    honest.make = [](std::uint64_t seed) {
      return std::make_unique<HonestUser>(seed, 2);
    };
    honest.run_legacy = true;
    honest.legacy_bit = 0;
    honest.expected_bit = 0;
    honest.sequential_end = GameEnd::output_lose;
    matrix.push_back(std::move(honest));

    MatrixEntry reuse;
    reuse.name = "trivial-reuse";
    reuse.make = [](std::uint64_t seed) {
      return std::make_unique<TrivialReuse>(seed);
    };
    reuse.run_legacy = true;
    reuse.legacy_bit = 1;
    reuse.expected_bit = 0;
    reuse.sequential_end = GameEnd::fin_resubmission;
    matrix.push_back(std::move(reuse));

    MatrixEntry self_fin;
    self_fin.name = "key-leak-self-sign-fin";
    self_fin.make = [](std::uint64_t seed) {
      return std::make_unique<SelfSignForger>(seed, true);
    };
    self_fin.expected_bit = 1;
    self_fin.sequential_end = GameEnd::fin_offlist_win;
    self_fin.base_flags = GameFlags{false, false, true, false};
    self_fin.outcome = ReductionOutcome::Kind::ds_forgery;
    matrix.push_back(std::move(self_fin));

    MatrixEntry self_out;
    self_out.name = "key-leak-self-sign-output";
    self_out.make = [](std::uint64_t seed) {
      return std::make_unique<SelfSignForger>(seed, false);
    };
    self_out.expected_bit = 1;
    self_out.sequential_end = GameEnd::output_win;
    self_out.base_flags = GameFlags{true, false, true, false};
    self_out.outcome = ReductionOutcome::Kind::ds_forgery;
    matrix.push_back(std::move(self_out));

    MatrixEntry com_fin;
    com_fin.name = "commit-collision-fin";
    com_fin.make = [](std::uint64_t seed) {
      return std::make_unique<CommitCollisionForger>(seed, true);
    };
    com_fin.weak_only = true;
    com_fin.expected_bit = 1;
    com_fin.sequential_end = GameEnd::fin_offlist_win;
    com_fin.base_flags = GameFlags{false, true, false, true};
    com_fin.outcome = ReductionOutcome::Kind::com_collision;
    matrix.push_back(std::move(com_fin));

    MatrixEntry com_out;
    com_out.name = "commit-collision-output";
    com_out.make = [](std::uint64_t seed) {
      return std::make_unique<CommitCollisionForger>(seed, false);
    };
    com_out.weak_only = true;
    com_out.expected_bit = 1;
    com_out.sequential_end = GameEnd::output_win;
    com_out.base_flags = GameFlags{true, true, false, true};
    com_out.outcome = ReductionOutcome::Kind::com_collision;
    matrix.push_back(std::move(com_out));

    MatrixEntry leaf_fin;
    leaf_fin.name = "leaf-collision-fin";
    leaf_fin.make = [](std::uint64_t seed) {
      return std::make_unique<LeafCollisionForger>(seed);
    };
    leaf_fin.weak_only = true;
    leaf_fin.expected_bit = 1;
    leaf_fin.sequential_end = GameEnd::fin_offlist_win;
    leaf_fin.base_flags = GameFlags{false, false, false, false};
    leaf_fin.outcome = ReductionOutcome::Kind::hash_collision;
    matrix.push_back(std::move(leaf_fin));

    MatrixEntry path_fin;
    path_fin.name = "path-collision-fin";
    path_fin.make = [](std::uint64_t seed) {
      return std::make_unique<PathCollisionForger>(seed, true);
    };
    path_fin.weak_only = true;
    path_fin.expected_bit = 1;
    path_fin.sequential_end = GameEnd::fin_offlist_win;
    path_fin.base_flags = GameFlags{false, true, false, false};
    path_fin.outcome = ReductionOutcome::Kind::hash_collision;
    matrix.push_back(std::move(path_fin));

    MatrixEntry path_out;
    path_out.name = "path-collision-output";
    path_out.make = [](std::uint64_t seed) {
      return std::make_unique<PathCollisionForger>(seed, false);
    };
    path_out.weak_only = true;
    path_out.expected_bit = 1;
    path_out.sequential_end = GameEnd::output_win;
    path_out.base_flags = GameFlags{true, true, false, false};
    path_out.outcome = ReductionOutcome::Kind::hash_collision;
    matrix.push_back(std::move(path_out));
  }

  std::size_t row = 0;
  for (const MatrixEntry& entry : matrix) {
    if (entry.weak_only && !options.weak_hash) continue;
    std::uint64_t seed = row_seed(options.seed, row++);

    std::optional<LegacyGameResult> legacy;
    if (entry.run_legacy) {
      SeededRandom game_rng(seed);
      auto adv = entry.make(seed ^ 0x5bd1e995u);
      legacy = run_legacy_game(*adv, pp, game_rng);
      SuiteRecord rec;
      rec.adversary = entry.name;
      rec.game = "legacy";
      rec.bit = legacy->bit;
      rec.end = game_end_name(legacy->end);
      rec.seed = seed;
      rec.ok = legacy->bit == entry.legacy_bit;
      rec.detail = "expected bit " + std::to_string(entry.legacy_bit);
      add_record(std::move(rec));
    }

    SeededRandom seq_rng(seed);
    auto seq_adv = entry.make(seed ^ 0x5bd1e995u);
    SequentialGameResult seq = run_sequential_game(*seq_adv, pp, seq_rng);
    {
      SuiteRecord rec;
      rec.adversary = entry.name;
      rec.game = "sequential";
      rec.bit = seq.bit;
      rec.end = game_end_name(seq.end);
      rec.seed = seed;
      rec.ok = seq.bit == entry.expected_bit &&
               seq.end == entry.sequential_end;
      rec.detail = "expected bit " + std::to_string(entry.expected_bit) +
                   ", end " + game_end_name(entry.sequential_end);
      add_record(std::move(rec));
    }

    SeededRandom base_rng(seed);
    auto base_adv = entry.make(seed ^ 0x5bd1e995u);
    BaseGameResult base = run_base_game(*base_adv, pp, base_rng);
    {
      SuiteRecord rec;
      rec.adversary = entry.name;
      rec.game = "base";
      rec.bit = base.bit;
      rec.flags = base.flags;
      rec.outcome = reduction_kind_name(base.outcome.kind);
      rec.end = game_end_name(base.end);
      rec.seed = seed;
      bool flag_ok = base.bit == 0 || flags_combination_valid(base.flags);
      rec.ok = base.bit == entry.expected_bit && base.bit == seq.bit &&
               base.flags == entry.base_flags &&
               base.outcome.kind == entry.outcome && flag_ok &&
               validate_outcome(pp, base);
      rec.detail = "expected " + flags_text(entry.base_flags) + ", outcome " +
                   reduction_kind_name(entry.outcome) +
                   ", agrees with sequential bit";
      add_record(std::move(rec));
    }
  }

  // DS backend rows.
  {
    std::uint64_t seed = row_seed(options.seed, 100);
    SeededRandom rng(seed);
    HonestDsProbe probe;
    int bit = run_ds_game(probe, ds_setup(DsSchemeId::ed25519), rng);
    SuiteRecord rec;
    rec.adversary = probe.name();
    rec.game = "ds";
    rec.bit = bit;
    rec.end = "replay-rejected";
    rec.seed = seed;
    rec.ok = bit == 0;
    rec.detail = "ed25519, expected bit 0";
    add_record(std::move(rec));
  }
  {
    std::uint64_t seed = row_seed(options.seed, 101);
    SeededRandom rng(seed);
    SymmetricKeyForger forger;
    int bit = run_ds_game(forger, ds_setup(DsSchemeId::hmac_stub), rng);
    SuiteRecord rec;
    rec.adversary = forger.name();
    rec.game = "ds";
    rec.bit = bit;
    rec.end = "stub-key-reused";
    rec.seed = seed;
    rec.ok = bit == 1;
    rec.detail = "hmac stub vk doubles as sk, expected bit 1";
    add_record(std::move(rec));
  }

  // Ambiguity rows run production parameters: they estimate the
  // shipping configuration, not the weakened test one.
  {
    struct AmbRow {
      std::unique_ptr<AmbiguityAdversary> adv;
      bool expect_distinguish;
    };
    std::vector<AmbRow> rows;
    rows.push_back({std::make_unique<CoinGuesser>(), false});
    rows.push_back({std::make_unique<CommitGrinder>(32), false});
    rows.push_back({std::make_unique<StateLeakDistinguisher>(), true});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::uint64_t seed = row_seed(options.seed, 200 + i);
      SeededRandom rng(seed);
      AmbiguityEstimate est = run_ambiguity(*rows[i].adv, production_pp,
                                            options.ambiguity_trials, rng);
      SuiteRecord rec;
      rec.adversary = rows[i].adv->name();
      rec.game = "ambiguity";
      rec.bit = rows[i].expect_distinguish ? 1 : 0;
      rec.end = "estimated";
      rec.seed = seed;
      std::ostringstream detail;
      detail << "trials=" << est.trials << " wins=" << est.wins
             << " advantage=" << est.advantage << " wilson=["
             << est.wilson_low << "," << est.wilson_high << "]"
             << " discarded=" << est.discarded;
      rec.detail = detail.str();
      rec.ok = rows[i].expect_distinguish
                   ? est.win_rate >= 0.999 && est.discarded == 0
                   : est.advantage < 0.05 && est.discarded == 0;
      add_record(std::move(rec));
    }
  }

  // Interleaving demonstration.
  {
    std::uint64_t seed = row_seed(options.seed, 300);
    InterleavingReport demo = run_interleaving_demo(pp, seed);
    SuiteRecord rec;
    rec.adversary = "two-list-interleaver";
    rec.game = "interleaving";
    rec.bit = demo.concurrent_win ? 1 : 0;
    rec.end = demo.sequential_blocked ? "sequential-blocked" : "not-blocked";
    rec.seed = seed;
    rec.ok = demo.sequential_blocked && demo.concurrent_win &&
             demo.honest_outcome_same;
    std::ostringstream detail;
    for (const std::string& line : demo.lines) detail << line << "; ";
    rec.detail = detail.str();
    add_record(std::move(rec));
  }

  return report;
}

}  // namespace oblisig
