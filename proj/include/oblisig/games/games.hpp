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

#ifndef OBLISIG_GAMES_GAMES_HPP_
#define OBLISIG_GAMES_GAMES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oblisig/games/adversary.hpp"
#include "oblisig/merkle.hpp"
#include "oblisig/scheme.hpp"

namespace oblisig {

// Executable security games. Three unforgeability experiments share
// the Adversary interface:
//
//   run_legacy_game: the older definition this project revisits. The
//     ledger records only messages the adversary chooses to report,
//     nothing is checked at report time, and there is no session
//     sequencing. Kept to demonstrate its two weaknesses.
//
//   run_sequential_game: the strengthened definition. One session open
//     at a time, finalize submissions are verified, recorded as
//     (message, signature) pairs, and resubmitting a recorded pair
//     loses. Submitting a valid signature on an unlisted message wins
//     immediately.
//
//   run_base_game: sequential game for the tree variant with forensic
//     bookkeeping: it classifies every win into flag combinations and
//     extracts the cryptographic artifact that explains it (a DS
//     forgery, a commitment collision, or a hash collision). The
//     classification exhausts all cases, so a win with no artifact is
//     a hard error ("reduction-gap"), never a silent pass.

struct GameFlags {
  bool final_output = false;  // win came from the final output, not Fin
  bool ds_reuse = false;      // some recorded pair shares (root, c, sig)
  bool ds_forge = false;      // no recorded pair shares them: DS forgery
  bool com_coll = false;      // shared triple, different openings

  bool operator==(const GameFlags&) const = default;
};

struct DsForgery {
  Bytes message;  // exact byte string handed to ds_verify
  DsSignature sig;
};

struct ComCollision {
  Bytes message_a;
  CommitRandomness r_a;
  Bytes message_b;
  CommitRandomness r_b;
};

struct ReductionOutcome {
  enum class Kind { none, ds_forgery, com_collision, hash_collision };
  Kind kind = Kind::none;
  std::optional<DsForgery> ds;
  std::optional<ComCollision> com;
  std::optional<std::pair<Bytes, Bytes>> hash;  // verified colliding pair
};

const char* reduction_kind_name(ReductionOutcome::Kind kind);

// Why a game run ended; for assertions in tests and report lines.
enum class GameEnd {
  adversary_aborted,
  fin_invalid,        // finalize submission failed verification
  fin_resubmission,   // finalize submission repeated a recorded pair
  fin_offlist_win,    // valid finalize signature on an unlisted message
  output_win,
  output_lose,
  action_limit,
};

const char* game_end_name(GameEnd end);

struct LegacyGameResult {
  int bit = 0;
  GameEnd end = GameEnd::adversary_aborted;
  std::vector<Bytes> reported;  // self-reported message ledger
};

struct SequentialGameResult {
  int bit = 0;
  GameEnd end = GameEnd::adversary_aborted;
  int sign_queries = 0;
  int fin_queries = 0;
  int bottoms_served = 0;  // oracle-bottom replies to out-of-turn queries
};

// Signer-side record of one completed session (tree variant).
struct SessionRecord {
  int session = 0;  // 1-based query index
  MessageList list;
  Root root;
  Commitment c;
  DsSignature ds_sig;
};

struct BaseGameResult {
  int bit = 0;
  GameEnd end = GameEnd::adversary_aborted;
  GameFlags flags;
  ReductionOutcome outcome;
  int sign_queries = 0;
  int fin_queries = 0;
  int bottoms_served = 0;
  Bytes vk;
  // Every byte string the game's own signer signed, in order. A DS
  // forgery is valid only if absent here.
  std::vector<std::pair<Bytes, DsSignature>> ds_oracle_log;
  std::vector<SessionRecord> sessions;
};

LegacyGameResult run_legacy_game(Adversary& adv, const OsPublicParams& pp,
                                 RandomSource& rng);
SequentialGameResult run_sequential_game(Adversary& adv,
                                         const OsPublicParams& pp,
                                         RandomSource& rng);
// Requires pp.variant == tree_single (throws Error("bad-variant")).
BaseGameResult run_base_game(Adversary& adv, const OsPublicParams& pp,
                             RandomSource& rng);

// The seven flag combinations a winning base-game run can end with.
bool flags_combination_valid(const GameFlags& flags);

// Standalone unforgeability game for the DS backend itself, used to
// sanity-check the stub scheme's role in the harness.
class DsGameAdversary {
 public:
  virtual ~DsGameAdversary() = default;
  virtual std::string name() const = 0;
  virtual void on_start(const DsPublicParams& pp, const Bytes& vk) = 0;
  // nullopt ends the query phase.
  virtual std::optional<Bytes> next_query() = 0;
  virtual void on_signature(const Bytes& message, const DsSignature& sig) = 0;
  virtual std::pair<Bytes, DsSignature> forgery() = 0;
};

int run_ds_game(DsGameAdversary& adv, const DsPublicParams& pp,
                RandomSource& rng);

// Choice-hiding experiment: the adversary holds both keys, picks a
// list and two candidate indices, sees the first protocol message for
// one of them, and guesses which. Estimated over independent trials.
class AmbiguityAdversary {
 public:
  struct Choice {
    MessageList list;
    std::uint32_t i0 = 0;
    std::uint32_t i1 = 0;
  };

  virtual ~AmbiguityAdversary() = default;
  virtual std::string name() const = 0;
  virtual Choice choose(const OsPublicParams& pp, const Bytes& vk,
                        const Bytes& sk, RandomSource& rng) = 0;
  // Models a leaked user state (the commitment randomness): such an
  // adversary distinguishes perfectly, showing what the experiment's
  // secrecy actually rests on.
  virtual bool wants_user_state() const { return false; }
  virtual void on_user_state(const UserState& state) { (void)state; }
  virtual int guess(const FirstMessage& first, RandomSource& rng) = 0;
};

struct AmbiguityEstimate {
  int trials = 0;
  int wins = 0;
  int discarded = 0;  // invalid adversary choices, counted as losses
  double win_rate = 0.0;
  double advantage = 0.0;  // |win_rate - 1/2|
  double wilson_low = 0.0;
  double wilson_high = 0.0;  // 99% interval on the win rate
};

AmbiguityEstimate run_ambiguity(AmbiguityAdversary& adv,
                                const OsPublicParams& pp, int trials,
                                RandomSource& rng);

// Two-list interleaving attack demonstration: the same adversary
// behaviour runs against (a) the sequential oracle, which bottoms the
// second session and leaves nothing to win with, and (b) a naive
// oracle that allows nested sessions, where finalizing session 1 with
// a signature derived from session 2 wins outright.
struct InterleavingReport {
  bool sequential_blocked = false;
  bool concurrent_win = false;
  bool honest_outcome_same = false;  // single-session control behaves alike
  std::vector<std::string> lines;
};

InterleavingReport run_interleaving_demo(const OsPublicParams& pp,
                                         std::uint64_t seed);

}  // namespace oblisig

#endif  // OBLISIG_GAMES_GAMES_HPP_
