#pragma once

// Radius-one indel channel, synthesis scheduling against the alternating
// supersequence, and the exhaustive-ball harness that checks encoder/decoder
// pairs.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "dnasynth/word.hpp"

namespace dnasynth {

struct ChannelSpec {
  double p_del = 0.0;
  double p_ins = 0.0;
  std::uint64_t seed = 0;
};

enum class ChannelEvent { kNone, kDeletion, kInsertion };

struct Transmission {
  QuaternaryWord word;
  ChannelEvent event = ChannelEvent::kNone;
  std::size_t position = 0;  ///< 0-based index of the deleted or inserted symbol
  int symbol = 0;            ///< inserted symbol, 0 otherwise
};

/// At most one deletion or one insertion per call; position and inserted
/// symbol are uniform. Successive calls continue one seeded stream.
class IndelChannel {
 public:
  explicit IndelChannel(const ChannelSpec& spec);

  Transmission send(const QuaternaryWord& x);

 private:
  double uniform();
  std::uint64_t below(std::uint64_t bound);

  ChannelSpec spec_;
  std::mt19937_64 engine_;
};

/// One draw from a channel seeded with spec.seed.
QuaternaryWord transmit(const QuaternaryWord& x, const ChannelSpec& spec);

/// 1-based supersequence cycles at which each symbol of a strand is appended
/// under the greedy leftmost embedding.
struct SynthesisSchedule {
  std::vector<long long> cycles;

  long long last_cycle() const { return cycles.empty() ? 0 : cycles.back(); }
};

SynthesisSchedule schedule(const QuaternaryWord& x);

/// Machine cycles needed to synthesize all strands in parallel.
long long batch_cycles(const std::vector<QuaternaryWord>& strands);

/// Enumerates messages of a fixed bit length, either all 2^bits of them in
/// numeric order or `count` pseudo-random ones. Message i depends only on
/// (seed, i).
class MessageSource {
 public:
  static MessageSource exhaustive(int bits);
  static MessageSource random(int bits, std::uint64_t count, std::uint64_t seed);

  int bits() const noexcept { return bits_; }
  std::uint64_t size() const noexcept { return count_; }
  BitVector at(std::uint64_t index) const;

 private:
  MessageSource(int bits, std::uint64_t count, std::uint64_t seed, bool random)
      : bits_(bits), count_(count), seed_(seed), random_(random) {}

  int bits_;
  std::uint64_t count_;
  std::uint64_t seed_;
  bool random_;
};

using Encoder = std::function<QuaternaryWord(const BitVector&)>;
using Decoder = std::function<BitVector(const QuaternaryWord&)>;

struct VerifyFailure {
  std::uint64_t message_index = 0;
  std::string corrupted;  ///< received word, or the codeword itself for budget violations
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::uint64_t messages_tested = 0;
  std::uint64_t balls_tested = 0;  ///< received words decoded
  long long max_synthesis_time = 0;
  long long budget = 0;
  std::uint64_t failure_count = 0;
  std::vector<VerifyFailure> failures;  ///< first kMaxRecords, sorted by message index

  static constexpr std::size_t kMaxRecords = 1000;

  bool passed() const noexcept { return failure_count == 0; }
};

/// For every message: checks S(enc(msg)) <= budget and that every word in the
/// indel ball of the codeword decodes back to msg. Decoder exceptions count
/// as failures. Work is spread over `threads` workers (0 = hardware); the
/// report does not depend on the thread count.
VerifyReport verify_encoder(const Encoder& enc, const Decoder& dec, long long budget, const MessageSource& messages,
                            unsigned threads = 0);

/// One line per failure: message index, corrupted word, expected, got (tab separated).
void write_failure_records(std::ostream& out, const VerifyReport& report);

}  // namespace dnasynth
