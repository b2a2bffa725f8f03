#include "dnasynth/channel.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <thread>

#include "dnasynth/errors.hpp"

namespace dnasynth {

IndelChannel::IndelChannel(const ChannelSpec& spec) : spec_(spec), engine_(spec.seed) {
  if (spec.p_del < 0 || spec.p_ins < 0 || spec.p_del + spec.p_ins > 1.0)
    throw ParameterError("channel probabilities must be nonnegative and sum to at most 1");
}

double IndelChannel::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t IndelChannel::below(std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
}

Transmission IndelChannel::send(const QuaternaryWord& x) {
  const double u = uniform();
  Transmission t{x};
  auto symbols = std::vector<Symbol>(x.begin(), x.end());
  if (u < spec_.p_del) {
    if (symbols.empty()) return t;
    t.event = ChannelEvent::kDeletion;
    t.position = below(symbols.size());
    symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(t.position));
  } else if (u < spec_.p_del + spec_.p_ins) {
    t.event = ChannelEvent::kInsertion;
    t.position = below(symbols.size() + 1);
    t.symbol = static_cast<int>(below(4)) + 1;
    symbols.insert(symbols.begin() + static_cast<std::ptrdiff_t>(t.position), static_cast<Symbol>(t.symbol));
  } else {
    return t;
  }
  t.word = QuaternaryWord(std::move(symbols));
  return t;
}

QuaternaryWord transmit(const QuaternaryWord& x, const ChannelSpec& spec) { return IndelChannel(spec).send(x).word; }

SynthesisSchedule schedule(const QuaternaryWord& x) {
  // Scan 1234 1234 ... and take each symbol at its first occurrence after the previous one.
  SynthesisSchedule s;
  s.cycles.reserve(x.size());
  long long cycle = 0;
  for (int symbol : x) {
    do {
      ++cycle;
    } while (smod4(cycle) != symbol);
    s.cycles.push_back(cycle);
  }
  return s;
}

long long batch_cycles(const std::vector<QuaternaryWord>& strands) {
  if (strands.empty()) throw ParameterError("batch_cycles needs at least one strand");
  long long worst = 0;
  for (const auto& s : strands) worst = std::max(worst, synthesis_time(s));
  return worst;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

MessageSource MessageSource::exhaustive(int bits) {
  if (bits < 0 || bits > 40) throw ParameterError("exhaustive message sweeps are limited to 40 bits");
  return MessageSource(bits, std::uint64_t{1} << bits, 0, false);
}

MessageSource MessageSource::random(int bits, std::uint64_t count, std::uint64_t seed) {
  if (bits < 0) throw ParameterError("negative message length");
  return MessageSource(bits, count, seed, true);
}

BitVector MessageSource::at(std::uint64_t index) const {
  if (index >= count_) throw RangeError("message index out of range");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(bits_));
  if (!random_) {
    for (int i = 0; i < bits_; ++i) out[static_cast<std::size_t>(bits_ - 1 - i)] = (index >> i) & 1U;
    return BitVector(std::move(out));
  }
  std::uint64_t state = splitmix64(seed_ ^ splitmix64(index));
  std::uint64_t word = 0;
  for (int i = 0; i < bits_; ++i) {
    if (i % 64 == 0) word = state = splitmix64(state);
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
  }
  return BitVector(std::move(out));
}

namespace {

void record(VerifyReport& report, VerifyFailure failure) {
  ++report.failure_count;
  if (report.failures.size() < VerifyReport::kMaxRecords) report.failures.push_back(std::move(failure));
}

VerifyReport verify_range(const Encoder& enc, const Decoder& dec, long long budget, const MessageSource& messages,
                          std::uint64_t first, std::uint64_t last) {
  VerifyReport report;
  report.budget = budget;
  for (std::uint64_t i = first; i < last; ++i) {
    const auto msg = messages.at(i);
    ++report.messages_tested;
    QuaternaryWord c;
    try {
      c = enc(msg);
    } catch (const std::exception& e) {
      record(report, {i, "", msg.str(), std::string("encode error: ") + e.what()});
      continue;
    }
    const long long s = synthesis_time(c);
    report.max_synthesis_time = std::max(report.max_synthesis_time, s);
    if (s > budget) record(report, {i, c.str(), msg.str(), "synthesis time " + std::to_string(s)});
    for (const auto& y : indel_ball(c)) {
      ++report.balls_tested;
      try {
        const auto got = dec(y);
        if (got != msg) record(report, {i, y.str(), msg.str(), got.str()});
      } catch (const std::exception& e) {
        record(report, {i, y.str(), msg.str(), std::string("decode error: ") + e.what()});
      }
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_encoder(const Encoder& enc, const Decoder& dec, long long budget, const MessageSource& messages,
                            unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t total = messages.size();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

  std::vector<VerifyReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      parts[t] = verify_range(enc, dec, budget, messages, total * t / threads, total * (t + 1) / threads);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifyReport merged;
  merged.budget = budget;
  for (auto& p : parts) {
    merged.messages_tested += p.messages_tested;
    merged.balls_tested += p.balls_tested;
    merged.max_synthesis_time = std::max(merged.max_synthesis_time, p.max_synthesis_time);
    merged.failure_count += p.failure_count;
    for (auto& f : p.failures) merged.failures.push_back(std::move(f));
  }
  std::stable_sort(merged.failures.begin(), merged.failures.end(),
                   [](const VerifyFailure& a, const VerifyFailure& b) { return a.message_index < b.message_index; });
  if (merged.failures.size() > VerifyReport::kMaxRecords) merged.failures.resize(VerifyReport::kMaxRecords);
  return merged;
}

void write_failure_records(std::ostream& out, const VerifyReport& report) {
  for (const auto& f : report.failures)
    out << f.message_index << '\t' << f.corrupted << '\t' << f.expected << '\t' << f.got << '\n';
}

}  // namespace dnasynth
