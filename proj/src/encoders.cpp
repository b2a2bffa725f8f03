#include "dnasynth/encoders.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dnasynth/errors.hpp"

namespace dnasynth {

namespace {

void check_budget_range(int n, long long T) {
  if (n < 1 || T <= n || T > 4LL * n)
    throw ParameterError("synthesis budget must satisfy n < T <= 4n (n=" + std::to_string(n) + ", T=" + std::to_string(T) + ")");
}

std::shared_ptr<const SynthesisCounter> counter_for(int length, long long budget) {
  return std::make_shared<const SynthesisCounter>(length, std::max(0LL, std::min(budget, 4LL * length)));
}

BitVector to_bits(const Rank& rank, int width) { return BitVector::from_integer(rank - 1, static_cast<std::size_t>(width)); }

}  // namespace

BlockPlan make_block_plan(int n, long long T, int blocks, const SynthesisCounter& counts) {
  check_budget_range(n, T);
  const auto layout = systematic_layout(n);
  if (blocks < 1 || layout.m % blocks != 0)
    throw ParameterError("block count " + std::to_string(blocks) + " does not divide the data length " + std::to_string(layout.m));
  BlockPlan plan;
  plan.n = n;
  plan.T = T;
  plan.blocks = blocks;
  plan.block_length = layout.m / blocks;
  plan.slack = 4LL * (layout.digits + blocks + 3);
  plan.block_budget = T - plan.slack < 0 ? -1 : (T - plan.slack) / blocks;
  if (plan.block_budget < plan.block_length)
    throw Infeasible("per-block synthesis budget " + std::to_string(plan.block_budget) + " is below the block length " +
                     std::to_string(plan.block_length));
  plan.bits_per_block = static_cast<int>(floor_log2(counts(plan.block_length, plan.block_budget)));
  plan.counts = counter_for(plan.block_length, plan.block_budget);
  return plan;
}

BlockPlan make_block_plan(int n, long long T, int blocks) {
  check_budget_range(n, T);
  const auto layout = systematic_layout(n);
  return make_block_plan(n, T, blocks, SynthesisCounter(layout.m, T));
}

BlockPlan plan_block_params(int n, long long T, const SynthesisCounter& counts) {
  check_budget_range(n, T);
  const auto layout = systematic_layout(n);
  std::optional<BlockPlan> best;
  for (int blocks = 1; blocks <= layout.m; ++blocks) {
    if (layout.m % blocks != 0) continue;
    try {
      auto plan = make_block_plan(n, T, blocks, counts);
      if (!best || plan.message_bits() > best->message_bits()) best = std::move(plan);
    } catch (const Infeasible&) {
    }
  }
  if (!best) throw Infeasible("no block count admits a per-block budget at least the block length (n=" + std::to_string(n) +
                              ", T=" + std::to_string(T) + ")");
  return *best;
}

BlockPlan plan_block_params(int n, long long T) {
  check_budget_range(n, T);
  return plan_block_params(n, T, SynthesisCounter(systematic_layout(n).m, T));
}

QuaternaryWord enc_A(const BitVector& msg, const BlockPlan& plan) {
  const auto m = static_cast<std::size_t>(plan.bits_per_block);
  if (msg.size() != m * static_cast<std::size_t>(plan.blocks))
    throw ParameterError("block encoder expects " + std::to_string(plan.message_bits()) + " bits, got " + std::to_string(msg.size()));
  std::vector<Symbol> data;
  data.reserve(static_cast<std::size_t>(plan.blocks * plan.block_length));
  for (int t = 0; t < plan.blocks; ++t) {
    const Rank j = msg.slice(static_cast<std::size_t>(t) * m, m).to_integer() + 1;
    const auto block = unrank_W(j, plan.block_length, plan.block_budget, *plan.counts);
    data.insert(data.end(), block.begin(), block.end());
  }
  return enc_H(QuaternaryWord(std::move(data)), plan.n);
}

BitVector dec_A(const QuaternaryWord& y, const BlockPlan& plan) {
  const auto data = dec_H(y, plan.n);
  const auto k = static_cast<std::size_t>(plan.block_length);
  const Count limit = Count(1) << plan.bits_per_block;
  BitVector out;
  for (int t = 0; t < plan.blocks; ++t) {
    Rank j;
    try {
      j = rank_W(data.slice(static_cast<std::size_t>(t) * k, k), plan.block_length, plan.block_budget, *plan.counts);
    } catch (const MembershipError& e) {
      throw DecodeFailure(std::string("block ") + std::to_string(t) + " is not a valid block: " + e.what());
    }
    if (j > limit) throw DecodeFailure("block rank exceeds the message range");
    out.append(to_bits(j, plan.bits_per_block));
  }
  return out;
}

int special_payload_symbols(int n) {
  if (n < 2) throw ParameterError("special encoder needs n >= 2");
  const int m = n - ceil_log4(n - 1) - 5;
  if (m < 1) throw ParameterError("special encoder length " + std::to_string(n) + " leaves no room for data");
  return m;
}

DifferentialWord flip_norm(const DifferentialWord& d) {
  std::vector<Symbol> out(d.begin(), d.end());
  for (auto& v : out) v = static_cast<Symbol>(5 - v);
  return DifferentialWord(std::move(out));
}

namespace {

// d with a trailing 1 appended, flipped when its norm exceeds 2.5 times its
// length; the trailing symbol then reads 4.
DifferentialWord balanced_with_flag(const DifferentialWord& d) {
  std::vector<Symbol> v(d.begin(), d.end());
  v.push_back(1);
  DifferentialWord out(std::move(v));
  if (2 * out.l1_norm() > 5LL * static_cast<long long>(out.size())) out = flip_norm(out);
  return out;
}

DifferentialWord concat(const DifferentialWord& a, const DifferentialWord& b) {
  std::vector<Symbol> v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return DifferentialWord(std::move(v));
}

// Message carried by the protected prefix (first m + 1 symbols) of a special codeword.
std::optional<BitVector> prefix_message(const QuaternaryWord& prefix) {
  const auto d = differential(prefix);
  const int flag = d[d.size() - 1];
  if (flag != 1 && flag != 4) return std::nullopt;
  auto body = d.slice(0, d.size() - 1);
  if (flag == 4) body = flip_norm(body);
  return phi(differential_inverse(body));
}

}  // namespace

QuaternaryWord enc_B(const BitVector& msg, int n) {
  const int m = special_payload_symbols(n);
  if (static_cast<int>(msg.size()) != 2 * m)
    throw ParameterError("special encoder expects " + std::to_string(2 * m) + " bits, got " + std::to_string(msg.size()));
  const auto y = phi_inverse(msg);
  const auto prefix = balanced_with_flag(differential(y));
  const auto z = enc_H(differential_inverse(prefix), n - 1);

  // Re-balance the redundancy part the same way: its differential symbols
  // plus a trailing flag, flipped together when too heavy.
  const auto dz = differential(z);
  const auto head = dz.slice(0, static_cast<std::size_t>(m + 1));
  const auto suffix = balanced_with_flag(dz.slice(static_cast<std::size_t>(m + 1), dz.size() - static_cast<std::size_t>(m + 1)));
  return differential_inverse(concat(head, suffix));
}

namespace {

// Inverts the suffix transform: given the n - m - 1 symbols following the
// protected prefix, returns the checksum symbol and syndrome digits of the
// inner systematic codeword. The first suffix symbol sits 2 (plain) or 3
// (flipped) steps after the last prefix symbol, so the suffix alone fixes it.
std::optional<QuaternaryWord> inner_tail(const QuaternaryWord& suffix) {
  const auto d = differential(suffix);
  const int flag = d[d.size() - 1];
  if (flag != 1 && flag != 4) return std::nullopt;
  const int lead = flag == 1 ? 2 : 3;
  // Differential of prefix-last -> suffix, with the first step re-anchored.
  std::vector<Symbol> steps(d.begin(), d.end() - 1);
  steps[0] = static_cast<Symbol>(lead);
  DifferentialWord rel(std::move(steps));
  if (flag == 4) rel = flip_norm(rel);
  // Anchor = last symbol of the protected prefix; the guard sits 2 above it.
  const int anchor = smod4(suffix[0] - lead);
  std::vector<Symbol> out;
  int prev = anchor;
  for (int step : rel) {
    prev = smod4(prev + step);
    out.push_back(static_cast<Symbol>(prev));
  }
  // out = guard, guard, checksum, digits...
  if (out.size() < 3 || out[0] != smod4(anchor + 2) || out[1] != out[0]) return std::nullopt;
  return QuaternaryWord(std::vector<Symbol>(out.begin() + 2, out.end()));
}

std::optional<QuaternaryWord> repair_prefix(const QuaternaryWord& damaged, const QuaternaryWord& suffix, int n) {
  const auto tail = inner_tail(suffix);
  if (!tail) return std::nullopt;
  const int b = (*tail)[0];
  const long long a = read_syndrome_digits(tail->slice(1, tail->size() - 1));
  if (a >= n - 1) return std::nullopt;
  const int m = special_payload_symbols(n);
  try {
    return decode_indel(damaged, VtParams{m + 1, static_cast<int>(a), b, n - 1});
  } catch (const DecodeFailure&) {
    return std::nullopt;
  } catch (const MalformedInput&) {
    return std::nullopt;
  }
}

}  // namespace

BitVector dec_B(const QuaternaryWord& y, int n) {
  const int m = special_payload_symbols(n);
  const auto p = static_cast<std::size_t>(m + 1);
  const auto q = static_cast<std::size_t>(n - m - 1);
  const auto len = static_cast<int>(y.size());
  if (len < n - 1 || len > n + 1)
    throw MalformedInput("received length " + std::to_string(len) + " is not within one indel of " + std::to_string(n));

  // Candidate protected prefixes: either the indel missed the first m + 1
  // symbols, or it hit them and the suffix is intact at the end of y.
  std::vector<QuaternaryWord> candidates;
  candidates.push_back(y.slice(0, p));
  if (len == n + 1) {
    if (auto fixed = repair_prefix(y.slice(0, p + 1), y.slice(p + 1, q), n)) candidates.push_back(*fixed);
  } else if (len == n - 1) {
    if (auto fixed = repair_prefix(y.slice(0, p - 1), y.slice(p - 1, q), n)) candidates.push_back(*fixed);
  }

  // Accept the candidate whose re-encoding lies within one indel of y.
  for (const auto& prefix : candidates) {
    const auto msg = prefix_message(prefix);
    if (!msg) continue;
    const auto c = enc_B(*msg, n);
    if (c.slice(0, p) == prefix && within_one_indel(c, y)) return *msg;
  }
  throw DecodeFailure("no special-encoder codeword within one indel of the received word");
}

DirectPlan make_direct_plan(int n, long long T, int a, int b) {
  check_budget_range(n, T);
  DirectPlan plan;
  plan.n = n;
  plan.T = T;
  plan.a = a;
  plan.b = b;
  auto counts = std::make_shared<const SliceCounter>(n);
  vt_params(n, a, b);
  plan.code_size = counts->count_any_last(n, T, a, b);
  if (plan.code_size < 1) throw Infeasible("VT class (a=" + std::to_string(a) + ", b=" + std::to_string(b) + ") is empty");
  plan.bits = static_cast<int>(floor_log2(plan.code_size));
  plan.counts = std::move(counts);
  return plan;
}

DirectPlan make_direct_plan(int n, long long T) {
  check_budget_range(n, T);
  const auto choice = best_vt_params(n, T);
  return make_direct_plan(n, T, choice.a, choice.b);
}

QuaternaryWord enc_C(const BitVector& msg, const DirectPlan& plan) {
  if (static_cast<int>(msg.size()) != plan.bits)
    throw ParameterError("direct encoder expects " + std::to_string(plan.bits) + " bits, got " + std::to_string(msg.size()));
  const Rank j = msg.to_integer() + 1;
  if (j > plan.code_size) throw ParameterError("message index exceeds the code size");
  return unrank_slice(j, SliceKey{plan.n, plan.T, plan.a, plan.b, kAnyLast}, *plan.counts);
}

BitVector dec_C(const QuaternaryWord& y, const DirectPlan& plan) {
  const auto x = decode_indel(y, vt_params(plan.n, plan.a, plan.b));
  Rank j;
  try {
    j = rank_slice(x, SliceKey{plan.n, plan.T, plan.a, plan.b, kAnyLast}, *plan.counts);
  } catch (const MembershipError& e) {
    throw DecodeFailure(std::string("decoded word exceeds the synthesis budget: ") + e.what());
  }
  if (j > (Count(1) << plan.bits)) throw DecodeFailure("decoded rank exceeds the message range");
  return to_bits(j, plan.bits);
}

}  // namespace dnasynth
