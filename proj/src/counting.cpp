#include "dnasynth/counting.hpp"

#include <algorithm>
#include <cmath>

#include "dnasynth/errors.hpp"
#include "dnasynth/word.hpp"

namespace dnasynth {

SynthesisCounter::SynthesisCounter(int max_length, long long max_budget)
    : max_length_(max_length), max_budget_(max_budget), zero_(0) {
  if (max_length < 0) throw ParameterError("negative word length");
  width_ = std::max(0LL, std::min(max_budget, 4LL * max_length)) + 1;
  table_.assign(static_cast<std::size_t>((max_length + 1) * width_), Count(0));
  for (long long t = 0; t < width_; ++t) table_[static_cast<std::size_t>(t)] = 1;
  for (int len = 1; len <= max_length; ++len) {
    Count* row = &table_[static_cast<std::size_t>(len * width_)];
    const Count* prev = &table_[static_cast<std::size_t>((len - 1) * width_)];
    for (long long t = len; t < width_; ++t)
      for (int k = 1; k <= 4 && t - k >= 0; ++k) row[t] += prev[t - k];
  }
}

const Count& SynthesisCounter::operator()(int length, long long budget) const {
  if (length < 0 || length > max_length_) throw ParameterError("length outside counter range");
  if (budget < length) return zero_;
  budget = std::min(budget, 4LL * length);
  if (budget >= width_) throw ParameterError("budget outside counter range");
  return table_[static_cast<std::size_t>(length * width_ + budget)];
}

Count count_A(int n, long long T) {
  if (n < 1) throw ParameterError("count_A needs n >= 1");
  if (T < n) return 0;
  return SynthesisCounter(n, std::min(T, 4LL * n))(n, T);
}

std::vector<Count> generating_function_coefficients(int n, long long T_max) {
  if (T_max < 0) return {};
  const auto size = static_cast<std::size_t>(T_max + 1);
  std::vector<Count> poly(size, Count(0));
  poly[0] = 1;
  std::vector<Count> next(size);
  for (int i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), Count(0));
    for (std::size_t e = 0; e < size; ++e) {
      if (poly[e] == 0) continue;
      for (std::size_t k = 1; k <= 4 && e + k < size; ++k) next[e + k] += poly[e];
    }
    poly.swap(next);
  }
  // Multiplying by 1/(1 - z) turns coefficients into prefix sums.
  for (std::size_t e = 1; e < size; ++e) poly[e] += poly[e - 1];
  return poly;
}

bool gf_check(int n, long long T_max) {
  if (n < 1) throw ParameterError("gf_check needs n >= 1");
  const auto coeffs = generating_function_coefficients(n, T_max);
  SynthesisCounter counter(n, std::max(T_max, 0LL));
  for (long long t = 0; t <= T_max; ++t)
    if (coeffs[static_cast<std::size_t>(t)] != counter(n, t)) return false;
  return true;
}

namespace {

std::uint64_t pack_slice(int length, long long budget, int a, int b, int last) {
  return (static_cast<std::uint64_t>(length) << 44) | (static_cast<std::uint64_t>(budget) << 24) |
         (static_cast<std::uint64_t>(a) << 4) | (static_cast<std::uint64_t>(b - 1) << 2) |
         static_cast<std::uint64_t>(last - 1);
}

int mod_floor(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

SliceCounter::SliceCounter(int modulus) : modulus_(modulus), zero_(0), one_(1) {
  if (modulus < 1 || modulus >= (1 << 20)) throw ParameterError("VT modulus out of range");
}

Count SliceCounter::count(const SliceKey& key) const {
  if (key.length < 1 || key.length >= (1 << 19)) throw ParameterError("slice length out of range");
  if (key.a < 0 || key.a >= modulus_) throw ParameterError("slice residue a outside [0, n)");
  if (key.b < 1 || key.b > 4 || key.last < 1 || key.last > 4)
    throw ParameterError("slice residue b and last symbol must be in 1..4");
  std::lock_guard lock(mutex_);
  return count_locked(key.length, key.budget, key.a, key.b, key.last);
}

Count SliceCounter::count_any_last(int length, long long budget, int a, int b) const {
  Count total = 0;
  for (int last = 1; last <= 4; ++last) total += count(SliceKey{length, budget, a, b, last});
  return total;
}

std::size_t SliceCounter::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

const Count& SliceCounter::count_locked(int length, long long budget, int a, int b, int last) const {
  if (budget < length) return zero_;
  budget = std::min(budget, 4LL * length);
  if (length == 1) return (a == 0 && b == last && last <= budget) ? one_ : zero_;

  const auto key = pack_slice(length, budget, a, b, last);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Count total = 0;
  const int prev_b = smod4(b - last);
  for (int prev = 1; prev <= 4; ++prev) {
    const int step = smod4(last - prev);
    const int prev_a = last >= prev ? mod_floor(static_cast<long long>(a) - (length - 1), modulus_) : a;
    total += count_locked(length - 1, budget - step, prev_a, prev_b, prev);
  }
  return memo_.emplace(key, std::move(total)).first->second;
}

Count count_slice(const SliceKey& key, int n) { return SliceCounter(n).count(key); }

Count count_vt(int n, long long T, int a, int b) {
  if (n < 1) throw ParameterError("count_vt needs n >= 1");
  if (a < 0 || a >= n) throw ParameterError("a must lie in [0, n)");
  if (b < 1 || b > 4) throw ParameterError("b must lie in 1..4");
  return SliceCounter(n).count_any_last(n, T, a, b);
}

std::vector<Count> vt_class_counts(int n, long long T) {
  if (n < 1) throw ParameterError("vt_class_counts needs n >= 1");
  std::vector<Count> totals(static_cast<std::size_t>(4 * n), Count(0));
  if (T < n) return totals;
  // Extra cycles spent beyond one per symbol never shrink, so states with
  // more than T - n extra cycles can be dropped early.
  const long long slack = std::min(T, 4LL * n) - n;
  const auto states = static_cast<std::size_t>((slack + 1) * n * 16);
  auto index = [n](long long extra, int a, int b, int last) {
    return static_cast<std::size_t>(((extra * n + a) * 4 + (b - 1)) * 4 + (last - 1));
  };
  std::vector<Count> cur(states, Count(0)), next(states, Count(0));
  for (int s = 1; s <= 4; ++s)
    if (s - 1 <= slack) cur[index(s - 1, 0, s, s)] = 1;
  for (int len = 2; len <= n; ++len) {
    for (auto& c : next) c = 0;
    for (long long extra = 0; extra <= slack; ++extra)
      for (int a = 0; a < n; ++a)
        for (int b = 1; b <= 4; ++b)
          for (int last = 1; last <= 4; ++last) {
            const Count& c = cur[index(extra, a, b, last)];
            if (c == 0) continue;
            for (int s = 1; s <= 4; ++s) {
              const long long extra2 = extra + smod4(s - last) - 1;
              if (extra2 > slack) continue;
              const int a2 = s >= last ? (a + len - 1) % n : a;
              next[index(extra2, a2, smod4(b + s), s)] += c;
            }
          }
    cur.swap(next);
  }
  for (long long extra = 0; extra <= slack; ++extra)
    for (int a = 0; a < n; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int last = 1; last <= 4; ++last) totals[static_cast<std::size_t>(a * 4 + b - 1)] += cur[index(extra, a, b, last)];
  return totals;
}

VtChoice best_vt_params(int n, long long T) {
  if (n < 1 || T <= n || T > 4LL * n) throw ParameterError("best_vt_params needs n < T <= 4n");
  const auto totals = vt_class_counts(n, T);
  VtChoice best{0, 1, totals[0]};
  for (int a = 0; a < n; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Count& c = totals[static_cast<std::size_t>(a * 4 + b - 1)];
      if (c > best.size) best = VtChoice{a, b, c};
    }
  return best;
}

long long floor_log2(const Count& v) {
  if (v < 1) throw ParameterError("floor_log2 of a value below 1");
  return static_cast<long long>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 1;
}

double log2_of(const Count& v) {
  if (v < 1) throw ParameterError("log2 of a value below 1");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

}  // namespace dnasynth
