#pragma once

// Exact counting of words with bounded synthesis time, and of their
// slices by VT syndrome, symbol sum and last symbol.

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace dnasynth {

using Count = mpz_class;

/// A(n, T) = |W(n, T)|, the number of length-n words with synthesis time at
/// most T, for every n <= max_length and every T. Budgets beyond 4n are
/// equivalent to 4n and are clamped on lookup.
class SynthesisCounter {
 public:
  SynthesisCounter(int max_length, long long max_budget);

  /// A(length, budget); 0 for budget < length, 4^length for budget >= 4 length.
  /// Length 0 counts the empty word (1 for budget >= 0).
  const Count& operator()(int length, long long budget) const;

  int max_length() const noexcept { return max_length_; }
  long long max_budget() const noexcept { return max_budget_; }

 private:
  int max_length_;
  long long max_budget_;
  long long width_;
  std::vector<Count> table_;
  Count zero_;
};

Count count_A(int n, long long T);

/// Coefficients of z^0..z^T_max in (z + z^2 + z^3 + z^4)^n / (1 - z),
/// expanded by plain polynomial multiplication.
std::vector<Count> generating_function_coefficients(int n, long long T_max);

/// True iff every coefficient above equals count_A(n, T).
bool gf_check(int n, long long T_max);

/// Identifies one slice W_n(length, budget, a, b, last): words of the given
/// length ending in `last`, with synthesis time <= budget, auxiliary VT
/// syndrome = a (mod n) and symbol sum = b (shifted mod 4).
struct SliceKey {
  int length = 1;
  long long budget = 0;
  int a = 0;
  int b = 1;
  int last = 1;  ///< 1..4, or kAnyLast in ranking queries
};

inline constexpr int kAnyLast = 0;

/// Memoized slice counts for one fixed VT modulus n. Thread-safe.
class SliceCounter {
 public:
  explicit SliceCounter(int modulus);

  int modulus() const noexcept { return modulus_; }

  /// |W_n(key)|. key.last must be 1..4.
  Count count(const SliceKey& key) const;

  /// Sum over last symbols 1..4.
  Count count_any_last(int length, long long budget, int a, int b) const;

  std::size_t memo_size() const;

 private:
  const Count& count_locked(int length, long long budget, int a, int b, int last) const;

  int modulus_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, Count> memo_;
  Count zero_;
  Count one_;
};

Count count_slice(const SliceKey& key, int n);

/// |VT_n(a, b, T)|.
Count count_vt(int n, long long T, int a, int b);

/// |VT_n(a, b, T)| for every class, by a forward layer DP.
/// Entry [a * 4 + (b - 1)].
std::vector<Count> vt_class_counts(int n, long long T);

struct VtChoice {
  int a = 0;
  int b = 1;
  Count size;
};

/// Largest VT_n(a, b, T); ties go to the smallest a, then the smallest b.
VtChoice best_vt_params(int n, long long T);

/// floor(log2 v) for v >= 1.
long long floor_log2(const Count& v);

/// log2 v as a double, accurate for arbitrarily large v >= 1.
double log2_of(const Count& v);

}  // namespace dnasynth
