#include "dnasynth/ranking.hpp"

#include <algorithm>
#include <string>

#include "dnasynth/errors.hpp"

namespace dnasynth {

namespace {

void check_counter(const SynthesisCounter& counts, int n, long long T) {
  if (n > counts.max_length() || std::min(T, 4LL * n) > counts.max_budget())
    throw ParameterError("synthesis counter does not cover (n, T)");
}

int mod_floor(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_wildcard(const SliceKey& key, const SliceCounter& counts) {
  if (key.last == kAnyLast && key.length != counts.modulus())
    throw ParameterError("a wildcard last symbol is only allowed for full-length slices");
}

// State of one slice frame while walking the recursion downwards.
struct Frame {
  int length;
  long long budget;
  int a;
  int b;
  int last;

  // Parameters of the sub-slice whose words end in `prev` and extend to this frame.
  SliceKey child(int prev, int n) const {
    const int a_prev = last >= prev ? mod_floor(static_cast<long long>(a) - (length - 1), n) : a;
    return SliceKey{length - 1, budget - smod4(last - prev), a_prev, smod4(b - last), prev};
  }
};

}  // namespace

QuaternaryWord unrank_W(const Rank& j, int n, long long T, const SynthesisCounter& counts) {
  if (n < 1) throw ParameterError("unrank_W needs n >= 1");
  check_counter(counts, n, T);
  const Count& total = counts(n, T);
  if (j < 1 || j > total)
    throw RangeError("rank outside 1.." + total.get_str() + " for W(" + std::to_string(n) + "," + std::to_string(T) + ")");

  Rank rest = j;
  std::vector<Symbol> steps(static_cast<std::size_t>(n));
  long long budget = T;
  for (int len = n; len >= 2; --len) {
    int k = 1;
    for (;; ++k) {
      const Count& block = counts(len - 1, budget - k);
      if (rest <= block) break;
      rest -= block;
    }
    steps[static_cast<std::size_t>(len - 1)] = static_cast<Symbol>(k);
    budget -= k;
  }
  // At length one the remaining rank is the symbol itself.
  steps[0] = static_cast<Symbol>(rest.get_ui());
  return differential_inverse(DifferentialWord(std::move(steps)));
}

QuaternaryWord unrank_W(const Rank& j, int n, long long T) {
  return unrank_W(j, n, T, SynthesisCounter(n, std::max(0LL, std::min(T, 4LL * n))));
}

Rank rank_W(const QuaternaryWord& x, int n, long long T, const SynthesisCounter& counts) {
  if (static_cast<int>(x.size()) != n || n < 1) throw MembershipError("word length does not match n");
  check_counter(counts, n, T);
  const auto d = differential(x);
  if (d.l1_norm() > T) throw MembershipError("synthesis time " + std::to_string(d.l1_norm()) + " exceeds " + std::to_string(T));

  Rank j = 0;
  long long budget = T;
  for (int len = n; len >= 2; --len) {
    const int k = d[static_cast<std::size_t>(len - 1)];
    for (int i = 1; i < k; ++i) j += counts(len - 1, budget - i);
    budget -= k;
  }
  j += d[0];
  return j;
}

Rank rank_W(const QuaternaryWord& x, int n, long long T) {
  return rank_W(x, n, T, SynthesisCounter(n, std::max(0LL, std::min(T, 4LL * n))));
}

bool in_slice(const QuaternaryWord& x, const SliceKey& key, int n) {
  if (static_cast<int>(x.size()) != key.length || x.empty()) return false;
  if (key.last != kAnyLast && x[x.size() - 1] != key.last) return false;
  if (synthesis_time(x) > key.budget) return false;
  if (auxiliary_syndrome(x) % n != key.a) return false;
  return smod4(x.l1_norm()) == key.b;
}

QuaternaryWord unrank_slice(const Rank& j, const SliceKey& key, const SliceCounter& counts) {
  check_wildcard(key, counts);
  const int n = counts.modulus();
  SliceKey top = key;
  Rank rest = j;
  if (key.last == kAnyLast) {
    const Count total = counts.count_any_last(key.length, key.budget, key.a, key.b);
    if (total == 0 || j < 1 || j > total) throw RangeError("rank outside 1.." + total.get_str() + " for the wildcard slice");
    for (top.last = 1;; ++top.last) {
      const Count block = counts.count(top);
      if (rest <= block) break;
      rest -= block;
    }
  } else {
    const Count total = counts.count(key);
    if (total == 0 || j < 1 || j > total) throw RangeError("rank outside 1.." + total.get_str() + " for the slice");
  }

  std::vector<Symbol> word(static_cast<std::size_t>(top.length));
  Frame f{top.length, top.budget, top.a, top.b, top.last};
  while (f.length > 1) {
    word[static_cast<std::size_t>(f.length - 1)] = static_cast<Symbol>(f.last);
    SliceKey next{};
    for (int prev = 1;; ++prev) {
      next = f.child(prev, n);
      const Count block = counts.count(next);
      if (rest <= block) break;
      rest -= block;
    }
    f = Frame{next.length, next.budget, next.a, next.b, next.last};
  }
  word[0] = static_cast<Symbol>(f.last);
  return QuaternaryWord(std::move(word));
}

Rank rank_slice(const QuaternaryWord& x, const SliceKey& key, const SliceCounter& counts) {
  check_wildcard(key, counts);
  const int n = counts.modulus();
  if (!in_slice(x, key, n)) throw MembershipError("word " + x.str() + " is not in the requested slice");

  Rank j = 1;
  const int last = x[x.size() - 1];
  if (key.last == kAnyLast)
    for (int i = 1; i < last; ++i) j += counts.count(SliceKey{key.length, key.budget, key.a, key.b, i});

  Frame f{key.length, key.budget, key.a, key.b, last};
  while (f.length > 1) {
    const int prev = x[static_cast<std::size_t>(f.length - 2)];
    for (int i = 1; i < prev; ++i) j += counts.count(f.child(i, n));
    const SliceKey next = f.child(prev, n);
    f = Frame{next.length, next.budget, next.a, next.b, next.last};
  }
  return j;
}

}  // namespace dnasynth
