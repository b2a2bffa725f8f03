#pragma once

// Rank/unrank between 1-based integers and words, following the block order
// induced by the counting recursions: words are grouped by their final
// differential step (for W(n, T)) or by their previous symbol (for VT
// slices), smaller groups first, recursively.

#include "dnasynth/counting.hpp"
#include "dnasynth/word.hpp"

namespace dnasynth {

using Rank = Count;

/// The j-th word of W(n, T), 1 <= j <= A(n, T). `counts` must cover (n, T).
QuaternaryWord unrank_W(const Rank& j, int n, long long T, const SynthesisCounter& counts);
QuaternaryWord unrank_W(const Rank& j, int n, long long T);

/// Position of x in W(|x|, T); throws MembershipError when S(x) > T.
Rank rank_W(const QuaternaryWord& x, int n, long long T, const SynthesisCounter& counts);
Rank rank_W(const QuaternaryWord& x, int n, long long T);

/// The j-th word of the slice W_n(key). With key.last == kAnyLast the target
/// is the union over last symbols, ordered by last symbol; that form is only
/// accepted at the top level (key.length == n).
QuaternaryWord unrank_slice(const Rank& j, const SliceKey& key, const SliceCounter& counts);

/// Inverse of unrank_slice; throws MembershipError for words outside the slice.
Rank rank_slice(const QuaternaryWord& x, const SliceKey& key, const SliceCounter& counts);

/// Whether x belongs to the slice (kAnyLast matches any last symbol).
bool in_slice(const QuaternaryWord& x, const SliceKey& key, int n);

}  // namespace dnasynth
