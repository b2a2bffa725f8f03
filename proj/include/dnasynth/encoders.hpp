#pragma once

// Binary-to-DNA encoders whose codewords correct one indel and respect a
// synthesis-time budget:
//   block   (enc_A): per-block unranking into W(k, T_blk), then enc_H;
//   special (enc_B): differential-norm flipping for T >= 2.5 n, then enc_H;
//   direct  (enc_C): unranking straight into one VT_n(a, b, T) class.

#include <memory>

#include "dnasynth/counting.hpp"
#include "dnasynth/ranking.hpp"
#include "dnasynth/vt_codec.hpp"
#include "dnasynth/word.hpp"

namespace dnasynth {

struct BlockPlan {
  int n = 0;
  long long T = 0;
  int blocks = 0;          ///< number of blocks l
  int block_length = 0;    ///< k = (n - ceil(log4 n) - 3) / l
  long long slack = 0;     ///< 4 (ceil(log4 n) + l + 3)
  long long block_budget = 0;  ///< floor((T - slack) / l)
  int bits_per_block = 0;  ///< floor(log2 A(k, block_budget))
  std::shared_ptr<const SynthesisCounter> counts;  ///< covers (k, block_budget)

  int message_bits() const noexcept { return blocks * bits_per_block; }
};

/// The plan for an explicit block count; throws Infeasible when the per-block
/// budget is below the block length and ParameterError when l does not divide
/// the data length.
BlockPlan make_block_plan(int n, long long T, int blocks);
BlockPlan make_block_plan(int n, long long T, int blocks, const SynthesisCounter& counts);

/// The feasible plan maximizing l * m; ties go to the smaller l.
BlockPlan plan_block_params(int n, long long T);
/// Same, reading A(k, T') from a counter covering (n, T).
BlockPlan plan_block_params(int n, long long T, const SynthesisCounter& counts);

QuaternaryWord enc_A(const BitVector& msg, const BlockPlan& plan);
BitVector dec_A(const QuaternaryWord& y, const BlockPlan& plan);

/// Quaternary payload length m of the special encoder; it carries 2m bits.
/// The inner systematic code has length n - 1 and protects m + 1 symbols.
int special_payload_symbols(int n);

/// Requires |msg| = 2 * special_payload_symbols(n). Synthesis time <= 2.5 n.
QuaternaryWord enc_B(const BitVector& msg, int n);
BitVector dec_B(const QuaternaryWord& y, int n);

/// Replaces every symbol v of a differential word by 5 - v; an involution.
DifferentialWord flip_norm(const DifferentialWord& d);

struct DirectPlan {
  int n = 0;
  long long T = 0;
  int a = 0;
  int b = 1;
  int bits = 0;            ///< m = floor(log2 |VT_n(a, b, T)|)
  Count code_size;         ///< |VT_n(a, b, T)|
  std::shared_ptr<const SliceCounter> counts;
};

/// Pins (a, b) to the largest VT_n(a, b, T) class.
DirectPlan make_direct_plan(int n, long long T);
DirectPlan make_direct_plan(int n, long long T, int a, int b);

QuaternaryWord enc_C(const BitVector& msg, const DirectPlan& plan);
BitVector dec_C(const QuaternaryWord& y, const DirectPlan& plan);

}  // namespace dnasynth
