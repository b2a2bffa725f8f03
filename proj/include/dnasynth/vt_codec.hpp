#pragma once

// Quaternary Varshamov-Tenengolts codes: single-indel decoding for VT_n(a, b)
// and the systematic encoder/decoder pair built on top of it.

#include "dnasynth/word.hpp"

namespace dnasynth {

/// Membership parameters of a quaternary VT code: words of length `n` whose
/// auxiliary-sequence syndrome is `a` mod `modulus` and whose symbol sum is
/// `b` (shifted mod 4). For VT_n(a, b) the modulus is n itself; the
/// systematic codec protects its data part with the codeword length instead.
struct VtParams {
  int n = 1;
  int a = 0;
  int b = 1;
  int modulus = 1;
};

/// VT_n(a, b) parameters, validated.
VtParams vt_params(int n, int a, int b);

bool in_vt_code(const QuaternaryWord& x, const VtParams& params);

/// Recovers the unique codeword within one indel of y. Words reachable from
/// y by one edit are filtered by both syndromes.
QuaternaryWord decode_indel(const QuaternaryWord& y, const VtParams& params);

/// Positions of the systematic codeword (0-based): data [0, m), guard pair
/// m and m+1, checksum m+2, syndrome digits [m+3, n).
struct SystematicLayout {
  int n = 0;
  int m = 0;
  int digits = 0;
};

/// Requires n - ceil(log4 n) - 3 >= 1.
SystematicLayout systematic_layout(int n);

/// Appends guard pair, symbol-sum checksum and the base-4 syndrome of x to x.
QuaternaryWord enc_H(const QuaternaryWord& x, int n);

/// Recovers the data part from any word within one indel of an enc_H codeword.
QuaternaryWord dec_H(const QuaternaryWord& y, int n);

/// Fixed-width base-4 digits of value, most significant first, written with
/// the shifted alphabet (digit d as symbol d + 1).
QuaternaryWord syndrome_digits(long long value, int width);
long long read_syndrome_digits(const QuaternaryWord& digits);

}  // namespace dnasynth
