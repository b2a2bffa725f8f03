#pragma once

// Quaternary words over {1,2,3,4}, binary vectors, and the elementary
// transforms between them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dnasynth/errors.hpp"

namespace dnasynth {

using Symbol = std::uint8_t;

/// Shifted modulo: maps any integer into {1,2,3,4}.
constexpr int smod4(long long v) {
  long long r = (v - 1) % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r) + 1;
}

/// Number of base-4 digits needed to write every residue in [0, n): the
/// smallest w >= 1 with 4^w >= n.
int ceil_log4(long long n);

/// Smallest w >= 0 with 2^w >= n.
int ceil_log2(long long n);

namespace detail {

template <class Tag>
class BasicWord {
 public:
  BasicWord() = default;
  explicit BasicWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) { validate(); }
  BasicWord(std::initializer_list<int> symbols) {
    symbols_.reserve(symbols.size());
    for (int s : symbols) symbols_.push_back(static_cast<Symbol>(s < 0 || s > 255 ? 0 : s));
    validate();
  }

  /// Parses a digit string such as "23144".
  static BasicWord parse(std::string_view digits) {
    std::vector<Symbol> out;
    out.reserve(digits.size());
    for (char ch : digits) {
      if (ch < '1' || ch > '4') throw MalformedInput("quaternary symbol out of range: '" + std::string(1, ch) + "'");
      out.push_back(static_cast<Symbol>(ch - '0'));
    }
    return BasicWord(std::move(out));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  /// 0-based access.
  int operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// Symbols [first, first + count) as a new word.
  BasicWord slice(std::size_t first, std::size_t count) const {
    return BasicWord(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                         symbols_.begin() + static_cast<std::ptrdiff_t>(first + count)));
  }

  std::string str() const {
    std::string s;
    s.reserve(symbols_.size());
    for (Symbol v : symbols_) s.push_back(static_cast<char>('0' + v));
    return s;
  }

  long long l1_norm() const noexcept {
    long long acc = 0;
    for (Symbol v : symbols_) acc += v;
    return acc;
  }

  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;
  friend bool operator==(const BasicWord&, const BasicWord&) = default;

 private:
  void validate() const {
    for (Symbol v : symbols_)
      if (v < 1 || v > 4) throw MalformedInput("quaternary symbol out of range: " + std::to_string(v));
  }

  std::vector<Symbol> symbols_;
};

struct QuaternaryTag {};
struct DifferentialTag {};

}  // namespace detail

/// A word over {1,2,3,4}; codewords, strands and data blocks.
using QuaternaryWord = detail::BasicWord<detail::QuaternaryTag>;
/// Output of `differential`; its L1 norm is the synthesis time of the source word.
using DifferentialWord = detail::BasicWord<detail::DifferentialTag>;

/// Ordered binary message. Integer conversions are MSB-first.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::vector<std::uint8_t> bits);
  static BitVector parse(std::string_view bits);
  static BitVector zeros(std::size_t n) { return BitVector(std::vector<std::uint8_t>(n, 0)); }
  /// The width-bit MSB-first representation of value; value must be < 2^width.
  static BitVector from_integer(const mpz_class& value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  BitVector slice(std::size_t first, std::size_t count) const;
  void append(const BitVector& other);
  mpz_class to_integer() const;
  std::string str() const;

  friend auto operator<=>(const BitVector&, const BitVector&) = default;
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// D(x): first symbol kept, then successive shifted-mod-4 differences.
DifferentialWord differential(const QuaternaryWord& x);
QuaternaryWord differential_inverse(const DifferentialWord& d);

/// Smallest T such that x is a subsequence of 1234 1234 ... of length T.
long long synthesis_time(const QuaternaryWord& x);

/// 1 <-> 00, 2 <-> 01, 3 <-> 10, 4 <-> 11.
BitVector phi(const QuaternaryWord& x);
QuaternaryWord phi_inverse(const BitVector& b);

/// Ascent indicator: bit i is 1 iff x[i+1] >= x[i]. Requires a nonempty word.
BitVector auxiliary(const QuaternaryWord& x);

/// Sum of (i+1) * b[i]; unreduced.
long long vt_syndrome(const BitVector& b);

/// VT syndrome of the auxiliary sequence, computed without materializing it.
long long auxiliary_syndrome(const QuaternaryWord& x);

/// Every word reachable from x by at most one deletion or one insertion.
std::set<QuaternaryWord> indel_ball(const QuaternaryWord& x);

/// True iff y can be obtained from x by at most one insertion or deletion.
bool within_one_indel(const QuaternaryWord& x, const QuaternaryWord& y);

/// DNA letters at the I/O boundary: 1->A, 2->C, 3->G, 4->T.
std::string to_dna(const QuaternaryWord& x);
QuaternaryWord from_dna(std::string_view dna);

}  // namespace dnasynth
