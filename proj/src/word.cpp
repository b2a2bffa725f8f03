#include "dnasynth/word.hpp"

#include <algorithm>

namespace dnasynth {

int ceil_log4(long long n) {
  int w = 1;
  long long cap = 4;
  while (cap < n) {
    cap *= 4;
    ++w;
  }
  return w;
}

int ceil_log2(long long n) {
  int w = 0;
  long long cap = 1;
  while (cap < n) {
    cap *= 2;
    ++w;
  }
  return w;
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw MalformedInput("bit value out of range: " + std::to_string(b));
}

BitVector BitVector::parse(std::string_view bits) {
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw MalformedInput("not a bit: '" + std::string(1, ch) + "'");
    out.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitVector(std::move(out));
}

BitVector BitVector::from_integer(const mpz_class& value, std::size_t width) {
  if (value < 0 || (value != 0 && mpz_sizeinbase(value.get_mpz_t(), 2) > width))
    throw RangeError("integer does not fit in " + std::to_string(width) + " bits");
  std::vector<std::uint8_t> out(width, 0);
  for (std::size_t i = 0; i < width; ++i)
    out[width - 1 - i] = static_cast<std::uint8_t>(mpz_tstbit(value.get_mpz_t(), i));
  return BitVector(std::move(out));
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const {
  return BitVector(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(first),
                                             bits_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

void BitVector::append(const BitVector& other) { bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end()); }

mpz_class BitVector::to_integer() const {
  mpz_class v = 0;
  for (auto b : bits_) {
    v <<= 1;
    if (b) v += 1;
  }
  return v;
}

std::string BitVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

DifferentialWord differential(const QuaternaryWord& x) {
  std::vector<Symbol> d(x.size());
  int prev = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d[i] = static_cast<Symbol>(smod4(x[i] - prev));
    prev = x[i];
  }
  return DifferentialWord(std::move(d));
}

QuaternaryWord differential_inverse(const DifferentialWord& d) {
  std::vector<Symbol> x(d.size());
  int prev = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    prev = smod4(prev + d[i]);
    x[i] = static_cast<Symbol>(prev);
  }
  return QuaternaryWord(std::move(x));
}

long long synthesis_time(const QuaternaryWord& x) { return differential(x).l1_norm(); }

BitVector phi(const QuaternaryWord& x) {
  std::vector<std::uint8_t> out;
  out.reserve(2 * x.size());
  for (int s : x) {
    out.push_back(static_cast<std::uint8_t>((s - 1) >> 1));
    out.push_back(static_cast<std::uint8_t>((s - 1) & 1));
  }
  return BitVector(std::move(out));
}

QuaternaryWord phi_inverse(const BitVector& b) {
  if (b.size() % 2 != 0) throw MalformedInput("phi_inverse needs an even number of bits, got " + std::to_string(b.size()));
  std::vector<Symbol> out(b.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Symbol>(1 + 2 * b[2 * i] + b[2 * i + 1]);
  return QuaternaryWord(std::move(out));
}

BitVector auxiliary(const QuaternaryWord& x) {
  if (x.empty()) throw MalformedInput("auxiliary sequence of the empty word is undefined");
  std::vector<std::uint8_t> out(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i + 1] >= x[i] ? 1 : 0;
  return BitVector(std::move(out));
}

long long vt_syndrome(const BitVector& b) {
  long long acc = 0;
  for (std::size_t i = 0; i < b.size(); ++i) acc += static_cast<long long>(i + 1) * b[i];
  return acc;
}

long long auxiliary_syndrome(const QuaternaryWord& x) {
  long long acc = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] >= x[i]) acc += static_cast<long long>(i + 1);
  return acc;
}

std::set<QuaternaryWord> indel_ball(const QuaternaryWord& x) {
  std::set<QuaternaryWord> ball;
  ball.insert(x);
  const auto src = x.symbols();
  std::vector<Symbol> buf;
  for (std::size_t p = 0; p < src.size(); ++p) {
    buf.assign(src.begin(), src.end());
    buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(p));
    ball.insert(QuaternaryWord(buf));
  }
  for (std::size_t p = 0; p <= src.size(); ++p) {
    for (Symbol s = 1; s <= 4; ++s) {
      buf.assign(src.begin(), src.end());
      buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(p), s);
      ball.insert(QuaternaryWord(buf));
    }
  }
  return ball;
}

bool within_one_indel(const QuaternaryWord& x, const QuaternaryWord& y) {
  if (x.size() == y.size()) return x == y;
  const QuaternaryWord& longer = x.size() > y.size() ? x : y;
  const QuaternaryWord& shorter = x.size() > y.size() ? y : x;
  if (longer.size() != shorter.size() + 1) return false;
  // Skip the common prefix; the remainder must match after dropping one symbol of the longer word.
  std::size_t i = 0;
  while (i < shorter.size() && shorter[i] == longer[i]) ++i;
  return std::equal(shorter.begin() + static_cast<std::ptrdiff_t>(i), shorter.end(),
                    longer.begin() + static_cast<std::ptrdiff_t>(i + 1));
}

std::string to_dna(const QuaternaryWord& x) {
  static constexpr char kLetters[] = {'A', 'C', 'G', 'T'};
  std::string s;
  s.reserve(x.size());
  for (int v : x) s.push_back(kLetters[v - 1]);
  return s;
}

QuaternaryWord from_dna(std::string_view dna) {
  std::vector<Symbol> out;
  out.reserve(dna.size());
  for (char ch : dna) {
    switch (ch) {
      case 'A': out.push_back(1); break;
      case 'C': out.push_back(2); break;
      case 'G': out.push_back(3); break;
      case 'T': out.push_back(4); break;
      default: throw MalformedInput("not a DNA letter: '" + std::string(1, ch) + "'");
    }
  }
  return QuaternaryWord(std::move(out));
}

}  // namespace dnasynth
