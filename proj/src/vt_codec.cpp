#include "dnasynth/vt_codec.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dnasynth/errors.hpp"

namespace dnasynth {

VtParams vt_params(int n, int a, int b) {
  if (n < 1) throw ParameterError("VT code length must be positive");
  if (a < 0 || a >= n) throw ParameterError("VT residue a must lie in [0, n)");
  if (b < 1 || b > 4) throw ParameterError("VT residue b must lie in 1..4");
  return VtParams{n, a, b, n};
}

namespace {

bool matches(std::span<const Symbol> w, const VtParams& p) {
  long long syn = 0;
  long long sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    if (i + 1 < w.size() && w[i + 1] >= w[i]) syn += static_cast<long long>(i + 1);
  }
  return syn % p.modulus == p.a && smod4(sum) == p.b;
}

}  // namespace

bool in_vt_code(const QuaternaryWord& x, const VtParams& params) {
  return static_cast<int>(x.size()) == params.n && matches(x.symbols(), params);
}

QuaternaryWord decode_indel(const QuaternaryWord& y, const VtParams& params) {
  if (params.modulus < 1 || params.a < 0 || params.a >= params.modulus || params.b < 1 || params.b > 4)
    throw DecodeFailure("VT parameters out of range");
  const auto len = static_cast<int>(y.size());
  if (len == params.n) {
    if (!matches(y.symbols(), params)) throw DecodeFailure("received word of full length is not a codeword");
    return y;
  }
  if (len != params.n - 1 && len != params.n + 1)
    throw MalformedInput("received length " + std::to_string(len) + " is not within one indel of " + std::to_string(params.n));

  const auto src = y.symbols();
  std::optional<std::vector<Symbol>> found;
  std::vector<Symbol> buf;
  auto consider = [&](const std::vector<Symbol>& cand) {
    if (!matches(cand, params)) return;
    if (found && *found != cand) throw DecodeFailure("more than one codeword within one indel");
    found = cand;
  };
  if (len == params.n - 1) {
    for (std::size_t p = 0; p <= src.size(); ++p)
      for (Symbol s = 1; s <= 4; ++s) {
        // Inserting s next to an equal symbol gives the same word; one copy suffices.
        if (p > 0 && src[p - 1] == s) continue;
        buf.assign(src.begin(), src.end());
        buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(p), s);
        consider(buf);
      }
  } else {
    for (std::size_t p = 0; p < src.size(); ++p) {
      if (p > 0 && src[p - 1] == src[p]) continue;
      buf.assign(src.begin(), src.end());
      buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(p));
      consider(buf);
    }
  }
  if (!found) throw DecodeFailure("no codeword within one indel of the received word");
  return QuaternaryWord(std::move(*found));
}

SystematicLayout systematic_layout(int n) {
  const int digits = ceil_log4(n);
  const int m = n - digits - 3;
  if (m < 1) throw ParameterError("systematic code length " + std::to_string(n) + " leaves no room for data");
  return SystematicLayout{n, m, digits};
}

QuaternaryWord syndrome_digits(long long value, int width) {
  std::vector<Symbol> out(static_cast<std::size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<Symbol>(value % 4 + 1);
    value /= 4;
  }
  if (value != 0) throw ParameterError("syndrome does not fit in the digit field");
  return QuaternaryWord(std::move(out));
}

long long read_syndrome_digits(const QuaternaryWord& digits) {
  long long v = 0;
  for (int d : digits) v = v * 4 + (d - 1);
  return v;
}

QuaternaryWord enc_H(const QuaternaryWord& x, int n) {
  const auto layout = systematic_layout(n);
  if (static_cast<int>(x.size()) != layout.m)
    throw ParameterError("systematic encoder expects " + std::to_string(layout.m) + " data symbols, got " +
                         std::to_string(x.size()));
  std::vector<Symbol> c(x.begin(), x.end());
  const auto guard = static_cast<Symbol>(smod4(x[x.size() - 1] + 2));
  c.push_back(guard);
  c.push_back(guard);
  c.push_back(static_cast<Symbol>(smod4(x.l1_norm())));
  const auto digits = syndrome_digits(auxiliary_syndrome(x) % n, layout.digits);
  c.insert(c.end(), digits.begin(), digits.end());
  return QuaternaryWord(std::move(c));
}

namespace {

// Decodes a data part damaged by one indel, using the checksum symbol and the
// syndrome digits stored after it.
QuaternaryWord repair_data(const QuaternaryWord& damaged, const QuaternaryWord& checksum_and_digits,
                           const SystematicLayout& layout) {
  const int b = checksum_and_digits[0];
  const long long a = read_syndrome_digits(checksum_and_digits.slice(1, checksum_and_digits.size() - 1));
  if (a >= layout.n) throw DecodeFailure("stored syndrome exceeds the code length");
  return decode_indel(damaged, VtParams{layout.m, static_cast<int>(a), b, layout.n});
}

}  // namespace

QuaternaryWord dec_H(const QuaternaryWord& y, int n) {
  const auto layout = systematic_layout(n);
  const auto m = static_cast<std::size_t>(layout.m);
  const auto tail = static_cast<std::size_t>(layout.digits + 1);
  const auto len = static_cast<int>(y.size());

  if (len == n) return y.slice(0, m);
  if (len == n + 1) {
    // The guard pair is intact at m, m+1 unless the insertion hit the data
    // part or landed in front of the second guard.
    if (y[m] == y[m + 1]) return y.slice(0, m);
    return repair_data(y.slice(0, m + 1), y.slice(m + 3, tail), layout);
  }
  if (len == n - 1) {
    // A deletion inside the data part shifts the guard pair to m-1, m.
    if (y[m - 1] == y[m]) return repair_data(y.slice(0, m - 1), y.slice(m + 1, tail), layout);
    return y.slice(0, m);
  }
  throw MalformedInput("received length " + std::to_string(len) + " is not within one indel of " + std::to_string(n));
}

}  // namespace dnasynth
