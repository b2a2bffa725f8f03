#pragma once

// Information rates (message bits per synthesis cycle) of the three encoders
// and of the unconstrained set W(n, T).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnasynth/counting.hpp"

namespace dnasynth {

/// Exact nonnegative rational, used for gamma = T / n.
struct Rational {
  long long num = 0;
  long long den = 1;

  /// Parses "2.7", "4", "27/10".
  static Rational parse(std::string_view text);

  /// floor(num * n / den).
  long long floor_times(long long n) const;
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Rate num / den bits per cycle, kept exact.
struct RateValue {
  long long bits = 0;
  long long cycles = 1;

  double value() const { return static_cast<double>(bits) / static_cast<double>(cycles); }
};

struct RateRow {
  Rational gamma;
  long long T = 0;
  RateValue rate_A;               ///< 0 bits when no block plan is feasible
  int blocks_A = 0;               ///< block count used, 0 when infeasible
  std::optional<RateValue> rate_B;  ///< absent when T < 2.5 n
  RateValue rate_C;
};

/// One row per gamma with T = floor(gamma n). rate_A uses `blocks` when given,
/// otherwise the best feasible block count; rate_C is
/// floor(log2(A(n, T) / 4n)) / T.
std::vector<RateRow> rate_table(int n, const std::vector<Rational>& gammas, std::optional<int> blocks = std::nullopt);

/// Bits floor(log2(A(n, T) / (4n))), the pigeonhole guarantee for the best VT class.
long long direct_rate_bits(const Count& A, int n);

struct CapacityPoint {
  Rational gamma;
  long long T = 0;
  double rate = 0.0;  ///< log2 A(n, T) / T
};

std::vector<CapacityPoint> capacity_curve(int n, const std::vector<Rational>& gammas);

/// gamma = 1.1, 1.5, ..., 3.9, 4.0.
std::vector<Rational> table_gammas();

/// gamma = 1.05, 1.10, ..., 4.00.
std::vector<Rational> capacity_gammas();

}  // namespace dnasynth
