#include "dnasynth/rates.hpp"

#include <charconv>
#include <numeric>

#include "dnasynth/encoders.hpp"
#include "dnasynth/errors.hpp"

namespace dnasynth {

namespace {

long long parse_digits(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParameterError("not a number: '" + std::string(s) + "'");
  return v;
}

void check_gamma(const Rational& g) {
  if (g.num <= g.den || g.num > 4 * g.den) throw ParameterError("gamma must satisfy 1 < gamma <= 4, got " + g.str());
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_digits(text.substr(0, slash));
    r.den = parse_digits(text.substr(slash + 1));
    if (r.den == 0) throw ParameterError("zero denominator");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 12) throw ParameterError("too many decimals: '" + std::string(text) + "'");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_digits(whole)) * r.den + (frac.empty() ? 0 : parse_digits(frac));
  } else {
    r.num = parse_digits(text);
  }
  const long long g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

long long Rational::floor_times(long long n) const { return num * n / den; }

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

long long direct_rate_bits(const Count& A, int n) {
  // Largest e with 2^e * 4n <= A.
  const Count quotient = A / (4 * n);
  if (quotient < 1) return 0;
  return floor_log2(quotient);
}

std::vector<RateRow> rate_table(int n, const std::vector<Rational>& gammas, std::optional<int> blocks) {
  if (n < 8) throw ParameterError("rate tables need n >= 8");
  for (const auto& g : gammas) check_gamma(g);
  const SynthesisCounter counts(n, 4LL * n);

  std::vector<RateRow> rows;
  for (const auto& g : gammas) {
    RateRow row;
    row.gamma = g;
    row.T = g.floor_times(n);
    row.rate_A = RateValue{0, row.T};
    if (row.T > n) {
      try {
        const auto plan = blocks ? make_block_plan(n, row.T, *blocks, counts) : plan_block_params(n, row.T, counts);
        row.rate_A.bits = plan.message_bits();
        row.blocks_A = plan.blocks;
      } catch (const Infeasible&) {
      }
    }
    if (2 * row.T >= 5LL * n) row.rate_B = RateValue{2LL * special_payload_symbols(n), row.T};
    row.rate_C = RateValue{direct_rate_bits(counts(n, row.T), n), row.T};
    rows.push_back(row);
  }
  return rows;
}

std::vector<CapacityPoint> capacity_curve(int n, const std::vector<Rational>& gammas) {
  if (n < 1) throw ParameterError("capacity curve needs n >= 1");
  for (const auto& g : gammas) check_gamma(g);
  const SynthesisCounter counts(n, 4LL * n);
  std::vector<CapacityPoint> out;
  for (const auto& g : gammas) {
    const long long T = g.floor_times(n);
    const Count& a = counts(n, T);
    out.push_back(CapacityPoint{g, T, a < 1 ? 0.0 : log2_of(a) / static_cast<double>(T)});
  }
  return out;
}

std::vector<Rational> table_gammas() {
  std::vector<Rational> out;
  for (const char* g : {"1.1", "1.5", "1.9", "2.3", "2.7", "3.1", "3.5", "3.9", "4.0"}) out.push_back(Rational::parse(g));
  return out;
}

std::vector<Rational> capacity_gammas() {
  std::vector<Rational> out;
  for (long long k = 21; k <= 80; ++k) out.push_back(Rational::parse(std::to_string(k) + "/20"));
  return out;
}

}  // namespace dnasynth
