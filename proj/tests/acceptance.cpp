// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criteria run. Exit status is nonzero when any selected one fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dnasynth/channel.hpp"
#include "dnasynth/cli.hpp"
#include "dnasynth/encoders.hpp"
#include "dnasynth/rates.hpp"
#include "oracles.hpp"

using namespace dnasynth;
using W = QuaternaryWord;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome example_word() {
  Outcome o;
  const auto x = W::parse("23144");
  o.check(synthesis_time(x) == 12, "S(23144) = 12");
  o.check(differential(x).str() == "21234", "D(23144) = 21234");
  o.check(oracle::synthesis_time(x) == 12, "greedy scan of 23144 ends at 12");
  return o;
}

Outcome enumeration_order() {
  Outcome o;
  const std::vector<std::string> listed = {"123", "234", "341", "412", "134", "241", "312", "141", "212", "112",
                                           "124", "231", "342", "131", "242", "142", "121", "232", "132", "122"};
  o.check(count_A(2, 5) == 10, "A(2,5) = 10");
  o.check(count_A(3, 6) == 20, "A(3,6) = 20");
  for (int j = 1; j <= 20; ++j) o.check(unrank_W(j, 3, 6).str() == listed[j - 1], "word " + std::to_string(j) + " of W(3,6)");
  return o;
}

Outcome generating_function() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) o.check(gf_check(n, 4 * n + 2), "gf_check n=" + std::to_string(n));
  return o;
}

Outcome recursion_vs_enumeration() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> hist(static_cast<std::size_t>(4 * n + 3), 0);
    for (const auto& x : oracle::all_words(n)) ++hist[static_cast<std::size_t>(oracle::synthesis_time(x))];
    long acc = 0;
    for (long long T = 0; T <= 4 * n + 2; ++T) {
      acc += hist[static_cast<std::size_t>(T)];
      o.check(count_A(n, T) == acc, "A(" + std::to_string(n) + "," + std::to_string(T) + ")");
    }
  }
  return o;
}

Outcome ball_disjointness() {
  Outcome o;
  const int n = 6;
  std::map<std::pair<int, int>, std::vector<W>> classes;
  for (const auto& x : oracle::all_words(n)) classes[{oracle::vt_residue(x, n), oracle::sum_class(x)}].push_back(x);
  std::size_t pairs_classes = 0;
  for (const auto& [ab, code] : classes) {
    std::set<W> covered;
    for (const auto& x : code) {
      std::set<W> ball{x};
      for (const auto& y : oracle::neighbours(x)) ball.insert(y);
      for (const auto& y : ball)
        if (!covered.insert(y).second) {
          o.check(false, "overlapping balls in VT_6(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")");
          return o;
        }
    }
    ++pairs_classes;
  }
  o.check(pairs_classes == 24, "all 24 classes present");
  return o;
}

Outcome pigeonhole() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    Count quarter = 1;
    for (int i = 0; i < n - 1; ++i) quarter *= 4;
    for (long long T = n + 1; T <= 4 * n; ++T) {
      const auto classes = vt_class_counts(n, T);
      Count best = 0;
      for (const auto& c : classes)
        if (c > best) best = c;
      const std::string at = "(n=" + std::to_string(n) + ", T=" + std::to_string(T) + ")";
      o.check(best * 4 * n >= count_A(n, T), "max class >= A/4n " + at);
      if (2 * T >= 5 * n) o.check(best * 2 * n >= quarter, "max class >= 4^(n-1)/2n " + at);
    }
  }
  return o;
}

Outcome systematic_codec() {
  Outcome o;
  const int n = 12;
  const auto r = verify_encoder([n](const BitVector& m) { return enc_H(phi_inverse(m), n); },
                                [n](const W& y) { return phi(dec_H(y, n)); }, 4 * n, MessageSource::exhaustive(14));
  o.check(r.messages_tested == 16384, "all 4^7 payloads tested");
  o.check(r.passed(), std::to_string(r.failure_count) + " decoding failures");
  o.note(std::to_string(r.balls_tested) + " received words");
  return o;
}

Outcome encoder_contracts() {
  Outcome o;
  {
    const auto plan = plan_block_params(32, 64);
    const auto r = verify_encoder([&](const BitVector& m) { return enc_A(m, plan); },
                                  [&](const W& y) { return dec_A(y, plan); }, 64, MessageSource::random(plan.message_bits(), 100, 1));
    o.check(r.passed() && r.max_synthesis_time <= 64, "block encoder n=32 T=64");
    o.note("A: n=32 T=64 l=" + std::to_string(plan.blocks) + " bits=" + std::to_string(plan.message_bits()) +
           " max_S=" + std::to_string(r.max_synthesis_time) + " failures=" + std::to_string(r.failure_count));
  }
  {
    const int n = 20;
    const auto r = verify_encoder([](const BitVector& m) { return enc_B(m, n); }, [](const W& y) { return dec_B(y, n); },
                                  50, MessageSource::random(2 * special_payload_symbols(n), 500, 2));
    o.check(r.passed() && r.max_synthesis_time <= 50, "special encoder n=20");
    o.note("B: n=20 max_S=" + std::to_string(r.max_synthesis_time) + " failures=" + std::to_string(r.failure_count));
  }
  {
    const auto plan = make_direct_plan(8, 20);
    const auto r = verify_encoder([&](const BitVector& m) { return enc_C(m, plan); },
                                  [&](const W& y) { return dec_C(y, plan); }, 20, MessageSource::exhaustive(plan.bits));
    o.check(r.passed() && r.max_synthesis_time <= 20, "direct encoder n=8 T=20");
    o.note("C: n=8 T=20 messages=" + std::to_string(r.messages_tested) + " failures=" + std::to_string(r.failure_count));
  }
  return o;
}

Outcome ranking_bijectivity() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const SynthesisCounter counts(n, 4 * n);
    for (long long T = n; T <= 4 * n; ++T) {
      std::set<W> seen;
      const long size = counts(n, T).get_si();
      for (long j = 1; j <= size; ++j) {
        const auto x = unrank_W(j, n, T, counts);
        if (rank_W(x, n, T, counts) != j || !seen.insert(x).second || oracle::synthesis_time(x) > T) {
          o.check(false, "W(" + std::to_string(n) + "," + std::to_string(T) + ") at rank " + std::to_string(j));
          return o;
        }
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const SliceCounter counts(n);
    std::map<std::tuple<int, int, int, int>, std::vector<std::pair<long long, W>>> classes;
    for (int l = 1; l <= n; ++l)
      for (const auto& x : oracle::all_words(l)) {
        const auto c = oracle::classify(x, n);
        classes[{l, c.a, c.b, c.last}].push_back({c.S, x});
      }
    for (int l = 1; l <= n; ++l)
      for (long long T = l; T <= 4 * l; ++T)
        for (int a = 0; a < n; ++a)
          for (int b = 1; b <= 4; ++b) {
            std::set<W> any_expected;
            for (int last = 1; last <= 4; ++last) {
              std::set<W> expected;
              for (const auto& [s, x] : classes[{l, a, b, last}])
                if (s <= T) expected.insert(x);
              any_expected.insert(expected.begin(), expected.end());
              const SliceKey key{l, T, a, b, last};
              std::set<W> got;
              const long size = counts.count(key).get_si();
              for (long j = 1; j <= size; ++j) {
                const auto x = unrank_slice(j, key, counts);
                if (rank_slice(x, key, counts) != j) o.check(false, "slice round trip");
                got.insert(x);
              }
              if (got != expected) {
                o.check(false, "slice contents n=" + std::to_string(n) + " l=" + std::to_string(l));
                return o;
              }
            }
            if (l != n) continue;
            const SliceKey key{n, T, a, b, kAnyLast};
            std::set<W> got;
            const long size = counts.count_any_last(n, T, a, b).get_si();
            for (long j = 1; j <= size; ++j) {
              const auto x = unrank_slice(j, key, counts);
              if (rank_slice(x, key, counts) != j) o.check(false, "wildcard round trip");
              got.insert(x);
            }
            if (got != any_expected) {
              o.check(false, "wildcard contents n=" + std::to_string(n));
              return o;
            }
          }
  }
  return o;
}

Outcome table_regression() {
  Outcome o;
  struct Row {
    const char* gamma;
    double A, B, C;  // B < 0: blank
  };
  const Row table[] = {{"1.1", 0.000, -1, 0.364}, {"1.5", 0.315, -1, 0.841}, {"1.9", 0.646, -1, 0.890},
                       {"2.3", 0.698, -1, 0.821}, {"2.7", 0.665, 0.691, 0.714}, {"3.1", 0.594, 0.602, 0.622},
                       {"3.5", 0.526, 0.533, 0.551}, {"3.9", 0.472, 0.479, 0.495}, {"4.0", 0.461, 0.467, 0.482}};
  std::vector<Rational> gammas;
  for (const auto& r : table) gammas.push_back(Rational::parse(r.gamma));
  // The published block column matches six blocks; the best block count is shown alongside.
  const auto rows = rate_table(127, gammas, 6);
  const auto best_rows = rate_table(127, gammas);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& got = rows[i];
    const auto& want = table[i];
    const std::string g = want.gamma;
    std::string line = "gamma=" + g + " T=" + std::to_string(got.T) + " A=" + fmt("%.3f", got.rate_A.value()) + " (best " +
                       fmt("%.3f", best_rows[i].rate_A.value()) + ") B=" +
                       (got.rate_B ? fmt("%.3f", got.rate_B->value()) : std::string("-")) + " C=" + fmt("%.3f", got.rate_C.value()) +
                       " | published A=" + fmt("%.3f", want.A) + " B=" + (want.B < 0 ? std::string("-") : fmt("%.3f", want.B)) +
                       " C=" + fmt("%.3f", want.C);
    o.note(line);
    const bool c_ok = std::abs(got.rate_C.value() - want.C) <= 0.02;
    o.check(c_ok, "rate_C at gamma=" + g);
    if (!c_ok) {
      const long long up = got.T + 1;
      o.note("    rounding T up instead: T=" + std::to_string(up) + " C=" +
             fmt("%.3f", static_cast<double>(direct_rate_bits(count_A(127, up), 127)) / static_cast<double>(up)));
    }
    o.check(std::abs(got.rate_A.value() - want.A) <= 0.05, "rate_A at gamma=" + g);
    if (want.B >= 0) {
      o.check(got.rate_B.has_value() && std::abs(got.rate_B->value() - want.B) <= 0.02, "rate_B at gamma=" + g);
    } else {
      o.check(!got.rate_B.has_value(), "rate_B blank at gamma=" + g);
    }
  }
  return o;
}

Outcome capacity_anchors() {
  Outcome o;
  std::ostringstream out, err;
  const char* argv[] = {"dnasynth", "capacity", "--n", "127", "--gamma", "4,2", "--format", "csv"};
  o.check(cli::run(8, argv, out, err) == 0, "capacity command exit status");
  std::istringstream lines(out.str());
  std::string header, at4, at2;
  std::getline(lines, header);
  std::getline(lines, at4);
  std::getline(lines, at2);
  o.note("capacity rows: " + at4 + " " + at2);
  o.check(at4 == "4.0,0.500000", "exactly 0.5 at gamma=4");
  const auto pts = capacity_curve(127, {Rational::parse("4")});
  o.check(!pts.empty() && pts[0].rate == 0.5, "A(127,508) = 4^127");
  const double v = at2.empty() ? 0.0 : std::stod(at2.substr(at2.find(',') + 1));
  o.check(v >= 0.90 && v <= 0.96, "rate at gamma=2 in [0.90, 0.96], got " + fmt("%.4f", v));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"synthesis time and differential of 23144", example_word},
      {"enumeration of W(3,6) and A(2,5), A(3,6)", enumeration_order},
      {"generating function identity, n <= 6", generating_function},
      {"counting recursion vs enumeration, n <= 6", recursion_vs_enumeration},
      {"disjoint indel balls in every VT_6(a,b)", ball_disjointness},
      {"largest VT class meets the pigeonhole bounds, n <= 8", pigeonhole},
      {"systematic codec at n = 12, every payload, every indel", systematic_codec},
      {"encoder contracts for the block, special and direct encoders", encoder_contracts},
      {"rank/unrank bijections for W(n,T) and VT slices", ranking_bijectivity},
      {"information rates at n = 127", table_regression},
      {"capacity curve anchors at n = 127", capacity_anchors},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  int failed = 0;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::printf("criterion %d: unknown\n", k);
      ++failed;
      continue;
    }
    const auto& [name, fn] = criteria[static_cast<std::size_t>(k - 1)];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d: %s  %s\n", k, o.pass ? "PASS" : "FAIL", name.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
