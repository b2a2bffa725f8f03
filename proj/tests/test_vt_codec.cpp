#include <doctest.h>

#include <map>
#include <random>

#include "dnasynth/vt_codec.hpp"
#include "oracles.hpp"

using namespace dnasynth;
using W = QuaternaryWord;

namespace {

W random_word(std::mt19937_64& rng, int n) {
  std::vector<Symbol> s(static_cast<std::size_t>(n));
  for (auto& v : s) v = static_cast<Symbol>(rng() % 4 + 1);
  return W(std::move(s));
}

}  // namespace

TEST_CASE("VT parameters are validated") {
  CHECK_THROWS_AS(vt_params(5, 5, 1), ParameterError);
  CHECK_THROWS_AS(vt_params(5, 0, 0), ParameterError);
  CHECK_THROWS_AS(vt_params(0, 0, 1), ParameterError);
  CHECK(in_vt_code(W::parse("23144"), vt_params(5, 3, 2)));
}

TEST_CASE("deletion from 23144 is repaired") {
  CHECK(decode_indel(W::parse("2144"), vt_params(5, 3, 2)).str() == "23144");
  CHECK(decode_indel(W::parse("23144"), vt_params(5, 3, 2)).str() == "23144");
  CHECK_THROWS_AS(decode_indel(W::parse("23"), vt_params(5, 3, 2)), MalformedInput);
  CHECK_THROWS_AS(decode_indel(W::parse("23141"), vt_params(5, 3, 2)), DecodeFailure);
}

TEST_CASE("VT_6(a, b) balls are disjoint and every ball point decodes") {
  const int n = 6;
  std::map<std::pair<int, int>, std::vector<W>> classes;
  for (const auto& x : oracle::all_words(n)) classes[{oracle::vt_residue(x, n), oracle::sum_class(x)}].push_back(x);
  for (const auto& [ab, code] : classes) {
    const auto params = vt_params(n, ab.first, ab.second);
    std::map<W, std::size_t> owner;
    for (std::size_t i = 0; i < code.size(); ++i) {
      REQUIRE(in_vt_code(code[i], params));
      for (const auto& y : indel_ball(code[i])) {
        auto [it, fresh] = owner.emplace(y, i);
        REQUIRE(fresh);
        REQUIRE(decode_indel(y, params) == code[i]);
        const auto cands = oracle::vt_candidates(y, n, ab.first, ab.second, n);
        REQUIRE(cands.size() == 1);
      }
    }
  }
}

TEST_CASE("syndrome digits") {
  CHECK(syndrome_digits(9, 2).str() == "32");
  CHECK(syndrome_digits(0, 2).str() == "11");
  CHECK(syndrome_digits(15, 2).str() == "44");
  CHECK(read_syndrome_digits(W::parse("32")) == 9);
  CHECK_THROWS_AS(syndrome_digits(16, 2), ParameterError);
}

TEST_CASE("systematic layout") {
  const auto l = systematic_layout(12);
  CHECK(l.m == 7);
  CHECK(l.digits == 2);
  CHECK(systematic_layout(127).m == 120);
  CHECK_THROWS_AS(systematic_layout(4), ParameterError);
  // Redundancy 2(n - m) = log2 n + 6 bits when n is a power of four.
  for (int n : {16, 64, 256}) CHECK(2 * (n - systematic_layout(n).m) == ceil_log2(n) + 6);
}

TEST_CASE("systematic codeword of 1111111 at n = 12") {
  const auto x = W::parse("1111111");
  // Guards smod4(1 + 2) = 3, checksum smod4(7) = 3, syndrome 21 mod 12 = 9.
  CHECK(oracle::vt_residue(x, 1 << 30) == 21);
  CHECK(enc_H(x, 12).str() == "111111133332");
  CHECK_THROWS_AS(enc_H(W::parse("111"), 12), ParameterError);
}

TEST_CASE("systematic codec: data part kept, every single indel repaired") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_word(rng, systematic_layout(20).m);
    REQUIRE(enc_H(x, 20).slice(0, x.size()) == x);
  }
  for (int n : {8, 12, 20, 33}) {
    const int m = systematic_layout(n).m;
    for (int i = 0; i < 500; ++i) {
      const auto x = random_word(rng, m);
      const auto c = enc_H(x, n);
      REQUIRE(c.size() == static_cast<std::size_t>(n));
      REQUIRE(synthesis_time(c) <= 4 * n);
      for (const auto& y : indel_ball(c)) REQUIRE(dec_H(y, n) == x);
    }
  }
}

TEST_CASE("deletions in the redundancy suffix leave the data intact") {
  std::mt19937_64 rng(11);
  const int n = 12, m = 7;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_word(rng, m);
    const auto c = enc_H(x, n);
    for (int p = m; p < n; ++p) {
      std::vector<Symbol> s(c.begin(), c.end());
      s.erase(s.begin() + p);
      REQUIRE(dec_H(W(s), n) == x);
    }
  }
}

TEST_CASE("systematic decoder rejects impossible lengths") {
  CHECK_THROWS_AS(dec_H(W::parse("1111"), 12), MalformedInput);
}
