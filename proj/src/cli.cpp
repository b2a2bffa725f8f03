#include "dnasynth/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnasynth/channel.hpp"
#include "dnasynth/encoders.hpp"
#include "dnasynth/errors.hpp"
#include "dnasynth/rates.hpp"
#include "dnasynth/vt_codec.hpp"

namespace dnasynth::cli {

std::string sidecar_path(const std::string& payload_path) { return payload_path + ".meta"; }

BitVector read_payload(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open payload file " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t bits = bytes.size() * 8;
  if (std::ifstream meta(sidecar_path(path)); meta) {
    std::string line;
    std::getline(meta, line);
    if (line.rfind("bits=", 0) != 0) throw MalformedInput("sidecar header must read bits=<L>");
    try {
      bits = std::stoull(line.substr(5));
    } catch (const std::exception&) {
      throw MalformedInput("bad bit count in sidecar header: " + line);
    }
    if (bits > bytes.size() * 8) throw MalformedInput("sidecar bit count exceeds the payload size");
  }
  std::vector<std::uint8_t> out(bits);
  for (std::size_t i = 0; i < bits; ++i)
    out[i] = static_cast<std::uint8_t>((static_cast<unsigned char>(bytes[i / 8]) >> (7 - i % 8)) & 1U);
  return BitVector(std::move(out));
}

void write_payload(const std::string& path, const BitVector& bits) {
  std::string bytes((bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] = static_cast<char>(static_cast<unsigned char>(bytes[i / 8]) | (1U << (7 - i % 8)));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write payload file " + path);
  out << bytes;
  std::ofstream meta(sidecar_path(path));
  meta << "bits=" << bits.size() << '\n';
}

QuaternaryWord read_dna(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open DNA file " + path);
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return from_dna(line);
}

void write_dna(const std::string& path, const QuaternaryWord& word) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write DNA file " + path);
  out << to_dna(word) << '\n';
}

namespace {

struct JobConfig {
  std::string family;
  int n = 0;
  std::optional<long long> T;
  std::vector<std::string> gamma;
  std::optional<int> ell;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<std::size_t> bits;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100;
  bool exhaustive = false;
  std::string in;
  std::string out;
  std::string format = "csv";
};

// A configured encoder/decoder pair over fixed-length bit payloads.
struct Codec {
  int payload_bits = 0;
  long long T = 0;
  long long bound = 0;  ///< synthesis time guaranteed for every codeword
  Encoder encode;
  Decoder decode;
};

long long resolve_budget(const JobConfig& cfg) {
  if (cfg.T && !cfg.gamma.empty()) throw ParameterError("--T and --gamma are mutually exclusive");
  if (cfg.gamma.size() > 1) throw ParameterError("this command takes a single --gamma");
  if (cfg.T) return *cfg.T;
  if (!cfg.gamma.empty()) return Rational::parse(cfg.gamma.front()).floor_times(cfg.n);
  if (cfg.family == "B") return (5LL * cfg.n + 1) / 2;
  if (cfg.family == "H") return 4LL * cfg.n;
  throw ParameterError("family " + cfg.family + " needs --T or --gamma");
}

Codec make_codec(const JobConfig& cfg) {
  if (cfg.n < 2) throw ParameterError("--n must be at least 2");
  const long long T = resolve_budget(cfg);
  const int n = cfg.n;
  Codec codec;
  codec.T = T;
  if (cfg.family == "H") {
    const auto layout = systematic_layout(n);
    codec.payload_bits = 2 * layout.m;
    codec.bound = 4LL * n;
    codec.encode = [n](const BitVector& msg) { return enc_H(phi_inverse(msg), n); };
    codec.decode = [n](const QuaternaryWord& y) { return phi(dec_H(y, n)); };
  } else if (cfg.family == "A") {
    if (T <= n || T > 4LL * n) throw ParameterError("family A requires n < T <= 4n");
    auto plan = std::make_shared<const BlockPlan>(cfg.ell ? make_block_plan(n, T, *cfg.ell) : plan_block_params(n, T));
    codec.payload_bits = plan->message_bits();
    codec.bound = T;
    codec.encode = [plan](const BitVector& msg) { return enc_A(msg, *plan); };
    codec.decode = [plan](const QuaternaryWord& y) { return dec_A(y, *plan); };
  } else if (cfg.family == "B") {
    if (2 * T < 5LL * n) throw ParameterError("family B requires T >= 2.5n (n=" + std::to_string(n) + ", T=" + std::to_string(T) + ")");
    codec.payload_bits = 2 * special_payload_symbols(n);
    codec.bound = (5LL * n) / 2;
    codec.encode = [n](const BitVector& msg) { return enc_B(msg, n); };
    codec.decode = [n](const QuaternaryWord& y) { return dec_B(y, n); };
  } else if (cfg.family == "C") {
    if (T <= n || T > 4LL * n) throw ParameterError("family C requires n < T <= 4n");
    if (cfg.a.has_value() != cfg.b.has_value()) throw ParameterError("--a and --b must be given together");
    auto plan = std::make_shared<const DirectPlan>(cfg.a ? make_direct_plan(n, T, *cfg.a, *cfg.b) : make_direct_plan(n, T));
    codec.payload_bits = plan->bits;
    codec.bound = T;
    codec.encode = [plan](const BitVector& msg) { return enc_C(msg, *plan); };
    codec.decode = [plan](const QuaternaryWord& y) { return dec_C(y, *plan); };
  } else {
    throw ParameterError("unknown family " + cfg.family);
  }
  return codec;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Decimal form when the denominator divides a power of ten, else num/den.
std::string gamma_text(const Rational& g) {
  long long scale = 1;
  for (int digits = 0; digits <= 12; ++digits, scale *= 10) {
    if (scale % g.den != 0) continue;
    const long long scaled = g.num * (scale / g.den);
    if (digits == 0) return std::to_string(scaled) + ".0";
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return std::to_string(scaled / scale) + "." + frac;
  }
  return g.str();
}

std::vector<Rational> parse_gammas(const std::vector<std::string>& texts, std::vector<Rational> fallback) {
  if (texts.empty()) return fallback;
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

nlohmann::json rational_json(long long num, long long den) {
  return {{"numerator", std::to_string(num)}, {"denominator", std::to_string(den)}};
}

void emit(const JobConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw MalformedInput("cannot write " + cfg.out);
  file << text;
}

int cmd_encode(const JobConfig& cfg, std::ostream& err) {
  const auto codec = make_codec(cfg);
  if (cfg.family == "H") throw ParameterError("family H is only available to verify");
  auto payload = read_payload(cfg.in);
  if (static_cast<int>(payload.size()) > codec.payload_bits) {
    err << "payload of " << payload.size() << " bits exceeds the codeword payload of " << codec.payload_bits << " bits\n";
    return kExitUsage;
  }
  payload.append(BitVector::zeros(static_cast<std::size_t>(codec.payload_bits) - payload.size()));
  const auto c = codec.encode(payload);
  write_dna(cfg.out, c);
  err << "payload_bits=" << codec.payload_bits << " n=" << cfg.n << " T=" << codec.T << " S=" << synthesis_time(c)
      << " rate=" << fixed3(static_cast<double>(codec.payload_bits) / static_cast<double>(codec.T)) << '\n';
  return kExitOk;
}

int cmd_decode(const JobConfig& cfg, std::ostream& err) {
  const auto codec = make_codec(cfg);
  if (cfg.family == "H") throw ParameterError("family H is only available to verify");
  const auto y = read_dna(cfg.in);
  BitVector bits;
  try {
    bits = codec.decode(y);
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kExitFailure;
  }
  if (cfg.bits) {
    if (*cfg.bits > bits.size()) throw ParameterError("--bits exceeds the codeword payload");
    bits = bits.slice(0, *cfg.bits);
  }
  write_payload(cfg.out, bits);
  return kExitOk;
}

int cmd_rates(const JobConfig& cfg, std::ostream& out) {
  const int n = cfg.n == 0 ? 127 : cfg.n;
  const auto rows = rate_table(n, parse_gammas(cfg.gamma, table_gammas()), cfg.ell);
  std::ostringstream text;
  if (cfg.format == "json") {
    nlohmann::json doc = {{"n", n}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows) {
      nlohmann::json row = {{"gamma", gamma_text(r.gamma)},
                            {"gamma_exact", rational_json(r.gamma.num, r.gamma.den)},
                            {"T", r.T},
                            {"blocks_A", r.blocks_A},
                            {"rate_A", rational_json(r.rate_A.bits, r.rate_A.cycles)},
                            {"rate_A_value", r.rate_A.value()},
                            {"rate_C", rational_json(r.rate_C.bits, r.rate_C.cycles)},
                            {"rate_C_value", r.rate_C.value()}};
      if (r.rate_B) {
        row["rate_B"] = rational_json(r.rate_B->bits, r.rate_B->cycles);
        row["rate_B_value"] = r.rate_B->value();
      } else {
        row["rate_B"] = nullptr;
        row["rate_B_value"] = nullptr;
      }
      doc["rows"].push_back(std::move(row));
    }
    text << doc.dump(2) << '\n';
  } else {
    text << "gamma,T,rate_A,rate_B,rate_C\n";
    for (const auto& r : rows)
      text << gamma_text(r.gamma) << ',' << r.T << ',' << fixed3(r.rate_A.value()) << ','
           << (r.rate_B ? fixed3(r.rate_B->value()) : "") << ',' << fixed3(r.rate_C.value()) << '\n';
  }
  emit(cfg, text.str(), out);
  return kExitOk;
}

int cmd_capacity(const JobConfig& cfg, std::ostream& out) {
  const int n = cfg.n == 0 ? 127 : cfg.n;
  const auto points = capacity_curve(n, parse_gammas(cfg.gamma, capacity_gammas()));
  std::ostringstream text;
  if (cfg.format == "json") {
    nlohmann::json doc = {{"n", n}, {"points", nlohmann::json::array()}};
    for (const auto& p : points)
      doc["points"].push_back({{"gamma", gamma_text(p.gamma)}, {"T", p.T}, {"rate", p.rate}});
    text << doc.dump(2) << '\n';
  } else {
    text << "gamma,rate\n";
    for (const auto& p : points) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", p.rate);
      text << gamma_text(p.gamma) << ',' << buf << '\n';
    }
  }
  emit(cfg, text.str(), out);
  return kExitOk;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto codec = make_codec(cfg);
  const auto messages = cfg.exhaustive ? MessageSource::exhaustive(codec.payload_bits)
                                       : MessageSource::random(codec.payload_bits, cfg.budget, cfg.seed);
  const auto report = verify_encoder(codec.encode, codec.decode, codec.bound, messages);
  out << "family=" << cfg.family << " n=" << cfg.n << " T=" << codec.T << " payload_bits=" << codec.payload_bits
      << " messages=" << report.messages_tested << " received_words=" << report.balls_tested
      << " failures=" << report.failure_count << " max_S=" << report.max_synthesis_time << " bound=" << codec.bound << '\n';
  if (report.passed()) return kExitOk;
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    write_failure_records(file, report);
    err << "verification failed; report written to " << cfg.out << '\n';
  } else {
    write_failure_records(err, report);
  }
  return kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-indel correcting, synthesis-time constrained DNA codes"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_code_options = [&cfg](CLI::App* sub, bool allow_h) {
    sub->add_option("--family", cfg.family, "Encoder family")
        ->required()
        ->check(allow_h ? CLI::IsMember({"H", "A", "B", "C"}) : CLI::IsMember({"A", "B", "C"}));
    sub->add_option("--n", cfg.n, "Codeword length")->required();
    sub->add_option("--T", cfg.T, "Synthesis budget (cycles)");
    sub->add_option("--gamma", cfg.gamma, "Budget as a multiple of n; T = floor(gamma n)");
    sub->add_option("--ell", cfg.ell, "Block count (family A)");
    sub->add_option("--a", cfg.a, "VT syndrome residue (family C)");
    sub->add_option("--b", cfg.b, "Symbol-sum residue in 1..4 (family C)");
  };

  auto* encode = app.add_subcommand("encode", "Encode a payload file into one DNA strand");
  add_code_options(encode, false);
  encode->add_option("--in", cfg.in, "Payload file")->required();
  encode->add_option("--out", cfg.out, "DNA output file")->required();

  auto* decode = app.add_subcommand("decode", "Decode a DNA strand within one indel of a codeword");
  add_code_options(decode, false);
  decode->add_option("--in", cfg.in, "DNA file")->required();
  decode->add_option("--out", cfg.out, "Payload output file")->required();
  decode->add_option("--bits", cfg.bits, "Keep only the first L payload bits");

  auto* rates = app.add_subcommand("rates", "Information rates of the three encoders");
  rates->add_option("--n", cfg.n, "Codeword length (default 127)");
  rates->add_option("--gamma", cfg.gamma, "Budget multiples (default: 1.1 1.5 ... 4.0)")->delimiter(',');
  rates->add_option("--ell", cfg.ell, "Block count for the block encoder (default: best)");
  rates->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rates->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* capacity = app.add_subcommand("capacity", "log2 A(n, T) / T over a grid of T = floor(gamma n)");
  capacity->add_option("--n", cfg.n, "Codeword length (default 127)");
  capacity->add_option("--gamma", cfg.gamma, "Budget multiples (default 1.05..4.00 step 0.05)")->delimiter(',');
  capacity->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  capacity->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check every single-indel corruption of sampled codewords");
  add_code_options(verify, true);
  verify->add_option("--budget", cfg.budget, "Number of random messages");
  verify->add_flag("--exhaustive", cfg.exhaustive, "Test every message");
  verify->add_option("--seed", cfg.seed, "Message sampling seed");
  verify->add_option("--out", cfg.out, "Failure report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (encode->parsed()) return cmd_encode(cfg, err);
    if (decode->parsed()) return cmd_decode(cfg, err);
    if (rates->parsed()) return cmd_rates(cfg, out);
    if (capacity->parsed()) return cmd_capacity(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dnasynth::cli
