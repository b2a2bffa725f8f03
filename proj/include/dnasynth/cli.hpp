#pragma once

#include <iosfwd>
#include <string>

#include "dnasynth/word.hpp"

namespace dnasynth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< verification or decode failure
inline constexpr int kExitUsage = 2;    ///< parameter or validation error

/// Runs one `dnasynth` invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Payload files are raw bytes, MSB-first within each byte. The exact bit
/// length lives in a sidecar file `<path>.meta` holding the line "bits=<L>";
/// without one every bit of the file counts.
BitVector read_payload(const std::string& path);
void write_payload(const std::string& path, const BitVector& bits);
std::string sidecar_path(const std::string& payload_path);

/// A DNA file holds one newline-terminated line over {A,C,G,T}.
QuaternaryWord read_dna(const std::string& path);
void write_dna(const std::string& path, const QuaternaryWord& word);

}  // namespace dnasynth::cli
