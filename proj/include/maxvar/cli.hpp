#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxvar/form.hpp"

namespace maxvar::cli {

/// Exit codes shared by the subcommands. Each command documents which of
/// them it can return.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotCertified = 2,
  kPreconditionViolated = 3,
  kSmoothnessNotCertified = 4,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a over "n=<n>;" followed by the canonical printed form, as 16 hex
/// digits. Keys the dimension cache together with the prime.
std::string form_hash(const HomogeneousForm& f);

struct CacheEntry {
  std::string form_hash;
  std::uint64_t prime = 0;
  int degree = 0;
  std::uint64_t dim = 0;

  bool operator==(const CacheEntry&) const = default;
};

/// One JSON object per line. A missing file reads as empty; a malformed line
/// throws FormatError.
std::vector<CacheEntry> read_cache(const std::string& path);
/// Appends under an exclusive advisory lock, so concurrent writers never
/// interleave lines.
void append_cache(const std::string& path, const std::vector<CacheEntry>& entries);

/// The JSON report with the fields that legitimately vary between identical
/// runs ("timings_ms" and "cache") removed, re-serialized. Used for
/// determinism checks.
std::string stable_json(const std::string& report);

}  // namespace maxvar::cli
