#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockstein/cdtype.hpp"

namespace bockstein {

/// A finite model: exceptions only at `primes`, finite values in [1, bound]
/// (or [-bound, bound] for the extended class).
struct Universe {
  std::vector<Prime> primes;
  std::int64_t value_bound = 1;
  bool allow_extended = false;
};

/// Every valid Bockstein function of the universe, nonzero, values in
/// [1, bound]. The default region may carry any valid profile.
std::vector<BocksteinFn> enumerate_phis(const Universe& u);
std::vector<CdType> enumerate_types(const Universe& u);
/// Every triple (S, D; d) with exceptions in the universe and d in [-bound, bound].
std::vector<CdType> enumerate_extended(const Universe& u);

struct LawFailure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct LawResult {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<LawFailure> failures;  // the first few

  bool pass() const { return failed == 0; }
};

struct LawReport {
  std::uint64_t universe_size = 0;
  std::vector<LawResult> results;

  bool pass() const;
};

struct LawOptions {
  /// Laws to run; empty or {"all"} runs every law.
  std::vector<std::string> laws;
  /// Pair and triple laws are exhaustive up to this many tuples.
  std::uint64_t exhaustive_limit = 100000;
  /// Sampled tuple count above the limit.
  std::uint64_t samples = 20000;
  std::uint64_t seed = 20240229;
};

const std::vector<std::string>& law_names();

/// Throws PreconditionError for an unknown law name.
LawReport check_laws(const Universe& u, const LawOptions& options = {});

}  // namespace bockstein
