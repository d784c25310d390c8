#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bockstein {

bool is_prime(std::uint64_t n) noexcept;

/// A prime number; primality is checked on construction.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) noexcept = default;
  friend auto operator<=>(const Prime&, const Prime&) noexcept = default;

 private:
  std::uint64_t value_;
};

/// Smallest prime that is not in `avoid`.
Prime first_prime_not_in(const std::vector<Prime>& avoid);

/// All primes <= bound, ascending.
std::vector<Prime> primes_up_to(std::uint64_t bound);

/// A finite or cofinite set of primes.
///
/// Finite sets list their members; cofinite sets list the excluded primes.
/// The representation is canonical: equal sets compare equal.
class PrimeSet {
 public:
  enum class Mode : std::uint8_t { Finite, Cofinite };

  PrimeSet() = default;  // the empty set

  static PrimeSet empty() { return {}; }
  static PrimeSet all() { return PrimeSet(Mode::Cofinite, {}); }
  static PrimeSet finite(std::vector<Prime> members) { return PrimeSet(Mode::Finite, std::move(members)); }
  static PrimeSet cofinite(std::vector<Prime> excluded) { return PrimeSet(Mode::Cofinite, std::move(excluded)); }
  static PrimeSet of(std::initializer_list<std::uint64_t> members);
  static PrimeSet all_except(std::initializer_list<std::uint64_t> excluded);

  Mode mode() const noexcept { return mode_; }
  bool is_finite() const noexcept { return mode_ == Mode::Finite; }
  /// Members (Finite) or excluded primes (Cofinite), ascending.
  const std::vector<Prime>& primes() const noexcept { return primes_; }

  bool contains(Prime p) const;
  bool is_empty() const noexcept { return mode_ == Mode::Finite && primes_.empty(); }
  bool is_all() const noexcept { return mode_ == Mode::Cofinite && primes_.empty(); }
  bool is_subset_of(const PrimeSet& other) const;

  PrimeSet complement() const;
  PrimeSet union_with(const PrimeSet& other) const;
  PrimeSet intersect(const PrimeSet& other) const;
  PrimeSet minus(const PrimeSet& other) const;

  /// "{2,3}", "all" or "all-{2,3}".
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  PrimeSet(Mode mode, std::vector<Prime> primes);

  Mode mode_ = Mode::Finite;
  std::vector<Prime> primes_;
};

enum class SetOp : std::uint8_t { Union, Intersect, Diff, Complement };

/// Set algebra on finite/cofinite prime sets. For Complement, `b` is ignored.
PrimeSet set_combine(SetOp op, const PrimeSet& a, const PrimeSet& b = PrimeSet());

}  // namespace bockstein
