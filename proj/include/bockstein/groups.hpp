#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bockstein/prime_fn.hpp"

namespace bockstein {

/// Description of an abelian group in a small closed grammar.
struct GroupExpr {
  enum class Kind : std::uint8_t { Q, Z, Zpk, ZpInfinity, Zlocal, Zinv, DirectSum, SumOverPrimes };
  enum class Pattern : std::uint8_t { Zp, ZpInfinity };

  Kind kind = Kind::Z;
  std::uint64_t p = 0;  // Zpk, ZpInfinity, Zinv
  std::uint64_t k = 1;  // Zpk exponent
  PrimeSet primes;      // Zlocal: L; SumOverPrimes: P
  Pattern pattern = Pattern::Zp;
  std::vector<GroupExpr> terms;  // DirectSum

  static GroupExpr q() { return of(Kind::Q); }
  static GroupExpr z() { return of(Kind::Z); }
  static GroupExpr zp(Prime p) { return zpk(p, 1); }
  static GroupExpr zpk(Prime p, std::uint64_t k);
  static GroupExpr zp_inf(Prime p);
  /// Z localized at L: fractions whose denominators avoid L.
  static GroupExpr zlocal(PrimeSet l);
  /// Z with p inverted.
  static GroupExpr zinv(Prime p);
  static GroupExpr direct_sum(std::vector<GroupExpr> terms);
  static GroupExpr sum_over(PrimeSet ps, Pattern pattern);

  static GroupExpr of(Kind kind) {
    GroupExpr g;
    g.kind = kind;
    return g;
  }

  /// Surface syntax, e.g. "Z/2^3 + Zpinf(3)".
  std::string to_string() const;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// p-Tor G is zero, nonzero and not p-divisible, or nonzero and p-divisible.
/// Ordered so that the status of a direct sum is the maximum.
enum class TorStatus : std::uint8_t { Zero, Div, NonDiv };

struct GroupProfile {
  /// Primes dividing G/Tor G; absent for torsion groups.
  std::optional<PrimeSet> tf_div;
  PrimeFn<TorStatus> tor = PrimeFn<TorStatus>::constant(TorStatus::Zero);

  bool is_trivial() const;
  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};

enum class TorsionMember : std::uint8_t { None, Zp, ZpInf };

/// The Bockstein family sigma(G).
struct BocksteinFamily {
  bool has_q = false;
  PrimeSet loc;  // primes p with Z_(p) in sigma(G)
  PrimeFn<TorsionMember> tors = PrimeFn<TorsionMember>::constant(TorsionMember::None);

  PrimeSet zp_primes() const;
  PrimeSet zp_inf_primes() const;

  /// e.g. "Zloc(p) for all p ≠ 3" or "Q, Zp(2)".
  std::string to_string() const;

  friend bool operator==(const BocksteinFamily&, const BocksteinFamily&) = default;
};

GroupProfile normalize(const GroupExpr& expr);

/// Throws TrivialGroupError for G = 0.
BocksteinFamily sigma(const GroupProfile& profile);

inline BocksteinFamily sigma(const GroupExpr& expr) { return sigma(normalize(expr)); }

}  // namespace bockstein
