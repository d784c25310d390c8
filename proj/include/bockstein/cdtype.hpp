#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bockstein/groups.hpp"
#include "bockstein/prime_fn.hpp"

namespace bockstein {

/// A member of the Bockstein basis: Q, Z_p, Z_p^inf or Z_(p).
struct BasisKind {
  enum class Tag : std::uint8_t { Q, Zp, ZpInf, Zloc };

  Tag tag = Tag::Q;
  std::optional<Prime> p;

  static BasisKind q() { return {Tag::Q, std::nullopt}; }
  static BasisKind zp(Prime p) { return {Tag::Zp, p}; }
  static BasisKind zp_inf(Prime p) { return {Tag::ZpInf, p}; }
  static BasisKind zloc(Prime p) { return {Tag::Zloc, p}; }

  /// "Q", "Zp(2)", "Zpinf(2)", "Zloc(2)"
  std::string to_string() const;
  GroupExpr group() const;

  friend bool operator==(const BasisKind&, const BasisKind&) = default;
};

/// The values of dim_G for G in the Bockstein basis.
/// The 0 slots of the prime-indexed functions are unused and kept at 0.
struct BocksteinFn {
  ExtInt q;
  PrimeFn<ExtInt> zp, zpinf, zloc;

  BocksteinFn() = default;
  BocksteinFn(ExtInt q, PrimeFn<ExtInt> zp, PrimeFn<ExtInt> zpinf, PrimeFn<ExtInt> zloc);

  static BocksteinFn constant(ExtInt v);

  ExtInt at(const BasisKind& g) const;
  /// The primes where any slot deviates from its fallback.
  std::vector<Prime> exception_primes() const;

  friend bool operator==(const BocksteinFn&, const BocksteinFn&) = default;
};

/// Violations of BI1..BI6, e.g. "BI2 at 2" or "BI5 at default".
std::vector<std::string> validate(const BocksteinFn& phi);

BocksteinFn max(const BocksteinFn& a, const BocksteinFn& b);

/// A cd-type (S, D; d) or the zero type.
///
/// Invariants: D ⊆ S and d(p) = d(0) for p outside S. The triple (∅, ∅; 0)
/// is identified with Zero. Values may be negative or infinite (extended
/// class); is_positive() tests membership in the class of cd-types proper.
class CdType {
 public:
  CdType() = default;  // Zero

  static CdType zero() { return {}; }
  /// Throws InvalidTripleError when an invariant fails.
  static CdType triple(PrimeSet s, PrimeSet d_set, PrimeFn<ExtInt> d);

  bool is_zero() const noexcept { return zero_; }
  const PrimeSet& S() const noexcept { return s_; }
  const PrimeSet& D() const noexcept { return d_set_; }
  const PrimeFn<ExtInt>& d() const noexcept { return d_; }

  /// Nonzero with all d values >= 1, or Zero.
  bool is_positive() const;

  /// "zero" or "triple(S={2}, D={2}, d={zero:1, default:1, 2:2})"
  std::string to_string() const;

  friend bool operator==(const CdType&, const CdType&) = default;

 private:
  bool zero_ = true;
  PrimeSet s_;
  PrimeSet d_set_;
  PrimeFn<ExtInt> d_ = PrimeFn<ExtInt>::constant(0);
};

BocksteinFn to_phi(const CdType& f);
/// Throws InvalidPhiError listing the violated inequalities.
CdType from_phi(const BocksteinFn& phi);

CdType sum(const CdType& a, const CdType& b);
CdType times(const CdType& a, const CdType& b);
CdType wedge(const CdType& a, const CdType& b);

/// The prime-indexed family {Phi(pattern(p), k(p)) : p in primes}.
struct UniformFamily {
  BasisKind::Tag pattern = BasisKind::Tag::Zp;
  PrimeSet primes;
  PrimeFn<ExtInt> k;
};

/// Finitely many explicit cd-types together with prime-indexed families.
struct WedgeFamily {
  std::vector<CdType> terms;
  std::vector<UniformFamily> families;
};

BocksteinFn family_phi(const WedgeFamily& family);
CdType wedge_family(const WedgeFamily& family);

ExtInt norm(const CdType& f);
ExtInt inferior_norm(const CdType& f);
/// Throws ArithmeticError when d takes an infinite value.
CdType conjugate(const CdType& f);
bool leq(const CdType& a, const CdType& b);
bool leq(const BocksteinFn& a, const BocksteinFn& b);

/// (∅, ∅; n); nat(0) is Zero.
CdType nat(ExtInt n);
/// Kuzminov basis element Phi(G, n) for n >= 1.
CdType phi_basis(const BasisKind& g, ExtInt n);

/// Exponents k_G with F = ∨ Phi(G, k_G).
struct Decomposition {
  ExtInt k_q = 1;
  PrimeFn<ExtInt> k_zloc = PrimeFn<ExtInt>::constant(1);
  PrimeFn<ExtInt> k_zp = PrimeFn<ExtInt>::constant(1);
  PrimeFn<ExtInt> k_zpinf = PrimeFn<ExtInt>::constant(1);

  WedgeFamily family() const;
  /// e.g. "Phi(Zp(2),2) ∨ 1-types"
  std::string to_string() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const CdType& f);

/// k-fold [+] of f with itself.
CdType scale(std::uint64_t k, const CdType& f);

}  // namespace bockstein
