#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bockstein/ext_int.hpp"
#include "bockstein/prime_set.hpp"

namespace bockstein {

/// Values of N ∪ {inf} share the ExtInt representation.
using ExtNat = ExtInt;

/// A function on the primes plus the extra slot 0, equal to `fallback()` at
/// all but finitely many primes.
///
/// Canonical: exceptions are sorted by prime and never equal the fallback, so
/// pointwise-equal functions compare equal.
template <class V>
class PrimeFn {
 public:
  using Exception = std::pair<Prime, V>;

  PrimeFn() = default;
  PrimeFn(V at_zero, V fallback, std::vector<Exception> exceptions = {})
      : at_zero_(std::move(at_zero)), fallback_(std::move(fallback)), exceptions_(std::move(exceptions)) {
    std::stable_sort(exceptions_.begin(), exceptions_.end(),
                     [](const Exception& a, const Exception& b) { return a.first < b.first; });
    // Later entries for the same prime win.
    std::vector<Exception> kept;
    for (auto& e : exceptions_) {
      if (!kept.empty() && kept.back().first == e.first) {
        kept.back().second = std::move(e.second);
      } else {
        kept.push_back(std::move(e));
      }
    }
    std::erase_if(kept, [&](const Exception& e) { return e.second == fallback_; });
    exceptions_ = std::move(kept);
  }

  static PrimeFn constant(V v) { return PrimeFn(v, v); }

  const V& at_zero() const noexcept { return at_zero_; }
  const V& fallback() const noexcept { return fallback_; }
  const std::vector<Exception>& exceptions() const noexcept { return exceptions_; }

  const V& at(Prime p) const {
    auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(), p,
                               [](const Exception& e, Prime q) { return e.first < q; });
    return (it != exceptions_.end() && it->first == p) ? it->second : fallback_;
  }

  std::vector<Prime> exception_primes() const {
    std::vector<Prime> out;
    for (const auto& e : exceptions_) out.push_back(e.first);
    return out;
  }

  PrimeFn with(Prime p, V v) const {
    auto ex = exceptions_;
    ex.emplace_back(p, std::move(v));
    return PrimeFn(at_zero_, fallback_, std::move(ex));
  }
  PrimeFn with_zero(V v) const { return PrimeFn(std::move(v), fallback_, exceptions_); }

  /// Applies `f` slotwise.
  template <class F>
  auto map(F f) const -> PrimeFn<std::invoke_result_t<F, const V&>> {
    using W = std::invoke_result_t<F, const V&>;
    std::vector<std::pair<Prime, W>> ex;
    for (const auto& [p, v] : exceptions_) ex.emplace_back(p, f(v));
    return PrimeFn<W>(f(at_zero_), f(fallback_), std::move(ex));
  }

  /// The set of primes where `pred` holds (slot 0 is never included).
  template <class Pred>
  PrimeSet where(Pred pred) const {
    std::vector<Prime> listed;
    bool in_default = pred(fallback_);
    for (const auto& [p, v] : exceptions_) {
      if (pred(v) != in_default) listed.push_back(p);
    }
    return in_default ? PrimeSet::cofinite(std::move(listed)) : PrimeSet::finite(std::move(listed));
  }

  friend bool operator==(const PrimeFn&, const PrimeFn&) = default;

 private:
  V at_zero_{};
  V fallback_{};
  std::vector<Exception> exceptions_;
};

inline std::vector<Prime> listed_primes_of(const PrimeSet& s) { return s.primes(); }
template <class V>
std::vector<Prime> listed_primes_of(const PrimeFn<V>& f) {
  return f.exception_primes();
}

/// Union of the listed primes of all arguments (exceptions of functions,
/// members or non-members of sets), ascending.
template <class... Fns>
std::vector<Prime> exception_union(const Fns&... fns) {
  std::vector<Prime> out;
  (([&] {
     for (Prime p : listed_primes_of(fns)) out.push_back(p);
   }()),
   ...);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Slotwise combination of two functions; `op` receives values only.
template <class A, class B, class F>
auto combine(const PrimeFn<A>& f, const PrimeFn<B>& g, F op)
    -> PrimeFn<std::invoke_result_t<F, const A&, const B&>> {
  using W = std::invoke_result_t<F, const A&, const B&>;
  std::vector<std::pair<Prime, W>> ex;
  for (Prime p : exception_union(f, g)) ex.emplace_back(p, op(f.at(p), g.at(p)));
  return PrimeFn<W>(op(f.at_zero(), g.at_zero()), op(f.fallback(), g.fallback()), std::move(ex));
}

/// The primes at which some argument deviates from its fallback, plus one
/// representative prime of the common default region.
template <class... Fns>
std::vector<Prime> region_primes(const Fns&... fns) {
  auto out = exception_union(fns...);
  out.push_back(first_prime_not_in(out));
  return out;
}

enum class PointwiseOp : std::uint8_t { Add, Sub, Max, Min, Mul };
enum class Extremum : std::uint8_t { Sup, Inf };

/// Exact slotwise arithmetic. Undefined infinite forms raise ArithmeticError
/// naming the slot ("0", "default" or the prime).
PrimeFn<ExtInt> pointwise(PointwiseOp op, const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g);

/// Sup or inf over all primes and the 0 slot.
ExtInt extremum(const PrimeFn<ExtInt>& f, Extremum kind);

/// chi_A: 1 on A, 0 elsewhere and at the 0 slot.
PrimeFn<ExtInt> indicator(const PrimeSet& a);

/// delta_p: 1 at p, 0 elsewhere.
PrimeFn<ExtInt> delta(Prime p);
/// delta_0: 1 at the 0 slot only.
PrimeFn<ExtInt> delta_zero();

PrimeFn<ExtInt> operator+(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g);
PrimeFn<ExtInt> operator-(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g);
PrimeFn<ExtInt> operator*(const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g);
PrimeFn<ExtInt> operator-(const PrimeFn<ExtInt>& f);

/// "{zero:1, default:1, 2:2}"
std::string to_string(const PrimeFn<ExtInt>& f);

}  // namespace bockstein
