#include "bockstein/prime_set.hpp"

#include <algorithm>
#include <iterator>

#include "bockstein/error.hpp"

namespace bockstein {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) throw PreconditionError(std::to_string(value) + " is not a prime");
}

Prime first_prime_not_in(const std::vector<Prime>& avoid) {
  for (std::uint64_t n = 2;; ++n) {
    if (is_prime(n) && std::find(avoid.begin(), avoid.end(), Prime(n)) == avoid.end()) return Prime(n);
  }
}

std::vector<Prime> primes_up_to(std::uint64_t bound) {
  std::vector<Prime> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.emplace_back(n);
  }
  return out;
}

namespace {

std::vector<Prime> normalized(std::vector<Prime> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Prime> vunion(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Prime> vintersect(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Prime> vdiff(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Prime> to_primes(std::initializer_list<std::uint64_t> values) {
  std::vector<Prime> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace

PrimeSet::PrimeSet(Mode mode, std::vector<Prime> primes) : mode_(mode), primes_(normalized(std::move(primes))) {}

PrimeSet PrimeSet::of(std::initializer_list<std::uint64_t> members) { return finite(to_primes(members)); }

PrimeSet PrimeSet::all_except(std::initializer_list<std::uint64_t> excluded) { return cofinite(to_primes(excluded)); }

bool PrimeSet::contains(Prime p) const {
  bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
  return mode_ == Mode::Finite ? listed : !listed;
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const { return minus(other).is_empty(); }

PrimeSet PrimeSet::complement() const {
  return PrimeSet(mode_ == Mode::Finite ? Mode::Cofinite : Mode::Finite, primes_);
}

PrimeSet PrimeSet::union_with(const PrimeSet& other) const {
  const auto& a = primes_;
  const auto& b = other.primes_;
  if (is_finite() && other.is_finite()) return finite(vunion(a, b));
  if (is_finite()) return cofinite(vdiff(b, a));
  if (other.is_finite()) return cofinite(vdiff(a, b));
  return cofinite(vintersect(a, b));
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  return complement().union_with(other.complement()).complement();
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const { return intersect(other.complement()); }

std::string PrimeSet::to_string() const {
  std::string body = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) body += ",";
    body += std::to_string(primes_[i].value());
  }
  body += "}";
  if (is_finite()) return body;
  return primes_.empty() ? "all" : "all-" + body;
}

PrimeSet set_combine(SetOp op, const PrimeSet& a, const PrimeSet& b) {
  switch (op) {
    case SetOp::Union: return a.union_with(b);
    case SetOp::Intersect: return a.intersect(b);
    case SetOp::Diff: return a.minus(b);
    case SetOp::Complement: return a.complement();
  }
  return a;
}

}  // namespace bockstein
