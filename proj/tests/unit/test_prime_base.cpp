#include <doctest.h>

#include <random>

#include "bockstein/error.hpp"
#include "bockstein/prime_fn.hpp"

using namespace bockstein;

namespace {

// Membership by definition, primes up to 60.
bool member(const PrimeSet& s, std::uint64_t p) {
  bool listed = false;
  for (Prime q : s.primes()) listed = listed || q.value() == p;
  return s.is_finite() ? listed : !listed;
}

PrimeSet random_set(std::mt19937_64& rng) {
  std::vector<Prime> ps;
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    if (rng() % 2) ps.emplace_back(p);
  }
  return rng() % 2 ? PrimeSet::finite(ps) : PrimeSet::cofinite(ps);
}

}  // namespace

TEST_CASE("extended integers") {
  ExtInt inf = ExtInt::inf();
  CHECK(inf + 3 == inf);
  CHECK(inf - 3 == inf);
  CHECK(inf * 0 == ExtInt(0));
  CHECK(inf * -2 == ExtInt::neg_inf());
  CHECK(ExtInt(2) + 5 == ExtInt(7));
  CHECK(-ExtInt::neg_inf() == inf);
  CHECK_THROWS_AS(inf - inf, ArithmeticError);
  CHECK_THROWS_AS(inf + ExtInt::neg_inf(), ArithmeticError);
  CHECK_THROWS_AS(ExtInt(INT64_MAX) + 1, ArithmeticError);
  CHECK(ExtInt::neg_inf() < ExtInt(-1000));
  CHECK(ExtInt(1000) < inf);
  CHECK(max(ExtInt(3), inf) == inf);
  for (auto s : {"inf", "-inf", "0", "-17", "42"}) CHECK(ExtInt::parse(s).to_string() == s);
  CHECK_THROWS_AS(ExtInt::parse("4x"), ArithmeticError);
  CHECK_THROWS_AS(ExtInt::inf().value(), ArithmeticError);
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(4), PreconditionError);
  CHECK(first_prime_not_in({Prime(2), Prime(3)}) == Prime(5));
  CHECK(primes_up_to(20).size() == 8);
}

TEST_CASE("prime set algebra agrees with pointwise membership") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 400; ++t) {
    auto a = random_set(rng), b = random_set(rng);
    auto u = a.union_with(b), i = a.intersect(b), d = a.minus(b), c = a.complement();
    for (Prime p : primes_up_to(60)) {
      auto v = p.value();
      CHECK(u.contains(p) == (member(a, v) || member(b, v)));
      CHECK(i.contains(p) == (member(a, v) && member(b, v)));
      CHECK(d.contains(p) == (member(a, v) && !member(b, v)));
      CHECK(c.contains(p) == !member(a, v));
    }
    CHECK(a.is_subset_of(u));
    CHECK(i.is_subset_of(a));
    CHECK(set_combine(SetOp::Union, a, b) == u);
  }
}

TEST_CASE("prime set rendering") {
  CHECK(PrimeSet::of({3, 2}).to_string() == "{2,3}");
  CHECK(PrimeSet::all().to_string() == "all");
  CHECK(PrimeSet::all_except({5}).to_string() == "all-{5}");
  CHECK(PrimeSet().to_string() == "{}");
  CHECK(PrimeSet::all_except({2}).complement() == PrimeSet::of({2}));
}

TEST_CASE("prime functions are canonical") {
  PrimeFn<ExtInt> f(1, 2, {{Prime(3), 2}, {Prime(2), 5}, {Prime(2), 4}});
  CHECK(f.exceptions().size() == 1);
  CHECK(f.at(Prime(2)) == ExtInt(4));
  CHECK(f.at(Prime(3)) == ExtInt(2));
  CHECK(f == PrimeFn<ExtInt>(1, 2).with(Prime(2), 4));
  CHECK(f.where([](const ExtInt& v) { return v > 3; }) == PrimeSet::of({2}));
  CHECK(f.map([](const ExtInt& v) { return v + 1; }).at(Prime(2)) == ExtInt(5));
}
