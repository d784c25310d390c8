#include <doctest.h>

#include <random>

#include "bockstein/error.hpp"
#include "bockstein/expr.hpp"
#include "bockstein/groups.hpp"

using namespace bockstein;

namespace {

// A direct summand together with what the rules need to know about it.
struct Part {
  GroupExpr g;
  bool torsion_free;
  std::vector<std::uint64_t> divisible_by;  // torsion-free: the dividing primes among the probes
  std::uint64_t p = 0;                      // torsion: its prime
  bool divisible = false;                   // torsion: p-divisible
};

const std::vector<std::uint64_t> kProbes{2, 3, 5, 7, 11};

Part random_part(std::mt19937_64& rng) {
  std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
  switch (rng() % 6) {
    case 0:
      return {GroupExpr::z(), true, {}};
    case 1:
      return {GroupExpr::q(), true, kProbes};
    case 2: {
      std::vector<std::uint64_t> div;
      for (auto r : kProbes) {
        if (r != p) div.push_back(r);
      }
      return {GroupExpr::zlocal(PrimeSet::of({p})), true, div};
    }
    case 3:
      return {GroupExpr::zinv(Prime(p)), true, {p}};
    case 4:
      return {GroupExpr::zpk(Prime(p), 1 + rng() % 3), false, {}, p, false};
    default:
      return {GroupExpr::zp_inf(Prime(p)), false, {}, p, true};
  }
}

}  // namespace

TEST_CASE("Bockstein family follows the four membership rules") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::vector<Part> parts;
    std::vector<GroupExpr> terms;
    auto count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      parts.push_back(random_part(rng));
      terms.push_back(parts.back().g);
    }
    auto fam = sigma(count == 1 ? terms[0] : GroupExpr::direct_sum(terms));
    bool any_tf = false, tf_all_div = true;
    for (const auto& part : parts) {
      if (!part.torsion_free) continue;
      any_tf = true;
      tf_all_div = tf_all_div && part.divisible_by.size() == kProbes.size();
    }
    CHECK(fam.has_q == (any_tf && tf_all_div));
    for (auto r : kProbes) {
      bool tf_div = true, tor = false, tor_div = true;
      for (const auto& part : parts) {
        if (part.torsion_free) {
          bool d = false;
          for (auto x : part.divisible_by) d = d || x == r;
          tf_div = tf_div && d;
        } else if (part.p == r) {
          tor = true;
          tor_div = tor_div && part.divisible;
        }
      }
      CHECK(fam.loc.contains(Prime(r)) == !tf_div);
      auto want = !tor ? TorsionMember::None : (tor_div ? TorsionMember::ZpInf : TorsionMember::Zp);
      CHECK(fam.tors.at(Prime(r)) == want);
    }
  }
}

TEST_CASE("families of named groups") {
  CHECK(sigma(GroupExpr::z()).loc == PrimeSet::all());
  CHECK_FALSE(sigma(GroupExpr::z()).has_q);
  CHECK(sigma(GroupExpr::zinv(Prime(3))).to_string() == "Zloc(p) for all p ≠ 3");
  CHECK(sigma(GroupExpr::q()).to_string() == "Q");
  auto all_zp = sigma(GroupExpr::sum_over(PrimeSet::all(), GroupExpr::Pattern::Zp));
  CHECK(all_zp.zp_primes() == PrimeSet::all());
  CHECK_FALSE(all_zp.has_q);
  auto some = sigma(GroupExpr::sum_over(PrimeSet::of({2, 7}), GroupExpr::Pattern::ZpInfinity));
  CHECK(some.zp_inf_primes() == PrimeSet::of({2, 7}));
  CHECK(some.zp_primes().is_empty());
}

TEST_CASE("basis groups are their own family") {
  for (std::uint64_t p : {2, 3, 13}) {
    auto zp = sigma(GroupExpr::zp(Prime(p)));
    CHECK(zp.zp_primes() == PrimeSet::of({p}));
    CHECK(zp.loc.is_empty());
    auto zi = sigma(GroupExpr::zp_inf(Prime(p)));
    CHECK(zi.zp_inf_primes() == PrimeSet::of({p}));
    auto zl = sigma(GroupExpr::zlocal(PrimeSet::of({p})));
    CHECK(zl.loc == PrimeSet::of({p}));
    CHECK_FALSE(zl.has_q);
  }
}

TEST_CASE("trivial group") {
  CHECK_THROWS_AS(sigma(GroupExpr::sum_over(PrimeSet(), GroupExpr::Pattern::Zp)), TrivialGroupError);
}

TEST_CASE("group syntax round-trips") {
  for (auto text : {"Z", "Q", "Z/2^3", "Zpinf(3)", "Zinv(5)", "Z/2 + Q", "SumAll(Zp)"}) {
    auto g = expr::parse_group(text);
    CHECK(expr::parse_group(g.to_string()) == g);
  }
}
