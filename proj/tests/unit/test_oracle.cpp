#include <doctest.h>

#include <set>

#include "bockstein/error.hpp"
#include "bockstein/oracle.hpp"

using namespace bockstein;

namespace {

bool bockstein_ok(std::int64_t q, std::int64_t zp, std::int64_t zi, std::int64_t zl) {
  return zi <= zp && zp <= zi + 1 && zp <= zl && q <= zl && zl <= std::max(q, zi + 1) && zi <= std::max(q, zl - 1);
}

std::uint64_t brute_count(std::size_t slots, std::int64_t bound) {
  std::uint64_t total = 0;
  for (std::int64_t q = 1; q <= bound; ++q) {
    std::uint64_t per = 0;
    for (std::int64_t a = 1; a <= bound; ++a) {
      for (std::int64_t b = 1; b <= bound; ++b) {
        for (std::int64_t c = 1; c <= bound; ++c) per += bockstein_ok(q, a, b, c);
      }
    }
    std::uint64_t pow = 1;
    for (std::size_t i = 0; i < slots; ++i) pow *= per;
    total += pow;
  }
  return total;
}

std::string key(const BocksteinFn& phi) {
  std::string s = phi.q.to_string();
  for (const auto* f : {&phi.zp, &phi.zpinf, &phi.zloc}) {
    s += "|" + f->fallback().to_string();
    for (const auto& [p, v] : f->exceptions()) s += "," + std::to_string(p.value()) + ":" + v.to_string();
  }
  return s;
}

}  // namespace

TEST_CASE("enumeration is complete and duplicate-free") {
  for (std::int64_t bound : {1, 2, 3}) {
    for (const std::vector<Prime>& primes : {std::vector<Prime>{Prime(2)}, std::vector<Prime>{Prime(3)},
                                             std::vector<Prime>{Prime(2), Prime(3)}}) {
      Universe u{primes, bound, false};
      auto phis = enumerate_phis(u);
      CHECK(phis.size() == brute_count(primes.size() + 1, bound));
      std::set<std::string> seen;
      for (const auto& phi : phis) {
        seen.insert(key(phi));
        auto probes = primes;
        probes.push_back(first_prime_not_in(primes));
        for (Prime p : probes) {
          CHECK(bockstein_ok(phi.q.value(), phi.zp.at(p).value(), phi.zpinf.at(p).value(), phi.zloc.at(p).value()));
        }
      }
      CHECK(seen.size() == phis.size());
      CHECK(enumerate_types(u).size() == phis.size());
    }
  }
}

TEST_CASE("extended enumeration") {
  Universe u{{Prime(2)}, 1, true};
  auto all = enumerate_extended(u);
  CHECK(!all.empty());
  std::set<std::string> seen;
  for (const auto& f : all) seen.insert(f.to_string());
  CHECK(seen.size() == all.size());
}

TEST_CASE("law runner") {
  Universe u{{Prime(2)}, 2, false};
  LawOptions opt;
  opt.samples = 2000;
  auto report = check_laws(u, opt);
  CHECK(report.pass());
  CHECK(report.results.size() == law_names().size());
  for (const auto& r : report.results) CHECK(r.checked > 0);
  opt.laws = {"norm-sandwich"};
  auto one = check_laws(u, opt);
  REQUIRE(one.results.size() == 1);
  CHECK(one.results[0].law == "norm-sandwich");
  opt.laws = {"no-such-law"};
  CHECK_THROWS_AS(check_laws(u, opt), PreconditionError);
}
