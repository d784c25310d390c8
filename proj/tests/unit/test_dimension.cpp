#include <doctest.h>

#include "bockstein/dimension.hpp"
#include "bockstein/error.hpp"

using namespace bockstein;

namespace {

CdType pi_type(std::uint64_t p) {
  return CdType::triple(PrimeSet::of({p}), PrimeSet::of({p}), PrimeFn<ExtInt>(1, 1).with(Prime(p), 2));
}

}  // namespace

TEST_CASE("dimension over composite groups") {
  CHECK(dim(nat(3), GroupExpr::zpk(Prime(2), 2)) == ExtInt(3));
  auto pi = pi_type(2);
  CHECK(dim(pi, GroupExpr::z()) == ExtInt(2));
  CHECK(dim(pi, GroupExpr::q()) == ExtInt(1));
  CHECK(dim(pi, GroupExpr::zpk(Prime(2), 3)) == ExtInt(2));
  CHECK(dim(pi, GroupExpr::zp_inf(Prime(2))) == ExtInt(1));
  CHECK(dim(pi, GroupExpr::zinv(Prime(2))) == ExtInt(1));
  CHECK(dim(pi, GroupExpr::direct_sum({GroupExpr::q(), GroupExpr::zp(Prime(2))})) == ExtInt(2));
  CHECK(dim(pi, GroupExpr::sum_over(PrimeSet::all_except({2}), GroupExpr::Pattern::Zp)) == ExtInt(1));
}

TEST_CASE("deficiency and regularity") {
  auto pi = pi_type(3);
  CHECK(deficiency(pi, Prime(3)) == 1);
  CHECK(deficiency(pi, Prime(2)) == 0);
  CHECK(p_singular(pi, Prime(3)));
  CHECK(p_regular(pi, Prime(5)));
  auto zi = phi_basis(BasisKind::zp_inf(Prime(2)), 3);
  CHECK(deficiency(zi, Prime(2)) == 0);
  CHECK(p_singular(zi, Prime(2)));
  CHECK_THROWS_AS(deficiency(CdType::zero(), Prime(2)), PreconditionError);
}

TEST_CASE("powers") {
  auto basic = power_report(pi_type(2), 3);
  CHECK(basic.kind == PowerReport::Kind::Basic);
  CHECK(basic.power_norms == std::vector<ExtInt>{2, 4, 6});
  auto exc = power_report(phi_basis(BasisKind::zp_inf(Prime(2)), 2), 3);
  CHECK(exc.kind == PowerReport::Kind::Exceptional);
  CHECK(exc.power_norms == std::vector<ExtInt>{2, 3, 4});
}

TEST_CASE("testing spaces") {
  auto pi = pi_type(2);
  auto z2 = GroupExpr::zp(Prime(2));
  CHECK(testing_dim(pi, z2, 3) == dim(pi, z2));
  CHECK(testing_dim(pi, GroupExpr::q(), 3) == ExtInt(1));
  CHECK_THROWS_AS(testing_dim(nat(5), GroupExpr::q(), 0), PreconditionError);
}

TEST_CASE("products of fundamental types") {
  std::vector<BasisKind> kinds{BasisKind::q(), BasisKind::zloc(Prime(2)), BasisKind::zp(Prime(2)),
                               BasisKind::zp_inf(Prime(2)), BasisKind::zloc(Prime(3)), BasisKind::zp(Prime(3)),
                               BasisKind::zp_inf(Prime(3))};
  for (const auto& g : kinds) {
    for (const auto& g2 : kinds) {
      for (std::int64_t n = 2; n <= 5; ++n) {
        for (std::int64_t m = 2; m <= n; ++m) {
          CHECK(fundamental_product_dim(g, n, g2, m) == fundamental_product_formula(g, n, g2, m));
        }
      }
    }
  }
  CHECK_THROWS_AS(fundamental_product_dim(BasisKind::q(), 2, BasisKind::q(), 3), PreconditionError);
}

TEST_CASE("full-valued and ANR predicates") {
  CHECK(is_full_valued(nat(4)));
  CHECK_FALSE(is_full_valued(pi_type(2)));
  CHECK(anr_admissible(nat(3)).admissible);
  auto pi = anr_admissible(pi_type(2));
  CHECK_FALSE(pi.admissible);
  CHECK(pi.violated == std::vector<std::string>{"c"});
  auto zi = anr_admissible(phi_basis(BasisKind::zp_inf(Prime(2)), 3));
  CHECK(zi.violated == std::vector<std::string>{"a"});
}
