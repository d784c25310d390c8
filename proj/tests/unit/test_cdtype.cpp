#include <doctest.h>

#include "bockstein/cdtype.hpp"
#include "bockstein/error.hpp"
#include "bockstein/oracle.hpp"

using namespace bockstein;

namespace {

CdType pi_type(std::uint64_t p) {
  return CdType::triple(PrimeSet::of({p}), PrimeSet::of({p}), PrimeFn<ExtInt>(1, 1).with(Prime(p), 2));
}

CdType m_type(std::uint64_t p) {
  return CdType::triple(PrimeSet::of({p}), PrimeSet::of({p}), PrimeFn<ExtInt>(3, 3).with(Prime(p), 4));
}

}  // namespace

TEST_CASE("fundamental types by hand") {
  Prime p(2), q(3);
  auto row = [&](const CdType& f) {
    auto phi = to_phi(f);
    return std::vector<ExtInt>{phi.at(BasisKind::zloc(p)), phi.at(BasisKind::zp(p)), phi.at(BasisKind::zp_inf(p)),
                               phi.at(BasisKind::q()),     phi.at(BasisKind::zloc(q)), phi.at(BasisKind::zp(q)),
                               phi.at(BasisKind::zp_inf(q))};
  };
  using V = std::vector<ExtInt>;
  CHECK(row(phi_basis(BasisKind::q(), 4)) == V{4, 1, 1, 4, 4, 1, 1});
  CHECK(row(phi_basis(BasisKind::zloc(p), 4)) == V{4, 4, 4, 4, 4, 1, 1});
  CHECK(row(phi_basis(BasisKind::zp(p), 4)) == V{4, 4, 3, 1, 1, 1, 1});
  CHECK(row(phi_basis(BasisKind::zp_inf(p), 4)) == V{4, 3, 3, 1, 1, 1, 1});
  CHECK(phi_basis(BasisKind::zp(p), 1) == nat(1));
  CHECK(phi_basis(BasisKind::zp_inf(p), ExtInt::inf()) == phi_basis(BasisKind::zp_inf(p), ExtInt::inf()));
}

TEST_CASE("Pontryagin surface type") {
  auto phi = to_phi(pi_type(2));
  CHECK(phi.at(BasisKind::zp(Prime(2))) == ExtInt(2));
  CHECK(phi.at(BasisKind::zloc(Prime(2))) == ExtInt(2));
  CHECK(phi.at(BasisKind::zp_inf(Prime(2))) == ExtInt(1));
  CHECK(phi.at(BasisKind::q()) == ExtInt(1));
  CHECK(phi.at(BasisKind::zp(Prime(3))) == ExtInt(1));
  CHECK(phi.at(BasisKind::zp_inf(Prime(3))) == ExtInt(1));
  CHECK(phi.at(BasisKind::zloc(Prime(3))) == ExtInt(1));
  CHECK(norm(sum(pi_type(2), pi_type(3))) == ExtInt(3));
  CHECK(norm(sum(pi_type(2), pi_type(2))) == ExtInt(4));
  CHECK(norm(sum(m_type(2), m_type(3))) == ExtInt(7));
  CHECK(pi_type(2).to_string() == "triple(S={2}, D={2}, d={zero:1, default:1, 2:2})");
}

TEST_CASE("triple invariants") {
  CHECK_THROWS_AS(CdType::triple(PrimeSet::of({2}), PrimeSet::of({3}), PrimeFn<ExtInt>(1, 1)), InvalidTripleError);
  CHECK_THROWS_AS(CdType::triple(PrimeSet::of({2}), PrimeSet(), PrimeFn<ExtInt>(1, 1).with(Prime(3), 2)),
                  InvalidTripleError);
  CHECK(CdType::triple(PrimeSet(), PrimeSet(), PrimeFn<ExtInt>::constant(0)).is_zero());
  CHECK(nat(0).is_zero());
  CHECK(nat(3).to_string() == "triple(S={}, D={}, d={zero:3, default:3})");
}

TEST_CASE("phi validity") {
  auto phi = to_phi(nat(2));
  phi.zpinf = phi.zpinf.with(Prime(2), 5);
  CHECK_FALSE(validate(phi).empty());
  CHECK_THROWS_AS(from_phi(phi), InvalidPhiError);
}

TEST_CASE("round trips over a small universe") {
  Universe u{{Prime(2), Prime(3)}, 2, false};
  for (const auto& phi : enumerate_phis(u)) {
    CHECK(validate(phi).empty());
    CHECK(to_phi(from_phi(phi)) == phi);
  }
  for (const auto& f : enumerate_types(u)) CHECK(from_phi(to_phi(f)) == f);
}

TEST_CASE("operations on examples") {
  auto a = phi_basis(BasisKind::zp(Prime(2)), 3);
  auto b = phi_basis(BasisKind::q(), 2);
  CHECK(norm(sum(a, b)) == ExtInt(4));
  CHECK(norm(wedge(a, b)) == ExtInt(3));
  CHECK(inferior_norm(nat(5)) == ExtInt(5));
  CHECK(sum(nat(2), nat(3)) == nat(5));
  CHECK(times(nat(2), nat(3)) == nat(6));
  CHECK(sum(CdType::zero(), a) == a);
  CHECK(leq(b, wedge(a, b)));
  CHECK_FALSE(leq(a, b));
  CHECK(conjugate(conjugate(pi_type(3))) == pi_type(3));
  CHECK(scale(3, nat(2)) == nat(6));
  CHECK_THROWS_AS(conjugate(nat(ExtInt::inf())), ArithmeticError);
}

TEST_CASE("decomposition of the Pontryagin type") {
  auto dec = decompose(pi_type(2));
  CHECK(dec.to_string() == "Phi(Zp(2),2) ∨ 1-types");
  CHECK(wedge_family(dec.family()) == pi_type(2));
  CHECK_THROWS_AS(decompose(CdType::zero()), PreconditionError);
}
