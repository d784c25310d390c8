#include <doctest.h>

#include <random>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"

using bockstein::Error;
using bockstein::PreconditionError;
using bockstein::SizeLimitError;
using namespace bockstein::homology;

namespace {

SimplicialComplex random_complex(std::mt19937_64& rng) {
  std::size_t v = 4 + rng() % 4;
  std::vector<Simplex> facets;
  for (int i = 0; i < 6; ++i) {
    Simplex s;
    for (std::uint32_t x = 0; x < v; ++x) {
      if (rng() % 3 == 0) s.push_back(x);
    }
    if (s.size() > 4) s.resize(4);
    if (!s.empty()) facets.push_back(s);
  }
  facets.push_back({0});
  return SimplicialComplex::from_facets(v, facets);
}

GroupDesc cyclic(long n) { return GroupDesc{Coefficients::z(), 0, {Integer(n)}}; }
GroupDesc free_z(std::size_t k) { return GroupDesc{Coefficients::z(), k, {}}; }

}  // namespace

TEST_CASE("Smith normal form") {
  auto m = Matrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto r = snf(m);
  CHECK(r.diagonal == std::vector<Integer>{2, 6, 12});
  auto d = r.u * m * r.v;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(d(i, j) == (i == j ? r.diagonal[i] : Integer(0)));
  }
  CHECK(r.u * r.u_inv == Matrix::identity(3));
  CHECK(r.v * r.v_inv == Matrix::identity(3));
  SparseMatrix s(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      long x = m(i, j).get_si();
      if (x != 0) s.columns[j].emplace_back(static_cast<std::uint32_t>(i), x);
    }
  }
  CHECK(invariant_factors(s) == r.diagonal);
  CHECK(snf(Matrix(2, 3)).diagonal.empty());
}

TEST_CASE("homology of standard spaces") {
  auto c = circle(5).chain_complex();
  CHECK(homology(c, Coefficients::z()).at(1) == free_z(1));
  auto s2 = simplex_boundary(3).chain_complex();
  CHECK(homology(s2, Coefficients::z()).at(2) == free_z(1));
  CHECK(homology(full_simplex(3).chain_complex(), Coefficients::z(), true).at(0).is_zero());
  auto rp = moore_space(2, 1);
  CHECK(homology(rp, Coefficients::z()).at(1) == cyclic(2));
  CHECK(homology(rp, Coefficients::zmod(2)).at(2).dimension() == 1);
  CHECK(homology(rp, Coefficients::q()).at(1).is_zero());
  CHECK(cohomology(rp, Coefficients::z()).at(2) == cyclic(2));
  CHECK(cohomology(rp, Coefficients::z()).at(1).is_zero());
  CHECK(homology(rp, Coefficients::zp_inf(2)).at(1).is_zero());
  CHECK(homology(rp, Coefficients::zp_inf(2)).at(2).to_string() == "Z/2");
  CHECK(homology(rp, Coefficients::zmod(2, 2)).at(1).to_string() == "Z/2");
  CHECK(homology(moore_space(4, 1), Coefficients::zmod(2, 2)).at(1).to_string() == "Z/4");
  CHECK(Coefficients::parse("Z/4") == Coefficients::zmod(2, 2));
}

TEST_CASE("universal coefficients agree with ranks over fields") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto k = random_complex(rng);
    auto c = k.chain_complex();
    for (auto co : {Coefficients::q(), Coefficients::zmod(2), Coefficients::zmod(3)}) {
      auto h = homology(c, co);
      auto hc = cohomology(c, co);
      std::int64_t euler = 0;
      for (std::size_t n = 0; n <= c.top_degree(); ++n) {
        std::size_t r_out = n == 0 ? 0 : field_rank(c.boundary(n), co);
        std::size_t r_in = field_rank(c.boundary(n + 1), co);
        std::size_t want = c.rank(n) - r_out - r_in;
        CHECK(h.at(n).dimension() == want);
        CHECK(hc.at(n).dimension() == want);
        euler += (n % 2 ? -1 : 1) * static_cast<std::int64_t>(want);
      }
      CHECK(euler == c.euler_characteristic());
    }
  }
}

TEST_CASE("join with two points is the suspension") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto c = random_complex(rng).chain_complex();
    auto red = homology(c, Coefficients::z(), true);
    auto susp = join_homology(c, sphere_zero(), Coefficients::z());
    CHECK(susp.at(0).is_zero());
    for (std::size_t n = 0; n <= c.top_degree(); ++n) CHECK(susp.at(n + 1) == red.at(n));
  }
  auto j = join_homology(moore_space(2, 1), moore_space(2, 1), Coefficients::z());
  CHECK(j.at(3) == cyclic(2));
  CHECK(j.at(4) == cyclic(2));
}

TEST_CASE("mapping cylinders retract onto the target") {
  for (std::uint64_t p : {2, 3}) {
    auto f = degree_map_circle(p);
    auto cyl = mapping_cylinder(f);
    CHECK(cyl.domain_end.is_subcomplex_of(cyl.complex));
    CHECK(cyl.target_end.is_subcomplex_of(cyl.complex));
    auto h = homology(cyl.complex.chain_complex(), Coefficients::z());
    CHECK(h.at(0) == free_z(1));
    CHECK(h.at(1) == free_z(1));
    CHECK(h.at(2).is_zero());
    auto inc = induced(f.chain_map(), 1, Coefficients::q());
    REQUIRE(inc.matrix.size() == 1);
    CHECK(inc.matrix[0][0] == Rational(static_cast<long>(p)));
  }
}

TEST_CASE("the pair (M_p, boundary)") {
  for (std::uint64_t p : {2, 3}) {
    auto mp = mp_pair(p);
    auto rel = mp.m.relative_chain_complex(mp.boundary);
    CHECK(homology(rel, Coefficients::z()).at(2).is_zero());
    CHECK(cohomology(rel, Coefficients::z()).at(2) == cyclic(static_cast<long>(p)));
    CHECK(cohomology(rel, Coefficients::q()).at(2).is_zero());
    CHECK(cohomology(rel, Coefficients::zmod(5)).at(2).is_zero());
    auto xi = mp.xi.relative_chain_map(mp.boundary, mp.disk_boundary);
    CHECK(induced(xi, 2, Coefficients::zmod(p), true).iso);
    auto other = induced(xi, 2, Coefficients::q(), true);
    CHECK(other.source_rank == 1);
    CHECK(other.target_rank == 0);
  }
}

TEST_CASE("Pontryagin stages") {
  auto tower = pontryagin_stages(2, 1);
  REQUIRE(tower.stages.size() == 2);
  auto l2 = tower.stages[1].chain_complex();
  CHECK(cohomology(l2, Coefficients::zmod(2)).at(2).dimension() == 1);
  CHECK(cohomology(l2, Coefficients::q()).at(2).is_zero());
  CHECK(induced(tower.bonds[0].chain_map(), 2, Coefficients::zmod(2), true).iso);
  CHECK_THROWS_AS(pontryagin_stages(2, 3), SizeLimitError);
}

TEST_CASE("Edwards-Walsh skeleta") {
  auto k = full_simplex(3);
  auto ez = ew_skeleton(k, Coefficients::z(), 2);
  CHECK(homology(ez.complex, Coefficients::z()).at(2) == free_z(1));
  for (std::uint64_t p : {2, 3}) {
    auto ew = ew_skeleton(k, Coefficients::zmod(p), 2);
    CHECK(homology(ew.complex, Coefficients::z()).at(2) == cyclic(static_cast<long>(p)));
    CHECK(induced(ew.inclusion, 2, Coefficients::zmod(p)).injective);
    CHECK_FALSE(induced(ew.inclusion, 2, Coefficients::q()).injective);
  }
  CHECK_THROWS_AS(ew_skeleton(k, Coefficients::q(), 2), PreconditionError);
}

TEST_CASE("text formats and validation") {
  auto k = SimplicialComplex::parse("# a triangle\n0 1\n1 2\n0 2\n");
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  CHECK(SimplicialComplex::parse(k.to_text()).size() == k.size());
  auto m = SimplicialMap::parse(k, k, "0 -> 1\n1 -> 2\n2 -> 0\n");
  CHECK(induced(m.chain_map(), 1, Coefficients::z()).iso);
  auto points = SimplicialComplex::from_facets(2, {{0}, {1}});
  CHECK_THROWS_AS(SimplicialMap(k, points, {0, 1, 0}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(induced(m.chain_map(), 1, Coefficients::zp_inf(2)), PreconditionError);
}
