#include <algorithm>
#include <set>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"

namespace bockstein::homology {

SimplicialComplex circle(std::size_t k) {
  if (k < 3) throw PreconditionError("a simplicial circle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (std::uint32_t i = 0; i < k; ++i) edges.push_back({i, static_cast<std::uint32_t>((i + 1) % k)});
  return SimplicialComplex::from_facets(k, std::move(edges));
}

SimplicialComplex simplex_boundary(std::size_t n) {
  if (n < 1) throw PreconditionError("the boundary of a simplex needs n >= 1");
  std::vector<Simplex> facets;
  for (std::uint32_t drop = 0; drop <= n; ++drop) {
    Simplex s;
    for (std::uint32_t v = 0; v <= n; ++v) {
      if (v != drop) s.push_back(v);
    }
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

SimplicialComplex full_simplex(std::size_t n) {
  Simplex s;
  for (std::uint32_t v = 0; v <= n; ++v) s.push_back(v);
  return SimplicialComplex::from_facets(n + 1, {s});
}

SimplicialComplex cone(const SimplicialComplex& base) {
  const auto apex = static_cast<std::uint32_t>(base.vertex_count());
  std::vector<Simplex> facets{{apex}};
  for (int d = 0; d <= base.dimension(); ++d) {
    for (auto s : base.simplices(static_cast<std::size_t>(d))) {
      s.push_back(apex);
      facets.push_back(std::move(s));
    }
  }
  return SimplicialComplex::from_facets(base.vertex_count() + 1, std::move(facets));
}

SimplicialMap degree_map_circle(std::uint64_t p, std::size_t k) {
  if (p < 2) throw PreconditionError("degree map needs p >= 2");
  if (k < 3) throw PreconditionError("degree map needs k >= 3 base vertices");
  std::vector<std::uint32_t> map(p * k);
  for (std::size_t j = 0; j < map.size(); ++j) map[j] = static_cast<std::uint32_t>(j % k);
  return SimplicialMap(circle(p * k), circle(k), std::move(map));
}

namespace {

Simplex as_simplex(const std::set<std::uint32_t>& s) { return Simplex(s.begin(), s.end()); }

// Staircase simplices over one sorted source simplex.
void staircase(const Simplex& a, const std::vector<std::uint32_t>& image, std::vector<Simplex>& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::set<std::uint32_t> s(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = i; j < a.size(); ++j) s.insert(image[j]);
    out.push_back(as_simplex(s));
  }
}

}  // namespace

Cylinder mapping_cylinder(const SimplicialMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto ns = static_cast<std::uint32_t>(src.vertex_count());
  const std::size_t total = src.vertex_count() + tgt.vertex_count();
  std::vector<Simplex> facets, domain, target;
  for (int d = 0; d <= tgt.dimension(); ++d) {
    for (auto s : tgt.simplices(static_cast<std::size_t>(d))) {
      for (auto& v : s) v += ns;
      target.push_back(s);
      facets.push_back(std::move(s));
    }
  }
  for (int d = 0; d <= src.dimension(); ++d) {
    for (const auto& s : src.simplices(static_cast<std::size_t>(d))) {
      domain.push_back(s);
      std::vector<std::uint32_t> image;
      for (auto v : s) image.push_back(ns + f.vertex_map()[v]);
      staircase(s, image, facets);
    }
  }
  Cylinder c;
  c.complex = SimplicialComplex::from_facets(total, std::move(facets));
  c.domain_end = SimplicialComplex::from_facets(total, std::move(domain));
  c.target_end = SimplicialComplex::from_facets(total, std::move(target));
  for (std::uint32_t w = 0; w < tgt.vertex_count(); ++w) c.target_vertices.push_back(ns + w);
  return c;
}

MpPair mp_pair(std::uint64_t p, std::size_t k) {
  auto f = degree_map_circle(p, k);
  auto cyl = mapping_cylinder(f);
  const auto n = static_cast<std::uint32_t>(p * k);
  auto rim = circle(n);
  auto disk = cone(rim);
  std::vector<std::uint32_t> collapse(cyl.complex.vertex_count());
  for (std::uint32_t v = 0; v < collapse.size(); ++v) collapse[v] = v < n ? v : n;
  SimplicialMap xi(cyl.complex, disk, std::move(collapse));
  return MpPair{cyl.complex, cyl.domain_end, disk, rim, std::move(xi)};
}

namespace {

// K with every edge cut into p pieces and every triangle coned off.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<std::vector<std::uint32_t>> rims;  // per triangle, the 3p boundary vertices in cyclic order
  std::vector<std::uint32_t> centres;
  std::vector<bool> is_centre;
};

Subdivision subdivide(const SimplicialComplex& k, std::uint64_t p) {
  std::uint32_t next = static_cast<std::uint32_t>(k.vertex_count());
  const auto& edges = k.simplices(1);
  std::vector<std::vector<std::uint32_t>> interior(edges.size());
  for (auto& in : interior) {
    for (std::uint64_t i = 1; i < p; ++i) in.push_back(next++);
  }
  // Vertices from u to v along edge [u, v], excluding v.
  auto path = [&](std::uint32_t u, std::uint32_t v) {
    Simplex e{std::min(u, v), std::max(u, v)};
    const auto& in = interior[*k.index(e)];
    std::vector<std::uint32_t> out{u};
    if (u < v) {
      out.insert(out.end(), in.begin(), in.end());
    } else {
      out.insert(out.end(), in.rbegin(), in.rend());
    }
    return out;
  };
  Subdivision sd;
  std::vector<Simplex> facets;
  for (const auto& e : edges) {
    auto pts = path(e[0], e[1]);
    pts.push_back(e[1]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) facets.push_back({pts[i], pts[i + 1]});
  }
  for (const auto& t : k.simplices(2)) {
    std::vector<std::uint32_t> rim;
    for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}}) {
      auto pts = path(u, v);
      rim.insert(rim.end(), pts.begin(), pts.end());
    }
    std::uint32_t c = next++;
    for (std::size_t i = 0; i < rim.size(); ++i) facets.push_back({rim[i], rim[(i + 1) % rim.size()], c});
    sd.rims.push_back(std::move(rim));
    sd.centres.push_back(c);
  }
  for (const auto& v : k.simplices(0)) facets.push_back(v);
  sd.complex = SimplicialComplex::from_facets(next, std::move(facets));
  sd.is_centre.assign(next, false);
  for (auto c : sd.centres) sd.is_centre[c] = true;
  return sd;
}

}  // namespace

PontryaginTower pontryagin_stages(std::uint64_t p, std::size_t k) {
  if (p < 2) throw PreconditionError("Pontryagin stages need p >= 2");
  if (k < 1) throw PreconditionError("Pontryagin stages need k >= 1");
  if (k > 2) throw SizeLimitError("Pontryagin stages are limited to k <= 2");
  PontryaginTower tower;
  tower.stages.push_back(simplex_boundary(3));
  for (std::size_t step = 0; step < k; ++step) {
    auto sd = subdivide(tower.stages.back(), p);
    // Keep every vertex but the centres, then add three core vertices per triangle.
    const auto n = sd.complex.vertex_count();
    std::vector<std::int64_t> renum(n, -1);
    std::vector<std::uint32_t> to_sd;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (sd.is_centre[v]) continue;
      renum[v] = static_cast<std::int64_t>(to_sd.size());
      to_sd.push_back(v);
    }
    std::vector<Simplex> facets;
    for (const auto& e : sd.complex.simplices(1)) {
      if (!sd.is_centre[e[0]] && !sd.is_centre[e[1]]) {
        facets.push_back({static_cast<std::uint32_t>(renum[e[0]]), static_cast<std::uint32_t>(renum[e[1]])});
      }
    }
    for (std::size_t t = 0; t < sd.rims.size(); ++t) {
      std::uint32_t b0 = static_cast<std::uint32_t>(to_sd.size());
      for (int i = 0; i < 3; ++i) to_sd.push_back(sd.centres[t]);
      const auto& rim = sd.rims[t];
      const std::size_t len = rim.size();
      auto a = [&](std::size_t j) { return static_cast<std::uint32_t>(renum[rim[j]]); };
      auto core = [&](std::size_t j) { return b0 + static_cast<std::uint32_t>(j % 3); };
      for (std::size_t j = 0; j < len; ++j) {
        std::size_t lo = std::min(j, (j + 1) % len), hi = std::max(j, (j + 1) % len);
        staircase({a(lo), a(hi)}, {core(lo), core(hi)}, facets);
      }
    }
    auto next = SimplicialComplex::from_facets(to_sd.size(), std::move(facets));
    tower.bonds.emplace_back(next, sd.complex, to_sd);
    tower.subdivided.push_back(sd.complex);
    tower.stages.push_back(std::move(next));
  }
  return tower;
}

EwSkeleton ew_skeleton(const SimplicialComplex& k, const Coefficients& group, std::size_t n) {
  if (n < 2) throw PreconditionError("Edwards-Walsh skeleta need n >= 2");
  bool mod_p = group.kind == Coefficients::Kind::Zmod && group.k == 1;
  if (group.kind != Coefficients::Kind::Z && !mod_p) {
    throw PreconditionError("Edwards-Walsh skeleta are built for Z and Z/p, not " + group.to_string());
  }
  auto skel = k.skeleton(n).chain_complex();
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> bounds;
  for (std::size_t d = 0; d <= n; ++d) {
    ranks.push_back(skel.rank(d));
    bounds.push_back(skel.boundary(d));
  }
  if (mod_p) {
    auto full = k.chain_complex();
    auto top = full.boundary(n + 1);
    for (auto& col : top.columns) {
      for (auto& e : col) e.second *= static_cast<std::int64_t>(group.p);
    }
    ranks.push_back(full.rank(n + 1));
    top.rows = ranks[n];
    bounds.push_back(std::move(top));
  }
  ChainComplex ew(ranks, bounds);
  ChainMap inclusion{skel, ew, {}};
  for (std::size_t d = 0; d <= skel.top_degree(); ++d) {
    SparseMatrix id(ew.rank(d), skel.rank(d));
    for (std::uint32_t c = 0; c < skel.rank(d); ++c) id.columns[c].emplace_back(c, 1);
    inclusion.degrees.push_back(std::move(id));
  }
  inclusion.validate();
  return EwSkeleton{std::move(ew), std::move(inclusion)};
}

ChainComplex moore_space(std::uint64_t m, std::size_t n) {
  if (m < 2 || n < 1) throw PreconditionError("Moore spaces need m >= 2 and n >= 1");
  std::vector<std::size_t> ranks(n + 2, 0);
  ranks[0] = ranks[n] = ranks[n + 1] = 1;
  std::vector<SparseMatrix> bounds(n + 2);
  for (std::size_t d = 1; d <= n + 1; ++d) bounds[d] = SparseMatrix(ranks[d - 1], ranks[d]);
  bounds[n + 1].columns[0].emplace_back(0, static_cast<std::int64_t>(m));
  return ChainComplex(std::move(ranks), std::move(bounds));
}

ChainComplex sphere_zero() { return ChainComplex({2}, {}); }

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Invariant factors of a direct sum of cyclic groups.
std::vector<Integer> normalize_cyclic(const std::vector<Integer>& orders) {
  std::vector<Integer> kept;
  for (const auto& o : orders) {
    if (o > 1) kept.push_back(o);
  }
  Matrix d(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) d(i, i) = kept[i];
  std::vector<Integer> out;
  for (const auto& x : snf(d, false).diagonal) {
    if (x > 1) out.push_back(x);
  }
  return out;
}

}  // namespace

Homology join_homology(const ChainComplex& k, const ChainComplex& l, const Coefficients& coeff) {
  auto hk = integral_homology(k, true);
  auto hl = integral_homology(l, true);
  const std::size_t top = hk.free.size() + hl.free.size();  // dim K + dim L + 2
  IntegralHomology out;
  out.free.assign(top + 1, 0);
  std::vector<std::vector<Integer>> cyclic(top + 1);
  for (std::size_t a = 0; a < hk.free.size(); ++a) {
    for (std::size_t b = 0; b < hl.free.size(); ++b) {
      const auto& ta = hk.torsion[a];
      const auto& tb = hl.torsion[b];
      // Tensor product lands in degree a + b + 1.
      auto& tens = cyclic[a + b + 1];
      out.free[a + b + 1] += hk.free[a] * hl.free[b];
      for (const auto& t : tb) tens.insert(tens.end(), hk.free[a], t);
      for (const auto& s : ta) tens.insert(tens.end(), hl.free[b], s);
      for (const auto& s : ta) {
        for (const auto& t : tb) tens.push_back(gcd_of(s, t));
      }
      // Tor lands in degree a + b + 2.
      for (const auto& s : ta) {
        for (const auto& t : tb) cyclic[a + b + 2].push_back(gcd_of(s, t));
      }
    }
  }
  for (auto& c : cyclic) out.torsion.push_back(normalize_cyclic(c));
  return from_integral(out, coeff, false, true);
}

}  // namespace bockstein::homology
