#include "bockstein/dimension.hpp"

#include "bockstein/error.hpp"

namespace bockstein {

namespace {

// Supremum of f over a prime set; -inf over the empty set.
ExtInt sup_over(const PrimeFn<ExtInt>& f, const PrimeSet& s) {
  if (s.is_finite()) {
    ExtInt best = ExtInt::neg_inf();
    for (Prime p : s.primes()) best = max(best, f.at(p));
    return best;
  }
  ExtInt best = f.fallback();
  for (const auto& [p, v] : f.exceptions()) {
    if (s.contains(p)) best = max(best, v);
  }
  return best;
}

void require_nonzero(const CdType& f) {
  if (f.is_zero()) throw PreconditionError("the zero cd-type has no p-local structure");
}

}  // namespace

ExtInt dim(const BocksteinFn& phi, const BocksteinFamily& family) {
  ExtInt best = ExtInt::neg_inf();
  if (family.has_q) best = phi.q;
  best = max(best, sup_over(phi.zloc, family.loc));
  best = max(best, sup_over(phi.zp, family.zp_primes()));
  best = max(best, sup_over(phi.zpinf, family.zp_inf_primes()));
  return best;
}

ExtInt dim(const CdType& f, const GroupExpr& g) {
  auto family = sigma(g);
  if (f.is_zero()) return 0;
  return dim(to_phi(f), family);
}

int deficiency(const CdType& f, Prime p) {
  require_nonzero(f);
  return f.D().contains(p) ? 1 : 0;
}

bool p_regular(const CdType& f, Prime p) {
  require_nonzero(f);
  return !f.S().contains(p);
}

bool p_singular(const CdType& f, Prime p) { return !p_regular(f, p); }

PowerReport power_report(const CdType& f, std::uint64_t k_max) {
  PowerReport r;
  r.base_norm = norm(f);
  if (!r.base_norm.is_finite() || r.base_norm < 1) {
    throw PreconditionError("power report needs a finite norm >= 1, got " + r.base_norm.to_string());
  }
  ExtInt field_max = extremum(f.d(), Extremum::Sup);
  r.kind = field_max == r.base_norm ? PowerReport::Kind::Basic : PowerReport::Kind::Exceptional;
  CdType power = f;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    if (k > 1) power = sum(power, f);
    ExtInt got = norm(power);
    ExtInt kk = static_cast<std::int64_t>(k);
    ExtInt want = r.kind == PowerReport::Kind::Basic ? kk * r.base_norm : kk * r.base_norm - kk + 1;
    if (got != want) {
      throw Error("power " + std::to_string(k) + " has norm " + got.to_string() + ", expected " + want.to_string());
    }
    r.power_norms.push_back(got);
  }
  return r;
}

CdType test_space(const GroupExpr& g, ExtInt n) {
  auto family = sigma(g);
  if (n < 1) throw PreconditionError("test space needs n >= 1");
  WedgeFamily w;
  if (family.has_q) w.terms.push_back(phi_basis(BasisKind::q(), n));
  auto k = PrimeFn<ExtInt>::constant(n);
  w.families.push_back({BasisKind::Tag::Zloc, family.loc, k});
  w.families.push_back({BasisKind::Tag::Zp, family.zp_primes(), k});
  w.families.push_back({BasisKind::Tag::ZpInf, family.zp_inf_primes(), k});
  return wedge_family(w);
}

ExtInt testing_dim(const CdType& f, const GroupExpr& g, ExtInt n) {
  ExtInt d = dim(f, g);
  bool in_class = false;
  try {
    in_class = norm(f) - d < n;
  } catch (const ArithmeticError&) {
    in_class = false;
  }
  if (!in_class) {
    throw PreconditionError("testing needs ||F|| - dim_G F < n (||F|| = " + norm(f).to_string() +
                            ", dim_G F = " + d.to_string() + ", n = " + n.to_string() + ")");
  }
  return norm(sum(f, test_space(g, n))) - n;
}

ExtInt fundamental_product_dim(const BasisKind& g, ExtInt n, const BasisKind& g2, ExtInt m) {
  if (!(n >= m && m >= 2)) throw PreconditionError("fundamental products need n >= m >= 2");
  return norm(sum(phi_basis(g, n), phi_basis(g2, m)));
}

ExtInt fundamental_product_formula(const BasisKind& g, ExtInt n, const BasisKind& g2, ExtInt m) {
  if (!(n >= m && m >= 2)) throw PreconditionError("fundamental products need n >= m >= 2");
  return to_phi(phi_basis(g2, m)).at(g) + n;
}

bool is_full_valued(const CdType& f) {
  auto phi = to_phi(f);
  return phi == BocksteinFn::constant(phi.q);
}

AnrReport anr_admissible(const CdType& f) {
  AnrReport r;
  auto phi = to_phi(f);
  auto fail = [&](const char* clause) {
    r.admissible = false;
    r.violated.emplace_back(clause);
  };
  if (phi.zloc != phi.zp) fail("a");
  auto lowest = min(extremum(phi.zp.with_zero(phi.q), Extremum::Inf),
                    min(extremum(phi.zpinf.with_zero(phi.q), Extremum::Inf),
                        extremum(phi.zloc.with_zero(phi.q), Extremum::Inf)));
  if (lowest < phi.q) fail("b");
  if (norm(f) == 2 && f != nat(2)) fail("c");
  return r;
}

FibrationBounds fibration_bounds(ExtInt dim_g_y, ExtInt dim_y, ExtInt max_fiber_dim, ExtInt max_fiber_dim_g,
                                 bool pid_with_unity) {
  return {dim_g_y + max_fiber_dim, dim_y + max_fiber_dim_g, dim_g_y + max_fiber_dim_g,
          dim_g_y + max_fiber_dim_g + 1, pid_with_unity};
}

}  // namespace bockstein
