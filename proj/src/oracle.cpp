#include "bockstein/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "bockstein/dimension.hpp"
#include "bockstein/error.hpp"

namespace bockstein {

namespace {

struct Profile {
  ExtInt zp, zpinf, zloc;
};

bool bi_valid(ExtInt q, const Profile& s) {
  return s.zpinf <= s.zp && s.zp <= s.zpinf + 1 && s.zp <= s.zloc && q <= s.zloc &&
         s.zloc <= max(q, s.zpinf + 1) && s.zpinf <= max(q, s.zloc - 1);
}

std::vector<Profile> profiles(ExtInt q, std::int64_t bound) {
  std::vector<Profile> out;
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 1; b <= bound; ++b) {
      for (std::int64_t c = 1; c <= bound; ++c) {
        Profile s{a, b, c};
        if (bi_valid(q, s)) out.push_back(s);
      }
    }
  }
  return out;
}

void check_universe(const Universe& u) {
  if (u.primes.empty()) throw PreconditionError("universe needs at least one prime");
  if (u.value_bound < 1) throw PreconditionError("universe bound must be >= 1");
}

}  // namespace

std::vector<BocksteinFn> enumerate_phis(const Universe& u) {
  check_universe(u);
  std::vector<BocksteinFn> out;
  const std::size_t slots = u.primes.size() + 1;  // listed primes, then the default region
  for (std::int64_t q = 1; q <= u.value_bound; ++q) {
    auto prof = profiles(q, u.value_bound);
    std::vector<std::size_t> idx(slots, 0);
    while (true) {
      const Profile& def = prof[idx.back()];
      std::vector<PrimeFn<ExtInt>::Exception> zp, zi, zl;
      for (std::size_t i = 0; i + 1 < slots; ++i) {
        zp.emplace_back(u.primes[i], prof[idx[i]].zp);
        zi.emplace_back(u.primes[i], prof[idx[i]].zpinf);
        zl.emplace_back(u.primes[i], prof[idx[i]].zloc);
      }
      out.emplace_back(q, PrimeFn<ExtInt>(0, def.zp, zp), PrimeFn<ExtInt>(0, def.zpinf, zi),
                       PrimeFn<ExtInt>(0, def.zloc, zl));
      std::size_t k = 0;
      while (k < slots && ++idx[k] == prof.size()) idx[k++] = 0;
      if (k == slots) break;
    }
  }
  return out;
}

std::vector<CdType> enumerate_types(const Universe& u) {
  std::vector<CdType> out;
  for (const auto& phi : enumerate_phis(u)) out.push_back(from_phi(phi));
  return out;
}

namespace {

enum class Region : std::uint8_t { Out, Singular, Deficient };

// Calls `emit` for every extended triple with the given per-slot value caps.
// Slot order: the listed primes, then the default region; `zero_cap` bounds d(0).
void for_each_extended(const Universe& u, const std::vector<std::int64_t>& caps, std::int64_t zero_cap,
                       const std::function<void(const CdType&)>& emit) {
  const std::int64_t b = u.value_bound;
  const std::size_t slots = u.primes.size() + 1;
  std::vector<int> region(slots, 0);
  while (true) {
    for (std::int64_t v0 = -b; v0 <= zero_cap; ++v0) {
      std::vector<std::int64_t> lo(slots), hi(slots);
      bool feasible = true;
      for (std::size_t i = 0; i < slots; ++i) {
        if (static_cast<Region>(region[i]) == Region::Out) {
          lo[i] = hi[i] = v0;
          feasible = feasible && v0 <= caps[i];
        } else {
          lo[i] = -b;
          hi[i] = caps[i];
        }
        feasible = feasible && lo[i] <= hi[i];
      }
      if (!feasible) continue;
      std::vector<std::int64_t> val = lo;
      std::vector<Prime> s_in, d_in;
      bool def_s = static_cast<Region>(region.back()) != Region::Out;
      bool def_d = static_cast<Region>(region.back()) == Region::Deficient;
      for (std::size_t i = 0; i + 1 < slots; ++i) {
        auto r = static_cast<Region>(region[i]);
        if ((r != Region::Out) != def_s) s_in.push_back(u.primes[i]);
        if ((r == Region::Deficient) != def_d) d_in.push_back(u.primes[i]);
      }
      auto s = def_s ? PrimeSet::cofinite(s_in) : PrimeSet::finite(s_in);
      auto d = def_d ? PrimeSet::cofinite(d_in) : PrimeSet::finite(d_in);
      while (true) {
        std::vector<PrimeFn<ExtInt>::Exception> ex;
        for (std::size_t i = 0; i + 1 < slots; ++i) ex.emplace_back(u.primes[i], val[i]);
        emit(CdType::triple(s, d, PrimeFn<ExtInt>(v0, val.back(), std::move(ex))));
        std::size_t k = 0;
        while (k < slots && ++val[k] > hi[k]) {
          val[k] = lo[k];
          ++k;
        }
        if (k == slots) break;
      }
    }
    std::size_t k = 0;
    while (k < slots && ++region[k] == 3) region[k++] = 0;
    if (k == slots) break;
  }
}

}  // namespace

std::vector<CdType> enumerate_extended(const Universe& u) {
  check_universe(u);
  std::vector<CdType> out;
  std::vector<std::int64_t> caps(u.primes.size() + 1, u.value_bound);
  for_each_extended(u, caps, u.value_bound, [&](const CdType& f) { out.push_back(f); });
  return out;
}

bool LawReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.pass(); });
}

namespace {

constexpr std::size_t kKeptFailures = 5;

class Checker {
 public:
  explicit Checker(std::string law) { result_.law = std::move(law); }

  template <class Describe>
  void expect(bool ok, Describe describe) {
    ++result_.checked;
    if (ok) return;
    ++result_.failed;
    if (result_.failures.size() < kKeptFailures) result_.failures.push_back(describe());
  }

  void expect_eq(ExtInt want, ExtInt got, const std::function<std::string()>& inputs) {
    expect(want == got, [&] { return LawFailure{inputs(), want.to_string(), got.to_string()}; });
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

std::string show(const CdType& f) { return f.to_string(); }
std::string show(const CdType& a, const CdType& b) { return show(a) + " ; " + show(b); }
std::string show(const CdType& a, const CdType& b, const CdType& c) { return show(a, b) + " ; " + show(c); }

struct Context {
  const Universe& u;
  const LawOptions& opt;
  std::vector<BocksteinFn> phis;
  std::vector<CdType> types;
  std::vector<Prime> probes;  // universe primes plus one prime of the default region
  std::vector<GroupExpr> groups;
  std::vector<GroupExpr> torsion_free;
  std::vector<BasisKind> bases;
  std::mt19937_64 rng;

  Context(const Universe& universe, const LawOptions& options) : u(universe), opt(options), rng(options.seed) {
    phis = enumerate_phis(u);
    for (const auto& phi : phis) types.push_back(from_phi(phi));
    probes = u.primes;
    std::sort(probes.begin(), probes.end());
    Prime outside = first_prime_not_in(probes);
    probes.push_back(outside);

    Prime p = u.primes.front();
    Prime r = u.primes.size() > 1 ? u.primes[1] : outside;
    torsion_free = {GroupExpr::z(),
                    GroupExpr::q(),
                    GroupExpr::zlocal(PrimeSet::finite({p})),
                    GroupExpr::zlocal(PrimeSet::finite(u.primes)),
                    GroupExpr::zinv(p),
                    GroupExpr::zinv(outside)};
    groups = torsion_free;
    for (Prime x : probes) {
      groups.push_back(GroupExpr::zp(x));
      groups.push_back(GroupExpr::zp_inf(x));
    }
    groups.push_back(GroupExpr::zpk(p, 2));
    groups.push_back(GroupExpr::sum_over(PrimeSet::all(), GroupExpr::Pattern::Zp));
    groups.push_back(GroupExpr::sum_over(PrimeSet::cofinite({p}), GroupExpr::Pattern::ZpInfinity));
    groups.push_back(GroupExpr::direct_sum({GroupExpr::zp(p), GroupExpr::q()}));
    groups.push_back(GroupExpr::direct_sum({GroupExpr::zp_inf(r), GroupExpr::z()}));

    for (Prime x : probes) {
      bases.push_back(BasisKind::zp(x));
      bases.push_back(BasisKind::zp_inf(x));
      bases.push_back(BasisKind::zloc(x));
    }
    bases.push_back(BasisKind::q());
  }

  template <class F>
  void for_pairs(F f) {
    const std::uint64_t n = types.size();
    if (n * n <= opt.exhaustive_limit) {
      for (const auto& a : types) {
        for (const auto& b : types) f(a, b);
      }
      return;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      const auto& a = types[pick(rng)];
      f(a, types[pick(rng)]);
    }
  }

  template <class F>
  void for_triples(F f) {
    const std::uint64_t n = types.size();
    if (n * n * n <= opt.exhaustive_limit) {
      for (const auto& a : types) {
        for (const auto& b : types) {
          for (const auto& c : types) f(a, b, c);
        }
      }
      return;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
      const auto& a = types[pick(rng)];
      const auto& b = types[pick(rng)];
      f(a, b, types[pick(rng)]);
    }
  }

  // All phi values of the basis members living at the probe primes, and Q.
  std::vector<std::pair<BasisKind, ExtInt>> slots(const BocksteinFn& phi) const {
    std::vector<std::pair<BasisKind, ExtInt>> out;
    for (const auto& g : bases) out.emplace_back(g, phi.at(g));
    return out;
  }
};

using Law = std::function<LawResult(Context&)>;

LawResult law_bijection(Context& c) {
  Checker k("bijection");
  for (const auto& phi : c.phis) {
    CdType f = from_phi(phi);
    k.expect(to_phi(f) == phi, [&] { return LawFailure{show(f), "to_phi(from_phi(phi)) = phi", "differs"}; });
    k.expect(from_phi(to_phi(f)) == f, [&] { return LawFailure{show(f), show(f), show(from_phi(to_phi(f)))}; });
  }
  return k.take();
}

LawResult law_closure(Context& c) {
  Checker k("closure");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    for (int op = 0; op < 3; ++op) {
      CdType r = op == 0 ? sum(a, b) : op == 1 ? times(a, b) : wedge(a, b);
      auto phi = to_phi(r);
      auto bad = validate(phi);
      k.expect(bad.empty() && from_phi(phi) == r, [&] {
        return LawFailure{show(a, b) + " op " + std::to_string(op), "valid", bad.empty() ? "round trip" : bad.front()};
      });
      if (op != 1) k.expect(r.is_positive(), [&] { return LawFailure{show(a, b), "positive", show(r)}; });
    }
  });
  return k.take();
}

LawResult law_norm_sandwich(Context& c) {
  Checker k("norm-sandwich");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    ExtInt s = norm(sum(a, b));
    bool ok = inferior_norm(a) + norm(b) <= s && s <= norm(a) + norm(b);
    k.expect(ok, [&] { return LawFailure{show(a, b), "|a| + ||b|| <= ||a [+] b|| <= ||a|| + ||b||", s.to_string()}; });
  });
  return k.take();
}

LawResult law_norm_phi(Context& c) {
  Checker k("norm-phi");
  for (const auto& f : c.types) {
    auto phi = to_phi(f);
    ExtInt hi = phi.q, lo = phi.q;
    for (const auto& [g, v] : c.slots(phi)) {
      hi = max(hi, v);
      lo = min(lo, v);
    }
    k.expect_eq(hi, norm(f), [&] { return show(f) + " norm"; });
    k.expect_eq(lo, inferior_norm(f), [&] { return show(f) + " inferior norm"; });
  }
  return k.take();
}

LawResult law_conjugation(Context& c) {
  Checker k("conjugation");
  auto check = [&](const CdType& f) {
    if (f.is_zero()) return;
    CdType g = conjugate(f);
    k.expect(conjugate(g) == f, [&] { return LawFailure{show(f), show(f), show(conjugate(g))}; });
    CdType s = sum(f, g);
    CdType want = CdType::triple(f.S(), f.S(), PrimeFn<ExtInt>::constant(0));
    k.expect(s == want, [&] { return LawFailure{show(f), show(want), show(s)}; });
    k.expect_eq(0, norm(s), [&] { return show(f) + " norm of F [+] conj F"; });
  };
  for (const auto& f : c.types) check(f);
  Universe ext{{c.u.primes.front()}, c.u.value_bound, true};
  for (const auto& f : enumerate_extended(ext)) check(f);
  return k.take();
}

LawResult law_conjugate_maximal(Context& c) {
  Checker k("conjugate-maximal");
  std::vector<const CdType*> pool;
  for (const auto& f : c.types) {
    if (extremum(f.d(), Extremum::Sup) <= c.u.value_bound) pool.push_back(&f);
  }
  std::shuffle(pool.begin(), pool.end(), c.rng);
  const std::uint64_t budget = std::max<std::uint64_t>(c.opt.samples * 5, c.opt.exhaustive_limit);
  std::uint64_t spent = 0;
  for (const CdType* fp : pool) {
    if (spent >= budget) break;
    const CdType& f = *fp;
    CdType bar = conjugate(f);
    // ||F [+] F'|| <= 0 forces d' <= -d slotwise, so only those F' are visited.
    std::vector<std::int64_t> caps;
    for (Prime p : c.u.primes) caps.push_back(-f.d().at(p).value());
    caps.push_back(-f.d().fallback().value());
    bool found_bar = false;
    for_each_extended(c.u, caps, -f.d().at_zero().value(), [&](const CdType& g) {
      ++spent;
      if (norm(sum(f, g)) > 0) return;
      found_bar = found_bar || g == bar;
      k.expect(leq(g, bar), [&] { return LawFailure{show(f, g), "F' <= conj F", "not below"}; });
    });
    k.expect(found_bar, [&] { return LawFailure{show(f), "conj F among the admissible F'", "missing"}; });
  }
  return k.take();
}

LawResult law_distributivity_times(Context& c) {
  Checker k("distributivity-times");
  c.for_triples([&](const CdType& a, const CdType& b, const CdType& x) {
    CdType lhs = times(a, sum(b, x));
    CdType rhs = sum(times(a, b), times(a, x));
    k.expect(lhs == rhs, [&] { return LawFailure{show(a, b, x), show(lhs), show(rhs)}; });
  });
  return k.take();
}

LawResult law_distributivity_wedge(Context& c) {
  Checker k("distributivity-wedge");
  c.for_triples([&](const CdType& a, const CdType& b, const CdType& x) {
    CdType lhs = sum(a, wedge(b, x));
    CdType rhs = wedge(sum(a, b), sum(a, x));
    k.expect(lhs == rhs, [&] { return LawFailure{show(a, b, x), show(lhs), show(rhs)}; });
  });
  return k.take();
}

LawResult law_decomposition(Context& c) {
  Checker k("decomposition");
  for (const auto& f : c.types) {
    CdType back = wedge_family(decompose(f).family());
    k.expect(back == f, [&] { return LawFailure{show(f), show(f), show(back)}; });
  }
  return k.take();
}

LawResult law_alternative(Context& c) {
  Checker k("alternative");
  for (const auto& f : c.types) {
    auto phi = to_phi(f);
    for (Prime p : c.probes) {
      ExtInt zl = phi.zloc.at(p), zi = phi.zpinf.at(p);
      k.expect(zl == phi.q || zl == zi + 1, [&] {
        return LawFailure{show(f) + " at " + std::to_string(p.value()), "phi(Q) or phi(Zpinf)+1", zl.to_string()};
      });
      if (f.S().contains(p)) {
        k.expect_eq(max(phi.q, zi + 1), zl, [&] { return show(f) + " singular at " + std::to_string(p.value()); });
      }
    }
  }
  return k.take();
}

LawResult law_field_bound(Context& c) {
  Checker k("field-bound");
  for (const auto& f : c.types) {
    ExtInt bound = extremum(f.d(), Extremum::Sup) + 1;
    k.expect(norm(f) <= bound, [&] { return LawFailure{show(f), "<= " + bound.to_string(), norm(f).to_string()}; });
  }
  return k.take();
}

LawResult law_field_additivity(Context& c) {
  Checker k("field-additivity");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto pa = to_phi(a), pb = to_phi(b), ps = to_phi(sum(a, b));
    k.expect_eq(pa.q + pb.q, ps.q, [&] { return show(a, b) + " at Q"; });
    for (Prime p : c.probes) {
      k.expect_eq(pa.zp.at(p) + pb.zp.at(p), ps.zp.at(p), [&] { return show(a, b) + " at Zp(" + std::to_string(p.value()) + ")"; });
    }
  });
  return k.take();
}

LawResult law_product_bounds(Context& c) {
  Checker k("product-bounds");
  std::vector<BocksteinFamily> tf, all;
  for (const auto& g : c.torsion_free) tf.push_back(sigma(g));
  for (const auto& g : c.groups) all.push_back(sigma(g));
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto pa = to_phi(a), pb = to_phi(b), ps = to_phi(sum(a, b));
    for (std::size_t i = 0; i < tf.size(); ++i) {
      ExtInt bound = dim(pa, tf[i]) + dim(pb, tf[i]);
      k.expect(dim(ps, tf[i]) <= bound, [&] {
        return LawFailure{show(a, b) + " G=" + c.torsion_free[i].to_string(), "<= " + bound.to_string(), dim(ps, tf[i]).to_string()};
      });
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      ExtInt bound = dim(pa, all[i]) + dim(pb, all[i]) + 1;
      k.expect(dim(ps, all[i]) <= bound, [&] {
        return LawFailure{show(a, b) + " G=" + c.groups[i].to_string(), "<= " + bound.to_string(), dim(ps, all[i]).to_string()};
      });
    }
  });
  return k.take();
}

LawResult law_regular_factor(Context& c) {
  Checker k("regular-factor");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto pa = to_phi(a), pb = to_phi(b), ps = to_phi(sum(a, b));
    for (Prime p : c.probes) {
      if (!p_regular(a, p)) continue;
      for (const auto& g : {BasisKind::zp(p), BasisKind::zp_inf(p), BasisKind::zloc(p)}) {
        k.expect_eq(pa.at(g) + pb.at(g), ps.at(g), [&] { return show(a, b) + " G=" + g.to_string(); });
      }
    }
  });
  return k.take();
}

LawResult law_deficiency_rule(Context& c) {
  Checker k("deficiency-rule");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto ps = to_phi(sum(a, b));
    for (Prime p : c.probes) {
      ExtInt ea = deficiency(a, p), eb = deficiency(b, p);
      ExtInt got = ps.zp.at(p) - ps.zpinf.at(p);
      k.expect_eq(ea + eb - ea * eb, got, [&] { return show(a, b) + " at " + std::to_string(p.value()); });
    }
  });
  return k.take();
}

LawResult law_singular_product(Context& c) {
  Checker k("singular-product");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto pa = to_phi(a), pb = to_phi(b), ps = to_phi(sum(a, b));
    for (Prime p : c.probes) {
      if (!p_singular(a, p) || !p_singular(b, p)) continue;
      ExtInt ea = deficiency(a, p), eb = deficiency(b, p);
      auto where = [&] { return show(a, b) + " at " + std::to_string(p.value()); };
      k.expect_eq(pa.zpinf.at(p) + pb.zpinf.at(p) + ea * eb, ps.zpinf.at(p), where);
      k.expect_eq(max(ps.zpinf.at(p) + 1, ps.q), ps.zloc.at(p), where);
    }
  });
  return k.take();
}

LawResult law_power_dichotomy(Context& c) {
  Checker k("power-dichotomy");
  for (const auto& f : c.types) {
    ExtInt n = norm(f);
    if (!n.is_finite()) continue;
    bool basic = extremum(f.d(), Extremum::Sup) == n;
    CdType power = f;
    for (std::int64_t j = 2; j <= 4; ++j) {
      power = sum(power, f);
      ExtInt got = norm(power);
      ExtInt want = basic ? n * j : n * j - j + 1;
      k.expect_eq(want, got, [&] { return show(f) + " power " + std::to_string(j) + (basic ? " basic" : " exceptional"); });
    }
  }
  return k.take();
}

LawResult law_norm_with_basis(Context& c) {
  Checker k("norm-with-basis");
  std::map<std::pair<std::size_t, std::int64_t>, CdType> cache;
  for (const auto& f : c.types) {
    ExtInt nf = norm(f);
    auto phi = to_phi(f);
    for (std::size_t i = 0; i < c.bases.size(); ++i) {
      for (std::int64_t n = 1; n <= c.u.value_bound + 1; ++n) {
        auto key = std::make_pair(i, n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, phi_basis(c.bases[i], n)).first;
        ExtInt got = norm(sum(f, it->second));
        ExtInt base = phi.at(c.bases[i]) + n;
        ExtInt want = nf >= n ? max(nf + 1, base) : base;
        k.expect_eq(want, got, [&] { return show(f) + " [+] Phi(" + c.bases[i].to_string() + "," + std::to_string(n) + ")"; });
      }
    }
  }
  return k.take();
}

LawResult law_testing_identity(Context& c) {
  Checker k("testing-identity");
  std::vector<BocksteinFamily> fams;
  for (const auto& g : c.groups) fams.push_back(sigma(g));
  std::map<std::pair<std::size_t, std::int64_t>, CdType> spaces;
  for (const auto& f : c.types) {
    ExtInt nf = norm(f);
    if (!nf.is_finite()) continue;
    auto phi = to_phi(f);
    for (std::size_t i = 0; i < c.groups.size(); ++i) {
      ExtInt dg = dim(phi, fams[i]);
      for (std::int64_t n = 1; n <= nf.value() + 2; ++n) {
        if (!(nf - dg < n)) continue;
        auto key = std::make_pair(i, n);
        auto it = spaces.find(key);
        if (it == spaces.end()) it = spaces.emplace(key, test_space(c.groups[i], n)).first;
        ExtInt got = norm(sum(f, it->second)) - n;
        k.expect_eq(dg, got, [&] { return show(f) + " G=" + c.groups[i].to_string() + " n=" + std::to_string(n); });
      }
    }
  }
  return k.take();
}

LawResult law_scaling(Context& c) {
  Checker k("scaling");
  for (const auto& g : c.bases) {
    for (std::int64_t n = 2; n <= c.u.value_bound + 1; ++n) {
      CdType f = phi_basis(g, n);
      for (std::int64_t j = 2; j <= 4; ++j) {
        std::int64_t m = g.tag == BasisKind::Tag::ZpInf ? j * n - j + 1 : j * n;
        CdType want = wedge(phi_basis(g, m), nat(j));
        CdType got = scale(static_cast<std::uint64_t>(j), f);
        k.expect(want == got, [&] {
          return LawFailure{std::to_string(j) + " Phi(" + g.to_string() + "," + std::to_string(n) + ")", show(want), show(got)};
        });
      }
    }
  }
  return k.take();
}

LawResult law_full_valued_factor(Context& c) {
  Checker k("full-valued-factor");
  std::vector<BocksteinFamily> fams;
  for (const auto& g : c.groups) fams.push_back(sigma(g));
  c.for_pairs([&](const CdType& a, const CdType& b) {
    if (!is_full_valued(a)) return;
    k.expect_eq(norm(a) + norm(b), norm(sum(a, b)), [&] { return show(a, b); });
    auto pa = to_phi(a), pb = to_phi(b), ps = to_phi(sum(a, b));
    for (std::size_t i = 0; i < fams.size(); ++i) {
      k.expect_eq(dim(pa, fams[i]) + dim(pb, fams[i]), dim(ps, fams[i]),
                  [&] { return show(a, b) + " G=" + c.groups[i].to_string(); });
    }
  });
  return k.take();
}

LawResult law_same_type(Context& c) {
  Checker k("same-type");
  c.for_pairs([&](const CdType& a, const CdType& b) {
    auto pa = to_phi(a), pb = to_phi(b);
    k.expect((pa == pb) == (a == b), [&] { return LawFailure{show(a, b), "equal phi iff equal types", "mismatch"}; });
    if (a == b) return;
    ExtInt na = norm(a), nb = norm(b);
    if (!na.is_finite() || !nb.is_finite()) return;
    // A test space separates the two types.
    for (const auto& g : c.bases) {
      if (pa.at(g) == pb.at(g)) continue;
      ExtInt n = max(na, nb) + 1;
      CdType t = phi_basis(g, n);
      ExtInt da = norm(sum(a, t)), db = norm(sum(b, t));
      k.expect(da != db, [&] { return LawFailure{show(a, b) + " G=" + g.to_string(), "different product dimensions", da.to_string()}; });
      break;
    }
  });
  return k.take();
}

LawResult law_anr_basic(Context& c) {
  Checker k("anr-basic");
  for (const auto& f : c.types) {
    if (!norm(f).is_finite() || !anr_admissible(f).admissible) continue;
    k.expect(extremum(f.d(), Extremum::Sup) == norm(f), [&] { return LawFailure{show(f), "basic type", "exceptional"}; });
  }
  return k.take();
}

LawResult law_direct_sum(Context& c) {
  Checker k("direct-sum");
  std::vector<BocksteinFamily> fams;
  for (const auto& g : c.groups) fams.push_back(sigma(g));
  std::vector<std::vector<BocksteinFamily>> sums(c.groups.size());
  for (std::size_t i = 0; i < c.groups.size(); ++i) {
    for (std::size_t j = 0; j < c.groups.size(); ++j) {
      sums[i].push_back(sigma(GroupExpr::direct_sum({c.groups[i], c.groups[j]})));
    }
  }
  for (const auto& f : c.types) {
    auto phi = to_phi(f);
    for (std::size_t i = 0; i < c.groups.size(); ++i) {
      for (std::size_t j = 0; j < c.groups.size(); ++j) {
        k.expect_eq(max(dim(phi, fams[i]), dim(phi, fams[j])), dim(phi, sums[i][j]), [&] {
          return show(f) + " G=" + c.groups[i].to_string() + " + " + c.groups[j].to_string();
        });
      }
    }
  }
  return k.take();
}

LawResult law_torsion_split(Context& c) {
  Checker k("torsion-split");
  Prime p = c.u.primes.front();
  Prime r = c.probes.back();
  struct Split {
    GroupExpr whole, tor, free;
  };
  std::vector<Split> splits = {
      {GroupExpr::direct_sum({GroupExpr::zp(p), GroupExpr::q()}), GroupExpr::zp(p), GroupExpr::q()},
      {GroupExpr::direct_sum({GroupExpr::zp_inf(p), GroupExpr::z()}), GroupExpr::zp_inf(p), GroupExpr::z()},
      {GroupExpr::direct_sum({GroupExpr::zpk(r, 3), GroupExpr::zinv(p)}), GroupExpr::zpk(r, 3), GroupExpr::zinv(p)},
      {GroupExpr::direct_sum({GroupExpr::sum_over(PrimeSet::all(), GroupExpr::Pattern::Zp), GroupExpr::zlocal(PrimeSet::finite({p}))}),
       GroupExpr::sum_over(PrimeSet::all(), GroupExpr::Pattern::Zp), GroupExpr::zlocal(PrimeSet::finite({p}))},
  };
  for (const auto& f : c.types) {
    for (const auto& s : splits) {
      k.expect_eq(max(dim(f, s.tor), dim(f, s.free)), dim(f, s.whole), [&] { return show(f) + " G=" + s.whole.to_string(); });
    }
  }
  return k.take();
}

LawResult law_bockstein_sup(Context& c) {
  Checker k("bockstein-sup");
  auto small = primes_up_to(100);
  for (const auto& f : c.types) {
    auto phi = to_phi(f);
    for (const auto& g : c.groups) {
      auto fam = sigma(g);
      ExtInt brute = ExtInt::neg_inf();
      if (fam.has_q) brute = phi.q;
      for (Prime p : small) {
        if (fam.loc.contains(p)) brute = max(brute, phi.zloc.at(p));
        if (fam.zp_primes().contains(p)) brute = max(brute, phi.zp.at(p));
        if (fam.zp_inf_primes().contains(p)) brute = max(brute, phi.zpinf.at(p));
      }
      k.expect_eq(brute, dim(f, g), [&] { return show(f) + " G=" + g.to_string(); });
    }
  }
  return k.take();
}

const std::vector<std::pair<std::string, Law>>& registry() {
  static const std::vector<std::pair<std::string, Law>> laws = {
      {"bijection", law_bijection},
      {"closure", law_closure},
      {"norm-sandwich", law_norm_sandwich},
      {"norm-phi", law_norm_phi},
      {"conjugation", law_conjugation},
      {"conjugate-maximal", law_conjugate_maximal},
      {"distributivity-times", law_distributivity_times},
      {"distributivity-wedge", law_distributivity_wedge},
      {"decomposition", law_decomposition},
      {"alternative", law_alternative},
      {"field-bound", law_field_bound},
      {"field-additivity", law_field_additivity},
      {"product-bounds", law_product_bounds},
      {"regular-factor", law_regular_factor},
      {"deficiency-rule", law_deficiency_rule},
      {"singular-product", law_singular_product},
      {"power-dichotomy", law_power_dichotomy},
      {"norm-with-basis", law_norm_with_basis},
      {"testing-identity", law_testing_identity},
      {"scaling", law_scaling},
      {"full-valued-factor", law_full_valued_factor},
      {"same-type", law_same_type},
      {"anr-basic", law_anr_basic},
      {"direct-sum", law_direct_sum},
      {"torsion-split", law_torsion_split},
      {"bockstein-sup", law_bockstein_sup},
  };
  return laws;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, law] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

LawReport check_laws(const Universe& u, const LawOptions& options) {
  check_universe(u);
  std::vector<std::string> wanted = options.laws;
  if (wanted.empty() || (wanted.size() == 1 && wanted.front() == "all")) wanted = law_names();
  for (const auto& w : wanted) {
    if (std::find(law_names().begin(), law_names().end(), w) == law_names().end()) {
      throw PreconditionError("unknown law '" + w + "'");
    }
  }
  Context ctx(u, options);
  LawReport report;
  report.universe_size = ctx.types.size();
  for (const auto& [name, law] : registry()) {
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) report.results.push_back(law(ctx));
  }
  return report;
}

}  // namespace bockstein
