#include "bockstein/cdtype.hpp"

#include <set>

#include "bockstein/error.hpp"

namespace bockstein {

namespace {

// Builds a function from its values at the listed primes and at one prime of
// the remaining region, on which `f` must be constant.
template <class F>
PrimeFn<ExtInt> tabulate(const std::vector<Prime>& listed, F f) {
  std::vector<PrimeFn<ExtInt>::Exception> ex;
  for (Prime p : listed) ex.emplace_back(p, f(p));
  return {0, f(first_prime_not_in(listed)), std::move(ex)};
}

template <class Pred>
PrimeSet tabulate_set(const std::vector<Prime>& listed, Pred pred) {
  bool in_default = pred(first_prime_not_in(listed));
  std::vector<Prime> flip;
  for (Prime p : listed) {
    if (pred(p) != in_default) flip.push_back(p);
  }
  return in_default ? PrimeSet::cofinite(std::move(flip)) : PrimeSet::finite(std::move(flip));
}

std::vector<Prime> merged(std::initializer_list<const std::vector<Prime>*> lists) {
  std::vector<Prime> out;
  for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Prime> listed_primes(const CdType& f) {
  auto d = f.d().exception_primes();
  return merged({&d, &f.S().primes(), &f.D().primes()});
}

ExtInt chi(const PrimeSet& s, Prime p) { return s.contains(p) ? 1 : 0; }

}  // namespace

std::string BasisKind::to_string() const {
  auto arg = [&] { return "(" + std::to_string(p->value()) + ")"; };
  switch (tag) {
    case Tag::Q: return "Q";
    case Tag::Zp: return "Zp" + arg();
    case Tag::ZpInf: return "Zpinf" + arg();
    case Tag::Zloc: return "Zloc" + arg();
  }
  return "?";
}

GroupExpr BasisKind::group() const {
  switch (tag) {
    case Tag::Q: return GroupExpr::q();
    case Tag::Zp: return GroupExpr::zp(*p);
    case Tag::ZpInf: return GroupExpr::zp_inf(*p);
    case Tag::Zloc: return GroupExpr::zlocal(PrimeSet::finite({*p}));
  }
  return GroupExpr::q();
}

BocksteinFn::BocksteinFn(ExtInt q, PrimeFn<ExtInt> zp, PrimeFn<ExtInt> zpinf, PrimeFn<ExtInt> zloc)
    : q(q), zp(zp.with_zero(0)), zpinf(zpinf.with_zero(0)), zloc(zloc.with_zero(0)) {}

BocksteinFn BocksteinFn::constant(ExtInt v) {
  auto c = PrimeFn<ExtInt>(0, v);
  return {v, c, c, c};
}

ExtInt BocksteinFn::at(const BasisKind& g) const {
  switch (g.tag) {
    case BasisKind::Tag::Q: return q;
    case BasisKind::Tag::Zp: return zp.at(*g.p);
    case BasisKind::Tag::ZpInf: return zpinf.at(*g.p);
    case BasisKind::Tag::Zloc: return zloc.at(*g.p);
  }
  return q;
}

std::vector<Prime> BocksteinFn::exception_primes() const { return exception_union(zp, zpinf, zloc); }

std::vector<std::string> validate(const BocksteinFn& phi) {
  std::vector<std::string> out;
  auto listed = phi.exception_primes();
  auto check = [&](Prime p, const std::string& where) {
    ExtInt q = phi.q, zp = phi.zp.at(p), zi = phi.zpinf.at(p), zl = phi.zloc.at(p);
    auto report = [&](bool ok, const char* name) {
      if (!ok) out.push_back(std::string(name) + " at " + where);
    };
    report(zi <= zp, "BI1");
    report(zp <= zi + 1, "BI2");
    report(zp <= zl, "BI3");
    report(q <= zl, "BI4");
    report(zl <= max(q, zi + 1), "BI5");
    report(zi <= max(q, zl - 1), "BI6");
  };
  for (Prime p : listed) check(p, std::to_string(p.value()));
  check(first_prime_not_in(listed), "default");
  return out;
}

BocksteinFn max(const BocksteinFn& a, const BocksteinFn& b) {
  auto m = [](const PrimeFn<ExtInt>& f, const PrimeFn<ExtInt>& g) { return pointwise(PointwiseOp::Max, f, g); };
  return {max(a.q, b.q), m(a.zp, b.zp), m(a.zpinf, b.zpinf), m(a.zloc, b.zloc)};
}

CdType CdType::triple(PrimeSet s, PrimeSet d_set, PrimeFn<ExtInt> d) {
  if (!d_set.is_subset_of(s)) {
    throw InvalidTripleError("D = " + d_set.to_string() + " is not contained in S = " + s.to_string());
  }
  CdType f;
  f.zero_ = false;
  f.s_ = std::move(s);
  f.d_set_ = std::move(d_set);
  f.d_ = std::move(d);
  for (Prime p : region_primes(f.d_, f.s_, f.d_set_)) {
    if (!f.s_.contains(p) && f.d_.at(p) != f.d_.at_zero()) {
      throw InvalidTripleError("d(" + std::to_string(p.value()) + ") = " + f.d_.at(p).to_string() +
                               " differs from d(0) = " + f.d_.at_zero().to_string() + " outside S");
    }
  }
  if (f.s_.is_empty() && f.d_ == PrimeFn<ExtInt>::constant(0)) return zero();
  return f;
}

bool CdType::is_positive() const {
  return zero_ || extremum(d_, Extremum::Inf) >= 1;
}

std::string CdType::to_string() const {
  if (zero_) return "triple(S={}, D={}, d={zero:0, default:0})";
  return "triple(S=" + s_.to_string() + ", D=" + d_set_.to_string() + ", d=" + bockstein::to_string(d_) + ")";
}

BocksteinFn to_phi(const CdType& f) {
  if (f.is_zero()) return BocksteinFn::constant(0);
  auto listed = listed_primes(f);
  const auto& d = f.d();
  ExtInt d0 = d.at_zero();
  auto zpinf = [&](Prime p) { return d.at(p) - chi(f.D(), p); };
  return {d0, tabulate(listed, [&](Prime p) { return d.at(p); }), tabulate(listed, zpinf),
          tabulate(listed, [&](Prime p) { return f.S().contains(p) ? max(d0, zpinf(p) + 1) : d0; })};
}

CdType from_phi(const BocksteinFn& phi) {
  auto violations = validate(phi);
  if (!violations.empty()) throw InvalidPhiError(std::move(violations));
  auto listed = phi.exception_primes();
  auto regular = [&](Prime p) {
    ExtInt v = phi.zp.at(p);
    return v == phi.zpinf.at(p) && v == phi.zloc.at(p) && v == phi.q;
  };
  auto s = tabulate_set(listed, [&](Prime p) { return !regular(p); });
  auto d_set = tabulate_set(listed, [&](Prime p) { return phi.zp.at(p) != phi.zpinf.at(p); });
  return CdType::triple(std::move(s), std::move(d_set), phi.zp.with_zero(phi.q));
}

CdType sum(const CdType& a, const CdType& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return CdType::triple(a.S().union_with(b.S()), a.D().union_with(b.D()), a.d() + b.d());
}

CdType times(const CdType& a, const CdType& b) {
  using Fn = PrimeFn<ExtInt>;
  auto a0 = Fn::constant(a.d().at_zero());
  auto b0 = Fn::constant(b.d().at_zero());
  auto d = (a.d() - a0) * (b.d() - b0) + a0 * b0;
  return CdType::triple(a.S().intersect(b.S()), a.D().intersect(b.D()), std::move(d));
}

CdType wedge(const CdType& a, const CdType& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return from_phi(max(to_phi(a), to_phi(b)));
}

namespace {

BasisKind basis_at(BasisKind::Tag tag, Prime p) { return {tag, tag == BasisKind::Tag::Q ? std::nullopt : std::optional(p)}; }

struct Slots {
  ExtInt zp, zpinf, zloc;
};

Slots slots_at(const BocksteinFn& phi, Prime r) { return {phi.zp.at(r), phi.zpinf.at(r), phi.zloc.at(r)}; }

Slots max(const Slots& a, const Slots& b) {
  return {max(a.zp, b.zp), max(a.zpinf, b.zpinf), max(a.zloc, b.zloc)};
}

BocksteinFn uniform_phi(const UniformFamily& fam) {
  auto ex_primes = fam.k.exception_primes();
  auto listed = merged({&ex_primes, &fam.primes.primes()});
  std::set<ExtInt> all_k{fam.k.fallback()};
  for (const auto& [p, v] : fam.k.exceptions()) {
    if (fam.primes.contains(p)) all_k.insert(v);
  }

  ExtInt q = ExtInt::neg_inf();
  for (ExtInt k : all_k) q = max(q, to_phi(phi_basis(basis_at(fam.pattern, Prime(2)), k)).q);

  auto at = [&](Prime r) {
    Slots best{ExtInt::neg_inf(), ExtInt::neg_inf(), ExtInt::neg_inf()};
    if (fam.primes.contains(r)) best = max(best, slots_at(to_phi(phi_basis(basis_at(fam.pattern, r), fam.k.at(r))), r));
    std::set<ExtInt> others{fam.k.fallback()};
    for (const auto& [p, v] : fam.k.exceptions()) {
      if (p != r && fam.primes.contains(p)) others.insert(v);
    }
    Prime elsewhere = first_prime_not_in({r});
    for (ExtInt k : others) best = max(best, slots_at(to_phi(phi_basis(basis_at(fam.pattern, elsewhere), k)), r));
    return best;
  };
  return {q, tabulate(listed, [&](Prime r) { return at(r).zp; }), tabulate(listed, [&](Prime r) { return at(r).zpinf; }),
          tabulate(listed, [&](Prime r) { return at(r).zloc; })};
}

}  // namespace

BocksteinFn family_phi(const WedgeFamily& family) {
  std::vector<BocksteinFn> parts;
  for (const auto& t : family.terms) parts.push_back(to_phi(t));
  for (const auto& fam : family.families) {
    if (fam.primes.is_empty()) continue;
    if (fam.primes.is_finite()) {
      for (Prime p : fam.primes.primes()) parts.push_back(to_phi(phi_basis(basis_at(fam.pattern, p), fam.k.at(p))));
    } else {
      parts.push_back(uniform_phi(fam));
    }
  }
  if (parts.empty()) return BocksteinFn::constant(0);
  BocksteinFn out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = max(out, parts[i]);
  return out;
}

CdType wedge_family(const WedgeFamily& family) { return from_phi(family_phi(family)); }

ExtInt norm(const CdType& f) {
  if (f.is_zero()) return 0;
  return extremum(f.d() + indicator(f.S().minus(f.D())), Extremum::Sup);
}

ExtInt inferior_norm(const CdType& f) {
  if (f.is_zero()) return 0;
  return extremum(f.d() - indicator(f.D()), Extremum::Inf);
}

CdType conjugate(const CdType& f) {
  if (f.is_zero()) return f;
  if (!extremum(f.d(), Extremum::Sup).is_finite() || !extremum(f.d(), Extremum::Inf).is_finite()) {
    throw ArithmeticError("conjugation needs a finite-valued d");
  }
  return CdType::triple(f.S(), f.S().minus(f.D()), -f.d());
}

bool leq(const BocksteinFn& a, const BocksteinFn& b) {
  if (!(a.q <= b.q)) return false;
  for (Prime p : region_primes(a.zp, a.zpinf, a.zloc, b.zp, b.zpinf, b.zloc)) {
    if (a.zp.at(p) > b.zp.at(p) || a.zpinf.at(p) > b.zpinf.at(p) || a.zloc.at(p) > b.zloc.at(p)) return false;
  }
  return true;
}

bool leq(const CdType& a, const CdType& b) { return leq(to_phi(a), to_phi(b)); }

CdType nat(ExtInt n) { return CdType::triple(PrimeSet::empty(), PrimeSet::empty(), PrimeFn<ExtInt>::constant(n)); }

CdType phi_basis(const BasisKind& g, ExtInt n) {
  if (n < 1) throw PreconditionError("Phi(G, n) needs n >= 1");
  if (n == 1) return nat(1);
  using Fn = PrimeFn<ExtInt>;
  switch (g.tag) {
    case BasisKind::Tag::Q: return CdType::triple(PrimeSet::all(), PrimeSet::empty(), Fn(n, 1));
    case BasisKind::Tag::Zloc:
      return CdType::triple(PrimeSet::cofinite({*g.p}), PrimeSet::empty(), Fn(n, 1, {{*g.p, n}}));
    case BasisKind::Tag::Zp:
      return CdType::triple(PrimeSet::finite({*g.p}), PrimeSet::finite({*g.p}), Fn(1, 1, {{*g.p, n}}));
    case BasisKind::Tag::ZpInf:
      return CdType::triple(PrimeSet::finite({*g.p}), PrimeSet::empty(), Fn(1, 1, {{*g.p, n - 1}}));
  }
  return nat(1);
}

Decomposition decompose(const CdType& f) {
  if (f.is_zero() || inferior_norm(f) < 1) {
    throw PreconditionError("decomposition needs a nonzero cd-type with all dimensions >= 1");
  }
  auto listed = listed_primes(f);
  const auto& d = f.d();
  Decomposition out;
  out.k_q = d.at_zero();
  out.k_zloc = tabulate(listed, [&](Prime p) { return f.S().contains(p) ? ExtInt(1) : d.at(p); });
  out.k_zp = tabulate(listed, [&](Prime p) { return f.D().contains(p) ? d.at(p) : ExtInt(1); });
  out.k_zpinf = tabulate(listed, [&](Prime p) {
    return f.S().contains(p) && !f.D().contains(p) ? d.at(p) + 1 : ExtInt(1);
  });
  return out;
}

WedgeFamily Decomposition::family() const {
  WedgeFamily w;
  w.terms.push_back(phi_basis(BasisKind::q(), k_q));
  w.families.push_back({BasisKind::Tag::Zloc, PrimeSet::all(), k_zloc});
  w.families.push_back({BasisKind::Tag::Zp, PrimeSet::all(), k_zp});
  w.families.push_back({BasisKind::Tag::ZpInf, PrimeSet::all(), k_zpinf});
  return w;
}

std::string Decomposition::to_string() const {
  std::vector<std::string> parts;
  bool has_ones = k_q == 1;
  if (k_q > 1) parts.push_back("Phi(Q," + k_q.to_string() + ")");
  auto family = [&](const char* name, const PrimeFn<ExtInt>& k) {
    for (const auto& [p, v] : k.exceptions()) {
      if (v > 1) {
        parts.push_back(std::string("Phi(") + name + "(" + std::to_string(p.value()) + ")," + v.to_string() + ")");
      } else {
        has_ones = true;
      }
    }
    if (k.fallback() > 1) {
      parts.push_back(std::string("Phi(") + name + "(p)," + k.fallback().to_string() + ") for all " +
                      (k.exceptions().empty() ? "p" : "other p"));
    } else {
      has_ones = true;
    }
  };
  family("Zloc", k_zloc);
  family("Zp", k_zp);
  family("Zpinf", k_zpinf);
  if (has_ones) parts.emplace_back("1-types");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ∨ " : "") + parts[i];
  return out;
}

CdType scale(std::uint64_t k, const CdType& f) {
  if (k < 1) throw PreconditionError("scale needs k >= 1");
  CdType out = f;
  for (std::uint64_t i = 1; i < k; ++i) out = sum(out, f);
  return out;
}

}  // namespace bockstein
