#include "bockstein/groups.hpp"

#include "bockstein/error.hpp"

namespace bockstein {

GroupExpr GroupExpr::zpk(Prime p, std::uint64_t k) {
  if (k < 1) throw PreconditionError("Z/p^k needs k >= 1");
  GroupExpr g = of(Kind::Zpk);
  g.p = p.value();
  g.k = k;
  return g;
}

GroupExpr GroupExpr::zp_inf(Prime p) {
  GroupExpr g = of(Kind::ZpInfinity);
  g.p = p.value();
  return g;
}

GroupExpr GroupExpr::zlocal(PrimeSet l) {
  GroupExpr g = of(Kind::Zlocal);
  g.primes = std::move(l);
  return g;
}

GroupExpr GroupExpr::zinv(Prime p) {
  GroupExpr g = of(Kind::Zinv);
  g.p = p.value();
  return g;
}

GroupExpr GroupExpr::direct_sum(std::vector<GroupExpr> terms) {
  if (terms.empty()) throw PreconditionError("empty direct sum");
  if (terms.size() == 1) return std::move(terms.front());
  GroupExpr g = of(Kind::DirectSum);
  g.terms = std::move(terms);
  return g;
}

GroupExpr GroupExpr::sum_over(PrimeSet ps, Pattern pattern) {
  GroupExpr g = of(Kind::SumOverPrimes);
  g.primes = std::move(ps);
  g.pattern = pattern;
  return g;
}

std::string GroupExpr::to_string() const {
  auto list = [](const PrimeSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.primes().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s.primes()[i].value());
    }
    return out;
  };
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Z: return "Z";
    case Kind::Zpk: return "Z/" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
    case Kind::ZpInfinity: return "Zpinf(" + std::to_string(p) + ")";
    case Kind::Zlocal: return "Zloc{" + list(primes) + "}";
    case Kind::Zinv: return "Zinv(" + std::to_string(p) + ")";
    case Kind::DirectSum: {
      std::string out;
      for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i].to_string();
      return out;
    }
    case Kind::SumOverPrimes: {
      std::string pat = pattern == Pattern::Zp ? "Zp" : "Zpinf";
      if (primes.is_all()) return "SumAll(" + pat + ")";
      return "SumOver(" + primes.to_string() + ", " + pat + ")";
    }
  }
  return "?";
}

bool GroupProfile::is_trivial() const {
  return !tf_div && tor.fallback() == TorStatus::Zero && tor.exceptions().empty();
}

PrimeSet BocksteinFamily::zp_primes() const {
  return tors.where([](TorsionMember m) { return m == TorsionMember::Zp; });
}

PrimeSet BocksteinFamily::zp_inf_primes() const {
  return tors.where([](TorsionMember m) { return m == TorsionMember::ZpInf; });
}

namespace {

GroupProfile torsion_at(const PrimeSet& ps, TorStatus status) {
  GroupProfile g;
  std::vector<PrimeFn<TorStatus>::Exception> ex;
  TorStatus in = status;
  TorStatus out = TorStatus::Zero;
  for (Prime p : ps.primes()) ex.emplace_back(p, ps.is_finite() ? in : out);
  g.tor = PrimeFn<TorStatus>(TorStatus::Zero, ps.is_finite() ? out : in, std::move(ex));
  return g;
}

GroupProfile torsion_free(PrimeSet div) {
  GroupProfile g;
  g.tf_div = std::move(div);
  return g;
}

GroupProfile sum(const GroupProfile& a, const GroupProfile& b) {
  GroupProfile g;
  if (a.tf_div && b.tf_div) {
    g.tf_div = a.tf_div->intersect(*b.tf_div);
  } else {
    g.tf_div = a.tf_div ? a.tf_div : b.tf_div;
  }
  g.tor = combine(a.tor, b.tor, [](TorStatus x, TorStatus y) { return std::max(x, y); });
  return g;
}

// Renders a set of primes as the index range of a family like "Zp(p)".
std::string family_term(const std::string& name, const PrimeSet& ps) {
  if (ps.is_empty()) return "";
  std::string out;
  if (ps.is_finite()) {
    for (std::size_t i = 0; i < ps.primes().size(); ++i) {
      out += (i ? ", " : "") + name + "(" + std::to_string(ps.primes()[i].value()) + ")";
    }
    return out;
  }
  out = name + "(p) for all p";
  const auto& ex = ps.primes();
  if (ex.size() == 1) {
    out += " ≠ " + std::to_string(ex.front().value());
  } else if (!ex.empty()) {
    out += " ∉ " + ps.complement().to_string();
  }
  return out;
}

}  // namespace

GroupProfile normalize(const GroupExpr& expr) {
  using K = GroupExpr::Kind;
  switch (expr.kind) {
    case K::Q: return torsion_free(PrimeSet::all());
    case K::Z: return torsion_free(PrimeSet::empty());
    case K::Zpk: return torsion_at(PrimeSet::finite({Prime(expr.p)}), TorStatus::NonDiv);
    case K::ZpInfinity: return torsion_at(PrimeSet::finite({Prime(expr.p)}), TorStatus::Div);
    case K::Zlocal: return torsion_free(expr.primes.complement());
    case K::Zinv: return torsion_free(PrimeSet::finite({Prime(expr.p)}));
    case K::DirectSum: {
      GroupProfile g = normalize(expr.terms.front());
      for (std::size_t i = 1; i < expr.terms.size(); ++i) g = sum(g, normalize(expr.terms[i]));
      return g;
    }
    case K::SumOverPrimes:
      return torsion_at(expr.primes,
                        expr.pattern == GroupExpr::Pattern::Zp ? TorStatus::NonDiv : TorStatus::Div);
  }
  return {};
}

BocksteinFamily sigma(const GroupProfile& profile) {
  if (profile.is_trivial()) throw TrivialGroupError();
  BocksteinFamily f;
  if (profile.tf_div) {
    f.loc = profile.tf_div->complement();
    f.has_q = profile.tf_div->is_all();
  }
  f.tors = profile.tor.map([](TorStatus s) {
    switch (s) {
      case TorStatus::NonDiv: return TorsionMember::Zp;
      case TorStatus::Div: return TorsionMember::ZpInf;
      case TorStatus::Zero: break;
    }
    return TorsionMember::None;
  });
  return f;
}

std::string BocksteinFamily::to_string() const {
  std::vector<std::string> parts;
  if (has_q) parts.emplace_back("Q");
  for (auto term : {family_term("Zloc", loc), family_term("Zp", zp_primes()), family_term("Zpinf", zp_inf_primes())}) {
    if (!term.empty()) parts.push_back(std::move(term));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace bockstein
