#include <sstream>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"
#include "bockstein/oracle.hpp"
#include "commands.hpp"

namespace bockstein::cli {

namespace h = homology;

namespace {

struct Checks {
  Json list = Json::array();
  std::string text;
  bool pass = true;

  void add(const std::string& claim, bool ok, const std::string& detail) {
    pass = pass && ok;
    list.push_back(Json{{"claim", claim}, {"pass", ok}, {"detail", detail}});
    text += (ok ? "PASS " : "FAIL ") + claim;
    if (!detail.empty()) text += " [" + detail + "]";
    text += "\n";
  }

  Output finish(const std::string& target, Json params) {
    Json j{{"kind", "verify"}, {"target", target}};
    for (auto& [k, v] : params.items()) j[k] = v;
    j["pass"] = pass;
    j["checks"] = list;
    text += "verify " + target + ": " + (pass ? "pass" : "fail") + "\n";
    return {text, j, pass ? 0 : 1};
  }
};

std::uint64_t other_prime(std::uint64_t p, std::uint64_t q) {
  if (q != 0) {
    if (!is_prime(q) || q == p) throw PreconditionError("--q must be a prime different from --p");
    return q;
  }
  return p == 5 ? 7 : 5;
}

std::string iso_detail(const h::InducedMapReport& r) {
  std::ostringstream s;
  s << "ranks " << r.source_rank << " -> " << r.target_rank << (r.injective ? ", injective" : "")
    << (r.surjective ? ", surjective" : "");
  return s.str();
}

void vanishing(Checks& c, const std::string& space, const h::ChainComplex& cx, const h::Coefficients& coeff,
               std::size_t degree) {
  auto g = h::cohomology(cx, coeff).at(degree);
  c.add("H^" + std::to_string(degree) + "(" + space + "; " + coeff.to_string() + ") = 0", g.is_zero(), g.to_string());
}

Output verify_mp_pair(const VerifyArgs& a) {
  Checks c;
  auto mp = h::mp_pair(a.p);
  auto rel = mp.m.relative_chain_complex(mp.boundary);
  auto xi = mp.xi.relative_chain_map(mp.boundary, mp.disk_boundary);
  std::vector<h::Coefficients> coeffs;
  if (a.coeff.empty()) {
    coeffs = {h::Coefficients::q(), h::Coefficients::zmod(other_prime(a.p, a.q)), h::Coefficients::zmod(a.p)};
  } else {
    coeffs = {h::Coefficients::parse(a.coeff)};
  }
  for (const auto& co : coeffs) {
    if (co == h::Coefficients::zmod(a.p)) {
      auto r = h::induced(xi, 2, co, true);
      c.add("xi^*: H^2(D, dD; Z/" + std::to_string(a.p) + ") -> H^2(M_p, dM_p; Z/" + std::to_string(a.p) + ") is iso",
            r.iso, iso_detail(r));
    } else if (co.kind == h::Coefficients::Kind::Q || (co.kind == h::Coefficients::Kind::Zmod && co.p != a.p)) {
      vanishing(c, "M_p, dM_p", rel, co, 2);
    } else {
      throw PreconditionError("mp-pair checks Q, Z/q with q != p, or Z/p; got " + co.to_string());
    }
  }
  return c.finish("mp-pair", Json{{"p", a.p}});
}

Output verify_pontryagin(const VerifyArgs& a) {
  if (a.stages < 1) throw PreconditionError("--stages must be at least 1");
  Checks c;
  auto tower = h::pontryagin_stages(a.p, a.stages);
  auto zp = h::Coefficients::zmod(a.p);
  for (std::size_t i = 0; i + 1 < tower.stages.size(); ++i) {
    auto r = h::induced(tower.bonds[i].chain_map(), 2, zp, true);
    auto name = "(q^" + std::to_string(i + 2) + "_" + std::to_string(i + 1) + ")^* on H^2(-; Z/" +
                std::to_string(a.p) + ") is iso";
    c.add(name, r.iso, iso_detail(r));
  }
  for (std::size_t i = 1; i + 1 < tower.stages.size(); ++i) {
    vanishing(c, "L_" + std::to_string(i + 1), tower.stages[i].chain_complex(), h::Coefficients::q(), 2);
  }
  auto label = "L_" + std::to_string(tower.stages.size());
  auto cx = tower.stages.back().chain_complex();
  vanishing(c, label, cx, h::Coefficients::q(), 2);
  vanishing(c, label, cx, h::Coefficients::zmod(other_prime(a.p, a.q)), 2);
  auto g = h::cohomology(cx, zp).at(2);
  c.add("H^2(" + label + "; Z/" + std::to_string(a.p) + ") != 0", !g.is_zero(), g.to_string());
  return c.finish("pontryagin", Json{{"p", a.p}, {"stages", a.stages}});
}

Output verify_ew(const VerifyArgs& a) {
  Checks c;
  auto k = h::full_simplex(a.n + 1);
  auto zp = h::Coefficients::zmod(a.p);
  auto ew = h::ew_skeleton(k, zp, a.n);
  auto hn = h::homology(ew.complex, h::Coefficients::z()).at(a.n);
  h::GroupDesc want{h::Coefficients::z(), 0, {h::Integer(static_cast<unsigned long>(a.p))}};
  auto deg = std::to_string(a.n);
  c.add("H_" + deg + "(EW; Z) = Z/" + std::to_string(a.p), hn == want, hn.to_string());
  auto r = h::induced(ew.inclusion, a.n, zp, false);
  c.add("H_" + deg + "(K^(" + deg + "); Z/" + std::to_string(a.p) + ") -> H_" + deg + "(EW; Z/" +
            std::to_string(a.p) + ") is mono",
        r.injective, iso_detail(r));
  auto ez = h::ew_skeleton(k, h::Coefficients::z(), a.n);
  auto skel = k.skeleton(a.n).chain_complex();
  bool same = ez.complex.top_degree() == skel.top_degree();
  for (std::size_t d = 0; same && d <= skel.top_degree(); ++d) {
    same = ez.complex.rank(d) == skel.rank(d) && ez.complex.boundary(d).columns == skel.boundary(d).columns;
  }
  c.add("EW(K, Z, " + deg + ") skeleton = K^(" + deg + ")", same, "");
  return c.finish("ew", Json{{"p", a.p}, {"n", a.n}});
}

Output verify_join(const VerifyArgs& a) {
  Checks c;
  std::uint64_t q = a.q == 0 ? (a.p == 3 ? 2 : 3) : a.q;
  if (!is_prime(q) || q == a.p) throw PreconditionError("--q must be a prime different from --p");
  auto j = h::join_homology(h::moore_space(a.p, 1), h::moore_space(q, 1), h::Coefficients::z());
  auto name = "M(Z/" + std::to_string(a.p) + ",1) * M(Z/" + std::to_string(q) + ",1)";
  for (std::size_t d = 0; d <= a.max_degree; ++d) {
    auto g = j.at(d);
    c.add("reduced H_" + std::to_string(d) + "(" + name + "; Z) = 0", g.is_zero(), g.to_string());
  }
  return c.finish("join", Json{{"p", a.p}, {"q", q}});
}

}  // namespace

Output verify(const VerifyArgs& a) {
  if (!is_prime(a.p)) throw PreconditionError("--p must be prime");
  if (a.target == "mp-pair") return verify_mp_pair(a);
  if (a.target == "pontryagin") return verify_pontryagin(a);
  if (a.target == "ew") return verify_ew(a);
  if (a.target == "join") return verify_join(a);
  throw PreconditionError("unknown verify target '" + a.target + "' (pontryagin, mp-pair, ew, join)");
}

Output check_laws_cmd(const LawArgs& a) {
  Universe u;
  for (auto p : a.primes) u.primes.emplace_back(p);
  if (a.max < 1) throw PreconditionError("--max must be at least 1");
  u.value_bound = a.max;
  LawOptions opt;
  std::string rest = a.laws;
  while (!rest.empty()) {
    auto cut = rest.find(',');
    opt.laws.push_back(rest.substr(0, cut));
    rest = cut == std::string::npos ? "" : rest.substr(cut + 1);
  }
  opt.samples = a.samples;
  auto report = check_laws(u, opt);
  std::ostringstream s;
  s << "universe: " << report.universe_size << " types\n";
  for (const auto& r : report.results) {
    if (r.pass()) {
      s << "PASS " << r.law << " (" << r.checked << " checked)\n";
      continue;
    }
    s << "FAIL " << r.law << " (" << r.failed << " of " << r.checked << " failed)\n";
    for (const auto& f : r.failures) {
      s << "  inputs: " << f.inputs << "\n  expected: " << f.expected << "\n  got: " << f.got << "\n";
    }
  }
  s << "laws: " << (report.pass() ? "pass" : "fail") << "\n";
  return {s.str(), to_json(report), report.pass() ? 0 : 1};
}

}  // namespace bockstein::cli
