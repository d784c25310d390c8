// Acceptance runner: one line per criterion, exit status 1 if any fails.
// Usage: acceptance CLI GOLDEN_DIR [--update-golden]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bockstein/dimension.hpp"
#include "bockstein/homology.hpp"
#include "bockstein/oracle.hpp"

using namespace bockstein;
namespace h = bockstein::homology;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass || detail.size() < 600) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// "n", "n-1", "m+n", "m+n-1", "n+1", "1"
std::int64_t cell(const std::string& text, std::int64_t n, std::int64_t m) {
  std::int64_t total = 0, sign = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++i;
      continue;
    }
    if (c == 'n') {
      total += sign * n;
      ++i;
    } else if (c == 'm') {
      total += sign * m;
      ++i;
    } else {
      std::size_t used = 0;
      total += sign * std::stoll(text.substr(i), &used);
      i += used;
    }
  }
  return total;
}

std::vector<BasisKind> columns(Prime p, Prime q) {
  return {BasisKind::zloc(p), BasisKind::zp(p), BasisKind::zp_inf(p), BasisKind::q(),
          BasisKind::zloc(q), BasisKind::zp(q), BasisKind::zp_inf(q)};
}

std::vector<BasisKind> rows(Prime p) { return {BasisKind::q(), BasisKind::zloc(p), BasisKind::zp(p), BasisKind::zp_inf(p)}; }

// The published table of fundamental types: rows Q, Z_(p), Z_p, Z_p^inf.
const std::vector<std::vector<std::string>> kPrintedFundamental{
    {"n", "1", "1", "n", "n", "1", "1"},
    {"n", "n", "n", "n", "n", "1", "1"},
    {"n", "n", "n-1", "1", "1", "1", "1"},
    {"n", "n-1", "n-1", "1", "1", "1", "1"},
};

// The published product table: rows F(G', m) for G' = Q, Z_(p), Z_p, Z_p^inf.
const std::vector<std::vector<std::string>> kPrintedProducts{
    {"m+n", "n+1", "n+1", "m+n", "m+n", "n+1", "n+1"},
    {"m+n", "n+1", "n+1", "m+n", "m+n", "n+1", "n+1"},
    {"m+n", "m+n", "n+1", "n+1", "m+n", "n+1", "n+1"},
    {"m+n", "m+n-1", "m+n-1", "n+1", "m+n", "m+n-1", "n+1"},
};

CdType pi_type(Prime p) {
  return CdType::triple(PrimeSet::finite({p}), PrimeSet::finite({p}), PrimeFn<ExtInt>(1, 1).with(p, 2));
}

CdType m_type(Prime p) {
  return CdType::triple(PrimeSet::finite({p}), PrimeSet::finite({p}), PrimeFn<ExtInt>(3, 3).with(p, 4));
}

Outcome fundamental_table() {
  Outcome o;
  for (std::uint64_t pv : {2, 3, 5}) {
    Prime p(pv), q(7);
    auto cols = columns(p, q);
    auto rs = rows(p);
    for (std::int64_t n = 2; n <= 5; ++n) {
      for (std::size_t r = 0; r < rs.size(); ++r) {
        auto phi = to_phi(phi_basis(rs[r], n));
        for (std::size_t c = 0; c < cols.size(); ++c) {
          auto want = cell(kPrintedFundamental[r][c], n, 0);
          o.expect(phi.at(cols[c]) == ExtInt(want), "p=" + std::to_string(pv) + " n=" + std::to_string(n) + " " +
                                                       rs[r].to_string() + "/" + cols[c].to_string());
        }
      }
    }
  }
  return o;
}

Outcome product_table() {
  Outcome o;
  Prime p(2), q(3);
  auto cols = columns(p, q);
  auto rs = rows(p);
  std::size_t formula_bad = 0, printed_bad = 0, total = 0;
  std::vector<std::string> printed_cells;
  for (auto [n, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
    for (std::size_t r = 0; r < rs.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        ++total;
        auto got = norm(sum(phi_basis(cols[c], n), phi_basis(rs[r], m)));
        auto formula = dim(phi_basis(rs[r], m), cols[c].group()) + n;
        if (got != formula) ++formula_bad;
        if (got != ExtInt(cell(kPrintedProducts[r][c], n, m))) {
          ++printed_bad;
          auto name = rs[r].to_string() + "/" + cols[c].to_string() + " printed " + kPrintedProducts[r][c] + " computed " +
                      got.to_string() + " at n=" + std::to_string(n) + ",m=" + std::to_string(m);
          if (n == 3) printed_cells.push_back(name);
        }
      }
    }
  }
  o.expect(formula_bad == 0, std::to_string(formula_bad) + " cells differ from dim_G F(G',m)+n");
  if (printed_bad) {
    std::string cells;
    for (const auto& s : printed_cells) cells += (cells.empty() ? "" : ", ") + s;
    o.fail(std::to_string(printed_bad) + " of " + std::to_string(total) + " cells differ from the printed table (" +
           cells + ")");
  }
  return o;
}

Outcome named_values() {
  Outcome o;
  for (std::uint64_t pv : {2, 3, 5}) {
    Prime p(pv);
    auto phi = to_phi(pi_type(p));
    auto tag = "p=" + std::to_string(pv) + " ";
    o.expect(phi.at(BasisKind::zp_inf(p)) == ExtInt(1), tag + "Zpinf");
    o.expect(phi.at(BasisKind::q()) == ExtInt(1), tag + "Q");
    o.expect(phi.at(BasisKind::zp(p)) == ExtInt(2), tag + "Zp");
    o.expect(phi.at(BasisKind::zloc(p)) == ExtInt(2), tag + "Zloc");
    for (std::uint64_t qv : {2, 3, 5, 7, 11}) {
      if (qv == pv) continue;
      Prime q(qv);
      o.expect(phi.at(BasisKind::zp(q)) == ExtInt(1), tag + "Zq");
      o.expect(phi.at(BasisKind::zp_inf(q)) == ExtInt(1), tag + "Zqinf");
      o.expect(phi.at(BasisKind::zloc(q)) == ExtInt(1), tag + "Zloc(q)");
    }
    auto square = sum(pi_type(p), pi_type(p));
    o.expect(norm(square) == ExtInt(4), tag + "norm of the square");
    o.expect(dim(square, GroupExpr::zp_inf(p)) == ExtInt(3), tag + "Zpinf dimension of the square");
  }
  o.expect(norm(sum(pi_type(Prime(2)), pi_type(Prime(3)))) == ExtInt(3), "Pi_2 x Pi_3");
  o.expect(norm(sum(m_type(Prime(2)), m_type(Prime(3)))) == ExtInt(7), "M_2 x M_3");
  return o;
}

Outcome bijection() {
  Outcome o;
  Universe u{{Prime(2), Prime(3)}, 4, false};
  auto phis = enumerate_phis(u);
  std::size_t bad = 0;
  for (const auto& phi : phis) bad += to_phi(from_phi(phi)) != phi;
  auto types = enumerate_types(u);
  for (const auto& f : types) bad += from_phi(to_phi(f)) != f;
  o.expect(bad == 0, std::to_string(bad) + " round-trip failures");
  o.expect(!phis.empty() && types.size() == phis.size(), "enumeration sizes differ");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(phis.size()) + " types";
  return o;
}

Outcome laws() {
  Outcome o;
  Universe u{{Prime(2), Prime(3)}, 3, false};
  LawOptions opt;
  opt.samples = 20000;
  auto report = check_laws(u, opt);
  std::uint64_t checked = 0;
  for (const auto& r : report.results) {
    checked += r.checked;
    if (!r.pass()) o.fail(r.law + ": " + std::to_string(r.failed) + " counterexamples");
  }
  if (o.pass) {
    o.detail = std::to_string(report.results.size()) + " laws, " + std::to_string(checked) + " checks";
  }
  return o;
}

Outcome homology_suite() {
  Outcome o;
  auto five = h::Coefficients::zmod(5);
  for (std::uint64_t p : {2, 3}) {
    auto tag = "p=" + std::to_string(p) + " ";
    auto zp = h::Coefficients::zmod(p);
    auto mp = h::mp_pair(p);
    auto rel = mp.m.relative_chain_complex(mp.boundary);
    o.expect(h::cohomology(rel, h::Coefficients::q()).at(2).is_zero(), tag + "H^2(M_p, dM_p; Q)");
    o.expect(h::cohomology(rel, five).at(2).is_zero(), tag + "H^2(M_p, dM_p; Z/5)");
    auto xi = mp.xi.relative_chain_map(mp.boundary, mp.disk_boundary);
    o.expect(h::induced(xi, 2, zp, true).iso, tag + "xi^* over Z/p");

    auto tower = h::pontryagin_stages(p, 1);
    o.expect(h::induced(tower.bonds[0].chain_map(), 2, zp, true).iso, tag + "(q^2_1)^*");
    o.expect(h::cohomology(tower.stages[1].chain_complex(), h::Coefficients::q()).at(2).is_zero(), tag + "H^2(L_2; Q)");

    auto ew = h::ew_skeleton(h::full_simplex(3), zp, 2);
    h::GroupDesc want{h::Coefficients::z(), 0, {h::Integer(static_cast<unsigned long>(p))}};
    o.expect(h::homology(ew.complex, h::Coefficients::z()).at(2) == want, tag + "H_2(EW; Z)");
    o.expect(h::induced(ew.inclusion, 2, zp).injective, tag + "EW inclusion mod p");
  }
  auto join = h::join_homology(h::moore_space(2, 1), h::moore_space(3, 1), h::Coefficients::z());
  for (std::size_t d = 0; d <= 4; ++d) o.expect(join.at(d).is_zero(), "join degree " + std::to_string(d));
  return o;
}

struct Case {
  std::string name;
  std::string args;
};

std::vector<Case> read_cases(const fs::path& file) {
  std::vector<Case> out;
  std::ifstream in(file);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find(" | ");
    out.push_back({line.substr(0, bar), line.substr(bar + 3)});
  }
  return out;
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed\n";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  out += "exit: " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + "\n";
  return out;
}

Outcome golden(const std::string& cli, const fs::path& dir, bool update) {
  Outcome o;
  auto cases = read_cases(dir / "cases.txt");
  o.expect(!cases.empty(), "no golden cases");
  for (const auto& c : cases) {
    auto first = run_cli(cli, c.args);
    auto second = run_cli(cli, c.args);
    o.expect(first == second, c.name + " differs between runs");
    auto file = dir / (c.name + ".txt");
    if (update) {
      std::ofstream(file, std::ios::binary) << first;
      continue;
    }
    std::ifstream in(file, std::ios::binary);
    std::stringstream want;
    want << in.rdbuf();
    o.expect(in.good() || in.eof(), c.name + " has no golden file");
    o.expect(want.str() == first, c.name + " differs from its golden file");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " cases";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance CLI GOLDEN_DIR [--update-golden]\n";
    return 2;
  }
  std::string cli = argv[1];
  fs::path dir = argv[2];
  bool update = argc > 3 && std::string(argv[3]) == "--update-golden";

  struct Criterion {
    std::string id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "fundamental type table", 1, fundamental_table},
      {"AC2", "products of fundamental types", 1, product_table},
      {"AC3", "named values", 1, named_values},
      {"AC4", "bijection suite", 10, bijection},
      {"AC5", "algebra-law suite", 60, laws},
      {"AC6", "homology suite", 30, homology_suite},
      {"AC7", "CLI golden files", 5, [&] { return golden(cli, dir, update); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit) o.fail("took longer than " + std::to_string(static_cast<int>(c.limit)) + " s");
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.title << " (" << secs << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
