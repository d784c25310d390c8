#include <iomanip>
#include <sstream>

#include "bockstein/error.hpp"
#include "commands.hpp"

namespace bockstein::cli {

namespace {

std::vector<BasisKind> columns(Prime p, Prime q) {
  return {BasisKind::zloc(p), BasisKind::zp(p), BasisKind::zp_inf(p), BasisKind::q(),
          BasisKind::zloc(q), BasisKind::zp(q), BasisKind::zp_inf(q)};
}

std::vector<BasisKind> rows(Prime p) { return {BasisKind::q(), BasisKind::zloc(p), BasisKind::zp(p), BasisKind::zp_inf(p)}; }

std::string label(const BasisKind& g, std::int64_t n) { return "Phi(" + g.to_string() + "," + std::to_string(n) + ")"; }

Output render(const std::string& kind, const std::vector<std::string>& head, const std::vector<std::string>& labels,
              const std::vector<std::vector<ExtInt>>& cells, Json params) {
  std::size_t w0 = 0, w = 0;
  for (const auto& l : labels) w0 = std::max(w0, l.size());
  for (const auto& h : head) w = std::max(w, h.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w0)) << "";
  for (const auto& h : head) out << " | " << std::setw(static_cast<int>(w)) << h;
  out << "\n";
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out << std::setw(static_cast<int>(w0)) << labels[r];
    for (const auto& v : cells[r]) out << " | " << std::setw(static_cast<int>(w)) << v.to_string();
    out << "\n";
  }
  Json jrows = Json::array();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    Json vals = Json::array();
    for (const auto& v : cells[r]) vals.push_back(to_json(v));
    jrows.push_back(Json{{"label", labels[r]}, {"values", vals}});
  }
  Json j{{"kind", "table"}, {"table", kind}};
  for (auto& [k, v] : params.items()) j[k] = v;
  j["columns"] = head;
  j["rows"] = jrows;
  // Trailing spaces from the padding of the last column are dropped.
  std::string text, line;
  std::istringstream in(out.str());
  while (std::getline(in, line)) {
    line.erase(line.find_last_not_of(' ') + 1);
    text += line + "\n";
  }
  return {text, j, 0};
}

}  // namespace

Output emit_table(const TableArgs& a) {
  if (!is_prime(a.p) || !is_prime(a.q) || a.p == a.q) throw PreconditionError("tables need distinct primes p and q");
  Prime p(a.p), q(a.q);
  auto cols = columns(p, q);
  std::vector<std::string> head;
  for (const auto& c : cols) head.push_back(c.to_string());
  std::vector<std::string> labels;
  std::vector<std::vector<ExtInt>> cells;
  if (a.kind == "fundamental") {
    if (a.n < 1) throw PreconditionError("the fundamental table needs n >= 1");
    for (const auto& g : rows(p)) {
      labels.push_back(label(g, a.n));
      auto phi = to_phi(phi_basis(g, a.n));
      auto& row = cells.emplace_back();
      for (const auto& c : cols) row.push_back(phi.at(c));
    }
    return render(a.kind, head, labels, cells, Json{{"n", a.n}, {"p", a.p}, {"q", a.q}});
  }
  if (a.kind == "products") {
    if (!(a.n >= a.m && a.m >= 2)) throw PreconditionError("the products table needs n >= m >= 2");
    for (auto& h : head) h = "Phi(" + h + "," + std::to_string(a.n) + ")";
    for (const auto& g2 : rows(p)) {
      labels.push_back(label(g2, a.m));
      auto& row = cells.emplace_back();
      for (const auto& c : cols) row.push_back(norm(sum(phi_basis(c, a.n), phi_basis(g2, a.m))));
    }
    return render(a.kind, head, labels, cells, Json{{"n", a.n}, {"m", a.m}, {"p", a.p}, {"q", a.q}});
  }
  throw PreconditionError("unknown table '" + a.kind + "' (fundamental or products)");
}

}  // namespace bockstein::cli
