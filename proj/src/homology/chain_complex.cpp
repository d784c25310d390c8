#include <algorithm>
#include <map>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"
#include "bockstein/prime_set.hpp"

namespace bockstein::homology {

namespace {

// Sparse product a * b, dropping zeros.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix shapes do not compose");
  SparseMatrix c(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& [k, v] : b.columns[j]) {
      for (const auto& [i, w] : a.columns[k]) acc[i] += v * w;
    }
    for (const auto& [i, v] : acc) {
      if (v != 0) c.columns[j].emplace_back(i, v);
    }
  }
  return c;
}

bool is_zero(const SparseMatrix& m) {
  return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

Integer prime_part(const Integer& d, std::uint64_t p) {
  Integer out = 1;
  Integer rest = d;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    rest /= static_cast<unsigned long>(p);
    out *= static_cast<unsigned long>(p);
  }
  return out;
}

}  // namespace

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  boundaries_.resize(ranks_.size());
  if (!boundaries_.empty()) boundaries_[0] = SparseMatrix(0, ranks_[0]);
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const auto& b = boundaries_[n];
    if (b.rows != ranks_[n - 1] || b.cols != ranks_[n] || b.columns.size() != b.cols) {
      throw Error("boundary in degree " + std::to_string(n) + " has the wrong shape");
    }
    if (n >= 2 && !is_zero(multiply(boundaries_[n - 1], b))) {
      throw Error("boundary composition is nonzero in degree " + std::to_string(n));
    }
  }
}

SparseMatrix ChainComplex::boundary(std::size_t n) const {
  if (n == 0) return SparseMatrix(0, rank(0));
  if (n < boundaries_.size()) return boundaries_[n];
  return SparseMatrix(rank(n - 1), rank(n));
}

ChainComplex ChainComplex::quotient(const std::vector<std::vector<std::uint32_t>>& sub_cells) const {
  std::vector<std::vector<bool>> in_sub(ranks_.size());
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    in_sub[n].assign(ranks_[n], false);
    if (n < sub_cells.size()) {
      for (auto c : sub_cells[n]) {
        if (c >= ranks_[n]) throw PreconditionError("subcomplex cell out of range");
        in_sub[n][c] = true;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> renumber(ranks_.size());
  std::vector<std::size_t> ranks(ranks_.size(), 0);
  for (std::size_t n = 0; n < ranks_.size(); ++n) {
    renumber[n].assign(ranks_[n], -1);
    for (std::size_t c = 0; c < ranks_[n]; ++c) {
      if (!in_sub[n][c]) renumber[n][c] = static_cast<std::int64_t>(ranks[n]++);
    }
  }
  std::vector<SparseMatrix> bounds(ranks_.size());
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    bounds[n] = SparseMatrix(ranks[n - 1], ranks[n]);
    for (std::size_t c = 0; c < ranks_[n]; ++c) {
      for (const auto& [r, v] : boundaries_[n].columns[c]) {
        if (in_sub[n][c] && !in_sub[n - 1][r]) throw PreconditionError("not a subcomplex");
        if (in_sub[n][c] || in_sub[n - 1][r]) continue;
        bounds[n].columns[renumber[n][c]].emplace_back(static_cast<std::uint32_t>(renumber[n - 1][r]), v);
      }
    }
  }
  return ChainComplex(std::move(ranks), std::move(bounds));
}

std::int64_t ChainComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t n = 0; n < ranks_.size(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(ranks_[n]);
  return chi;
}

void ChainMap::validate() const {
  for (std::size_t n = 0; n < degrees.size(); ++n) {
    if (degrees[n].cols != source.rank(n) || degrees[n].rows != target.rank(n)) {
      throw Error("chain map has the wrong shape in degree " + std::to_string(n));
    }
    if (n == 0) continue;
    auto lhs = multiply(target.boundary(n), degrees[n]);
    auto rhs = multiply(degrees[n - 1], source.boundary(n));
    for (auto& col : rhs.columns) {
      for (auto& e : col) e.second = -e.second;
    }
    for (std::size_t j = 0; j < lhs.cols; ++j) {
      std::map<std::uint32_t, std::int64_t> acc;
      for (const auto& [i, v] : lhs.columns[j]) acc[i] += v;
      for (const auto& [i, v] : rhs.columns[j]) acc[i] += v;
      for (const auto& [i, v] : acc) {
        if (v != 0) throw Error("map does not commute with the boundary in degree " + std::to_string(n));
      }
    }
  }
}

Coefficients Coefficients::zmod(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || k < 1) throw PreconditionError("Z/p^k needs a prime p and k >= 1");
  return {Kind::Zmod, p, k};
}

Coefficients Coefficients::zp_inf(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("Zpinf(p) needs a prime p");
  return {Kind::ZpInfinity, p, 1};
}

Integer Coefficients::modulus() const {
  if (kind != Kind::Zmod) throw PreconditionError("only Z/p^k has a modulus");
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, k);
  return m;
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::Q: return "Q";
    case Kind::Zmod: return "Z/" + modulus().get_str();
    case Kind::ZpInfinity: return "Zpinf(" + std::to_string(p) + ")";
  }
  return "?";
}

Coefficients Coefficients::parse(const std::string& text) {
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 18) {
      throw PreconditionError("bad coefficient group '" + text + "'");
    }
    return std::stoull(s);
  };
  if (text == "Z") return z();
  if (text == "Q") return q();
  if (text.rfind("Zpinf(", 0) == 0 && text.back() == ')') return zp_inf(number(text.substr(6, text.size() - 7)));
  if (text.rfind("Z/", 0) == 0) {
    auto rest = text.substr(2);
    auto caret = rest.find('^');
    if (caret != std::string::npos) return zmod(number(rest.substr(0, caret)), number(rest.substr(caret + 1)));
    std::uint64_t m = number(rest);
    // Z/4 means Z/2^2.
    for (std::uint64_t p = 2; p * p <= m || p == m; ++p) {
      if (m % p != 0) continue;
      std::uint64_t k = 0, r = m;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      if (r != 1) break;
      return zmod(p, k);
    }
    throw PreconditionError("coefficient modulus must be a prime power, got " + rest);
  }
  throw PreconditionError("unknown coefficient group '" + text + "'");
}

std::size_t GroupDesc::dimension() const {
  if (!base.is_field()) throw PreconditionError("dimension needs field coefficients, got " + base.to_string());
  return copies + torsion.size();
}

std::string GroupDesc::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
  for (std::size_t i = 0; i < copies; ++i) add(base.to_string());
  for (const auto& t : torsion) add("Z/" + t.get_str());
  return out;
}

GroupDesc Homology::at(std::size_t n) const {
  if (n < groups.size()) return groups[n];
  return GroupDesc{coeff, 0, {}};
}

std::string Homology::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < groups.size(); ++n) {
    out += std::string(cohomology ? "H^" : "H_") + std::to_string(n) + " = " + groups[n].to_string() + "\n";
  }
  return out;
}

IntegralHomology integral_homology(const ChainComplex& c, bool reduced) {
  const std::size_t top = c.top_degree();
  std::vector<std::vector<Integer>> factors(top + 2);
  for (std::size_t n = 1; n <= top; ++n) factors[n] = invariant_factors(c.boundary(n));
  IntegralHomology h;
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t rn = factors[n].size(), rn1 = factors[n + 1].size();
    h.free.push_back(c.rank(n) - rn - rn1);
    std::vector<Integer> tors;
    for (const auto& d : factors[n + 1]) {
      if (d > 1) tors.push_back(d);
    }
    h.torsion.push_back(std::move(tors));
  }
  if (reduced && c.rank(0) > 0) {
    if (h.free[0] == 0) throw PreconditionError("reduced homology of a complex with no free H_0");
    --h.free[0];
  }
  return h;
}

Homology from_integral(const IntegralHomology& h, const Coefficients& coeff, bool cohomology, bool reduced) {
  Homology out;
  out.coeff = coeff;
  out.cohomology = cohomology;
  out.reduced = reduced;
  const std::size_t degrees = h.free.size() + 1;
  static const std::vector<Integer> none;
  auto tors = [&](std::size_t n) -> const std::vector<Integer>& { return n < h.torsion.size() ? h.torsion[n] : none; };
  for (std::size_t n = 0; n < degrees; ++n) {
    GroupDesc g{coeff, n < h.free.size() ? h.free[n] : 0, {}};
    const auto& tn = tors(n);
    const auto& tprev = n > 0 ? tors(n - 1) : none;
    switch (coeff.kind) {
      case Coefficients::Kind::Z: g.torsion = cohomology ? tprev : tn; break;
      case Coefficients::Kind::Q: break;
      case Coefficients::Kind::Zmod: {
        Integer m = coeff.modulus();
        for (const auto* list : {&tn, &tprev}) {
          for (const auto& d : *list) {
            Integer gcd_dm;
            mpz_gcd(gcd_dm.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
            if (gcd_dm == m) {
              ++g.copies;
            } else if (gcd_dm > 1) {
              g.torsion.push_back(gcd_dm);
            }
          }
        }
        break;
      }
      case Coefficients::Kind::ZpInfinity:
        for (const auto& d : cohomology ? tn : tprev) {
          Integer part = prime_part(d, coeff.p);
          if (part > 1) g.torsion.push_back(part);
        }
        break;
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    out.groups.push_back(std::move(g));
  }
  while (out.groups.size() > h.free.size() && out.groups.back().is_zero()) out.groups.pop_back();
  return out;
}

Homology homology(const ChainComplex& c, const Coefficients& coeff, bool reduced) {
  return from_integral(integral_homology(c, reduced), coeff, false, reduced);
}

Homology cohomology(const ChainComplex& c, const Coefficients& coeff, bool reduced) {
  return from_integral(integral_homology(c, reduced), coeff, true, reduced);
}

}  // namespace bockstein::homology
