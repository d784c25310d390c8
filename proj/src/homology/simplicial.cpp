#include <algorithm>
#include <set>
#include <sstream>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"

namespace bockstein::homology {

namespace {

// Parity of the permutation sorting v.
int sort_sign(Simplex v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices, std::vector<Simplex> facets) {
  std::vector<std::set<Simplex>> sets;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty()) continue;
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw Error("simplex with a repeated vertex");
    if (f.back() >= vertices) throw Error("vertex " + std::to_string(f.back()) + " out of range");
    if (sets.size() < f.size()) sets.resize(f.size());
    sets[f.size() - 1].insert(f);
  }
  // Close under faces, top dimension first.
  for (std::size_t d = sets.size(); d-- > 1;) {
    for (const auto& s : sets[d]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        sets[d - 1].insert(face);
      }
    }
  }
  SimplicialComplex k;
  k.vertices_ = vertices;
  for (auto& s : sets) {
    k.by_dim_.emplace_back(s.begin(), s.end());
    auto& idx = k.index_.emplace_back();
    for (std::uint32_t i = 0; i < k.by_dim_.back().size(); ++i) idx.emplace(k.by_dim_.back()[i], i);
  }
  return k;
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
  std::vector<Simplex> facets;
  std::size_t vertices = 0;
  for (const auto& line : lines_of(text)) {
    std::istringstream in(line);
    Simplex s;
    long v;
    while (in >> v) {
      if (v < 0) throw Error("negative vertex index in '" + line + "'");
      s.push_back(static_cast<std::uint32_t>(v));
      vertices = std::max<std::size_t>(vertices, static_cast<std::size_t>(v) + 1);
    }
    if (!in.eof()) throw Error("malformed simplex line '" + line + "'");
    facets.push_back(std::move(s));
  }
  return from_facets(vertices, std::move(facets));
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const {
  static const std::vector<Simplex> none;
  return k < by_dim_.size() ? by_dim_[k] : none;
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::optional<std::uint32_t> SimplicialComplex::index(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  auto it = index_[s.size() - 1].find(s);
  if (it == index_[s.size() - 1].end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& d : by_dim_) {
    for (const auto& s : d) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::skeleton(std::size_t k) const {
  std::vector<Simplex> facets;
  for (std::size_t d = 0; d <= k && d < by_dim_.size(); ++d) facets.insert(facets.end(), by_dim_[d].begin(), by_dim_[d].end());
  return from_facets(vertices_, std::move(facets));
}

ChainComplex SimplicialComplex::chain_complex() const {
  std::vector<std::size_t> ranks;
  for (const auto& d : by_dim_) ranks.push_back(d.size());
  if (ranks.empty()) ranks.push_back(0);
  std::vector<SparseMatrix> bounds(ranks.size());
  for (std::size_t n = 1; n < by_dim_.size(); ++n) {
    bounds[n] = SparseMatrix(ranks[n - 1], ranks[n]);
    for (std::size_t c = 0; c < by_dim_[n].size(); ++c) {
      const auto& s = by_dim_[n][c];
      auto& col = bounds[n].columns[c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        col.emplace_back(*index(face), drop % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return ChainComplex(std::move(ranks), std::move(bounds));
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::cells_of(const SimplicialComplex& sub) const {
  std::vector<std::vector<std::uint32_t>> cells(by_dim_.size());
  for (std::size_t d = 0; d < sub.by_dim_.size(); ++d) {
    for (const auto& s : sub.by_dim_[d]) {
      auto i = index(s);
      if (!i) throw PreconditionError("not a subcomplex");
      cells[d].push_back(*i);
    }
  }
  return cells;
}

ChainComplex SimplicialComplex::relative_chain_complex(const SimplicialComplex& sub) const {
  return chain_complex().quotient(cells_of(sub));
}

std::string SimplicialComplex::to_text() const {
  // Facets only: simplices that are not a face of a larger one.
  std::string out;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    for (const auto& s : by_dim_[d]) {
      bool facet = true;
      if (d + 1 < by_dim_.size()) {
        for (std::uint32_t v = 0; v < vertices_ && facet; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Simplex t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), v), v);
          facet = !contains(t);
        }
      }
      if (!facet) continue;
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
      out += "\n";
    }
  }
  return out;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::uint32_t> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  if (map_.size() != source_.vertex_count()) throw Error("vertex map has the wrong length");
  for (auto w : map_) {
    if (w >= target_.vertex_count()) throw Error("vertex map leaves the target");
  }
  for (int d = 0; d <= source_.dimension(); ++d) {
    for (const auto& s : source_.simplices(static_cast<std::size_t>(d))) {
      if (!target_.contains(image(s))) throw Error("the image of a simplex is not a simplex of the target");
    }
  }
}

SimplicialMap SimplicialMap::parse(const SimplicialComplex& source, const SimplicialComplex& target, const std::string& text) {
  std::vector<std::uint32_t> map(source.vertex_count(), 0);
  std::vector<bool> seen(source.vertex_count(), false);
  for (const auto& line : lines_of(text)) {
    std::istringstream in(line);
    long v, w;
    std::string arrow;
    if (!(in >> v >> arrow >> w) || arrow != "->" || v < 0 || w < 0) throw Error("malformed map line '" + line + "'");
    if (static_cast<std::size_t>(v) >= map.size()) throw Error("vertex " + std::to_string(v) + " not in the source");
    map[v] = static_cast<std::uint32_t>(w);
    seen[v] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) throw Error("map leaves a vertex unassigned");
  return SimplicialMap(source, target, std::move(map));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  for (auto v : s) out.push_back(map_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ChainMap SimplicialMap::chain_map() const {
  ChainMap f{source_.chain_complex(), target_.chain_complex(), {}};
  for (int d = 0; d <= source_.dimension(); ++d) {
    const auto& cells = source_.simplices(static_cast<std::size_t>(d));
    SparseMatrix m(target_.count(static_cast<std::size_t>(d)), cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      Simplex raw;
      for (auto v : cells[c]) raw.push_back(map_[v]);
      Simplex img = image(cells[c]);
      if (img.size() != raw.size()) continue;  // degenerate
      m.columns[c].emplace_back(*target_.index(img), sort_sign(raw));
    }
    f.degrees.push_back(std::move(m));
  }
  if (f.degrees.empty()) f.degrees.emplace_back(target_.count(0), 0);
  return f;
}

ChainMap SimplicialMap::relative_chain_map(const SimplicialComplex& source_sub, const SimplicialComplex& target_sub) const {
  if (!source_sub.is_subcomplex_of(source_) || !target_sub.is_subcomplex_of(target_)) {
    throw PreconditionError("not a subcomplex");
  }
  for (int d = 0; d <= source_sub.dimension(); ++d) {
    for (const auto& s : source_sub.simplices(static_cast<std::size_t>(d))) {
      if (!target_sub.contains(image(s))) throw PreconditionError("the map does not carry the subcomplex into the target pair");
    }
  }
  ChainMap abs = chain_map();
  auto src_cells = source_.cells_of(source_sub);
  auto tgt_cells = target_.cells_of(target_sub);
  auto keep = [](std::size_t n, const std::vector<std::uint32_t>& drop) {
    std::vector<std::int64_t> renum(n, -1);
    std::int64_t next = 0;
    std::vector<bool> dropped(n, false);
    for (auto c : drop) dropped[c] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!dropped[i]) renum[i] = next++;
    }
    return std::make_pair(renum, next);
  };
  ChainMap rel{source_.relative_chain_complex(source_sub), target_.relative_chain_complex(target_sub), {}};
  for (std::size_t d = 0; d < abs.degrees.size(); ++d) {
    auto [srow, scount] = keep(source_.count(d), d < src_cells.size() ? src_cells[d] : std::vector<std::uint32_t>{});
    auto [trow, tcount] = keep(target_.count(d), d < tgt_cells.size() ? tgt_cells[d] : std::vector<std::uint32_t>{});
    SparseMatrix m(static_cast<std::size_t>(tcount), static_cast<std::size_t>(scount));
    for (std::size_t c = 0; c < abs.degrees[d].cols; ++c) {
      if (srow[c] < 0) continue;
      for (const auto& [r, v] : abs.degrees[d].columns[c]) {
        if (trow[r] >= 0) m.columns[srow[c]].emplace_back(static_cast<std::uint32_t>(trow[r]), v);
      }
    }
    rel.degrees.push_back(std::move(m));
  }
  return rel;
}

std::string SimplicialMap::to_text() const {
  std::string out;
  for (std::size_t v = 0; v < map_.size(); ++v) out += std::to_string(v) + " -> " + std::to_string(map_[v]) + "\n";
  return out;
}

}  // namespace bockstein::homology
