#include <map>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"

namespace bockstein::homology {

namespace {

struct PrimeField {
  using T = std::uint64_t;
  std::uint64_t p;

  T from(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p);
    return static_cast<T>(((v % m) + m) % m);
  }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return (a + p - b) % p; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % p); }
  T inv(T a) const {
    T result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  bool is_zero(T a) const { return a == 0; }
  Rational out(T a) const { return Rational(static_cast<unsigned long>(a)); }
};

struct RationalField {
  using T = Rational;

  T from(std::int64_t v) const { return T(static_cast<long>(v)); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  bool is_zero(const T& a) const { return a == 0; }
  Rational out(const T& a) const { return a; }
};

template <class F>
using Vec = std::map<std::uint32_t, typename F::T>;

// v += c * w
template <class F>
void axpy(const F& f, Vec<F>& v, const typename F::T& c, const Vec<F>& w) {
  for (const auto& [i, x] : w) {
    auto it = v.find(i);
    auto nv = f.add(it == v.end() ? f.from(0) : it->second, f.mul(c, x));
    if (f.is_zero(nv)) {
      if (it != v.end()) v.erase(it);
    } else {
      v[i] = nv;
    }
  }
}

template <class F>
Vec<F> column(const F& f, const SparseMatrix& m, std::size_t j) {
  Vec<F> v;
  for (const auto& [i, x] : m.columns[j]) {
    auto y = f.from(x);
    if (!f.is_zero(y)) v[i] = y;
  }
  return v;
}

template <class F>
Vec<F> apply(const F& f, const SparseMatrix& m, const Vec<F>& v) {
  Vec<F> out;
  for (const auto& [j, x] : v) axpy(f, out, x, column(f, m, j));
  return out;
}

// Vectors in echelon form keyed by their largest index, each carrying a tag
// (its coordinates in some auxiliary basis).
template <class F>
class Echelon {
 public:
  explicit Echelon(const F& f) : f_(f) {}

  // Reduces v; tag accumulates minus the tags of what was subtracted.
  void reduce(Vec<F>& v, Vec<F>& tag) const {
    while (!v.empty()) {
      auto pivot = v.rbegin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) return;
      const auto& [w, wtag] = it->second;
      auto c = f_.sub(f_.from(0), f_.mul(v.rbegin()->second, f_.inv(w.rbegin()->second)));
      axpy(f_, v, c, w);
      axpy(f_, tag, c, wtag);
    }
  }

  void insert(Vec<F> v, Vec<F> tag) {
    auto pivot = v.rbegin()->first;
    rows_.emplace(pivot, std::make_pair(std::move(v), std::move(tag)));
  }

 private:
  const F& f_;
  std::map<std::uint32_t, std::pair<Vec<F>, Vec<F>>> rows_;
};

// A basis of H_n(C; F) and the means to take coordinates.
template <class F>
class FieldHomology {
 public:
  FieldHomology(const F& f, const ChainComplex& c, std::size_t n) : f_(f), echelon_(f) {
    // Boundaries first: they carry empty tags.
    const auto bplus = c.boundary(n + 1);
    for (std::size_t j = 0; j < bplus.cols; ++j) {
      auto v = column(f, bplus, j);
      Vec<F> none;
      echelon_.reduce(v, none);
      if (!v.empty()) echelon_.insert(std::move(v), {});
    }
    // Cycles: kernel of the boundary by column reduction with tracking.
    const auto bn = c.boundary(n);
    Echelon<F> cols(f);
    for (std::size_t j = 0; j < bn.cols; ++j) {
      auto v = column(f, bn, j);
      Vec<F> track{{static_cast<std::uint32_t>(j), f.from(1)}};
      cols.reduce(v, track);
      if (!v.empty()) {
        cols.insert(std::move(v), std::move(track));
        continue;
      }
      Vec<F> none;
      echelon_.reduce(track, none);
      if (track.empty()) continue;
      Vec<F> tag{{static_cast<std::uint32_t>(reps_.size()), f.from(1)}};
      reps_.push_back(track);
      echelon_.insert(std::move(track), std::move(tag));
    }
  }

  std::size_t dimension() const { return reps_.size(); }
  const std::vector<Vec<F>>& representatives() const { return reps_; }

  std::vector<typename F::T> coordinates(Vec<F> cycle) const {
    Vec<F> tag;
    echelon_.reduce(cycle, tag);
    if (!cycle.empty()) throw Error("coordinates requested for a chain that is not a cycle");
    std::vector<typename F::T> out(reps_.size(), f_.from(0));
    for (const auto& [i, x] : tag) out[i] = f_.sub(f_.from(0), x);
    return out;
  }

 private:
  const F& f_;
  Echelon<F> echelon_;
  std::vector<Vec<F>> reps_;
};

template <class F>
std::size_t dense_rank(const F& f, std::vector<std::vector<typename F::T>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = f.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (f.is_zero(m[r][c])) continue;
      auto factor = f.mul(m[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
InducedMapReport field_induced(const F& f, const ChainMap& map, std::size_t n, const Coefficients& coeff, bool cohomology) {
  FieldHomology<F> src(f, map.source, n), tgt(f, map.target, n);
  SparseMatrix fn = n < map.degrees.size() ? map.degrees[n] : SparseMatrix(map.target.rank(n), map.source.rank(n));
  std::vector<std::vector<typename F::T>> m(tgt.dimension(), std::vector<typename F::T>(src.dimension(), f.from(0)));
  for (std::size_t j = 0; j < src.dimension(); ++j) {
    auto coords = tgt.coordinates(apply(f, fn, src.representatives()[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) m[i][j] = coords[i];
  }
  const std::size_t rank = dense_rank(f, m);
  InducedMapReport r;
  r.degree = n;
  r.coeff = coeff;
  r.cohomology = cohomology;
  std::size_t rows = tgt.dimension(), cols = src.dimension();
  if (cohomology) std::swap(rows, cols);
  r.source_rank = cols;
  r.target_rank = rows;
  r.matrix.assign(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r.matrix[i][j] = f.out(cohomology ? m[j][i] : m[i][j]);
  }
  r.injective = rank == cols;
  r.surjective = rank == rows;
  r.iso = r.injective && r.surjective;
  return r;
}

// Free integral homology in degree n: generators and coordinates via SNF.
class IntegralFree {
 public:
  IntegralFree(const ChainComplex& c, std::size_t n) {
    const auto a = c.boundary(n);
    const auto b = c.boundary(n + 1);
    if (a.cols > 600 || b.cols > 600) throw SizeLimitError("integral induced maps are limited to 600 cells per degree");
    auto s1 = snf(a.dense(), true);
    r_ = s1.diagonal.size();
    v_inv_ = s1.v_inv;
    const std::size_t cn = a.cols, k = cn - r_;
    Matrix w = s1.v_inv * b.dense();
    Matrix mb(k, b.cols);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < b.cols; ++j) mb(i, j) = w(r_ + i, j);
    }
    auto s2 = snf(mb, true);
    for (const auto& d : s2.diagonal) {
      if (d != 1) throw PreconditionError("integral induced maps need torsion-free homology");
    }
    r2_ = s2.diagonal.size();
    u2_ = s2.u;
    free_ = k - r2_;
    for (std::size_t g = 0; g < free_; ++g) {
      std::vector<Integer> gen(cn);
      for (std::size_t row = 0; row < cn; ++row) {
        for (std::size_t t = 0; t < k; ++t) gen[row] += s1.v(row, r_ + t) * s2.u_inv(t, r2_ + g);
      }
      gens_.push_back(std::move(gen));
    }
  }

  std::size_t rank() const { return free_; }
  const std::vector<std::vector<Integer>>& generators() const { return gens_; }

  std::vector<Integer> coordinates(const std::vector<Integer>& z) const {
    const std::size_t k = u2_.rows();
    std::vector<Integer> w(k);
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t j = 0; j < z.size(); ++j) w[t] += v_inv_(r_ + t, j) * z[j];
    }
    std::vector<Integer> out(free_);
    for (std::size_t g = 0; g < free_; ++g) {
      for (std::size_t t = 0; t < k; ++t) out[g] += u2_(r2_ + g, t) * w[t];
    }
    return out;
  }

 private:
  std::size_t r_ = 0, r2_ = 0, free_ = 0;
  Matrix v_inv_, u2_;
  std::vector<std::vector<Integer>> gens_;
};

InducedMapReport integral_induced(const ChainMap& map, std::size_t n) {
  IntegralFree src(map.source, n), tgt(map.target, n);
  SparseMatrix fn = n < map.degrees.size() ? map.degrees[n] : SparseMatrix(map.target.rank(n), map.source.rank(n));
  Matrix m(tgt.rank(), src.rank());
  for (std::size_t j = 0; j < src.rank(); ++j) {
    const auto& g = src.generators()[j];
    std::vector<Integer> image(fn.rows);
    for (std::size_t c = 0; c < fn.cols; ++c) {
      for (const auto& [i, v] : fn.columns[c]) image[i] += g[c] * static_cast<long>(v);
    }
    auto coords = tgt.coordinates(image);
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
  }
  auto s = snf(m, false);
  InducedMapReport r;
  r.degree = n;
  r.coeff = Coefficients::z();
  r.source_rank = src.rank();
  r.target_rank = tgt.rank();
  r.matrix.assign(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.matrix[i][j] = Rational(m(i, j));
  }
  bool units = std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Integer& d) { return d == 1; });
  r.injective = s.diagonal.size() == m.cols();
  r.surjective = s.diagonal.size() == m.rows() && units;
  r.iso = r.injective && r.surjective;
  return r;
}

}  // namespace

InducedMapReport induced(const ChainMap& f, std::size_t degree, const Coefficients& coeff, bool cohomology) {
  f.validate();
  switch (coeff.kind) {
    case Coefficients::Kind::Q: return field_induced(RationalField{}, f, degree, coeff, cohomology);
    case Coefficients::Kind::Zmod:
      if (coeff.k == 1) return field_induced(PrimeField{coeff.p}, f, degree, coeff, cohomology);
      break;
    case Coefficients::Kind::Z:
      if (!cohomology) return integral_induced(f, degree);
      break;
    case Coefficients::Kind::ZpInfinity: break;
  }
  throw PreconditionError(std::string("induced ") + (cohomology ? "cohomology" : "homology") + " maps with " +
                          coeff.to_string() + " coefficients are not supported");
}

std::size_t field_rank(const SparseMatrix& m, const Coefficients& coeff) {
  auto run = [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    Echelon<F> e(f);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      auto v = column(f, m, j);
      Vec<F> none;
      e.reduce(v, none);
      if (v.empty()) continue;
      e.insert(std::move(v), {});
      ++rank;
    }
    return rank;
  };
  if (coeff.kind == Coefficients::Kind::Q) return run(RationalField{});
  if (coeff.kind == Coefficients::Kind::Zmod && coeff.k == 1) return run(PrimeField{coeff.p});
  throw PreconditionError("field rank needs Q or Z/p");
}

}  // namespace bockstein::homology
