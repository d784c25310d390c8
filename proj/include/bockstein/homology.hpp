#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bockstein::homology {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// U * M * V = diag(diagonal, 0, ...), U and V unimodular.
struct SnfResult {
  std::vector<Integer> diagonal;  // nonzero, positive, each dividing the next
  Matrix u, v, u_inv, v_inv;
};

SnfResult snf(const Matrix& m, bool transforms = true);

/// Column-major sparse integer matrix.
struct SparseMatrix {
  using Column = std::vector<std::pair<std::uint32_t, std::int64_t>>;  // sorted by row

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  Matrix dense() const;
  std::size_t nonzeros() const;
};

/// Nonzero invariant factors of a sparse matrix, via unit-pivot elimination
/// followed by a dense SNF of the remainder.
std::vector<Integer> invariant_factors(const SparseMatrix& m);

class ChainComplex {
 public:
  ChainComplex() = default;
  /// boundaries[n] maps degree n to degree n - 1; boundaries[0] is ignored.
  /// Throws Error when a boundary has the wrong shape or d o d != 0.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

  std::size_t top_degree() const noexcept { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  /// The boundary C_n -> C_{n-1}, empty beyond the top degree.
  SparseMatrix boundary(std::size_t n) const;

  /// C / A for the subcomplex spanned by the listed cells in each degree.
  /// Throws PreconditionError when the cells do not span a subcomplex.
  ChainComplex quotient(const std::vector<std::vector<std::uint32_t>>& sub_cells) const;

  std::int64_t euler_characteristic() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
};

/// A chain map given by its matrices in every degree of the source.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<SparseMatrix> degrees;

  /// Throws Error when shapes mismatch or f d != d f.
  void validate() const;
};

struct Coefficients {
  enum class Kind : std::uint8_t { Z, Q, Zmod, ZpInfinity };

  Kind kind = Kind::Z;
  std::uint64_t p = 0;  // Zmod, ZpInfinity
  std::uint64_t k = 1;  // Zmod exponent

  static Coefficients z() { return {Kind::Z, 0, 1}; }
  static Coefficients q() { return {Kind::Q, 0, 1}; }
  /// Z/p^k; throws PreconditionError unless p is prime and k >= 1.
  static Coefficients zmod(std::uint64_t p, std::uint64_t k = 1);
  static Coefficients zp_inf(std::uint64_t p);

  bool is_field() const { return kind == Kind::Q || (kind == Kind::Zmod && k == 1); }
  Integer modulus() const;
  /// "Z", "Q", "Z/4", "Zpinf(2)"
  std::string to_string() const;
  /// Accepts the to_string spellings and "Z/p^k".
  static Coefficients parse(const std::string& text);

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// copies of the coefficient group plus cyclic summands Z/t.
struct GroupDesc {
  Coefficients base;
  std::size_t copies = 0;
  std::vector<Integer> torsion;  // orders > 1, each dividing the next

  bool is_zero() const { return copies == 0 && torsion.empty(); }
  /// Dimension over a field coefficient; throws PreconditionError otherwise.
  std::size_t dimension() const;
  /// "0", "Z + Z/2", "Q + Q", "Zpinf(2) + Z/2"
  std::string to_string() const;

  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

struct Homology {
  Coefficients coeff;
  bool cohomology = false;
  bool reduced = false;
  std::vector<GroupDesc> groups;  // by degree

  /// The zero group beyond the computed range.
  GroupDesc at(std::size_t n) const;
  /// One line per degree, e.g. "H_2 = Z + Z/2" or "H^1 = Z/2".
  std::string to_string() const;
};

/// Integral homology of C: ranks of the free parts and torsion coefficients.
struct IntegralHomology {
  std::vector<std::size_t> free;
  std::vector<std::vector<Integer>> torsion;
};

IntegralHomology integral_homology(const ChainComplex& c, bool reduced = false);

/// H_n(C; G) = H_n (x) G + Tor(H_{n-1}, G); cohomology by Hom and Ext.
Homology homology(const ChainComplex& c, const Coefficients& coeff, bool reduced = false);
Homology cohomology(const ChainComplex& c, const Coefficients& coeff, bool reduced = false);
Homology from_integral(const IntegralHomology& h, const Coefficients& coeff, bool cohomology, bool reduced);

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// The face closure of the given simplices. Throws Error on a vertex out of
  /// range or a repeated vertex.
  static SimplicialComplex from_facets(std::size_t vertices, std::vector<Simplex> facets);
  /// One simplex per line, vertices separated by spaces.
  static SimplicialComplex parse(const std::string& text);

  std::size_t vertex_count() const noexcept { return vertices_; }
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(std::size_t k) const;
  std::size_t count(std::size_t k) const { return simplices(k).size(); }
  std::size_t size() const;
  std::optional<std::uint32_t> index(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index(s).has_value(); }
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  SimplicialComplex skeleton(std::size_t k) const;

  /// Oriented by sorted vertex order.
  ChainComplex chain_complex() const;
  /// Chains of the pair (this, sub); throws PreconditionError if sub is not a subcomplex.
  ChainComplex relative_chain_complex(const SimplicialComplex& sub) const;
  /// Per-degree indices of the simplices of sub inside this complex.
  std::vector<std::vector<std::uint32_t>> cells_of(const SimplicialComplex& sub) const;

  std::string to_text() const;

 private:
  std::size_t vertices_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::uint32_t>> index_;
};

class SimplicialMap {
 public:
  /// Throws Error unless every simplex maps onto a simplex of the target.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::uint32_t> vertex_map);
  /// Lines "v -> w".
  static SimplicialMap parse(const SimplicialComplex& source, const SimplicialComplex& target, const std::string& text);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const std::vector<std::uint32_t>& vertex_map() const noexcept { return map_; }
  Simplex image(const Simplex& s) const;

  ChainMap chain_map() const;
  /// The induced map of pairs; throws PreconditionError unless f(A) lies in B.
  ChainMap relative_chain_map(const SimplicialComplex& source_sub, const SimplicialComplex& target_sub) const;

  std::string to_text() const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<std::uint32_t> map_;
};

struct InducedMapReport {
  std::size_t degree = 0;
  Coefficients coeff;
  bool cohomology = false;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  /// Rows index the codomain basis, columns the domain basis.
  std::vector<std::vector<Rational>> matrix;
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};

/// Supported coefficients: Q and Z/p for homology and cohomology; Z for
/// homology when both groups are torsion-free. Others raise PreconditionError.
InducedMapReport induced(const ChainMap& f, std::size_t degree, const Coefficients& coeff, bool cohomology = false);

/// Rank of a matrix over Q or Z/p.
std::size_t field_rank(const SparseMatrix& m, const Coefficients& coeff);

// Builders.

/// The k-gon, k >= 3.
SimplicialComplex circle(std::size_t k);
SimplicialComplex simplex_boundary(std::size_t n);
SimplicialComplex full_simplex(std::size_t n);
/// Cone on the complex with apex vertex_count().
SimplicialComplex cone(const SimplicialComplex& base);

/// Winding map of the pk-gon onto the k-gon, vertex j to j mod k.
SimplicialMap degree_map_circle(std::uint64_t p, std::size_t k = 3);

/// Staircase triangulation: source vertices keep their indices, target vertex
/// w becomes source.vertex_count() + w.
struct Cylinder {
  SimplicialComplex complex;
  SimplicialComplex domain_end;
  SimplicialComplex target_end;
  std::vector<std::uint32_t> target_vertices;
};

Cylinder mapping_cylinder(const SimplicialMap& f);

/// M_p with its boundary circle, the disk Delta bounded by the same 3p-gon,
/// and the collapse xi: (M_p, dM_p) -> (Delta, dDelta).
struct MpPair {
  SimplicialComplex m;
  SimplicialComplex boundary;
  SimplicialComplex disk;
  SimplicialComplex disk_boundary;
  SimplicialMap xi;
};

MpPair mp_pair(std::uint64_t p, std::size_t k = 3);

/// stages[i] is L_{i+1}; subdivided[i] is L_{i+1} with every edge cut into p
/// pieces and every triangle coned; bonds[i]: stages[i+1] -> subdivided[i].
struct PontryaginTower {
  std::vector<SimplicialComplex> stages;
  std::vector<SimplicialComplex> subdivided;
  std::vector<SimplicialMap> bonds;
};

/// Throws SizeLimitError for k > 2.
PontryaginTower pontryagin_stages(std::uint64_t p, std::size_t k);

/// The (n+1)-skeleton of the Edwards-Walsh complex over K and the inclusion of K^(n).
struct EwSkeleton {
  ChainComplex complex;
  ChainMap inclusion;
};

/// group is Z or Z/p; n >= 2.
EwSkeleton ew_skeleton(const SimplicialComplex& k, const Coefficients& group, std::size_t n);

/// S^n with an (n+1)-cell attached by degree m; m >= 2, n >= 1.
ChainComplex moore_space(std::uint64_t m, std::size_t n);
/// Two points.
ChainComplex sphere_zero();

/// Reduced homology of the join K * L through degree dim K + dim L + 1.
Homology join_homology(const ChainComplex& k, const ChainComplex& l, const Coefficients& coeff);

}  // namespace bockstein::homology
