#include <algorithm>
#include <set>

#include "bockstein/error.hpp"
#include "bockstein/homology.hpp"

namespace bockstein::homology {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shapes do not compose");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

namespace {

class Reducer {
 public:
  Reducer(const Matrix& m, bool transforms) : a_(m), track_(transforms) {
    if (track_) {
      u_ = u_inv_ = Matrix::identity(m.rows());
      v_ = v_inv_ = Matrix::identity(m.cols());
    }
  }

  SnfResult run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!place_smallest(t)) break;
      while (true) {
        bool clean = clear_column(t) && clear_row(t);
        if (!clean) {
          place_smallest(t);
          continue;
        }
        if (auto bad = find_nondivisible(t)) {
          add_row(t, *bad, 1);
          continue;
        }
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SnfResult r;
    for (std::size_t i = 0; i < t; ++i) r.diagonal.push_back(a_(i, i));
    if (track_) {
      r.u = std::move(u_);
      r.v = std::move(v_);
      r.u_inv = std::move(u_inv_);
      r.v_inv = std::move(v_inv_);
    }
    return r;
  }

 private:
  Matrix a_;
  bool track_;
  Matrix u_, v_, u_inv_, v_inv_;

  // Row i += c * row j, keeping U and U^-1 in step.
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) += c * a_(j, k);
    if (!track_) return;
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) += c * u_(j, k);
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, j) -= c * u_inv_(k, i);
  }

  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < a_.rows(); ++k) a_(k, i) += c * a_(k, j);
    if (!track_) return;
    for (std::size_t k = 0; k < v_.rows(); ++k) v_(k, i) += c * v_(k, j);
    for (std::size_t k = 0; k < v_inv_.cols(); ++k) v_inv_(j, k) -= c * v_inv_(i, k);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.cols(); ++k) std::swap(a_(i, k), a_(j, k));
    if (!track_) return;
    for (std::size_t k = 0; k < u_.cols(); ++k) std::swap(u_(i, k), u_(j, k));
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) std::swap(u_inv_(k, i), u_inv_(k, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a_.rows(); ++k) std::swap(a_(k, i), a_(k, j));
    if (!track_) return;
    for (std::size_t k = 0; k < v_.rows(); ++k) std::swap(v_(k, i), v_(k, j));
    for (std::size_t k = 0; k < v_inv_.cols(); ++k) std::swap(v_inv_(i, k), v_inv_(j, k));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a_.cols(); ++k) a_(i, k) = -a_(i, k);
    if (!track_) return;
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(i, k) = -u_(i, k);
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, i) = -u_inv_(k, i);
  }

  bool place_smallest(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        if (!best || abs(a_(i, j)) < abs(a_(best->first, best->second))) best = {i, j};
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // Returns false if a nonzero remainder was left below the pivot.
  bool clear_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (a_(i, t) != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (a_(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> find_nondivisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

SnfResult snf(const Matrix& m, bool transforms) { return Reducer(m, transforms).run(); }

Matrix SparseMatrix::dense() const {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) m(i, j) = static_cast<long>(v);
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::vector<Integer> invariant_factors(const SparseMatrix& m) {
  // Rows as ordered maps; a column index tracks which rows meet each column.
  std::vector<std::map<std::uint32_t, Integer>> rows(m.rows);
  std::vector<std::set<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t j = 0; j < m.cols; ++j) {
    for (const auto& [i, v] : m.columns[j]) {
      if (v == 0) continue;
      rows[i][j] = static_cast<long>(v);
      col_rows[j].insert(i);
    }
  }
  std::vector<bool> row_alive(m.rows, true);
  std::size_t units = 0;
  while (true) {
    // Unit pivot with the fewest competitors in its column.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> pivot;
    std::size_t best_cost = 0;
    for (std::uint32_t i = 0; i < m.rows; ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (col_rows[j].size() - 1) * (rows[i].size() - 1);
        if (!pivot || cost < best_cost) {
          pivot = {i, j};
          best_cost = cost;
          if (cost == 0) break;
        }
      }
      if (pivot && best_cost == 0) break;
    }
    if (!pivot) break;
    auto [pi, pj] = *pivot;
    const auto prow = rows[pi];
    const Integer pv = prow.at(pj);
    std::vector<std::uint32_t> others(col_rows[pj].begin(), col_rows[pj].end());
    for (std::uint32_t r : others) {
      if (r == pi) continue;
      Integer factor = rows[r].at(pj) * pv;  // pv = +-1, so this is a_rj / pv
      for (const auto& [j, v] : prow) {
        Integer nv = rows[r][j] - factor * v;
        if (nv == 0) {
          rows[r].erase(j);
          col_rows[j].erase(r);
        } else {
          rows[r][j] = nv;
          col_rows[j].insert(r);
        }
      }
    }
    for (const auto& [j, v] : prow) col_rows[j].erase(pi);
    rows[pi].clear();
    row_alive[pi] = false;
    ++units;
  }
  // Dense SNF of what is left.
  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  }
  for (std::uint32_t j = 0; j < m.cols; ++j) {
    if (!col_rows[j].empty()) live_cols.push_back(j);
  }
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty()) {
    if (live_rows.size() * live_cols.size() > 4'000'000) throw SizeLimitError("SNF remainder too large");
    Matrix rest(live_rows.size(), live_cols.size());
    std::map<std::uint32_t, std::size_t> col_pos;
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
    for (std::size_t a = 0; a < live_rows.size(); ++a) {
      for (const auto& [j, v] : rows[live_rows[a]]) rest(a, col_pos.at(j)) = v;
    }
    for (auto& d : snf(rest, false).diagonal) out.push_back(d);
  }
  return out;
}

}  // namespace bockstein::homology
