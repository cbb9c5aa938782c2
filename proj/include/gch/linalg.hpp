#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gch/rational.hpp"

namespace gch {

// Row-major sparse matrix over Q. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long nnz() const;

  void set(int r, int c, const Rat& v);
  Rat get(int r, int c) const;
  const std::map<int, Rat>& row(int r) const { return data_[r]; }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_{0};
  int cols_{0};
  std::vector<std::map<int, Rat>> data_;
};

// A * B (used to check that consecutive boundary maps compose to zero).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Exact rank by fraction-free (Bareiss) elimination with Markowitz pivoting,
// after clearing denominators row by row.
long rank_exact(const SparseMatrix& m);

// Rank of the matrix reduced modulo p (p an odd prime below 2^31). Also
// reports the pivot rows/columns of the elimination.
struct ModpRank {
  long rank{0};
  std::vector<int> pivot_rows;
  std::vector<int> pivot_cols;
};
ModpRank rank_modp(const SparseMatrix& m, std::uint32_t p);

// Rank with the fast path: ranks modulo several primes must agree and the
// square submatrix on the modular pivot skeleton must be exactly
// nonsingular; any doubt falls back to the exact elimination.
struct RankInfo {
  long rank{0};
  bool fast_path{false};
};
RankInfo rank(const SparseMatrix& m);

// One exact solution of a x = b with free variables set to zero, or the
// verdict that the system is inconsistent.
struct LinearSolve {
  bool consistent{false};
  std::vector<Rat> x;
};
LinearSolve solve_exact(const SparseMatrix& a, const std::vector<Rat>& b);

}  // namespace gch
