#pragma once

#include <optional>
#include <vector>

#include "corep/scalar.hpp"

namespace corep {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

namespace linalg {

Vec zero_vec(size_t n, int order = 1);
Vec scaled(const Vec& v, const Scalar& c);
void add_scaled(Vec& dst, const Vec& src, const Scalar& c);
bool is_zero(const Vec& v);

// In-place reduced row echelon form; returns pivot column per row.
std::vector<size_t> rref(Mat& m);
size_t rank(Mat m);

// Solution space of m x = 0 as rows of the returned matrix (RREF'd).
Mat kernel(const Mat& m, size_t cols, int order = 1);

Mat mat_mul(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);
Scalar det(Mat a);

}  // namespace linalg

// A subspace of K^n in canonical form: basis rows in RREF over the ambient
// coordinate order, so equal subspaces have identical matrices.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  explicit Subspace(size_t ambient) : ambient_(ambient) {}
  // Rows are arbitrary spanning vectors; they are reduced to RREF.
  Subspace(size_t ambient, Mat rows);

  static Subspace full(size_t ambient, int order = 1);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const Mat& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Residue of v after reduction by the basis (zero iff contained).
  Vec reduce(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  size_t ambient_;
  Mat rows_;
  std::vector<size_t> pivots_;
};

// Incremental row-reduction accumulator: feed rows, query rank/kernel later.
// Useful when the row set is huge but mostly dependent.
class RowSpan {
public:
  explicit RowSpan(size_t cols) : cols_(cols) {}
  // Returns true if the row enlarged the span.
  bool add(Vec row);
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  Subspace to_subspace() const;
  // Kernel of the matrix whose rows were added (as a subspace of K^cols).
  Subspace kernel(int order = 1) const;

private:
  size_t cols_;
  Mat rows_;                    // kept in echelon (not fully reduced) form
  std::vector<size_t> pivots_;  // pivot column of each stored row
};

}  // namespace corep
