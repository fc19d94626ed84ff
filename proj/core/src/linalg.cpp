#include "corep/linalg.hpp"

#include <algorithm>

namespace corep {

namespace linalg {

Vec zero_vec(size_t n, int order) { return Vec(n, Scalar::zero(order)); }

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r = v;
  for (auto& x : r) x = x * c;
  return r;
}

void add_scaled(Vec& dst, const Vec& src, const Scalar& c) {
  if (dst.size() != src.size()) structural_error("linalg: vector size mismatch");
  if (c.is_zero()) return;
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = dst[i] + src[i] * c;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Scalar inv = m[row][col].inverse();
    for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Scalar c = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - c * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

size_t rank(Mat m) {
  rref(m);
  return m.size();
}

Mat kernel(const Mat& m, size_t cols, int order) {
  Mat red = m;
  std::vector<size_t> piv = rref(red);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : piv) is_pivot[p] = true;
  Mat result;
  for (size_t col = 0; col < cols; ++col) {
    if (is_pivot[col]) continue;
    Vec v = zero_vec(cols, order);
    v[col] = Scalar::one(order);
    for (size_t r = 0; r < red.size(); ++r) v[piv[r]] = -red[r][col];
    result.push_back(std::move(v));
  }
  return result;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat r(n, zero_vec(m));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) structural_error("linalg: dimension mismatch in mat_mul");
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][t] * b[t][j];
    }
  }
  return r;
}

std::optional<Mat> inverse(const Mat& a) {
  size_t n = a.size();
  Mat aug(n, zero_vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) structural_error("linalg: inverse of non-square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Scalar::one();
  }
  std::vector<size_t> piv = rref(aug);
  if (piv.size() != n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, zero_vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Scalar det(Mat a) {
  size_t n = a.size();
  Scalar d = Scalar::one();
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && a[sel][col].is_zero()) ++sel;
    if (sel == n) return Scalar::zero();
    if (sel != col) {
      std::swap(a[sel], a[col]);
      d = -d;
    }
    d = d * a[col][col];
    Scalar inv = a[col][col].inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Scalar c = a[i][col] * inv;
      for (size_t j = col; j < n; ++j) a[i][j] = a[i][j] - c * a[col][j];
    }
  }
  return d;
}

}  // namespace linalg

Subspace::Subspace(size_t ambient, Mat rows) : ambient_(ambient) {
  for (const auto& r : rows)
    if (r.size() != ambient) structural_error("Subspace: row length != ambient dimension");
  pivots_ = linalg::rref(rows);
  rows_ = std::move(rows);
}

Subspace Subspace::full(size_t ambient, int order) {
  Mat rows(ambient, linalg::zero_vec(ambient, order));
  for (size_t i = 0; i < ambient; ++i) rows[i][i] = Scalar::one(order);
  return Subspace(ambient, std::move(rows));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) structural_error("Subspace: vector length != ambient dimension");
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (!c.is_zero()) linalg::add_scaled(r, rows_[i], -c);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return linalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) structural_error("Subspace: ambient mismatch in sum");
  Mat rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return Subspace(ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) structural_error("Subspace: ambient mismatch in intersect");
  // Zassenhaus: row-reduce [A|A; B|0]; bottom-right block spans the intersection.
  size_t n = ambient_;
  Mat aug;
  for (const auto& r : rows_) {
    Vec row = r;
    row.insert(row.end(), r.begin(), r.end());
    aug.push_back(std::move(row));
  }
  for (const auto& r : other.rows_) {
    Vec row = r;
    row.resize(2 * n, Scalar::zero());
    aug.push_back(std::move(row));
  }
  std::vector<size_t> piv = linalg::rref(aug);
  Mat inter;
  for (size_t i = 0; i < aug.size(); ++i) {
    if (piv[i] >= n) inter.push_back(Vec(aug[i].begin() + n, aug[i].end()));
  }
  return Subspace(n, std::move(inter));
}

bool RowSpan::add(Vec row) {
  if (row.size() != cols_) structural_error("RowSpan: row length mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = row[pivots_[i]];
    if (!c.is_zero()) linalg::add_scaled(row, rows_[i], -c);
  }
  size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;
  Scalar inv = row[p].inverse();
  for (auto& x : row) x = x * inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

Subspace RowSpan::to_subspace() const { return Subspace(cols_, rows_); }

Subspace RowSpan::kernel(int order) const {
  Mat m = rows_;
  return Subspace(cols_, linalg::kernel(m, cols_, order));
}

}  // namespace corep
