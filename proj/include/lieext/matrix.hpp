#ifndef LIEEXT_MATRIX_HPP
#define LIEEXT_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lieext/rational.hpp"

namespace lieext {

/// Dense matrix over exact rationals.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator+=(const Mat& o);
  Mat& scale(const Rat& a);
  Vec apply(const Vec& v) const;
  Rat trace() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// Reduced row echelon form with the deterministic pivot rule: scan columns
/// left to right, pick the first row with a nonzero entry. Returns the RREF
/// and the pivot columns.
std::pair<Mat, std::vector<std::size_t>> rref(Mat m);

/// Basis of { v : m v = 0 }, size cols - rank.
std::vector<Vec> nullspace(const Mat& m);

std::size_t rank(const Mat& m);

/// Incrementally maintained row space in echelon form. Deterministic: the
/// basis depends only on the insertion order. Every derived basis in the
/// project goes through this, so golden files are reproducible.
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim_ambient() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }

  /// Reduce v against the current echelon rows; returns the residual.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// Insert v; returns true if the rank grew.
  bool insert(Vec v);

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;            // echelon rows, normalized pivots
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Subspace algebra on rational spans.
bool span_contains(const std::vector<Vec>& basis, const Vec& v);
std::vector<Vec> sum_spans(const std::vector<Vec>& a, const std::vector<Vec>& b);
std::vector<Vec> intersect_spans(const std::vector<Vec>& a,
                                 const std::vector<Vec>& b);

/// Solve m x = b exactly; throws if inconsistent.
Vec solve(const Mat& m, const Vec& b);

}  // namespace lieext

#endif
