#include "lieext/matrix.hpp"

#include <stdexcept>

namespace lieext {

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out(*this);
  out += o;
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::scale(const Rat& a) {
  for (auto& x : data_) x *= a;
  return *this;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
  Vec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& a = (*this)(i, j);
      if (a != 0 && v[j] != 0) out[i] += a * v[j];
    }
  return out;
}

Rat Mat::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

std::pair<Mat, std::vector<std::size_t>> rref(Mat m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).second.size(); }

std::vector<Vec> nullspace(const Mat& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec RowSpan::reduce(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpan dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v[pivots_[i]];
    if (c != 0) {
      Rat f = c;  // pivot entries are normalized to 1
      for (std::size_t j = pivots_[i]; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
  }
  return v;
}

bool RowSpan::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p == dim_) return false;
  Rat inv = Rat(1) / v[p];
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  // back-substitute into existing rows to keep a reduced form
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = rows_[i][p];
    if (f != 0)
      for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= f * v[j];
  }
  // keep rows ordered by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool span_contains(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return is_zero(v);
  RowSpan s(v.size());
  for (const auto& b : basis) {
    if (b.size() != v.size())
      throw std::invalid_argument("span_contains dimension mismatch");
    s.insert(b);
  }
  return s.contains(v);
}

std::vector<Vec> sum_spans(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::size_t n = a.empty() ? (b.empty() ? 0 : b[0].size()) : a[0].size();
  RowSpan s(n);
  for (const auto& v : a) s.insert(v);
  for (const auto& v : b) s.insert(v);
  return s.basis();
}

std::vector<Vec> intersect_spans(const std::vector<Vec>& a,
                                 const std::vector<Vec>& b) {
  // Zassenhaus: row reduce [A|A ; B|0]; rows with zero left block give the
  // intersection in the right block.
  if (a.empty() || b.empty()) return {};
  std::size_t n = a[0].size();
  Mat m(a.size() + b.size(), 2 * n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a[i][j];
      m(i, n + j) = a[i][j];
    }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(a.size() + i, j) = b[i][j];
  auto [r, pivots] = rref(std::move(m));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true, right_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = r(i, n + j);
      if (v[j] != 0) right_zero = false;
    }
    if (!right_zero) out.push_back(std::move(v));
  }
  return out;
}

Vec solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  Vec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) throw std::runtime_error("inconsistent system");
    x[pivots[i]] = r(i, m.cols());
  }
  return x;
}

}  // namespace lieext
