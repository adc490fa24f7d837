#include <random>

#include "doctest.h"
#include "lieext/matrix.hpp"

using namespace lieext;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Rat(num(rng)) / Rat(den(rng));
  return m;
}

}  // namespace

TEST_CASE("rank plus nullity equals the column count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + std::size_t(rng() % 9);
    std::size_t cols = 1 + std::size_t(rng() % 9);
    Mat m = random_matrix(rng, rows, cols);
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const Vec& v : ns) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("rref is idempotent and flags pivot columns") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Mat m = random_matrix(rng, 2 + rng() % 6, 2 + rng() % 6);
    auto [red, pivots] = rref(m);
    auto [red2, pivots2] = rref(red);
    CHECK(red == red2);
    CHECK(pivots == pivots2);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      CHECK(red(r, pivots[r]) == 1);
  }
}

TEST_CASE("solve produces an exact solution") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    Mat m = random_matrix(rng, rows, cols);
    Vec x(cols);
    std::uniform_int_distribution<int> num(-3, 3);
    for (auto& c : x) c = num(rng);
    Vec b = m.apply(x);
    Vec sol = solve(m, b);
    CHECK(m.apply(sol) == b);
  }
}

TEST_CASE("RowSpan basis depends only on the insertion order") {
  std::mt19937_64 rng(17);
  std::vector<Vec> rows;
  for (int k = 0; k < 12; ++k) {
    Vec v(6);
    std::uniform_int_distribution<int> num(-4, 4);
    for (auto& c : v) c = num(rng);
    rows.push_back(v);
  }
  RowSpan a(6), b(6);
  for (const Vec& v : rows) a.insert(v);
  for (const Vec& v : rows) b.insert(v);
  CHECK(a.basis() == b.basis());
  for (const Vec& v : rows) CHECK(a.contains(v));
}

TEST_CASE("span sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = random_matrix(rng, 1 + rng() % 4, 6);
    Mat b = random_matrix(rng, 1 + rng() % 4, 6);
    std::vector<Vec> sa, sb;
    for (std::size_t r = 0; r < a.rows(); ++r) sa.push_back(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) sb.push_back(b.row(r));
    std::size_t da = rank(Mat::from_rows(sa)), db = rank(Mat::from_rows(sb));
    CHECK(da + db ==
          sum_spans(sa, sb).size() + intersect_spans(sa, sb).size());
  }
}
