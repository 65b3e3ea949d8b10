#include "flatband/hull.hpp"

#include <algorithm>
#include <stdexcept>

#include "flatband/rational.hpp"

namespace flatband {

bool in_convex_hull(std::span<const std::int64_t> p, std::span<const Point> points) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  const std::size_t rows = dim + 1;
  const std::size_t nvar = points.size();
  const std::size_t cols = nvar + rows;  // structural then artificial

  // Tableau rows: sum_j x_j q_j = p, sum_j x_j = 1, all right-hand sides
  // made nonnegative. Last column holds the right-hand side.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < nvar; ++j) {
      if (points[j].size() != dim) throw std::invalid_argument("point dimension mismatch");
      t[r][j] = r < dim ? Rational(static_cast<long>(points[j][r])) : Rational(1);
    }
    t[r][cols] = r < dim ? Rational(static_cast<long>(p[r])) : Rational(1);
    if (t[r][cols] < 0) {
      for (std::size_t j = 0; j < nvar; ++j) t[r][j] = -t[r][j];
      t[r][cols] = -t[r][cols];
    }
    t[r][nvar + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = nvar + r;

  // Minimize the sum of artificials; reduced costs for structural columns
  // are minus the column sums.
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= nvar && j < cols) continue;
    for (std::size_t r = 0; r < rows; ++r) cost[j] -= t[r][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  // cost[cols] is minus the objective value
  return cost[cols] == 0;
}

std::vector<Point> hull_vertices(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  std::vector<Point> others;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    others.clear();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != k) others.push_back(pts[j]);
    }
    if (!in_convex_hull(pts[k], others)) out.push_back(pts[k]);
  }
  return out;
}

namespace {

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Point2> convex_hull_2d(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return points;

  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace flatband
