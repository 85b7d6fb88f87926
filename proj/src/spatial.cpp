#include "bd2d/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bd2d {

Area::Area(double width_m, double height_m) : width(width_m), height(height_m) {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("Area: width and height must be positive");
  }
}

double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

PointSet::PointSet(Area area, std::vector<Point> points)
    : area_(area), points_(std::move(points)) {
  for (const Point& p : points_) {
    if (p.x < 0.0 || p.x > area_.width || p.y < 0.0 || p.y > area_.height) {
      throw std::invalid_argument("PointSet: point outside area");
    }
  }
}

PointSet generate_uniform(std::size_t n, const Area& area, Rng& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = uniform_double(rng, 0.0, area.width);
    const double y = uniform_double(rng, 0.0, area.height);
    pts.push_back(Point{x, y});
  }
  return PointSet(area, std::move(pts));
}

PointSet generate_ppp(double density, const Area& area, Rng& rng) {
  if (density < 0.0) {
    throw std::invalid_argument("generate_ppp: density must be >= 0");
  }
  const double mean = density * area.size();
  std::size_t n = 0;
  if (mean > 0.0) {
    n = static_cast<std::size_t>(
        std::poisson_distribution<long long>(mean)(rng));
  }
  return generate_uniform(n, area, rng);
}

NeighborIndex::NeighborIndex(const PointSet& points, double radius_m)
    : points_(&points), radius_(radius_m) {
  if (!(radius_ > 0.0)) {
    throw std::invalid_argument("NeighborIndex: radius must be positive");
  }
  const Area& area = points.area();
  cells_x_ = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(area.width / radius_)));
  cells_y_ = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(area.height / radius_)));

  const std::size_t n = points.size();
  std::vector<std::uint32_t> counts(cells_x_ * cells_y_ + 1, 0);
  std::vector<std::size_t> cell(n);
  for (std::size_t i = 0; i < n; ++i) {
    cell[i] = cell_of(points[i]);
    ++counts[cell[i] + 1];
  }
  for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
  cell_start_ = counts;
  ids_.resize(n);
  std::vector<std::uint32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    ids_[cursor[cell[i]]++] = static_cast<std::uint32_t>(i);
  }
}

std::size_t NeighborIndex::cell_of(const Point& p) const {
  const auto clamp = [](double v, std::size_t cells, double edge) {
    if (v <= 0.0) return std::size_t{0};
    const auto c = static_cast<std::size_t>(v / edge);
    return std::min(c, cells - 1);
  };
  const std::size_t cx = clamp(p.x, cells_x_, radius_);
  const std::size_t cy = clamp(p.y, cells_y_, radius_);
  return cy * cells_x_ + cx;
}

void NeighborIndex::gather(const Point& probe, double radius_m,
                           std::size_t skip,
                           std::vector<std::size_t>& out) const {
  if (radius_m > radius_) {
    throw std::invalid_argument(
        "NeighborIndex: query radius exceeds index radius");
  }
  const double r2 = radius_m * radius_m;
  const std::size_t c = cell_of(probe);
  const std::size_t cx = c % cells_x_;
  const std::size_t cy = c / cells_x_;
  const std::size_t x0 = cx > 0 ? cx - 1 : 0;
  const std::size_t x1 = std::min(cx + 1, cells_x_ - 1);
  const std::size_t y0 = cy > 0 ? cy - 1 : 0;
  const std::size_t y1 = std::min(cy + 1, cells_y_ - 1);
  const PointSet& ps = *points_;
  for (std::size_t gy = y0; gy <= y1; ++gy) {
    for (std::size_t gx = x0; gx <= x1; ++gx) {
      const std::size_t cc = gy * cells_x_ + gx;
      for (std::uint32_t k = cell_start_[cc]; k < cell_start_[cc + 1]; ++k) {
        const std::size_t j = ids_[k];
        if (j == skip) continue;
        if (squared_distance(probe, ps[j]) <= r2) out.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<std::size_t> NeighborIndex::neighbors_within(
    std::size_t center, double radius_m) const {
  if (center >= points_->size()) {
    throw std::out_of_range("NeighborIndex: unknown node index " +
                            std::to_string(center));
  }
  std::vector<std::size_t> out;
  gather((*points_)[center], radius_m, center, out);
  return out;
}

std::vector<std::size_t> NeighborIndex::neighbors_within(
    const Point& center, double radius_m) const {
  std::vector<std::size_t> out;
  gather(center, radius_m, points_->size(), out);
  return out;
}

}  // namespace bd2d
