#pragma once

#include <cstddef>
#include <vector>

#include "bd2d/rng.hpp"

namespace bd2d {

// Rectangular deployment region, in meters.
struct Area {
  Area(double width_m, double height_m);

  double width;
  double height;

  double size() const { return width * height; }
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double squared_distance(const Point& a, const Point& b);

// Immutable set of node positions inside an area. Node indices 0..n-1 are
// stable for the lifetime of the set.
class PointSet {
 public:
  PointSet(Area area, std::vector<Point> points);

  const Area& area() const { return area_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

 private:
  Area area_;
  std::vector<Point> points_;
};

// Exactly n points, coordinates i.i.d. uniform over the area.
PointSet generate_uniform(std::size_t n, const Area& area, Rng& rng);

// Homogeneous Poisson process: count ~ Poisson(density * |area|), positions
// uniform given the count. density is in nodes per square meter.
PointSet generate_ppp(double density, const Area& area, Rng& rng);

// Uniform-grid index for fixed-radius neighbor queries. Cell edge equals the
// construction radius, so any query with radius <= that edge only has to
// inspect the 3x3 block of cells around the probe. Results are identical to
// an exhaustive distance scan with the closed-ball convention (d <= r).
//
// The index references the point set it was built from; keep the set alive
// for as long as the index is used.
class NeighborIndex {
 public:
  NeighborIndex(const PointSet& points, double radius_m);

  double radius() const { return radius_; }
  const PointSet& points() const { return *points_; }

  // Nodes within `radius_m` of node `center`, excluding the center itself.
  // Sorted ascending. radius_m must not exceed the construction radius.
  std::vector<std::size_t> neighbors_within(std::size_t center,
                                            double radius_m) const;
  // Nodes within `radius_m` of an arbitrary probe location (no exclusion).
  std::vector<std::size_t> neighbors_within(const Point& center,
                                            double radius_m) const;
  // Neighbors of a node at the construction radius.
  std::vector<std::size_t> neighbors(std::size_t center) const {
    return neighbors_within(center, radius_);
  }

 private:
  void gather(const Point& probe, double radius_m, std::size_t skip,
              std::vector<std::size_t>& out) const;
  std::size_t cell_of(const Point& p) const;

  const PointSet* points_;
  double radius_;
  std::size_t cells_x_ = 1;
  std::size_t cells_y_ = 1;
  // CSR layout: ids of the points in cell c are
  // ids_[cell_start_[c] .. cell_start_[c + 1]).
  std::vector<std::uint32_t> cell_start_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace bd2d
