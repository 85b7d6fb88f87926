#pragma once

#include <cstddef>
#include <vector>

#include "bd2d/rng.hpp"

namespace bd2d {

// Zipf popularity over ranks 1..L: P(Y) = Y^-beta / sum_l l^-beta.
// Immutable after construction; sampling takes a caller-owned generator.
class ZipfModel {
 public:
  ZipfModel(std::size_t catalog_size, double exponent);

  std::size_t catalog_size() const { return pmf_.size(); }
  double exponent() const { return exponent_; }

  // Probability of rank y, y in 1..L.
  double pmf(std::size_t rank) const;
  const std::vector<double>& probabilities() const { return pmf_; }

  // One rank in 1..L with probability pmf(rank); inverse-CDF draw.
  std::size_t sample(Rng& rng) const;

  // P(Y <= k), the mass of the k most popular ranks. k <= L.
  double top_k_mass(std::size_t k) const;

 private:
  double exponent_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

}  // namespace bd2d
