#include "bd2d/popularity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bd2d {

namespace {

// Compensated accumulator; the pmf has to sum to 1 to ~1e-12 even at
// catalog sizes of 10^4.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

ZipfModel::ZipfModel(std::size_t catalog_size, double exponent)
    : exponent_(exponent) {
  if (catalog_size < 1) {
    throw std::invalid_argument("ZipfModel: catalog size must be at least 1");
  }
  if (exponent < 0.0) {
    throw std::invalid_argument("ZipfModel: exponent must be >= 0");
  }
  pmf_.resize(catalog_size);
  KahanSum norm;
  for (std::size_t y = 1; y <= catalog_size; ++y) {
    pmf_[y - 1] = std::pow(static_cast<double>(y), -exponent);
    norm.add(pmf_[y - 1]);
  }
  cdf_.resize(catalog_size);
  KahanSum run;
  for (std::size_t i = 0; i < catalog_size; ++i) {
    pmf_[i] /= norm.sum;
    run.add(pmf_[i]);
    cdf_[i] = run.sum;
  }
  cdf_.back() = 1.0;
}

double ZipfModel::pmf(std::size_t rank) const {
  if (rank < 1 || rank > pmf_.size()) {
    throw std::out_of_range("ZipfModel: rank " + std::to_string(rank) +
                            " outside 1.." + std::to_string(pmf_.size()));
  }
  return pmf_[rank - 1];
}

std::size_t ZipfModel::sample(Rng& rng) const {
  const double u = uniform_double(rng, 0.0, 1.0);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<std::size_t>(it - cdf_.begin()) + 1;
}

double ZipfModel::top_k_mass(std::size_t k) const {
  if (k > pmf_.size()) {
    throw std::invalid_argument("ZipfModel: top_k_mass k exceeds catalog size");
  }
  return k == 0 ? 0.0 : cdf_[k - 1];
}

}  // namespace bd2d
