// Shared test helpers: chi-square p-values, canonical cluster labels, and an
// independent successive-renormalization sampler used as a distribution
// oracle for the random caching policy.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bd2d/rng.hpp"

namespace testsupport {

// Regularized upper incomplete gamma Q(a, x): series for x < a + 1,
// modified Lentz continued fraction otherwise.
inline double regularized_gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw std::invalid_argument("regularized_gamma_q: a > 0, x >= 0 required");
  }
  if (x == 0.0) return 1.0;
  const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    double denom = a;
    for (int n = 0; n < 1000; ++n) {
      denom += 1.0;
      term *= x / denom;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(log_prefix);
  }
  double b = x + 1.0 - a;
  double c = 1e300;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(log_prefix) * h;
}

inline double chi_square_p_value(double statistic, int dof) {
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

// Pearson statistic from observed counts and expected counts (same length).
inline double chi_square_statistic(const std::vector<double>& observed,
                                   const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = observed[i] - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

// Relabels cluster ids in order of first appearance so two labelings can be
// compared up to a permutation of ids. Negative labels (noise) are kept.
inline std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size(), -1);
  std::unordered_map<int, int> remap;
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) continue;
    auto [it, inserted] = remap.try_emplace(labels[i], next);
    if (inserted) ++next;
    out[i] = it->second;
  }
  return out;
}

// Weighted sampling without replacement by literal successive
// renormalization over a Fenwick tree. Independent of the library's
// placement code; used as its distribution oracle.
class FenwickSampler {
 public:
  explicit FenwickSampler(const std::vector<double>& weights)
      : n_(weights.size()), tree_(weights.size() + 1, 0.0), live_(weights) {
    for (std::size_t i = 1; i <= n_; ++i) add(i, weights[i - 1]);
  }

  // k distinct 1-based indices; weights restored afterwards.
  std::vector<int> draw(int k, bd2d::Rng& rng) {
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    double total = prefix(n_);
    for (int j = 0; j < k; ++j) {
      const double u = bd2d::uniform_double(rng, 0.0, total);
      const std::size_t idx = upper_index(u);
      picked.push_back(static_cast<int>(idx));
      total -= live_[idx - 1];
      add(idx, -live_[idx - 1]);
    }
    for (const int idx : picked) {
      add(static_cast<std::size_t>(idx),
          live_[static_cast<std::size_t>(idx) - 1]);
    }
    return picked;
  }

 private:
  void add(std::size_t i, double delta) {
    for (; i <= n_; i += i & (~i + 1)) tree_[i] += delta;
  }

  double prefix(std::size_t i) const {
    double s = 0.0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

  // Smallest index whose prefix sum exceeds u.
  std::size_t upper_index(double u) const {
    std::size_t pos = 0;
    std::size_t mask = 1;
    while ((mask << 1) <= n_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
      const std::size_t next = pos + mask;
      if (next <= n_ && tree_[next] <= u) {
        pos = next;
        u -= tree_[next];
      }
    }
    return pos < n_ ? pos + 1 : n_;
  }

  std::size_t n_;
  std::vector<double> tree_;
  std::vector<double> live_;
};

// Exact inclusion probability of each index under k-step successive
// renormalization, by enumerating every ordered draw. Tractable for tiny
// catalogs only.
inline std::vector<double> exact_inclusion_probabilities(
    const std::vector<double>& pmf, int k) {
  const std::size_t n = pmf.size();
  std::vector<double> inclusion(n, 0.0);
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> chosen;

  const auto dfs = [&](auto&& self, int depth, double prob,
                       double mass) -> void {
    if (depth == k) {
      for (const std::size_t i : chosen) inclusion[i] += prob;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      chosen.push_back(i);
      self(self, depth + 1, prob * pmf[i] / mass, mass - pmf[i]);
      chosen.pop_back();
      taken[i] = false;
    }
  };
  dfs(dfs, 0, 1.0, 1.0);
  return inclusion;
}

}  // namespace testsupport
