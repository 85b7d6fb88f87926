#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bd2d/availability.hpp"
#include "bd2d/spatial.hpp"
#include "doctest.h"

using bd2d::Area;
using bd2d::CachingVector;
using bd2d::Intensity;
using bd2d::ObjectiveSpec;
using bd2d::Rng;
using bd2d::ZipfModel;

TEST_CASE("intensity holds the exact disk exponent") {
  CHECK_THROWS_AS(Intensity(-1e-3, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(Intensity(1e-3, -1.0), std::invalid_argument);

  const Intensity i(1e-3, 30.0);
  CHECK(i.mu() == 1e-3 * bd2d::kPi * 900.0);

  const Intensity from =
      Intensity::from_node_count(1000, Area(1000.0, 1000.0), 100.0);
  CHECK(from.density() == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(from.mu() == doctest::Approx(10.0 * bd2d::kPi).epsilon(1e-15));
}

TEST_CASE("poisson neighbor-count probabilities") {
  SUBCASE("empty process") {
    const Intensity zero(0.0, 50.0);
    CHECK(bd2d::prob_eta_nodes(zero, 0) == 1.0);
    CHECK(bd2d::prob_eta_nodes(zero, 3) == 0.0);
  }

  SUBCASE("negative count is rejected") {
    CHECK_THROWS_AS(bd2d::prob_eta_nodes(Intensity(1e-3, 30.0), -1),
                    std::invalid_argument);
  }

  SUBCASE("hand value at the 30 m range") {
    const Intensity i(1e-3, 30.0);  // mu = 0.9 pi = 2.8274
    CHECK(std::fabs(bd2d::prob_eta_nodes(i, 0) - 0.0592) < 1e-4);
    CHECK(bd2d::prob_eta_nodes(i, 0) ==
          doctest::Approx(std::exp(-0.9 * bd2d::kPi)).epsilon(1e-14));
  }

  SUBCASE("normalization up to eta = 200") {
    for (const double mu : {0.1, 0.5, 1.0, 10.0, 50.0, 100.0}) {
      const Intensity i(mu / (bd2d::kPi * 100.0), 10.0);
      double sum = 0.0;
      for (int eta = 0; eta <= 200; ++eta) {
        sum += bd2d::prob_eta_nodes(i, eta);
      }
      CHECK(std::fabs(sum - 1.0) <= 1e-9);
    }
  }

  SUBCASE("large exponent stays finite") {
    const Intensity i(700.0 / (bd2d::kPi * 100.0), 10.0);  // mu = 700
    const double p = bd2d::prob_eta_nodes(i, 700);
    CHECK(std::isfinite(p));
    CHECK(p > 0.0);
  }
}

TEST_CASE("analytic availability") {
  CHECK(bd2d::availability_analytic(Intensity(1e-3, 0.0)) == 0.0);

  const Intensity i(1e-3, 30.0);
  CHECK(std::fabs(bd2d::availability_analytic(i) - 0.9408) < 1e-4);
  CHECK(bd2d::availability_analytic(i) == 1.0 - bd2d::prob_eta_nodes(i, 0));

  const Intensity dense(2e-3, 100.0);  // mu ~ 62.8
  CHECK(bd2d::availability_analytic(dense) == doctest::Approx(1.0).epsilon(1e-15));

  SUBCASE("monotone in density and radius") {
    double prev = -1.0;
    for (const double lambda : {1e-4, 5e-4, 1e-3, 5e-3}) {
      const double a = bd2d::availability_analytic(Intensity(lambda, 40.0));
      CHECK(a >= prev);
      prev = a;
    }
    prev = -1.0;
    for (const double radius : {0.0, 10.0, 30.0, 80.0, 200.0}) {
      const double a = bd2d::availability_analytic(Intensity(1e-3, radius));
      CHECK(a >= prev);
      prev = a;
    }
  }
}

TEST_CASE("thinned availability") {
  const Intensity i(1e-3, 100.0);
  CHECK(bd2d::availability_per_content(i, 0.0) == 0.0);
  CHECK(bd2d::availability_per_content(i, 1.0) ==
        bd2d::availability_analytic(i));
  CHECK(std::fabs(bd2d::availability_per_content(i, 0.1) - 0.9568) < 1e-4);
  CHECK_THROWS_AS(bd2d::availability_per_content(i, -0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(bd2d::availability_per_content(i, 1.1),
                  std::invalid_argument);
}

TEST_CASE("empirical coverage of a simulated point process") {
  // Fraction of interior probe points with a node within eps, against
  // 1 - e^{-mu}. Multiple fresh realizations keep realization-to-realization
  // variance inside the tolerance.
  const Area area(1000.0, 1000.0);
  const double eps = 100.0;
  Rng rng = bd2d::make_rng(314);
  for (const double mu : {0.1, 1.0, 5.0}) {
    const double lambda = mu / (bd2d::kPi * eps * eps);
    long covered = 0;
    long probes = 0;
    for (int realization = 0; realization < 20; ++realization) {
      const bd2d::PointSet nodes = bd2d::generate_ppp(lambda, area, rng);
      const bd2d::NeighborIndex index(nodes, eps);
      for (int p = 0; p < 1000; ++p) {
        const bd2d::Point probe{bd2d::uniform_double(rng, eps, 1000.0 - eps),
                                bd2d::uniform_double(rng, eps, 1000.0 - eps)};
        covered +=
            static_cast<long>(!index.neighbors_within(probe, eps).empty());
        ++probes;
      }
    }
    const double expected = 1.0 - std::exp(-mu);
    CHECK(std::fabs(static_cast<double>(covered) / probes - expected) < 0.02);
  }
}

TEST_CASE("caching vector bounds") {
  CHECK_THROWS_AS(CachingVector({0.5, 1.2}), std::invalid_argument);
  CHECK_THROWS_AS(CachingVector({-0.1}), std::invalid_argument);
  const CachingVector q({1.0, 0.5, 0.0});
  CHECK(q.sum() == 1.5);
  CHECK(q[1] == 0.5);
}

TEST_CASE("objective value") {
  SUBCASE("all-zero vector scores zero") {
    const ObjectiveSpec spec(ZipfModel(3, 1.0), 10.0, Intensity(1e-3, 50.0),
                             2.0);
    CHECK(bd2d::objective_value(CachingVector({0.0, 0.0, 0.0}), spec) == 0.0);
    CHECK_THROWS_AS(bd2d::objective_value(CachingVector({0.0}), spec),
                    std::invalid_argument);
  }

  SUBCASE("hand-evaluated two-rank case") {
    // mu = ln 4 so the availability factor is 0.75; requests are (2/3, 1/3).
    const double lambda = std::log(4.0) / bd2d::kPi;
    const ObjectiveSpec spec(ZipfModel(2, 1.0), 1.0, Intensity(lambda, 1.0),
                             1.0);
    const double value =
        bd2d::objective_value(CachingVector({1.0, 0.0}), spec);
    CHECK(value == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("linearity in the caching vector") {
    const ObjectiveSpec spec(ZipfModel(4, 0.6), 100.0, Intensity(1e-3, 80.0),
                             3.0);
    const std::vector<double> base = {0.9, 0.4, 0.7, 0.1};
    const double full = bd2d::objective_value(CachingVector(base), spec);
    for (const double a : {0.0, 0.25, 0.5, 1.0}) {
      std::vector<double> scaled = base;
      for (double& v : scaled) v *= a;
      CHECK(bd2d::objective_value(CachingVector(scaled), spec) ==
            doctest::Approx(a * full).epsilon(1e-12));
    }
  }

  SUBCASE("spec field guards") {
    CHECK_THROWS_AS(
        ObjectiveSpec(ZipfModel(3, 1.0), 0.0, Intensity(1e-3, 50.0), 2.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ObjectiveSpec(ZipfModel(3, 1.0), 1.0, Intensity(1e-3, 50.0), -1.0),
        std::invalid_argument);
  }
}

TEST_CASE("greedy optimizer") {
  const Intensity i(1e-3, 100.0);

  SUBCASE("zero capacity") {
    const ObjectiveSpec spec(ZipfModel(4, 1.0), 1.0, i, 0.0);
    CHECK(bd2d::optimize_greedy(spec).values() ==
          std::vector<double>{0.0, 0.0, 0.0, 0.0});
  }

  SUBCASE("capacity covering the catalog") {
    const ObjectiveSpec spec(ZipfModel(4, 1.0), 1.0, i, 6.0);
    CHECK(bd2d::optimize_greedy(spec).values() ==
          std::vector<double>{1.0, 1.0, 1.0, 1.0});
  }

  SUBCASE("fractional remainder on the next rank") {
    const ObjectiveSpec spec(ZipfModel(4, 1.0), 1.0, i, 2.5);
    CHECK(bd2d::optimize_greedy(spec).values() ==
          std::vector<double>{1.0, 1.0, 0.5, 0.0});
  }
}

TEST_CASE("brute-force optimizer") {
  const Intensity i(1e-3, 100.0);

  SUBCASE("single rank saturates") {
    const ObjectiveSpec spec(ZipfModel(1, 0.6), 1.0, i, 1.0);
    CHECK(bd2d::optimize_bruteforce(spec, 0.25).values() ==
          std::vector<double>{1.0});
  }

  SUBCASE("guards") {
    const ObjectiveSpec big(ZipfModel(7, 0.6), 1.0, i, 2.0);
    CHECK_THROWS_AS(bd2d::optimize_bruteforce(big, 0.25),
                    std::invalid_argument);
    const ObjectiveSpec ok(ZipfModel(3, 0.6), 1.0, i, 2.0);
    CHECK_THROWS_AS(bd2d::optimize_bruteforce(ok, 0.01),
                    std::invalid_argument);
    CHECK_THROWS_AS(bd2d::optimize_bruteforce(ok, 0.6),
                    std::invalid_argument);
  }

  SUBCASE("grid search recovers the greedy solution when representable") {
    const ObjectiveSpec spec(ZipfModel(4, 1.0), 1.0, i, 2.5);
    const CachingVector brute = bd2d::optimize_bruteforce(spec, 0.5);
    CHECK(brute.values() == std::vector<double>{1.0, 1.0, 0.5, 0.0});
    CHECK(bd2d::objective_value(brute, spec) ==
          doctest::Approx(
              bd2d::objective_value(bd2d::optimize_greedy(spec), spec))
              .epsilon(1e-12));
  }

  SUBCASE("greedy is never beaten and stays within one grid step") {
    for (const std::size_t L : {std::size_t{2}, std::size_t{3}, std::size_t{4},
                                std::size_t{5}}) {
      for (const double beta : {0.6, 1.0}) {
        for (const double capacity : {0.5, 1.0, 2.5, 4.0}) {
          const ObjectiveSpec spec(ZipfModel(L, beta), 5.0, i, capacity);
          const CachingVector greedy = bd2d::optimize_greedy(spec);
          const double greedy_value = bd2d::objective_value(greedy, spec);
          CHECK(greedy.sum() <= capacity + 1e-12);
          for (const double step : {0.25, 0.05}) {
            const CachingVector brute =
                bd2d::optimize_bruteforce(spec, step);
            const double brute_value = bd2d::objective_value(brute, spec);
            CHECK(brute_value <= greedy_value + 1e-12);
            const double one_step_value =
                step * bd2d::availability_analytic(i) *
                spec.request.pmf(1) / spec.request_count;
            CHECK(greedy_value - brute_value <= one_step_value + 1e-12);
          }
        }
      }
    }
  }
}
