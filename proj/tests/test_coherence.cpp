#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "trineq/coherence.hpp"
#include "trineq/decompositions.hpp"
#include "trineq/error.hpp"
#include "trineq/random.hpp"
#include "trineq/sampling.hpp"

using namespace trineq;
namespace co = trineq::coherence;

namespace {

const BipartiteShape kQubit = BipartiteShape::single(2);
const BipartiteShape kQutrit = BipartiteShape::single(3);
const double kR = 1.0 / std::sqrt(2.0);

PureState plus() { return PureState(kQubit, {kR, kR}); }

DensityMatrix diagonal_state(std::initializer_list<double> d, const BipartiteShape& s) {
  std::vector<double> v(d);
  return DensityMatrix::from_matrix(s, ComplexMatrix::diagonal(v));
}

}  // namespace

TEST_SUITE("coherence") {
  TEST_CASE("l1 examples") {
    CHECK(co::l1_coherence(diagonal_state({0.2, 0.3, 0.5}, kQutrit)) == 0.0);
    CHECK(std::abs(co::l1_coherence(DensityMatrix::pure(plus())) - 1.0) < 1e-15);
    CHECK(std::abs(co::l1_coherence(plus()) - 1.0) < 1e-15);
    const double t = 1.0 / std::sqrt(3.0);
    const PureState max3(kQutrit, {t, t, t});
    CHECK(std::abs(co::l1_coherence(DensityMatrix::pure(max3)) - 2.0) < 1e-15);
    CHECK(std::abs(co::l1_coherence(max3) - 2.0) < 1e-14);
    CHECK(std::abs(co::l1_coherence(max3.with_weight(0.25)) - 0.5) < 1e-14);
    CHECK(co::CoherenceBasis::of(BipartiteShape{2, 3}).dimension == 6);
  }

  TEST_CASE("l1 matches the oracle, pure and mixed") {
    Rng rng(30);
    for (const auto& s : {kQubit, kQutrit, BipartiteShape{2, 2}, BipartiteShape{3, 3}}) {
      for (int t = 0; t < 300; ++t) {
        const auto rho = sampling::random_density(s, 1 + t % s.dim(), rng);
        CHECK(std::abs(co::l1_coherence(rho) - oracle::l1(rho.matrix())) < 1e-13);
        const auto psi = sampling::random_pure_state(s, rng).with_weight(rng.uniform_open());
        std::vector<Complex> v = psi.subnormalized();
        CHECK(std::abs(co::l1_coherence(psi) - oracle::l1(oracle::projector(v))) < 1e-13);
      }
    }
  }

  TEST_CASE("diagonal perturbations leave l1 unchanged") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const auto rho = sampling::random_density(kQutrit, 3, rng);
      ComplexMatrix m = rho.matrix();
      const double e = 0.01 * rng.uniform();
      m(0, 0) += e;
      m(2, 2) -= e;
      CHECK(std::abs(oracle::l1(m) - co::l1_coherence(m)) < 1e-15);
      CHECK(std::abs(co::l1_coherence(m) - co::l1_coherence(rho)) < 1e-12);
    }
  }

  TEST_CASE("l1 triangle examples") {
    Rng rng(32);
    const auto rho = sampling::random_density(kQutrit, 2, rng);
    const double c = co::l1_coherence(rho);
    const auto r = co::triangle_check_l1(rho, rho, 0.3);
    CHECK(std::abs(r.lower - 0.4 * c) < 1e-12);
    CHECK(std::abs(r.middle - c) < 1e-12);
    CHECK(std::abs(*r.upper - c) < 1e-12);
    CHECK(std::abs(r.upper_margin) < 1e-12);
    CHECK(r.pass);

    const auto d = co::triangle_check_l1(diagonal_state({0.4, 0.6}, kQubit),
                                         DensityMatrix::pure(plus()), 0.5);
    CHECK(std::abs(d.lower - 0.5) < 1e-15);
    CHECK(std::abs(d.middle - 0.5) < 1e-15);
    CHECK(std::abs(*d.upper - 0.5) < 1e-15);
    CHECK(d.pass);

    try {
      co::triangle_check_l1(rho, DensityMatrix::pure(plus()), 0.5);
      FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }
  }

  TEST_CASE("convexity on random pairs") {
    Rng rng(33);
    for (const auto& s : {kQubit, kQutrit}) {
      for (int t = 0; t < 2000; ++t) {
        const auto a = sampling::random_density(s, 1 + t % s.dim(), rng);
        const auto b = sampling::random_density(s, 1 + (t / 3) % s.dim(), rng);
        const double p = rng.uniform_open();
        const auto r = co::triangle_check_l1(a, b, p);
        CHECK(r.pass);
        CHECK(r.middle <= p * oracle::l1(a.matrix()) + (1 - p) * oracle::l1(b.matrix()) + 1e-9);
      }
    }
  }

  TEST_CASE("roof estimate of an incoherent mixture is zero") {
    const auto e = Rank2Ensemble::make(0.3, PureState::basis(kQutrit, 0, 0),
                                       PureState::basis(kQutrit, 2, 0));
    CHECK(co::convex_roof_l1_estimate(e, 10000, 5) <= 1e-6);
  }

  TEST_CASE("roof estimate at one sample is the identity decomposition") {
    Rng rng(34);
    for (int t = 0; t < 100; ++t) {
      const auto e = sampling::random_ensemble(kQutrit, rng);
      const double direct = co::l1_coherence(e.weighted(0)) + co::l1_coherence(e.weighted(1));
      CHECK(co::convex_roof_l1_estimate(e, 1, 1) == doctest::Approx(direct).epsilon(1e-15));
    }
  }

  TEST_CASE("roof estimate is nonincreasing in samples and bounded below") {
    Rng rng(35);
    for (int t = 0; t < 50; ++t) {
      const auto e = sampling::random_ensemble(kQubit, rng);
      const double l1 = co::l1_coherence(density_from_ensemble(e));
      double prev = 1e300;
      for (std::size_t n : {1u, 3u, 10u, 50u, 200u}) {
        const double est = co::convex_roof_l1_estimate(e, n, 77);
        CHECK(est <= prev);
        CHECK(est >= l1 - 1e-9);
        prev = est;
      }
    }
  }

  TEST_CASE("roof chain example with an incoherent and a maximally coherent component") {
    const auto e = Rank2Ensemble::make(0.5, PureState::basis(kQubit, 0, 0), plus());
    const auto r = co::triangle_check_convex_roof_l1(e, 200, 1);
    CHECK(std::abs(r.triangle.lower - 0.5) < 1e-15);
    CHECK(std::abs(*r.triangle.upper - 0.5) < 1e-15);
    CHECK(r.l1_rho >= r.triangle.lower - 1e-9);
    CHECK(r.triangle.middle >= r.l1_rho - 1e-9);
    CHECK(r.pass);
  }

  TEST_CASE("roof sandwich on random ensembles") {
    Rng rng(36);
    for (const auto& s : {kQubit, kQutrit}) {
      for (int t = 0; t < 2000; ++t) {
        const auto e = sampling::random_ensemble(s, rng);
        const auto r = co::triangle_check_convex_roof_l1(e, 20, rng.next_u64());
        REQUIRE(r.pass);
      }
    }
  }

  TEST_CASE("identical components are rejected") {
    try {
      Rank2Ensemble::make(0.5, plus(), plus());
      FAIL("expected InvalidState");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidState);
    }
  }
}
