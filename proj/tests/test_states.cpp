#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "trineq/decompositions.hpp"
#include "trineq/error.hpp"
#include "trineq/linalg.hpp"
#include "trineq/random.hpp"
#include "trineq/sampling.hpp"
#include "trineq/states.hpp"

using namespace trineq;

namespace {

const BipartiteShape kQubits{2, 2};
const double kR = 1.0 / std::sqrt(2.0);

PureState phi_plus() { return PureState(kQubits, {kR, 0, 0, kR}); }
PureState phi_minus() { return PureState(kQubits, {kR, 0, 0, -kR}); }

std::vector<Complex> amps(const PureState& p) { return {p.amplitudes().begin(), p.amplitudes().end()}; }

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("states") {
  TEST_CASE("shape construction and validation") {
    const auto s = BipartiteShape::make(2, 3);
    CHECK(s.dim() == 6);
    CHECK(s.index(1, 2) == 5);
    CHECK(kind_of([] { BipartiteShape::make(1, 3); }) == ErrorKind::InvalidState);
    CHECK(kind_of([] { BipartiteShape::make(9, 9); }) == ErrorKind::InvalidState);
    CHECK(BipartiteShape::make(9, 9, 81).dim() == 81);
    CHECK(to_string(BipartiteShape::make(3, 3)) == "3x3");
  }

  TEST_CASE("pure state invariants") {
    CHECK(kind_of([] { PureState(kQubits, {1, 1, 0, 0}); }) == ErrorKind::InvalidState);
    CHECK(kind_of([] { PureState(kQubits, {1, 0, 0, 0}, 0.0); }) == ErrorKind::InvalidState);
    CHECK(kind_of([] { PureState(kQubits, {1, 0, 0, 0}, 1.5); }) == ErrorKind::InvalidState);
    CHECK(kind_of([] { PureState(kQubits, {1, 0, 0}); }) == ErrorKind::ShapeMismatch);
    const auto p = PureState::normalized(kQubits, {3, 0, 0, Complex(0, 4)}, 0.25);
    CHECK(std::abs(p.amplitude(0, 0) - 0.6) < 1e-15);
    const auto sub = p.subnormalized();
    CHECK(std::abs(sub[3] - Complex(0, 0.4)) < 1e-15);
  }

  TEST_CASE("density_from_ensemble with nearly pure weights") {
    const auto e = Rank2Ensemble::make(0.999999, PureState::basis(kQubits, 0, 0),
                                       PureState::basis(kQubits, 0, 1));
    const auto rho = density_from_ensemble(e);
    const auto es = linalg::hermitian_eigensystem(rho.matrix());
    CHECK(std::abs(es.values[0] - 0.999999) < 1e-12);
    CHECK(std::abs(es.values[1] - 1e-6) < 1e-12);
    CHECK(std::abs(es.values[2]) < 1e-9);
  }

  TEST_CASE("Bell mixture is the classical 00/11 mixture") {
    const auto rho = density_from_ensemble(Rank2Ensemble::make(0.5, phi_plus(), phi_minus()));
    ComplexMatrix expect(4, 4);
    expect(0, 0) = expect(3, 3) = 0.5;
    CHECK(oracle::max_diff(rho.matrix(), expect) < 1e-15);
  }

  TEST_CASE("example ensemble at P = 1/2 matches the direct mixture") {
    const auto e = decompositions::example_ensemble(0.5);
    const auto rho = density_from_ensemble(e);
    const double a = std::sqrt(3.0 / 8.0), b = std::sqrt(1.0 / 8.0);
    const std::vector<Complex> v1{a, Complex(0, b), Complex(0, b), a};
    const std::vector<Complex> v2{a, b, b, a};
    CHECK(oracle::max_diff(rho.matrix(), oracle::mixture(0.5, v1, v2)) < 1e-15);
    const auto es = linalg::hermitian_eigensystem(rho.matrix());
    CHECK(std::abs(es.values[2]) < 1e-9);
  }

  TEST_CASE("partial trace examples") {
    const auto r0 = partial_trace_A(DensityMatrix::pure(PureState::basis(kQubits, 0, 0)));
    CHECK(std::abs(r0(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(r0(1, 1)) < 1e-15);
    const auto r1 = partial_trace_A(DensityMatrix::pure(phi_plus()));
    CHECK(oracle::max_diff(r1, ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);
    const auto r2 = partial_trace_A(decompositions::example_psi1());
    CHECK(std::abs((r2 * r2).trace().real() - 0.5) < 1e-15);
  }

  TEST_CASE("partial trace agrees with the oracle and is a state") {
    Rng rng(4);
    for (const auto& shape : {BipartiteShape{2, 3}, BipartiteShape{3, 2}, BipartiteShape{3, 3}}) {
      for (int t = 0; t < 50; ++t) {
        const auto psi = sampling::random_pure_state(shape, rng);
        const auto r = partial_trace_A(psi);
        CHECK(oracle::max_diff(r, oracle::reduce_a(amps(psi), shape.d1, shape.d2)) < 1e-14);
        CHECK(oracle::max_diff(partial_trace_A(DensityMatrix::pure(psi)), r) < 1e-14);
        CHECK(std::abs(r.trace() - 1.0) < 1e-9);
        const auto es = linalg::hermitian_eigensystem(r);
        CHECK(es.values.back() >= -1e-12);
        CHECK(2.0 * (1.0 - (r * r).trace().real()) >= -1e-10);
      }
    }
  }

  TEST_CASE("spin flip examples") {
    const auto bell = DensityMatrix::pure(phi_plus());
    CHECK(oracle::max_diff(spin_flip(bell), bell.matrix()) < 1e-15);
    const auto mixed = DensityMatrix::from_matrix(kQubits, ComplexMatrix::identity(4) * Complex(0.25));
    CHECK(oracle::max_diff(spin_flip(mixed), mixed.matrix()) < 1e-15);
    const auto flipped = spin_flip(DensityMatrix::pure(PureState::basis(kQubits, 0, 0)));
    ComplexMatrix expect(4, 4);
    expect(3, 3) = 1.0;
    CHECK(oracle::max_diff(flipped, expect) < 1e-15);
    CHECK(kind_of([] {
            spin_flip(DensityMatrix::pure(PureState::basis(BipartiteShape{2, 3}, 0, 0)));
          }) == ErrorKind::WrongShape);
  }

  TEST_CASE("spin flip is an involution") {
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
      const auto rho = sampling::random_density(kQubits, 1 + t % 4, rng);
      const auto once = DensityMatrix::from_matrix(kQubits, spin_flip(rho));
      CHECK(oracle::max_diff(spin_flip(once), rho.matrix()) < 1e-12);
    }
  }

  TEST_CASE("overlap examples") {
    const auto b00 = PureState::basis(kQubits, 0, 0);
    CHECK(overlap(b00, b00) == Complex(1.0));
    CHECK(overlap(b00, PureState::basis(kQubits, 0, 1)) == Complex(0.0));
    const Complex o = overlap(decompositions::example_psi1(), decompositions::example_psi2());
    CHECK(std::abs(o - Complex(0.75, -0.25)) < 1e-15);
    CHECK(kind_of([&] { overlap(b00, PureState::basis(BipartiteShape{2, 3}, 0, 0)); }) ==
          ErrorKind::ShapeMismatch);
  }

  TEST_CASE("validate_ensemble reports each invariant") {
    const auto a = PureState::basis(kQubits, 0, 0);
    const auto b = PureState::basis(kQubits, 1, 1);
    CHECK(validate_ensemble(0.3, 0.7, a, b).pass);

    const auto r = validate_ensemble(0.3, 0.71, a, b);
    CHECK_FALSE(r.pass);
    bool found = false;
    for (const auto& c : r.checks) {
      if (!c.pass) {
        found = true;
        CHECK(c.measured == doctest::Approx(0.01).epsilon(1e-9));
      }
    }
    CHECK(found);

    const auto same = validate_ensemble(0.5, 0.5, a, a);
    CHECK_FALSE(same.pass);
    CHECK(kind_of([&] { Rank2Ensemble(0.5, 0.5, a, a); }) == ErrorKind::InvalidState);
    CHECK(kind_of([&] { Rank2Ensemble(0.5, 0.5, a, PureState::basis(BipartiteShape{2, 3}, 0, 0)); }) ==
          ErrorKind::ShapeMismatch);
    CHECK(kind_of([&] { Rank2Ensemble(1.0, 0.0, a, b); }) == ErrorKind::InvalidState);
  }

  TEST_CASE("ensembles give unit-trace PSD density matrices") {
    Rng rng(7);
    for (const auto& shape : {BipartiteShape{2, 2}, BipartiteShape{2, 3}, BipartiteShape{3, 3}}) {
      for (int t = 0; t < 200; ++t) {
        const auto e = sampling::random_ensemble(shape, rng);
        const auto rho = density_from_ensemble(e);
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-10);
        const auto es = linalg::hermitian_eigensystem(rho.matrix());
        CHECK(es.values.back() >= -1e-10);
        CHECK(std::abs(es.values[2]) < 1e-9);
      }
    }
  }

  TEST_CASE("from_matrix validation") {
    CHECK(kind_of([] { DensityMatrix::from_matrix(kQubits, ComplexMatrix::identity(4)); }) ==
          ErrorKind::InvalidState);
    ComplexMatrix neg(4, 4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK(kind_of([&] { DensityMatrix::from_matrix(kQubits, neg); }) == ErrorKind::InvalidState);
    ComplexMatrix nh = ComplexMatrix::identity(4) * Complex(0.25);
    nh(0, 1) = 0.1;
    CHECK(kind_of([&] { DensityMatrix::from_matrix(kQubits, nh); }) == ErrorKind::InvalidState);
  }
}
