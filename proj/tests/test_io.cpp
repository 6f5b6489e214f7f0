#include <doctest.h>

#include <cmath>
#include <string>

#include "trineq/campaigns.hpp"
#include "trineq/error.hpp"
#include "trineq/concurrence.hpp"
#include "trineq/figure.hpp"
#include "trineq/sampling.hpp"
#include "trineq/state_io.hpp"

using namespace trineq;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* message = nullptr) {
  try {
    io::parse_state(text, "test.json");
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("state files") {
  TEST_CASE("pure state") {
    const auto f = io::parse_state(
        R"({"shape": [2, 2], "amplitudes": [[0.6, 0], [0, 0], [0, 0], [0, 0.8]]})");
    REQUIRE(f.pure.has_value());
    CHECK_FALSE(f.ensemble.has_value());
    CHECK(f.pure->amplitudes()[3] == Complex(0, 0.8));
  }

  TEST_CASE("single system and normalization") {
    const auto f = io::parse_state(R"({"shape": [3], "normalize": true,
                                       "amplitudes": [[1, 0], [1, 0], [1, 0]]})");
    REQUIRE(f.pure.has_value());
    CHECK(f.shape.d2 == 1);
    CHECK(std::abs(f.pure->amplitudes()[0] - 1.0 / std::sqrt(3.0)) < 1e-15);
  }

  TEST_CASE("ensemble round trip") {
    Rng rng(50);
    const auto e = sampling::random_ensemble(BipartiteShape{2, 3}, rng);
    const auto f = io::parse_state(io::to_json(e).dump());
    REQUIRE(f.ensemble.has_value());
    CHECK(f.ensemble->p1() == e.p1());
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(f.ensemble->psi1().amplitudes()[k] == e.psi1().amplitudes()[k]);
      CHECK(f.ensemble->psi2().amplitudes()[k] == e.psi2().amplitudes()[k]);
    }
  }

  TEST_CASE("errors carry line and field context") {
    std::string msg;
    CHECK(parse_kind("{\n \"shape\": [2, 2],\n \"amplitudes\": [[1, 0],\n", &msg) == ErrorKind::Parse);
    CHECK(msg.find("test.json:4") != std::string::npos);

    CHECK(parse_kind(R"({"shape": [2, 2], "amplitudes": [[1, 0], [0, 0], [0], [0, 0]]})", &msg) ==
          ErrorKind::Parse);
    CHECK(msg.find("amplitudes[2]") != std::string::npos);

    CHECK(parse_kind(R"({"amplitudes": []})", &msg) == ErrorKind::Parse);
    CHECK(msg.find("shape") != std::string::npos);

    CHECK(parse_kind(R"({"shape": [2, 2], "amplitudes": [[1, 0], [1, 0], [0, 0], [0, 0]]})", &msg) ==
          ErrorKind::Parse);
    CHECK(msg.find("InvalidState") != std::string::npos);

    CHECK(parse_kind(R"({"shape": [2, 2], "ensemble": {"p1": 0.5,
        "psi1": [[1, 0], [0, 0], [0, 0], [0, 0]], "psi2": [[1, 0], [0, 0], [0, 0], [0, 0]]}})",
                     &msg) == ErrorKind::Parse);
    CHECK(msg.find("ensemble") != std::string::npos);

    CHECK(parse_kind(R"({"shape": [2, "x"], "amplitudes": []})", &msg) == ErrorKind::Parse);
    CHECK(msg.find("shape[1]") != std::string::npos);
  }

  TEST_CASE("unitary basis files") {
    const double r = 1.0 / std::sqrt(2.0);
    const std::string h = "{\"unitary\": [[[" + std::to_string(r) + ",0],[" + std::to_string(r) +
                          ",0]],[[" + std::to_string(r) + ",0],[" + std::to_string(-r) + ",0]]]}";
    CHECK_THROWS_AS(io::parse_unitary(h), Error);  // six printed digits is not unitary to 1e-9
    const auto u = io::parse_unitary(R"({"unitary": [[[0, 0], [1, 0]], [[0, 1], [0, 0]]]})");
    CHECK(u(1, 0) == Complex(0, 1));
    CHECK_THROWS_AS(io::parse_unitary(R"({"unitary": [[[1, 0], [1, 0]], [[0, 0], [1, 0]]]})"), Error);
  }

  TEST_CASE("missing files report the path") {
    try {
      io::load_state("/nonexistent/state.json");
      FAIL("expected Io");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Io);
      CHECK(std::string(e.what()).find("/nonexistent/state.json") != std::string::npos);
    }
  }
}

TEST_SUITE("figure data") {
  TEST_CASE("csv layout and endpoint rows") {
    figure::Config cfg;
    cfg.grid_points = 5;
    cfg.decomps_per_p = 7;
    const auto data = figure::build(cfg);
    const std::string csv = figure::samples_csv(data);
    CHECK(csv.rfind("P,C_rho,sample_id,theta,gamma,phi,sum_C,diff_C,violates_upper,violates_lower\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 5 * 7);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find("true") == std::string::npos);
    REQUIRE(data.summary.size() == 7);
    CHECK(std::abs(data.summary.front().c_rho - 0.5) < 1e-9);
    CHECK(data.summary.front().p == 0.0);
    CHECK(std::abs(data.summary.back().c_rho - 1.0) < 1e-9);
    const std::string summary = figure::summary_csv(data);
    CHECK(summary.rfind("P,C_rho,min_sum_C,max_sum_C,min_diff_C,max_diff_C,coa_estimate\n", 0) == 0);
    CHECK(figure::samples_csv(figure::build(cfg)) == csv);
    CHECK(figure::to_json(data, 1) == figure::to_json(figure::build(cfg), 1));
  }

  TEST_CASE("the P = 1/2 summary row matches the rank-2 route") {
    figure::Config cfg;
    cfg.grid_points = 3;
    cfg.decomps_per_p = 5;
    cfg.p_lo = 0.25;
    cfg.p_hi = 0.75;
    const auto data = figure::build(cfg);
    const auto& mid = data.summary[2];
    CHECK(mid.p == 0.5);
    CHECK(std::abs(mid.c_rho - concurrence::rank2_concurrence_2qubit(
                                   decompositions::example_ensemble(0.5))) < 1e-8);
  }
}

TEST_SUITE("campaigns") {
  TEST_CASE("results do not depend on the thread count") {
    campaigns::Options one{2000, 9, 10, 1};
    campaigns::Options four{2000, 9, 10, 4};
    const auto a = campaigns::triangle_concurrence(BipartiteShape{2, 3}, one);
    const auto b = campaigns::triangle_concurrence(BipartiteShape{2, 3}, four);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.ok());
    const auto c = campaigns::lemma1(one);
    const auto d = campaigns::lemma1(four);
    CHECK(c.to_json().dump() == d.to_json().dump());
  }

  TEST_CASE("small campaigns are clean") {
    campaigns::Options opt{500, 3, 10, 0};
    CHECK(campaigns::lemma1(opt).ok());
    CHECK(campaigns::wootters_equivalence(opt).ok());
    CHECK(campaigns::triangle_l1(BipartiteShape::single(3), opt).ok());
    CHECK(campaigns::roof_sandwich(BipartiteShape::single(2), opt).ok());
    CHECK(campaigns::triangle_concurrence(BipartiteShape{3, 3}, opt).ok());
    CHECK(campaigns::lemma1(opt).samples == 500);
  }
}
