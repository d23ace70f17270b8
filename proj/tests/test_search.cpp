#include "doctest.h"
#include "morrey/error.hpp"
#include "morrey/search.hpp"
#include "morrey/witness.hpp"
#include "test_support.hpp"

using namespace morrey;

TEST_CASE("config validation") {
  SearchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.step_min = cfg.step_init;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = SearchConfig{};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = SearchConfig{};
  cfg.radius = -1;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
}

TEST_CASE("seeded restarts") {
  SUBCASE("witness shifted into the box") {
    const auto pairs = seeded_restarts(SpaceParams(1, 2, 1), 2);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].first == SparseSequence(1, {{LatticePoint{-2}, 1.0}, {LatticePoint{2}, 1.0}}));
    CHECK(pairs[0].second == SparseSequence(1, {{LatticePoint{-2}, 1.0}, {LatticePoint{2}, -1.0}}));
  }
  SUBCASE("no witness for p = q") {
    const auto pairs = seeded_restarts(SpaceParams(2, 2, 1), 3);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first == SparseSequence(1, {{LatticePoint{0}, 1.0}}));
    CHECK(pairs[0].second == SparseSequence(1, {{LatticePoint{1}, 1.0}}));
  }
  SUBCASE("witness that does not fit is left out") {
    CHECK(seeded_restarts(SpaceParams(1, 2, 1), 1).size() == 2);
  }
  SUBCASE("radius zero") {
    const auto pairs = seeded_restarts(SpaceParams(1, 2, 2), 0);
    for (const auto& [x, y] : pairs) {
      CHECK(x.support_size() == 1);
      CHECK(y.support_size() == 1);
    }
  }
}

TEST_CASE("hill climbing only accepts improvements") {
  SearchConfig cfg;
  cfg.radius = 1;
  cfg.max_iters = 60;
  const ConstantKind kind(Constant::zbaganu_gen, 1.5);
  const SpaceParams sp(1, 3, 1);
  const SequencePair start{SparseSequence(1, {{LatticePoint{0}, 0.3}, {LatticePoint{1}, -0.2}}),
                           SparseSequence(1, {{LatticePoint{-1}, 0.7}})};
  const auto r = hill_climb(kind, sp, start, cfg);
  REQUIRE(r.accepted.size() > 1);
  for (std::size_t i = 1; i < r.accepted.size(); ++i) CHECK(r.accepted[i] > r.accepted[i - 1]);
  CHECK(r.value == r.accepted.back());
  CHECK(r.value == doctest::Approx(search_objective(kind, r.x, r.y, sp)).epsilon(1e-14));
}

TEST_CASE("Hilbert space gives quotient 1") {
  SearchConfig cfg;
  cfg.radius = 3;
  cfg.restarts = 8;
  cfg.max_iters = 40;
  const auto cert = maximize_quotient(ConstantKind(Constant::nj_gen, 2), SpaceParams(2, 2, 1), cfg);
  CHECK(cert.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("l1 reaches 2 from the classic pair") {
  SearchConfig cfg;
  cfg.radius = 2;
  cfg.restarts = 2;
  cfg.max_iters = 20;
  const auto cert = maximize_quotient(ConstantKind(Constant::nj_gen, 2), SpaceParams(1, 1, 1), cfg);
  CHECK(cert.value >= 2.0 - 1e-6);
}

TEST_CASE("witness seeding certifies 2 for p < q") {
  SearchConfig cfg;
  cfg.radius = 2;
  cfg.restarts = 2;
  cfg.max_iters = 20;
  const SpaceParams sp(1, 2, 1);
  const auto cert = maximize_quotient(ConstantKind(Constant::ninf_gen, 2), sp, cfg);
  CHECK(cert.value >= 2.0 - 1e-9);
  CHECK(cert.value <= 2.0 + 1e-9);
  CHECK(certificate_holds(cert, sp));
}

TEST_CASE("certificates are sound and deterministic") {
  SearchConfig cfg;
  cfg.radius = 1;
  cfg.restarts = 4;
  cfg.max_iters = 25;
  cfg.seed = 77;
  const SpaceParams sp(1.5, 3, 2);
  for (Constant c : kAllConstants) {
    const ConstantKind kind(c, 2.5);
    CAPTURE(kind.label());
    cfg.threads = 1;
    const auto a = maximize_quotient(kind, sp, cfg);
    cfg.threads = 4;
    const auto b = maximize_quotient(kind, sp, cfg);
    CHECK(a.value == b.value);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.restart == b.restart);
    CHECK(a.value <= 2.0 + 1e-9);
    CHECK(a.value >= analytic_bounds(kind).lower - 1e-9);
    CHECK(certificate_holds(a, sp));
    if (kind.unit_sphere_only()) {
      CHECK(norm(a.x, sp).norm == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(norm(a.y, sp).norm == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
