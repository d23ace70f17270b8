#include <random>

#include "doctest.h"
#include "morrey/error.hpp"
#include "morrey/lattice.hpp"
#include "test_support.hpp"

using namespace morrey;

TEST_CASE("cardinality of cubic windows") {
  CHECK(cardinality(0, 3) == 1);
  CHECK(cardinality(2, 1) == 5);
  CHECK(cardinality(1, 2) == 9);
  CHECK(cardinality(Window{LatticePoint{0, 0}, 1}, 2) == 9);
}

TEST_CASE("cardinality overflow is reported") {
  CHECK_THROWS_AS(cardinality(1'000'000, 4), SizeError);
  CHECK_THROWS_AS(cardinality(INT64_MAX / 2 + 1, 1), SizeError);
  CHECK(cardinality(1, 40) == 12157665459056928801ull);
  CHECK_THROWS_AS(cardinality(1, 41), SizeError);
}

TEST_CASE("cardinality matches a brute-force count of contained points") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (Coord n = 0; n <= 3; ++n) {
      const Window w{LatticePoint::origin(d), n};
      std::uint64_t count = 0;
      std::vector<Coord> k(d, -5);
      while (true) {
        if (window_contains(w, LatticePoint(k))) ++count;
        std::size_t axis = d;
        bool done = false;
        while (axis > 0) {
          --axis;
          if (++k[axis] <= 5) break;
          k[axis] = -5;
          if (axis == 0) done = true;
        }
        if (done) break;
      }
      CHECK(count == cardinality(w, d));
    }
  }
}

TEST_CASE("window_contains uses the max-norm") {
  CHECK(window_contains(Window{LatticePoint{0, 0}, 1}, LatticePoint{1, -1}));
  CHECK_FALSE(window_contains(Window{LatticePoint{0}, 2}, LatticePoint{3}));
  CHECK(window_contains(Window{LatticePoint{2}, 2}, LatticePoint{0}));
  CHECK_THROWS_AS(window_contains(Window{LatticePoint{0}, 2}, LatticePoint{0, 0}), ArgumentError);
}

TEST_CASE("sparse sequences drop zeros and validate keys") {
  const SparseSequence x(1, {{LatticePoint{0}, 1.0}, {LatticePoint{3}, 0.0}});
  CHECK(x.support_size() == 1);
  CHECK(x.at(LatticePoint{3}) == 0.0);
  CHECK_THROWS_AS(SparseSequence(2, {{LatticePoint{0}, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(SparseSequence(0), ArgumentError);
  CHECK(SparseSequence(3).is_zero());
}

TEST_CASE("support_box") {
  CHECK(support_box(SparseSequence(2)).empty);

  const auto b1 = support_box(SparseSequence(1, {{LatticePoint{0}, 1.0}, {LatticePoint{4}, 1.0}}));
  CHECK_FALSE(b1.empty);
  CHECK(b1.lo == LatticePoint{0});
  CHECK(b1.hi == LatticePoint{4});
  CHECK(b1.max_extent() == 4);

  const auto b2 = support_box(SparseSequence(2, {{LatticePoint{0, 0}, 1.0}, {LatticePoint{2, 0}, -1.0}}));
  CHECK(b2.lo == LatticePoint{0, 0});
  CHECK(b2.hi == LatticePoint{2, 0});
  CHECK(b2.max_extent() == 2);
}

TEST_CASE("combine") {
  const SparseSequence x(1, {{LatticePoint{0}, 1.0}, {LatticePoint{4}, 1.0}});
  const SparseSequence y(1, {{LatticePoint{0}, 1.0}, {LatticePoint{4}, -1.0}});

  SUBCASE("witness sum collapses to one site") {
    const auto sum = combine(x, y, +1);
    CHECK(sum == SparseSequence(1, {{LatticePoint{0}, 2.0}}));
    CHECK(combine(x, y, -1) == SparseSequence(1, {{LatticePoint{4}, 2.0}}));
  }
  SUBCASE("x - x is zero") { CHECK(combine(x, x, -1).is_zero()); }
  SUBCASE("disjoint supports form the union") {
    const SparseSequence z(1, {{LatticePoint{7}, -3.0}});
    const auto u = combine(x, z, +1);
    CHECK(u.support_size() == 3);
    CHECK(u.at(LatticePoint{7}) == -3.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(combine(x, SparseSequence(2), 1), ArgumentError);
    CHECK_THROWS_AS(combine(x, y, 2), ArgumentError);
  }
}

TEST_CASE("combine recovers x and y and stays in the hull") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    // Dyadic values keep the halving exact.
    std::uniform_int_distribution<int> num(-16, 16);
    auto dyadic = [&](int points) {
      SparseSequence::Map m;
      std::uniform_int_distribution<Coord> c(-4, 4);
      for (int i = 0; i < points; ++i) {
        std::vector<Coord> k(d);
        for (auto& v : k) v = c(rng);
        m[LatticePoint(k)] = num(rng) / 8.0;
      }
      return SparseSequence(d, std::move(m));
    };
    const auto x = dyadic(5), y = dyadic(5);
    const auto plus = combine(x, y, +1), minus = combine(x, y, -1);
    CHECK(scale(combine(plus, minus, +1), 0.5) == x);
    CHECK(scale(combine(plus, minus, -1), 0.5) == y);

    const auto bx = support_box(x), by = support_box(y);
    for (const auto* s : {&plus, &minus}) {
      for (const auto& [k, v] : s->entries()) {
        for (std::size_t j = 0; j < d; ++j) {
          Coord lo = INT64_MAX, hi = INT64_MIN;
          for (const auto* b : {&bx, &by}) {
            if (b->empty) continue;
            lo = std::min(lo, b->lo[j]);
            hi = std::max(hi, b->hi[j]);
          }
          CHECK(k[j] >= lo);
          CHECK(k[j] <= hi);
        }
      }
    }
  }
}

TEST_CASE("shift moves every entry") {
  const SparseSequence x(2, {{LatticePoint{0, 0}, 1.0}, {LatticePoint{2, 0}, -1.0}});
  const auto s = shift(x, LatticePoint{-1, 3});
  CHECK(s.at(LatticePoint{-1, 3}) == 1.0);
  CHECK(s.at(LatticePoint{1, 3}) == -1.0);
  CHECK(s.support_size() == 2);
}
