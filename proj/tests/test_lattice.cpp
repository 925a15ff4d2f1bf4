#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "oapoly/lattice.hpp"

using namespace oapoly;

namespace {
LatticeVector lv(std::vector<double> v) { return LatticeVector(std::move(v)); }
}  // namespace

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(lv({}), std::invalid_argument);
  CHECK_THROWS_AS(lv({1.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(lv({std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
  CHECK(LatticeVector::zeros(3).dim() == 3);
}

TEST_CASE("join") {
  CHECK(join(lv({1, -2}), lv({0, 0})) == lv({1, 0}));  // f v 0 = f+
  auto f = lv({3.5, -1.25, 0.0});
  CHECK(join(f, f) == f);  // idempotent
  CHECK(join(lv({3, 0}), lv({0, 4})) == lv({3, 4}));
  CHECK_THROWS_AS(join(lv({1}), lv({1, 2})), std::invalid_argument);
}

TEST_CASE("join is associative and commutative") {
  RandomStream rs(11, "lattice-join");
  for (int t = 0; t < 200; ++t) {
    auto a = random_vector(4, false, rs);
    auto b = random_vector(4, false, rs);
    auto c = random_vector(4, false, rs);
    CHECK(join(a, b) == join(b, a));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
  }
}

TEST_CASE("meet") {
  CHECK(meet(lv({1, -2}), lv({0, 0})) == lv({0, -2}));
  CHECK(meet(lv({3, 0}), lv({0, 4})) == lv({0, 0}));
  // f ^ g + f v g = f + g
  RandomStream rs(13, "lattice-meet");
  for (int t = 0; t < 100; ++t) {
    auto a = random_vector(4, false, rs);
    auto b = random_vector(4, false, rs);
    CHECK(meet(a, b) + join(a, b) == a + b);
    // disjointness is |f| ^ |g| = 0
    CHECK(is_disjoint(a, b) ==
          (meet(abs(a), abs(b)) == LatticeVector::zeros(4)));
  }
}

TEST_CASE("abs") {
  CHECK(abs(lv({-1, 2})) == lv({1, 2}));
  CHECK(abs(LatticeVector::zeros(2)) == LatticeVector::zeros(2));
  // |f| = f+ + f-
  auto f = lv({-3, 5});
  auto parts = pos_neg_decompose(f);
  CHECK(parts.pos + parts.neg == lv({3, 5}));
  CHECK(abs(f) == lv({3, 5}));
}

TEST_CASE("pos_neg_decompose") {
  auto parts = pos_neg_decompose(lv({2, -3}));
  CHECK(parts.pos == lv({2, 0}));
  CHECK(parts.neg == lv({0, 3}));

  auto f = lv({1.5, 0.0, 7.0});
  auto fp = pos_neg_decompose(f);
  CHECK(fp.pos == f);
  CHECK(fp.neg == LatticeVector::zeros(3));

  RandomStream rs(23, "lattice-decompose");
  for (int t = 0; t < 1000; ++t) {
    auto g = random_vector(5, false, rs);
    auto p = pos_neg_decompose(g);
    CHECK(p.pos - p.neg == g);  // exact: the parts partition the entries
    CHECK(is_disjoint(p.pos, p.neg));
    CHECK(leq(LatticeVector::zeros(5), p.pos));
    CHECK(leq(LatticeVector::zeros(5), p.neg));
  }
}

TEST_CASE("is_disjoint") {
  CHECK(is_disjoint(lv({1, 0}), lv({0, 1})));
  auto f = lv({1, 2});
  CHECK_FALSE(is_disjoint(f, f));
  CHECK(is_disjoint(lv({1, 1, 0}), lv({0, 0, 2})));
  // mirrors on absolute values and supports
  CHECK(is_disjoint(lv({-1, 0}), lv({0, -2})));
  CHECK_THROWS_AS(is_disjoint(lv({1}), lv({1, 2})), std::invalid_argument);
}

TEST_CASE("random_disjoint_pair") {
  CHECK_THROWS_AS(random_disjoint_pair(1, true, 0), std::invalid_argument);

  auto [f1, g1] = random_disjoint_pair(4, false, 42);
  auto [f2, g2] = random_disjoint_pair(4, false, 42);
  CHECK(f1 == f2);  // deterministic in the seed
  CHECK(g1 == g2);

  int nonempty_both = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto [f, g] = random_disjoint_pair(3, seed % 2 == 0, seed);
    CHECK(is_disjoint(f, g));
    bool f_nonzero = false, g_nonzero = false;
    for (std::size_t i = 0; i < 3; ++i) {
      f_nonzero = f_nonzero || f[i] != 0.0;
      g_nonzero = g_nonzero || g[i] != 0.0;
      if (seed % 2 == 0) {
        CHECK(f[i] >= 0.0);
        CHECK(g[i] >= 0.0);
      }
      if (f[i] != 0.0) CHECK(std::fabs(f[i]) >= 0.1);
      if (f[i] != 0.0) CHECK(std::fabs(f[i]) <= 10.0);
    }
    if (f_nonzero && g_nonzero) ++nonempty_both;
  }
  CHECK(nonempty_both >= 990);
}
