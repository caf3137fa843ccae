#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mulp/fusion.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace mulp;

TEST_CASE("combining with a vacuous BPA is the identity") {
  const MassFunction m = fixtures::sweep_example();
  const auto [fused, report] = combine(m, vacuous(m.frame()));
  CHECK(report.k == 0.0);
  REQUIRE(fused.focal_count() == m.focal_count());
  for (const auto& [a, mass] : m.focal_sets())
    CHECK(std::abs(fused.mass(a) - mass) <= 1e-12);
}

TEST_CASE("two-source combination with partial conflict") {
  const Frame f({"a", "b"});
  const MassFunction m1 =
      build_mass_function(f, {{{"a"}, 0.6}, {{"a", "b"}, 0.4}});
  const MassFunction m2 =
      build_mass_function(f, {{{"b"}, 0.5}, {{"a", "b"}, 0.5}});
  const auto [fused, report] = combine(m1, m2);
  CHECK(std::abs(report.k - 0.3) <= 1e-12);
  CHECK(std::abs(fused.mass(SubsetMask{0b01}) - 3.0 / 7.0) <= 1e-12);
  CHECK(std::abs(fused.mass(SubsetMask{0b10}) - 2.0 / 7.0) <= 1e-12);
  CHECK(std::abs(fused.mass(SubsetMask{0b11}) - 2.0 / 7.0) <= 1e-12);
}

TEST_CASE("total conflict is an error") {
  const Frame f({"a", "b"});
  const MassFunction m1 = build_mass_function(f, {{{"a"}, 1.0}});
  const MassFunction m2 = build_mass_function(f, {{{"b"}, 1.0}});
  CHECK_THROWS_AS(combine(m1, m2), MathError);
}

TEST_CASE("mismatched frames are rejected") {
  const MassFunction m1 = build_mass_function(Frame({"a", "b"}), {{{"a"}, 1.0}});
  const MassFunction m2 = build_mass_function(Frame({"a", "c"}), {{{"a"}, 1.0}});
  CHECK_THROWS_AS(combine(m1, m2), ValidationError);
}

TEST_CASE("open-world BPAs are rejected") {
  const Frame f({"a", "b"});
  const MassFunction open = build_mass_function(f, {{{}, 0.2}, {{"a"}, 0.8}});
  const MassFunction ok = build_mass_function(f, {{{"a"}, 1.0}});
  CHECK_THROWS_AS(combine(open, ok), ValidationError);
  CHECK_THROWS_AS(combine(ok, open), ValidationError);
}

TEST_CASE("property: combination is commutative, normalized, and k is consistent") {
  std::mt19937_64 rng(61);
  int combined = 0;
  for (int trial = 0; trial < 300 && combined < 200; ++trial) {
    const Frame f = oracle::random_frame(rng, 6);
    const MassFunction m1 = oracle::random_bpa(rng, f);
    const MassFunction m2 = oracle::random_bpa(rng, f);

    // independent conflict computation
    double k = 0.0, total = 0.0;
    for (const auto& [b, mb] : m1.focal_sets())
      for (const auto& [c, mc] : m2.focal_sets())
        (b.intersects(c) ? total : k) += mb * mc;
    if (k >= 1.0 - 1e-9) continue;
    ++combined;

    const auto [f12, r12] = combine(m1, m2);
    const auto [f21, r21] = combine(m2, m1);
    CHECK(r12.k == r21.k);
    CHECK(f12 == f21);
    CHECK(std::abs(r12.k - k) <= 1e-12);
    CHECK(std::abs(r12.k - (1.0 - total)) <= 1e-12);

    double sum = 0.0;
    for (const auto& [a, mass] : f12.focal_sets()) sum += mass;
    CHECK(std::abs(sum - 1.0) <= 1e-9);
  }
  CHECK(combined > 0);
}

TEST_CASE("combine_all folds pairwise and reports per-step conflicts") {
  const Frame f = fixtures::abc_frame();
  const MassFunction m = fixtures::sweep_example();
  const auto [fused, reports] =
      combine_all({m, vacuous(f), vacuous(f)});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].k == 0.0);
  CHECK(reports[1].k == 0.0);
  for (const auto& [a, mass] : m.focal_sets())
    CHECK(std::abs(fused.mass(a) - mass) <= 1e-12);
  CHECK_THROWS_AS(combine_all({}), ValidationError);
}
