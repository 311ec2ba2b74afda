#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "orifold/fold_geometry.hpp"

namespace {

using namespace orifold;
using orifold::test::Rng;
using orifold::test::uniform;

FoldParams prototype() { return FoldParams{22.0, 70.0, 4, 3, 130.0}; }

}  // namespace

TEST(Phi, FlatStateIsTwiceBeta) {
  EXPECT_EQ(phi_from_theta(70.0, 180.0), 140.0);
  EXPECT_EQ(phi_from_theta(45.0, 180.0), 90.0);
}

TEST(Phi, ExactHalfAngle) {
  // cos45 sin45 = 1/2
  EXPECT_NEAR(phi_from_theta(45.0, 90.0), 120.0, 1e-9);
}

TEST(Phi, PrototypeSectorAngle) {
  // mpmath, 30 digits
  EXPECT_NEAR(phi_from_theta(70.0, 100.0), 149.622151240127, 1e-9);
  EXPECT_NEAR(phi_from_theta(70.0, 100.0), 149.63, 0.01);
}

TEST(Phi, RejectsOutOfRangeInputs) {
  for (double theta : {0.0, -1.0, 180.5}) {
    try {
      phi_from_theta(70.0, theta);
      FAIL() << "theta " << theta;
    } catch (const DomainError& e) {
      EXPECT_EQ(e.parameter(), "theta");
    }
  }
  for (double beta : {0.0, 90.0, 95.0}) {
    try {
      phi_from_theta(beta, 120.0);
      FAIL() << "beta " << beta;
    } catch (const DomainError& e) {
      EXPECT_EQ(e.parameter(), "beta");
    }
  }
}

TEST(Dimensions, FlatStateHasZeroHeight) {
  EXPECT_EQ(dimensions(prototype(), 180.0).h, 0.0);
}

TEST(Dimensions, NeutralPrototype) {
  const Dimensions d = dimensions(prototype(), 130.0);
  EXPECT_NEAR(d.h, 9.29760175829539, 1e-9);
  EXPECT_NEAR(d.l, 166.329631941278, 1e-9);
  EXPECT_NEAR(d.w, 125.498279081796, 1e-9);
}

TEST(Dimensions, FullyActuatedHeight) {
  EXPECT_NEAR(dimensions(prototype(), 58.0).h, 19.2416335570667, 1e-9);
}

TEST(Dimensions, RejectsInvalidParams) {
  FoldParams p = prototype();
  p.n = 0;
  EXPECT_THROW(dimensions(p, 120.0), DomainError);
  p = prototype();
  p.p = -1.0;
  EXPECT_THROW(dimensions(p, 120.0), DomainError);
  p = prototype();
  p.theta_neutral = 181.0;
  EXPECT_THROW(dimensions(p, 120.0), DomainError);
}

TEST(ThetaFromHeight, KnownValues) {
  EXPECT_EQ(theta_from_height(prototype(), 0.0), 180.0);
  EXPECT_NEAR(theta_from_height(prototype(), 11.0), 120.0, 1e-9);
  EXPECT_NEAR(theta_from_height(prototype(), 9.298), 130.0, 0.01);
}

TEST(ThetaFromHeight, UnreachableHeights) {
  EXPECT_THROW(theta_from_height(prototype(), 22.0), DomainError);
  EXPECT_THROW(theta_from_height(prototype(), 30.0), DomainError);
  EXPECT_THROW(theta_from_height(prototype(), -0.1), DomainError);
}

TEST(Sweep, FigureGrid) {
  const auto table = sweep(prototype(), 90.0, 180.0, 1.0, {45.0, 60.0, 70.0});
  ASSERT_EQ(table.size(), 273u);
  std::map<double, std::pair<double, double>> w_range;
  for (const auto& r : table) {
    if (r.theta == 180.0) {
      EXPECT_EQ(r.h, 0.0);
    }
    auto [it, fresh] = w_range.try_emplace(r.beta, r.w, r.w);
    it->second.first = std::min(it->second.first, r.w);
    it->second.second = std::max(it->second.second, r.w);
  }
  const auto span = [&](double b) { return w_range[b].second - w_range[b].first; };
  EXPECT_LT(span(70.0), span(45.0));
  // mpmath reference spans
  EXPECT_NEAR(span(45.0), 20.9772581829216, 1e-9);
  EXPECT_NEAR(span(60.0), 9.15934046399416, 1e-9);
  EXPECT_NEAR(span(70.0), 4.04214804028899, 1e-9);
}

TEST(Sweep, HeightColumnIgnoresBeta) {
  const auto table = sweep(prototype(), 90.0, 180.0, 1.0, {45.0, 60.0, 70.0});
  const std::size_t per_beta = table.size() / 3;
  for (std::size_t k = 0; k < per_beta; ++k) {
    EXPECT_EQ(table[k].h, table[k + per_beta].h);
    EXPECT_EQ(table[k].h, table[k + 2 * per_beta].h);
  }
}

TEST(Sweep, CoarseGrid) {
  const auto table = sweep(prototype(), 90.0, 180.0, 45.0, {70.0});
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[0].theta, 90.0);
  EXPECT_EQ(table[1].theta, 135.0);
  EXPECT_EQ(table[2].theta, 180.0);
}

TEST(Sweep, InvalidRanges) {
  EXPECT_THROW(sweep(prototype(), 180.0, 90.0, 1.0, {70.0}), DomainError);
  EXPECT_THROW(sweep(prototype(), 0.0, 90.0, 1.0, {70.0}), DomainError);
  EXPECT_THROW(sweep(prototype(), 90.0, 180.0, 0.0, {70.0}), DomainError);
  EXPECT_THROW(sweep(prototype(), 90.0, 180.0, 1.0, {}), DomainError);
  EXPECT_THROW(sweep(prototype(), 90.0, 180.0, 1.0, {90.0}), DomainError);
}

// Property checks over random parameters.

TEST(FoldProperties, Monotonicity) {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    FoldParams p{uniform(rng, 1.0, 100.0), uniform(rng, 1.0, 89.0), 3, 2, 130.0};
    const double t1 = uniform(rng, 0.5, 179.5);
    const double t2 = uniform(rng, t1 + 1e-3, 180.0);
    const Dimensions a = dimensions(p, t1);
    const Dimensions b = dimensions(p, t2);
    EXPECT_GT(a.h, b.h);
    EXPECT_GT(a.phi, b.phi);
    EXPECT_LT(a.l, b.l);
    EXPECT_GE(a.phi, 2.0 * p.beta - 1e-9);
    EXPECT_LE(a.phi, 180.0 + 1e-9);
  }
}

TEST(FoldProperties, HeightRoundTrip) {
  Rng rng(12);
  for (int k = 0; k < 2000; ++k) {
    FoldParams p{uniform(rng, 1.0, 100.0), 70.0, 4, 3, 130.0};
    const double theta = uniform(rng, 1.0, 179.9);
    EXPECT_NEAR(theta_from_height(p, dimensions(p, theta).h), theta, 1e-9);
  }
}

TEST(FoldProperties, SeparableDependence) {
  Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const double theta = uniform(rng, 1.0, 180.0);
    FoldParams a{22.0, uniform(rng, 1.0, 89.0), orifold::test::uniform_int(rng, 1, 8),
                 orifold::test::uniform_int(rng, 1, 8), 130.0};
    FoldParams b = a;
    b.beta = uniform(rng, 1.0, 89.0);
    b.n = a.n + 1;
    b.m = a.m + 1;
    EXPECT_EQ(dimensions(a, theta).h, dimensions(b, theta).h);

    FoldParams c = a;
    c.m = a.m + 2;
    EXPECT_EQ(dimensions(a, theta).l, dimensions(c, theta).l);
    FoldParams d = a;
    d.n = a.n + 2;
    EXPECT_EQ(dimensions(a, theta).w, dimensions(d, theta).w);
  }
}
