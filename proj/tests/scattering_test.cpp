// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rissim/scattering.hpp"
#include "support.hpp"

using namespace rissim;
using rissim::testing::lambda0;
using rissim::testing::rel_err;

namespace {

CellDims half_wave() { return CellDims(0.5 * lambda0(), 0.5 * lambda0(), lambda0()); }

AngleQuad random_quad(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.0, deg(89.0)), ph(-std::numbers::pi, std::numbers::pi);
  const double ti = th(rng), pi = ph(rng), ts = th(rng);
  return {ti, pi, ts, ph(rng)};
}

}  // namespace

TEST(Sinc, RemovableSingularity) { EXPECT_EQ(sinc(0.0), 1.0); }

TEST(Sinc, ZeroAtPi) { EXPECT_NEAR(sinc(std::numbers::pi), 0.0, 1e-12); }

TEST(Sinc, SmallArgumentMatchesTaylorSeries) {
  const double x = 1e-5;
  const double series = 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
  EXPECT_NEAR(sinc(x), series, 1e-17);
  EXPECT_NEAR(sinc(x), 0.99999999998333, 1e-14);
}

TEST(Sinc, ContinuousAcrossBranchPoint) {
  for (double x : {0.9999e-4, 1e-4, 1.0001e-4, -1e-4}) EXPECT_NEAR(sinc(x), std::sin(x) / x, 3e-16);
}

TEST(SincArgumentsTest, Boresight) {
  const auto a = xy_arguments(AngleQuad{}, half_wave());
  EXPECT_EQ(a.x, 0.0);
  EXPECT_EQ(a.y, 0.0);
}

TEST(SincArgumentsTest, SpecularCancellation) {
  const auto a = xy_arguments({deg(30.0), std::numbers::pi, deg(30.0), 0.0}, half_wave());
  EXPECT_NEAR(a.x, 0.0, 1e-15);
  EXPECT_NEAR(a.y, 0.0, 1e-15);
}

TEST(SincArgumentsTest, HandSubstitution) {
  const auto a = xy_arguments({0.0, 0.0, deg(30.0), 0.0}, half_wave());
  EXPECT_NEAR(a.x, std::numbers::pi / 4.0, 1e-15);
}

TEST(MetalRcs, BoresightHalfWaveCell) {
  const double expected = std::numbers::pi * lambda0() * lambda0() / 4.0;
  EXPECT_LT(rel_err(rcs_metal_cell(AngleQuad{}, half_wave()), expected), 1e-15);
}

TEST(MetalRcs, ObliqueIncidenceBoresightScatter) {
  const AngleQuad q{deg(60.0), std::numbers::pi, 0.0, 0.0};
  const double x = -0.5 * std::numbers::pi * std::sin(deg(60.0));
  const double s = std::sin(x) / x;
  const double expected = std::numbers::pi * lambda0() * lambda0() / 4.0 * 0.25 * s * s;
  EXPECT_LT(rel_err(rcs_metal_cell(q, half_wave()), expected), 1e-13);
  EXPECT_NEAR(x, -1.360, 1e-3);
}

TEST(MetalRcs, PerpendicularScatterPlaneUsesSinePart) {
  // phi_s = pi / 2: polarization factor cos^2 theta_s cos^2 phi_s + sin^2 phi_s = 1.
  const CellDims dims = half_wave();
  for (double ts : {0.1, 0.7, 1.3}) {
    const AngleQuad q{0.0, 0.0, ts, std::numbers::pi / 2};
    const auto a = xy_arguments(q, dims);
    const double ratio = dims.area() / dims.lambda();
    const double expected = 4 * std::numbers::pi * ratio * ratio * std::pow(sinc(a.x) * sinc(a.y), 2);
    EXPECT_LT(rel_err(rcs_metal_cell(q, dims), expected), 1e-14);
  }
}

TEST(MetalRcs, NonNegativeAndBoundedByBoresight) {
  std::mt19937_64 rng(3);
  const CellDims dims(0.7 * lambda0(), 0.3 * lambda0(), lambda0());
  const double peak = rcs_metal_cell(AngleQuad{}, dims);
  for (int i = 0; i < 10000; ++i) {
    const double s = rcs_metal_cell(random_quad(rng), dims);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, peak * (1 + 1e-12));
  }
}

TEST(MetalRcs, ReciprocityUnderSwapOfSpecularPair) {
  std::mt19937_64 rng(17);
  const CellDims dims = half_wave();
  for (int i = 0; i < 1000; ++i) {
    const AngleQuad q = random_quad(rng);
    // Swapping incidence and scattering leaves X, Y unchanged; only the angular factor differs.
    const AngleQuad swapped{q.theta_s, q.phi_s, q.theta_i, q.phi_i};
    const auto a = xy_arguments(q, dims);
    const auto b = xy_arguments(swapped, dims);
    EXPECT_NEAR(a.x, b.x, 1e-12);
    EXPECT_NEAR(a.y, b.y, 1e-12);
  }
}

TEST(DiffractionFactor, UnityAtBoresightAndForZeroMu) {
  const CellDims dims = half_wave();
  EXPECT_EQ(diffraction_factor(AngleQuad{}, dims, DiffractionParams(0.7)), 1.0);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(diffraction_factor(random_quad(rng), dims, DiffractionParams(0.0)), 1.0);
}

TEST(DiffractionFactor, GrazingHalfWave) {
  const AngleQuad q{std::numbers::pi / 2, 0.0, std::numbers::pi / 2, 0.0};
  EXPECT_NEAR(diffraction_factor(q, half_wave(), DiffractionParams(0.3)), 1.3, 1e-15);
}

TEST(DiffractionFactor, StaysWithinMuBand) {
  std::mt19937_64 rng(19);
  for (double mu : {0.0, 0.2, 0.5, 1.0})
    for (double f : {0.25, 0.5, 1.0, 2.0}) {
      const CellDims dims(f * lambda0(), f * lambda0(), lambda0());
      for (int i = 0; i < 2000; ++i) {
        const double d = diffraction_factor(random_quad(rng), dims, DiffractionParams(mu));
        EXPECT_GE(d, 1.0 - mu);
        EXPECT_LE(d, 1.0 + mu);
      }
    }
}

TEST(DiffractionParamsTest, RejectsOutOfRange) {
  EXPECT_THROW(DiffractionParams(-0.01), InvalidArgument);
  EXPECT_THROW(DiffractionParams(1.01), InvalidArgument);
  EXPECT_THROW(DiffractionParams(std::nan("")), InvalidArgument);
  EXPECT_DOUBLE_EQ(DiffractionParams().mu(), 0.2);
}

TEST(RisRcs, ReducesToMetalAtZeroMu) {
  std::mt19937_64 rng(23);
  const CellDims dims = half_wave();
  for (int i = 0; i < 1000; ++i) {
    const AngleQuad q = random_quad(rng);
    EXPECT_EQ(rcs_ris_cell(q, dims, DiffractionParams(0.0)), rcs_metal_cell(q, dims));
  }
}

TEST(RisRcs, BoresightIndependentOfMu) {
  for (double mu : {0.0, 0.3, 1.0})
    EXPECT_EQ(rcs_ris_cell(AngleQuad{}, half_wave(), DiffractionParams(mu)), rcs_metal_cell(AngleQuad{}, half_wave()));
}

TEST(RisRcs, SpecularFortyFiveDegrees) {
  const AngleQuad q{deg(45.0), std::numbers::pi, deg(45.0), 0.0};
  const double s45 = std::sin(deg(45.0));
  const double d = 1.0 - 0.5 * s45 * std::cos(std::numbers::pi * s45);
  EXPECT_NEAR(d, 1.2141, 1e-4);
  EXPECT_LT(rel_err(rcs_ris_cell(q, half_wave(), DiffractionParams(0.5)), rcs_metal_cell(q, half_wave()) * d), 1e-14);
}

TEST(TangRcs, Values) {
  EXPECT_EQ(rcs_tang_cell(AngleQuad{}), 1.0);
  EXPECT_NEAR(rcs_tang_cell({deg(60.0), 0.0, deg(30.0), 0.0}), 0.1875, 1e-15);
  EXPECT_NEAR(rcs_tang_cell({std::numbers::pi / 2 - 1e-9, 0.0, 0.0, 0.0}), 0.0, 1e-17);
}

TEST(Bsd, SquareRootOfRcs) {
  const CellDims dims = half_wave();
  EXPECT_NEAR(bsd(MetalModel{}, AngleQuad{}, dims), std::sqrt(std::numbers::pi * lambda0() * lambda0() / 4), 1e-16);
  EXPECT_NEAR(bsd(TangModel{}, {deg(60.0), 0.0, deg(30.0), 0.0}, dims), std::sqrt(0.1875), 1e-15);
  // First sinc null: Y = pi at theta_s = 90 deg, phi_s = 90 deg with a one-wavelength cell.
  const CellDims wide(lambda0(), lambda0(), lambda0());
  EXPECT_NEAR(bsd(MetalModel{}, {0.0, 0.0, std::numbers::pi / 2, std::numbers::pi / 2}, wide), 0.0, 1e-9);
}

TEST(CellDimsTest, Validation) {
  EXPECT_THROW(CellDims(0.0, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(CellDims(1.0, 1.0, -1.0), InvalidArgument);
  EXPECT_TRUE(half_wave().sub_wavelength());
  EXPECT_FALSE(CellDims(2.0, 1.0, 1.0).sub_wavelength());
}
