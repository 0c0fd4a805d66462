// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rissim/oracle.hpp"
#include "rissim/parallel.hpp"
#include "rissim/quadrature.hpp"
#include "support.hpp"

using namespace rissim;
using rissim::testing::lambda0;
using rissim::testing::rel_err;

namespace {

CellDims cell(double f) { return CellDims(f * lambda0(), f * lambda0(), lambda0()); }

}  // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (std::size_t n : {2u, 5u, 16u, 64u}) {
    const QuadratureNodes q = gauss_legendre(n, -0.3, 0.7);
    ASSERT_EQ(q.points.size(), n);
    // Exact up to degree 2n - 1.
    for (std::size_t k = 0; k < 2 * n; k += std::max<std::size_t>(1, n / 4)) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.points[i], static_cast<double>(k));
      const double exact = (std::pow(0.7, k + 1.0) - std::pow(-0.3, k + 1.0)) / (k + 1.0);
      EXPECT_NEAR(s, exact, 1e-14) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussLegendre, NodesAreSortedAndSymmetric) {
  const QuadratureNodes q = gauss_legendre(9, -1, 1);
  for (std::size_t i = 1; i < 9; ++i) EXPECT_LT(q.points[i - 1], q.points[i]);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(q.points[i], -q.points[8 - i], 1e-15);
    EXPECT_NEAR(q.weights[i], q.weights[8 - i], 1e-15);
  }
}

TEST(Midpoint, WeightsSumToLength) {
  const QuadratureNodes q = midpoint_rule(10, 1.0, 3.0);
  double s = 0.0;
  for (double w : q.weights) s += w;
  EXPECT_NEAR(s, 2.0, 1e-15);
  EXPECT_NEAR(q.points.front(), 1.1, 1e-15);
}

TEST(IncidentField, Values) {
  const double k = 2 * std::numbers::pi / lambda0();
  EXPECT_EQ(incident_field_phase(0.0, 0.3, 0.02, -0.01, k), std::complex<double>(1.0, 0.0));
  EXPECT_EQ(incident_field_phase(0.4, 0.3, 0.0, 0.0, k), std::complex<double>(1.0, 0.0));
  const auto v = incident_field_phase(deg(30.0), 0.0, lambda0() / 4, 0.0, k);
  EXPECT_NEAR(std::arg(v), -std::numbers::pi / 4, 1e-14);
}

TEST(SurfaceCurrent, Values) {
  const double k = 2 * std::numbers::pi / lambda0();
  EXPECT_NEAR(std::abs(surface_current_amplitude(0.0, 0.0, 0.01, 0.02, k)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(surface_current_amplitude(std::numbers::pi / 2, 0.0, 0.01, 0.0, k)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(surface_current_amplitude(deg(60.0), 1.0, 0.0, 0.0, k)), 0.5, 1e-15);
}

TEST(VectorPotentialsTest, BoresightIsTwiceTheArea) {
  const CellDims d = cell(0.5);
  const VectorPotentials n = vector_potentials(AngleQuad{}, d, QuadratureSpec{});
  EXPECT_NEAR(std::abs(n.n_theta) / (2 * d.area()), 1.0, 1e-13);
  EXPECT_NEAR(std::abs(n.n_phi), 0.0, 1e-18);
  const VectorPotentials big = vector_potentials(AngleQuad{}, cell(1.0), QuadratureSpec{});
  EXPECT_NEAR(std::abs(big.n_theta) / std::abs(n.n_theta), 4.0, 1e-12);
}

TEST(PoOracle, BoresightMatchesClosedForm) {
  EXPECT_LT(rel_err(rcs_po_oracle(AngleQuad{}, cell(0.5), QuadratureSpec{}),
                    std::numbers::pi * lambda0() * lambda0() / 4),
            1e-6);
}

TEST(PoOracle, RandomAnglesMatchClosedForm) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> th(0, deg(85)), ph(-std::numbers::pi, std::numbers::pi);
  for (double f : {0.25, 0.5, 1.0}) {
    PhysicalOpticsOracle oracle(cell(f), QuadratureSpec{});
    const double peak = rcs_metal_cell(AngleQuad{}, cell(f));
    for (int i = 0; i < 300; ++i) {
      const double ti = th(rng), pi = ph(rng), ts = th(rng);
      const AngleQuad q{ti, pi, ts, ph(rng)};
      EXPECT_LT(oracle_relative_error(oracle.rcs(q), rcs_metal_cell(q, cell(f)), peak), 1e-6);
    }
  }
}

TEST(PoOracle, SincNullIsDestructive) {
  // One-wavelength cell, theta_i = 0, scatter at grazing along y: Y = pi.
  const CellDims d = cell(1.0);
  const AngleQuad q{0.0, 0.0, deg(89.999), std::numbers::pi / 2};
  const QuadratureSpec fine{128, 128, QuadratureRule::gauss_legendre};
  const AngleQuad null_dir{0.0, 0.0, std::asin(1.0 - 1e-12), std::numbers::pi / 2};
  EXPECT_LT(rcs_po_oracle(null_dir, d, fine), 1e-10 * rcs_metal_cell(AngleQuad{}, d));
  EXPECT_LT(rcs_po_oracle(q, d, fine), 1e-6 * rcs_metal_cell(AngleQuad{}, d));
}

TEST(PoOracle, ConvergesWithNodeCount) {
  // Grazing geometry puts several phase cycles across the cell.
  const AngleQuad q{deg(80), deg(10), deg(75), deg(5)};
  const CellDims d = cell(1.0);
  const double exact = rcs_metal_cell(q, d);
  const double e16 = rel_err(rcs_po_oracle(q, d, {16, 16, QuadratureRule::gauss_legendre}), exact);
  const double e8 = rel_err(rcs_po_oracle(q, d, {8, 8, QuadratureRule::gauss_legendre}), exact);
  const double m16 = rel_err(rcs_po_oracle(q, d, {16, 16, QuadratureRule::midpoint}), exact);
  const double m32 = rel_err(rcs_po_oracle(q, d, {32, 32, QuadratureRule::midpoint}), exact);
  const double m64 = rel_err(rcs_po_oracle(q, d, {64, 64, QuadratureRule::midpoint}), exact);
  EXPECT_LT(e16, e8);
  EXPECT_LT(e16, 1e-9);
  // Midpoint rule: second order, error ratio near 4 per doubling.
  EXPECT_NEAR(m16 / m32, 4.0, 0.2);
  EXPECT_NEAR(m32 / m64, 4.0, 0.2);
}

TEST(PoOracle, FineGridMeetsTightTolerance) {
  const AngleGrid grid{deg(15.0), deg(85.0)};
  const OracleComparison r = compare_oracle_grid(cell(1.0), {128, 128, QuadratureRule::gauss_legendre}, grid,
                                                 [](const AngleQuad& q, const CellDims& d) { return rcs_metal_cell(q, d); });
  EXPECT_LT(r.max_relative_error, 1e-6);
  EXPECT_EQ(r.samples, 6u * 24u * 6u * 24u);
}

TEST(PoOracle, UnderresolvedQuadratureIsRejected) {
  EXPECT_THROW(rcs_po_oracle({deg(80), 0, deg(80), 0}, cell(4.0), {4, 4, QuadratureRule::gauss_legendre}),
               QuadratureUnderresolved);
  EXPECT_THROW(QuadratureSpec({3, 8, QuadratureRule::gauss_legendre}).validate(), InvalidArgument);
}

TEST(PoOracle, CoarseNodesReportWorstQuad) {
  const AngleGrid grid{deg(10.0), deg(80.0)};
  const OracleComparison r = compare_oracle_grid(cell(0.5), {8, 8, QuadratureRule::gauss_legendre}, grid,
                                                 [](const AngleQuad& q, const CellDims& d) { return rcs_metal_cell(q, d); });
  EXPECT_GT(r.max_relative_error, 0.0);
  EXPECT_GT(r.worst.theta_i + r.worst.theta_s, 0.0);
}

TEST(PoOracle, ThreadCountDoesNotChangeResults) {
  const AngleGrid grid{deg(20.0), deg(80.0)};
  const auto closed = [](const AngleQuad& q, const CellDims& d) { return rcs_metal_cell(q, d); };
  const OracleComparison a = compare_oracle_grid(cell(0.5), QuadratureSpec{}, grid, closed, 1);
  const OracleComparison b = compare_oracle_grid(cell(0.5), QuadratureSpec{}, grid, closed, 3);
  EXPECT_EQ(a.max_relative_error, b.max_relative_error);
  EXPECT_EQ(a.mean_relative_error, b.mean_relative_error);
  EXPECT_EQ(a.worst.phi_s, b.worst.phi_s);
}

TEST(AngleGridTest, Counts) {
  const AngleGrid g{deg(5.0), deg(85.0)};
  EXPECT_EQ(g.thetas().size(), 18u);
  EXPECT_EQ(g.phis().size(), 72u);
  EXPECT_NEAR(g.phis().front(), -std::numbers::pi, 1e-15);
}

TEST(ParallelFor, LowestIndexExceptionWins) {
  std::vector<int> seen(50, 0);
  try {
    parallel_for(50, 4, [&](std::size_t i) {
      seen[i] = 1;
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}
