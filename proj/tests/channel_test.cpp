// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rissim/channel.hpp"
#include "rissim/summation.hpp"
#include "support.hpp"

using namespace rissim;
using rissim::testing::default_params;

TEST(Channel, OnAxisMagnitude) {
  const PropagationParams p = default_params();
  for (double d : {0.5, 1.0, 3.0}) {
    const Complex h = channel_coefficient({0, 0, d}, {0, 0, 0}, p);
    EXPECT_NEAR(std::abs(h), std::sqrt(1.0 / (4 * std::numbers::pi * d * d)), 1e-15);
  }
}

TEST(Channel, FullWavelengthHasZeroPhase) {
  PropagationParams p;
  p.lambda = 0.25;
  const Complex h = channel_coefficient({0, 0, 0.25}, {0, 0, 0}, p);
  EXPECT_NEAR(h.imag(), 0.0, 1e-15);
  EXPECT_GT(h.real(), 0.0);
}

TEST(Channel, PathLossWithDirectivity) {
  const PropagationParams p = default_params();
  EXPECT_NEAR(path_loss_amplitude(2.0, deg(60.0), p), std::sqrt(0.5 / (16 * std::numbers::pi)), 1e-15);
  EXPECT_NEAR(path_loss_amplitude(2.0, deg(60.0), p), 0.09974, 1e-5);
}

TEST(Channel, PhaseFollowsDistance) {
  const PropagationParams p = default_params();
  const Vec3 end{0.3, -0.2, 1.1};
  const Vec3 element{0.05, 0.02, 0.0};
  const double d = norm(end - element);
  const Complex h = channel_coefficient(end, element, p);
  EXPECT_NEAR(std::remainder(std::arg(h) + 2 * std::numbers::pi * d / p.lambda, 2 * std::numbers::pi), 0.0, 1e-9);
}

TEST(Channel, GammaScalesDistanceDecay) {
  PropagationParams p = default_params();
  p.gamma = 3.0;
  const double a1 = std::abs(channel_coefficient({0, 0, 1}, {0, 0, 0}, p));
  const double a2 = std::abs(channel_coefficient({0, 0, 2}, {0, 0, 0}, p));
  EXPECT_NEAR(a1 / a2, std::pow(2.0, 1.5), 1e-12);
}

TEST(Channel, ZeroDistanceIsRejected) {
  EXPECT_THROW(channel_coefficient({0.1, 0, 0.1}, {0.1, 0, 0.1}, default_params()), ZeroDistance);
}

TEST(Params, Validation) {
  PropagationParams p;
  p.gamma = 0.5;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.lambda = 0.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.p_t = -1.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_NO_THROW(PropagationParams{}.validate());
}

TEST(Response, Values) {
  const Complex one = element_response(0.0, 1.0).value();
  EXPECT_NEAR(one.real(), 1.0, 1e-16);
  EXPECT_NEAR(one.imag(), 0.0, 1e-16);
  const Complex minus = element_response(std::numbers::pi, 1.0).value();
  EXPECT_NEAR(minus.real(), -1.0, 1e-16);
  EXPECT_NEAR(minus.imag(), 0.0, 1e-15);
  const Complex r = element_response(std::numbers::pi / 3, 0.9).value();
  EXPECT_NEAR(r.real(), 0.45, 1e-15);
  EXPECT_NEAR(r.imag(), -0.9 * std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(r.imag(), -0.7794, 1e-4);
}

TEST(Response, AmplitudeRange) {
  EXPECT_THROW(element_response(0.0, 1.0001), AmplitudeOutOfRange);
  EXPECT_THROW(element_response(0.0, -0.1), AmplitudeOutOfRange);
  EXPECT_NO_THROW(element_response(0.0, 0.0));
}

TEST(Levels, LatticeAndRounding) {
  EXPECT_DOUBLE_EQ(level_phase(1, 2), std::numbers::pi);
  EXPECT_DOUBLE_EQ(level_phase(3, 4), 1.5 * std::numbers::pi);
  EXPECT_EQ(nearest_level(0.1, 2), 0);
  EXPECT_EQ(nearest_level(3.0, 2), 1);
  EXPECT_EQ(nearest_level(-3.0, 2), 1);
  EXPECT_EQ(nearest_level(2 * std::numbers::pi - 0.1, 2), 0);
  EXPECT_EQ(nearest_level(-std::numbers::pi / 2, 4), 3);
  for (double phi : {-7.0, -0.5, 0.0, 2.0, 9.0}) {
    const double w = wrap_phase(phi);
    EXPECT_GE(w, 0.0);
    EXPECT_LT(w, 2 * std::numbers::pi);
    EXPECT_NEAR(std::remainder(w - phi, 2 * std::numbers::pi), 0.0, 1e-14);
  }
}

TEST(Configuration, DiscreteValidation) {
  const RisConfiguration c = RisConfiguration::discrete({0, 1, 2, 3}, 4);
  EXPECT_NO_THROW(c.validate(4));
  EXPECT_THROW(c.validate(5), InvalidArgument);
  RisConfiguration off = c;
  off.responses[2].phi += 1e-6;
  EXPECT_THROW(off.validate(4), InvalidArgument);
  EXPECT_THROW(RisConfiguration::discrete({0, 2}, 2), InvalidArgument);
  EXPECT_THROW(RisConfiguration::discrete({0, 1}, 1), InvalidArgument);
  const RisConfiguration amp = RisConfiguration::discrete({0, 1}, 2, {1.0, 0.8});
  EXPECT_DOUBLE_EQ(amp.responses[1].alpha, 0.8);
}

TEST(Configuration, UniformIsMetalLike) {
  const RisConfiguration c = RisConfiguration::uniform(3);
  for (const auto& r : c.responses) EXPECT_EQ(r.value(), Complex(1.0, 0.0));
}

TEST(Summation, CompensatedRecoversCancellation) {
  const std::vector<std::complex<double>> terms{{1e16, 1.0}, {1.0, 1e16}, {-1e16, 1.0}, {1.0, -1e16}};
  const auto exact = sum_terms<double>(terms, SummationMode::compensated);
  EXPECT_EQ(exact, std::complex<double>(2.0, 2.0));
  NeumaierSum<double> s;
  for (int i = 0; i < 10; ++i) s += 0.1;
  EXPECT_NEAR(s.value(), 1.0, 1e-16);
}
