// SPDX-License-Identifier: Apache-2.0
//
// Received power of a 16x16 half-wavelength surface at 2 m, 30 degrees:
// metal plate versus phase-optimized RIS, continuous and 1-bit.
#include <cstdio>

#include "rissim/experiments.hpp"

int main() {
  using namespace rissim;
  PropagationParams params;
  params.lambda = speed_of_light / default_frequency_hz;
  const SurfaceSpec surface{16, 16, 0.5 * params.lambda, 0.5 * params.lambda};
  const auto [tx, rx] = SymmetricPlacement::at(2.0, deg(30.0), 0.0);
  const RisModel ris{DiffractionParams(0.2)};

  const double metal = evaluate_policy(ModelSpec{"metal", MetalModel{}, MetalRotated{}}, surface, tx, rx, params);
  const double cont = evaluate_policy(ModelSpec{"ris", ris, RisOptimizedContinuous{}}, surface, tx, rx, params);
  const double one_bit = evaluate_policy(ModelSpec{"ris1", ris, RisOptimizedDiscrete{2, 10}}, surface, tx, rx, params);

  std::printf("far-field boundary: %.3f m\n", far_field_boundary(surface, params.lambda));
  std::printf("metal plate:        %8.3f dBm\n", PowerResult::watts_to_dbm(metal));
  std::printf("RIS, continuous:    %8.3f dBm\n", PowerResult::watts_to_dbm(cont));
  std::printf("RIS, 1-bit greedy:  %8.3f dBm\n", PowerResult::watts_to_dbm(one_bit));
}
