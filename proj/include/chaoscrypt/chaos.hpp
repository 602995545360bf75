/*
 * Copyright 2026 The chaoscrypt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

/// Control parameters and initial state of one Hénon orbit
/// x' = 1 - a x^2 + y, y' = b x.
struct HenonParams {
  double a = 1.4;
  double b = 0.3;
  double x0 = 0.0;
  double y0 = 0.0;
  std::uint64_t burn_in = 1000;

  friend bool operator==(const HenonParams&, const HenonParams&) = default;
};

/// Iterates with |x| above this bound are treated as divergence.
inline constexpr double kDivergenceBound = 1e6;

/// Fractional digits kept by quantize() before the modulus is applied.
inline constexpr double kQuantizeScale = 1e5;

/// The entire secret: one orbit for the XOR keystream, one for S-box selection.
struct CipherKey {
  HenonParams seed_orbit;
  HenonParams select_orbit;
  int modulus = 256;

  void validate() const {
    if (modulus != 255 && modulus != 256) {
      throw InvalidArgument("key modulus must be 255 or 256, got " + std::to_string(modulus));
    }
    for (const HenonParams* p : {&seed_orbit, &select_orbit}) {
      if (!std::isfinite(p->a) || !std::isfinite(p->b) || !std::isfinite(p->x0) ||
          !std::isfinite(p->y0)) {
        throw InvalidArgument("Henon parameters must be finite");
      }
    }
  }

  friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Classic chaotic regime (a = 1.4, b = 0.3) with fixed initial conditions.
/// Used by tests and examples; generate real keys with keygen.
inline CipherKey default_key() {
  return CipherKey{
      .seed_orbit = {.a = 1.4, .b = 0.3, .x0 = 0.1, .y0 = 0.1, .burn_in = 1000},
      .select_orbit = {.a = 1.4, .b = 0.3, .x0 = -0.05, .y0 = 0.07, .burn_in = 1000},
      .modulus = 256,
  };
}

/// Row-major M x N keystream, every entry below the key modulus.
struct SeedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> values;

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  friend bool operator==(const SeedMatrix&, const SeedMatrix&) = default;
};

/// One selector in {0, 1, 2} per pixel.
using SelectionSequence = std::vector<std::uint8_t>;

/// Returns `count` x-iterates after discarding `burn_in` steps.
///
/// The update is evaluated as (1 - a * (x * x)) + y in binary64; build with
/// FP contraction disabled so the orbit is identical on every platform.
inline std::vector<double> iterate_orbit(const HenonParams& params, std::size_t count) {
  if (count == 0) {
    throw InvalidArgument("iterate_orbit: count must be at least 1");
  }
  auto check = [](double x) {
    if (!(std::fabs(x) <= kDivergenceBound)) {
      throw DivergentOrbit("Henon orbit diverged (|x| > 1e6); key is unusable");
    }
  };

  std::vector<double> out;
  out.reserve(count);
  double x = params.x0;
  double y = params.y0;
  check(x);
  const std::uint64_t total = params.burn_in + count;
  for (std::uint64_t n = 0; n < total; ++n) {
    const double sq = x * x;
    const double ax = params.a * sq;
    const double next_x = (1.0 - ax) + y;
    y = params.b * x;
    x = next_x;
    check(x);
    if (n >= params.burn_in) {
      out.push_back(x);
    }
  }
  return out;
}

/// round(frac(|x|) * 1e5) mod modulus, rounding half away from zero.
inline int quantize(double x, int modulus) {
  if (!std::isfinite(x)) {
    throw InvalidArgument("quantize: value must be finite");
  }
  if (modulus != 3 && modulus != 255 && modulus != 256) {
    throw InvalidArgument("quantize: modulus must be 3, 255 or 256");
  }
  const double mag = std::fabs(x);
  const double frac = mag - std::floor(mag);
  const auto scaled = static_cast<std::int64_t>(std::round(frac * kQuantizeScale));
  return static_cast<int>(scaled % modulus);
}

inline SeedMatrix gen_seed_matrix(const CipherKey& key, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("gen_seed_matrix: dimensions must be positive");
  }
  key.validate();
  const auto orbit = iterate_orbit(key.seed_orbit, rows * cols);
  SeedMatrix seed{rows, cols, std::vector<std::uint8_t>(orbit.size())};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    seed.values[i] = static_cast<std::uint8_t>(quantize(orbit[i], key.modulus));
  }
  return seed;
}

inline SelectionSequence gen_selection_sequence(const CipherKey& key, std::size_t pixel_count) {
  if (pixel_count == 0) {
    throw InvalidArgument("gen_selection_sequence: pixel_count must be at least 1");
  }
  key.validate();
  const auto orbit = iterate_orbit(key.select_orbit, pixel_count);
  SelectionSequence sel(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    sel[i] = static_cast<std::uint8_t>(quantize(orbit[i], 3));
  }
  return sel;
}

}  // namespace chaoscrypt
