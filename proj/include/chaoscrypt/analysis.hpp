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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"
#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

struct Histogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

inline Histogram compute_histogram(const GrayImage& img) {
  Histogram h;
  for (std::uint8_t v : img.pixels()) ++h.counts[v];
  h.total = img.size();
  return h;
}

/// Shannon entropy in bits of the gray-level distribution.
inline double compute_entropy(const Histogram& h) {
  if (h.total == 0) return 0.0;
  const double total = static_cast<double>(h.total);
  double e = 0.0;
  for (std::uint64_t c : h.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    e -= p * std::log2(p);
  }
  return e;
}

inline double compute_entropy(const GrayImage& img) { return compute_entropy(compute_histogram(img)); }

/// Pearson chi-square against the uniform distribution over 256 levels.
inline double chi_square_uniformity(const Histogram& h) {
  if (h.total == 0) {
    throw InvalidArgument("chi_square_uniformity: histogram is empty");
  }
  const double expected = static_cast<double>(h.total) / 256.0;
  double chi = 0.0;
  for (std::uint64_t c : h.counts) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

/// Displacement from a pixel to its GLCM partner.
struct Offset {
  int dr = 0;
  int dc = 1;
  friend bool operator==(const Offset&, const Offset&) = default;
};

/// Normalized, non-symmetric gray-level co-occurrence matrix.
struct Glcm {
  std::size_t levels = 256;
  Offset offset;
  std::size_t pair_count = 0;
  std::vector<double> probs;  // levels x levels, row = reference pixel

  double operator()(std::size_t i, std::size_t j) const { return probs[i * levels + j]; }
};

/// Counts pairs (I(r, c), I(r + dr, c + dc)) over every valid position.
/// `levels` < 256 quantizes gray values as v * levels / 256 first.
inline Glcm compute_glcm(const GrayImage& img, Offset offset = {}, std::size_t levels = 256) {
  if (levels < 1 || levels > 256) {
    throw InvalidArgument("compute_glcm: levels must be in [1, 256]");
  }
  const auto rows = static_cast<long>(img.rows());
  const auto cols = static_cast<long>(img.cols());
  if (std::labs(offset.dr) >= rows || std::labs(offset.dc) >= cols) {
    throw OffsetTooLarge("GLCM offset (" + std::to_string(offset.dr) + "," +
                         std::to_string(offset.dc) + ") does not fit a " + std::to_string(rows) +
                         "x" + std::to_string(cols) + " image");
  }

  Glcm g;
  g.levels = levels;
  g.offset = offset;
  std::vector<std::uint64_t> counts(levels * levels, 0);
  auto level = [levels](std::uint8_t v) { return static_cast<std::size_t>(v) * levels / 256; };

  const long r_begin = std::max(0L, -static_cast<long>(offset.dr));
  const long r_end = std::min(rows, rows - offset.dr);
  const long c_begin = std::max(0L, -static_cast<long>(offset.dc));
  const long c_end = std::min(cols, cols - offset.dc);
  for (long r = r_begin; r < r_end; ++r) {
    for (long c = c_begin; c < c_end; ++c) {
      const auto a = level(img(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      const auto b = level(img(static_cast<std::size_t>(r + offset.dr),
                               static_cast<std::size_t>(c + offset.dc)));
      ++counts[a * levels + b];
      ++g.pair_count;
    }
  }

  g.probs.resize(counts.size());
  const double n = static_cast<double>(g.pair_count);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    g.probs[k] = static_cast<double>(counts[k]) / n;
  }
  return g;
}

struct GlcmMetrics {
  double contrast = 0.0;
  double energy = 0.0;
  double homogeneity = 0.0;
  /// Empty when a marginal of the GLCM has zero variance.
  std::optional<double> correlation;
};

inline GlcmMetrics glcm_metrics(const Glcm& g) {
  const std::size_t L = g.levels;
  GlcmMetrics m;
  double mu_r = 0.0, mu_c = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const double p = g(i, j);
      if (p == 0.0) continue;
      const double d = static_cast<double>(i) - static_cast<double>(j);
      m.contrast += p * d * d;
      m.energy += p * p;
      m.homogeneity += p / (1.0 + std::fabs(d));
      mu_r += p * static_cast<double>(i);
      mu_c += p * static_cast<double>(j);
    }
  }

  double var_r = 0.0, var_c = 0.0, cov = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < L; ++j) {
      const double p = g(i, j);
      if (p == 0.0) continue;
      const double di = static_cast<double>(i) - mu_r;
      const double dj = static_cast<double>(j) - mu_c;
      var_r += p * di * di;
      var_c += p * dj * dj;
      cov += p * di * dj;
    }
  }
  if (var_r > 0.0 && var_c > 0.0) {
    m.correlation = cov / (std::sqrt(var_r) * std::sqrt(var_c));
  }
  return m;
}

enum class Direction { Horizontal, Vertical, Diagonal };

inline Offset direction_offset(Direction d) {
  switch (d) {
    case Direction::Horizontal: return {0, 1};
    case Direction::Vertical: return {1, 0};
    case Direction::Diagonal: return {1, 1};
  }
  return {0, 1};
}

/// Pearson correlation over every adjacent pixel pair in the given direction.
inline double adjacent_correlation(const GrayImage& img, Direction dir) {
  const auto [dr, dc] = direction_offset(dir);
  const std::size_t dr_u = static_cast<std::size_t>(dr);
  const std::size_t dc_u = static_cast<std::size_t>(dc);
  if (img.rows() <= dr_u || img.cols() <= dc_u) {
    throw InvalidArgument("adjacent_correlation: image has no pixel pairs in this direction");
  }
  const std::size_t r_end = img.rows() - dr_u;
  const std::size_t c_end = img.cols() - dc_u;
  const double n = static_cast<double>(r_end * c_end);

  double sx = 0.0, sy = 0.0;
  for (std::size_t r = 0; r < r_end; ++r) {
    for (std::size_t c = 0; c < c_end; ++c) {
      sx += img(r, c);
      sy += img(r + dr_u, c + dc_u);
    }
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t r = 0; r < r_end; ++r) {
    for (std::size_t c = 0; c < c_end; ++c) {
      const double x = img(r, c) - mx;
      const double y = img(r + dr_u, c + dc_u) - my;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateDistribution("adjacent correlation undefined: constant pixel marginal");
  }
  return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

struct AdjacentCorrelations {
  std::optional<double> horizontal;
  std::optional<double> vertical;
  std::optional<double> diagonal;
};

struct AnalysisReport {
  Histogram histogram;
  double entropy = 0.0;
  Offset glcm_offset;
  std::size_t glcm_levels = 256;
  GlcmMetrics glcm;
  AdjacentCorrelations adjacent;
  double chi_square = 0.0;
};

inline AnalysisReport analyze(const GrayImage& img, Offset offset = {}, std::size_t levels = 256) {
  AnalysisReport rep;
  rep.histogram = compute_histogram(img);
  rep.entropy = compute_entropy(rep.histogram);
  rep.glcm_offset = offset;
  rep.glcm_levels = levels;
  rep.glcm = glcm_metrics(compute_glcm(img, offset, levels));
  auto guarded = [&img](Direction d) -> std::optional<double> {
    try {
      return adjacent_correlation(img, d);
    } catch (const DegenerateDistribution&) {
      return std::nullopt;
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  };
  rep.adjacent = {guarded(Direction::Horizontal), guarded(Direction::Vertical),
                  guarded(Direction::Diagonal)};
  rep.chi_square = chi_square_uniformity(rep.histogram);
  return rep;
}

}  // namespace chaoscrypt
