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
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoscrypt/error.hpp"
#include "chaoscrypt/image.hpp"

namespace chaoscrypt {

/// Layer-peeling traversal patterns.
enum class ShapeKind { L, InvertedL, U, InvertedU, Ring };

inline constexpr std::array<ShapeKind, 5> kAllShapes = {
    ShapeKind::L, ShapeKind::InvertedL, ShapeKind::U, ShapeKind::InvertedU, ShapeKind::Ring};

/// Image quadrants in reading order: A top-left, B top-right,
/// C bottom-left, D bottom-right.
enum class Quadrant { A, B, C, D };

inline constexpr std::array<Quadrant, 4> kAllQuadrants = {Quadrant::A, Quadrant::B, Quadrant::C,
                                                          Quadrant::D};

/// Plan-string letter for a shape: L, J (inverted L), U, V (inverted U), R (ring).
inline char shape_letter(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::L: return 'L';
    case ShapeKind::InvertedL: return 'J';
    case ShapeKind::U: return 'U';
    case ShapeKind::InvertedU: return 'V';
    case ShapeKind::Ring: return 'R';
  }
  return '?';
}

inline std::optional<ShapeKind> shape_from_letter(char c) {
  switch (c) {
    case 'L': return ShapeKind::L;
    case 'J': return ShapeKind::InvertedL;
    case 'U': return ShapeKind::U;
    case 'V': return ShapeKind::InvertedU;
    case 'R': return ShapeKind::Ring;
    default: return std::nullopt;
  }
}

struct Cell {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Emits every cell of an m x n rectangle exactly once by repeatedly peeling
/// the active rectangle [r0, r1] x [c0, c1] in the given pattern.
inline std::vector<Cell> peel_shape(ShapeKind kind, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) {
    throw InvalidArgument("peel_shape: rectangle must be non-empty");
  }
  using idx = std::ptrdiff_t;
  std::vector<Cell> out;
  out.reserve(m * n);
  auto emit = [&out](idx r, idx c) {
    out.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c)});
  };

  idx r0 = 0, r1 = static_cast<idx>(m) - 1;
  idx c0 = 0, c1 = static_cast<idx>(n) - 1;
  while (r0 <= r1 && c0 <= c1) {
    switch (kind) {
      case ShapeKind::L:
        for (idx r = r0; r <= r1; ++r) emit(r, c0);
        for (idx c = c0 + 1; c <= c1; ++c) emit(r1, c);
        ++c0;
        --r1;
        break;
      case ShapeKind::InvertedL:
        for (idx r = r0; r <= r1; ++r) emit(r, c1);
        for (idx c = c1 - 1; c >= c0; --c) emit(r1, c);
        --c1;
        --r1;
        break;
      case ShapeKind::U:
        for (idx r = r0; r <= r1; ++r) emit(r, c0);
        if (c1 > c0) {
          for (idx c = c0 + 1; c <= c1 - 1; ++c) emit(r1, c);
          for (idx r = r1; r >= r0; --r) emit(r, c1);
        }
        ++c0;
        --c1;
        --r1;
        break;
      case ShapeKind::InvertedU:
        for (idx r = r1; r >= r0; --r) emit(r, c0);
        if (c1 > c0) {
          for (idx c = c0 + 1; c <= c1 - 1; ++c) emit(r0, c);
          for (idx r = r0; r <= r1; ++r) emit(r, c1);
        }
        ++c0;
        --c1;
        ++r0;
        break;
      case ShapeKind::Ring:
        for (idx c = c0; c <= c1; ++c) emit(r0, c);
        for (idx r = r0 + 1; r <= r1; ++r) emit(r, c1);
        if (r1 > r0) {
          for (idx c = c1 - 1; c >= c0; --c) emit(r1, c);
        }
        if (c1 > c0) {
          for (idx r = r1 - 1; r >= r0 + 1; --r) emit(r, c0);
        }
        ++r0;
        --r1;
        ++c0;
        --c1;
        break;
    }
  }
  return out;
}

struct BlockShape {
  Quadrant block;
  ShapeKind shape;
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

/// Which shape peels which quadrant, in the order the blocks are appended
/// to the diffused array, and whether each block is rotated 180° first.
struct PermutationPlan {
  std::array<BlockShape, 4> assignment = {{{Quadrant::A, ShapeKind::L},
                                           {Quadrant::B, ShapeKind::U},
                                           {Quadrant::C, ShapeKind::Ring},
                                           {Quadrant::D, ShapeKind::InvertedU}}};
  bool flip = true;

  void validate() const {
    std::array<int, 4> seen{};
    for (const auto& bs : assignment) {
      ++seen[static_cast<std::size_t>(bs.block)];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
      throw InvalidArgument("permutation plan must use each quadrant exactly once");
    }
  }

  friend bool operator==(const PermutationPlan&, const PermutationPlan&) = default;
};

inline PermutationPlan default_plan() { return {}; }

/// Parses a four-letter plan string over {L,J,U,V,R}, one shape per
/// quadrant in A,B,C,D order.
inline PermutationPlan parse_plan(std::string_view text, bool flip = true) {
  if (text.size() != 4) {
    throw InvalidArgument("plan string must have exactly 4 letters, got '" + std::string(text) +
                          "'");
  }
  PermutationPlan plan;
  plan.flip = flip;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto shape = shape_from_letter(text[i]);
    if (!shape) {
      throw InvalidArgument(std::string("unknown shape letter '") + text[i] +
                            "' in plan (expected one of L, J, U, V, R)");
    }
    plan.assignment[i] = {kAllQuadrants[i], *shape};
  }
  return plan;
}

/// Inverse of parse_plan. Only meaningful for plans in A,B,C,D order.
inline std::string plan_to_string(const PermutationPlan& plan) {
  std::array<char, 4> letters{};
  for (const auto& bs : plan.assignment) {
    letters[static_cast<std::size_t>(bs.block)] = shape_letter(bs.shape);
  }
  return std::string(letters.begin(), letters.end());
}

/// forward[k] is the row-major source index of the pixel placed at position k.
struct IndexMap {
  std::vector<std::size_t> forward;

  std::size_t size() const noexcept { return forward.size(); }
  friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

inline IndexMap identity_map(std::size_t n) {
  IndexMap map;
  map.forward.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.forward[i] = i;
  return map;
}

inline bool is_permutation(const IndexMap& map) {
  std::vector<bool> seen(map.size(), false);
  for (std::size_t src : map.forward) {
    if (src >= seen.size() || seen[src]) return false;
    seen[src] = true;
  }
  return true;
}

inline IndexMap build_index_map(const PermutationPlan& plan, std::size_t rows, std::size_t cols) {
  require_even_dims(rows, cols);
  plan.validate();
  const std::size_t bm = rows / 2;
  const std::size_t bn = cols / 2;

  IndexMap map;
  map.forward.reserve(rows * cols);
  for (const auto& [block, shape] : plan.assignment) {
    const std::size_t q = static_cast<std::size_t>(block);
    const std::size_t row_off = (q / 2) * bm;
    const std::size_t col_off = (q % 2) * bn;
    for (const auto [i, j] : peel_shape(shape, bm, bn)) {
      // traversal runs over the rotated block; map back to the unrotated cell
      const std::size_t si = plan.flip ? bm - 1 - i : i;
      const std::size_t sj = plan.flip ? bn - 1 - j : j;
      map.forward.push_back((row_off + si) * cols + (col_off + sj));
    }
  }
  return map;
}

inline GrayImage apply_permutation(const GrayImage& img, const IndexMap& map) {
  if (map.size() != img.size()) {
    throw SizeMismatch("index map has " + std::to_string(map.size()) + " entries for an image of " +
                       std::to_string(img.size()) + " pixels");
  }
  GrayImage out(img.rows(), img.cols());
  const auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t k = 0; k < map.size(); ++k) {
    if (map.forward[k] >= src.size()) {
      throw NotAPermutation("index map entry out of range");
    }
    dst[k] = src[map.forward[k]];
  }
  return out;
}

inline IndexMap invert_index_map(const IndexMap& map) {
  const std::size_t n = map.size();
  IndexMap inv;
  inv.forward.assign(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = map.forward[k];
    if (src >= n) {
      throw NotAPermutation("index " + std::to_string(src) + " out of range for map of size " +
                            std::to_string(n));
    }
    if (inv.forward[src] != n) {
      throw NotAPermutation("index " + std::to_string(src) + " appears more than once");
    }
    inv.forward[src] = k;
  }
  return inv;
}

}  // namespace chaoscrypt
