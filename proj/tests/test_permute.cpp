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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "chaoscrypt/analysis.hpp"
#include "chaoscrypt/permute.hpp"

namespace chaoscrypt {
namespace {

using Coords = std::vector<std::pair<std::size_t, std::size_t>>;

Coords as_pairs(const std::vector<Cell>& cells) {
  Coords out;
  for (const Cell& c : cells) out.emplace_back(c.row, c.col);
  return out;
}

GrayImage random_image(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> px(0, 255);
  GrayImage img(rows, cols);
  for (auto& v : img.pixels()) v = static_cast<std::uint8_t>(px(rng));
  return img;
}

TEST(PeelShape, SingleCell) {
  for (ShapeKind k : kAllShapes) {
    EXPECT_EQ(as_pairs(peel_shape(k, 1, 1)), (Coords{{0, 0}}));
  }
}

TEST(PeelShape, RingOnTwoByTwo) {
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::Ring, 2, 2)), (Coords{{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
}

TEST(PeelShape, UOnTwoByThree) {
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::U, 2, 3)),
            (Coords{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 2}, {0, 1}}));
}

TEST(PeelShape, TwoByTwoTraversals) {
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::L, 2, 2)), (Coords{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::InvertedL, 2, 2)),
            (Coords{{0, 1}, {1, 1}, {1, 0}, {0, 0}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::U, 2, 2)), (Coords{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::InvertedU, 2, 2)),
            (Coords{{1, 0}, {0, 0}, {0, 1}, {1, 1}}));
}

TEST(PeelShape, ThreeByThreeGolden) {
  // L: column 0 down, row 2 right; then the 2x2 top-right remainder.
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::L, 3, 3)),
            (Coords{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {0, 1}, {1, 1}, {1, 2}, {0, 2}}));
  // Ring: outer boundary clockwise from the top-left, then the centre.
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::Ring, 3, 3)),
            (Coords{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 1}, {2, 0}, {1, 0}, {1, 1}}));
  // InvertedU: column 0 up, row 0 middle, column 2 down; then row 1..2 x col 1.
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::InvertedU, 3, 3)),
            (Coords{{2, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 1}, {1, 1}}));
}

TEST(PeelShape, DegenerateStrips) {
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::L, 1, 3)), (Coords{{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::InvertedL, 1, 3)), (Coords{{0, 2}, {0, 1}, {0, 0}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::Ring, 3, 1)), (Coords{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(as_pairs(peel_shape(ShapeKind::InvertedU, 3, 1)), (Coords{{2, 0}, {1, 0}, {0, 0}}));
}

TEST(PeelShape, RejectsEmptyRectangle) {
  EXPECT_THROW(peel_shape(ShapeKind::L, 0, 3), InvalidArgument);
}

// Exhaustive coverage: every cell exactly once, brute-force set oracle.
TEST(PeelShape, CoversEveryRectangleExactlyOnce) {
  for (ShapeKind k : kAllShapes) {
    for (std::size_t m = 1; m <= 12; ++m) {
      for (std::size_t n = 1; n <= 12; ++n) {
        const auto cells = peel_shape(k, m, n);
        ASSERT_EQ(cells.size(), m * n);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const Cell& c : cells) {
          ASSERT_LT(c.row, m);
          ASSERT_LT(c.col, n);
          seen.emplace(c.row, c.col);
        }
        ASSERT_EQ(seen.size(), m * n) << shape_letter(k) << " " << m << "x" << n;
      }
    }
  }
}

TEST(Plan, DefaultIsLURVWithFlip) {
  const PermutationPlan p = default_plan();
  EXPECT_EQ(plan_to_string(p), "LURV");
  EXPECT_TRUE(p.flip);
  EXPECT_EQ(parse_plan("LURV"), p);
}

TEST(Plan, ParseErrors) {
  EXPECT_THROW(parse_plan("LUR"), InvalidArgument);
  EXPECT_THROW(parse_plan("LURX"), InvalidArgument);
  EXPECT_EQ(plan_to_string(parse_plan("JJRR", false)), "JJRR");
}

TEST(Plan, RepeatedQuadrantRejected) {
  PermutationPlan p;
  p.assignment[1].block = Quadrant::A;
  EXPECT_THROW(build_index_map(p, 4, 4), InvalidArgument);
}

TEST(BuildIndexMap, TwoByTwoIsIdentity) {
  EXPECT_EQ(build_index_map(default_plan(), 2, 2).forward, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(BuildIndexMap, FourByFourGolden) {
  // Hand trace: each 2x2 quadrant is rotated 180° then peeled
  // (A: L, B: U, C: ring, D: inverted U).
  EXPECT_EQ(build_index_map(default_plan(), 4, 4).forward,
            (std::vector<std::size_t>{5, 1, 0, 4, 7, 3, 2, 6, 13, 12, 8, 9, 11, 15, 14, 10}));
}

TEST(BuildIndexMap, WithoutFlip) {
  // Same traversals without rotation.
  EXPECT_EQ(build_index_map(parse_plan("LURV", false), 4, 4).forward,
            (std::vector<std::size_t>{0, 4, 5, 1, 2, 6, 7, 3, 8, 9, 13, 12, 14, 10, 11, 15}));
}

TEST(BuildIndexMap, RejectsOddDimensions) {
  EXPECT_THROW(build_index_map(default_plan(), 3, 4), OddDimensions);
  EXPECT_THROW(build_index_map(default_plan(), 4, 5), OddDimensions);
}

TEST(BuildIndexMap, BijectiveForEveryShapeAssignment) {
  const std::size_t sizes[] = {2, 4, 6, 8, 16, 256};
  for (std::size_t m : sizes) {
    for (std::size_t n : sizes) {
      for (ShapeKind k : kAllShapes) {
        for (bool flip : {false, true}) {
          PermutationPlan p;
          p.flip = flip;
          for (auto& bs : p.assignment) bs.shape = k;
          ASSERT_TRUE(is_permutation(build_index_map(p, m, n))) << m << "x" << n;
        }
      }
      ASSERT_TRUE(is_permutation(build_index_map(default_plan(), m, n)));
    }
  }
}

TEST(BuildIndexMap, IndependentOfBlockOrderContent) {
  // Reordering the plan reorders the concatenated block segments.
  PermutationPlan p = default_plan();
  std::swap(p.assignment[0], p.assignment[3]);
  const auto base = build_index_map(default_plan(), 8, 8).forward;
  const auto swapped = build_index_map(p, 8, 8).forward;
  EXPECT_TRUE(std::equal(base.begin(), base.begin() + 16, swapped.end() - 16));
  EXPECT_TRUE(std::equal(base.end() - 16, base.end(), swapped.begin()));
}

TEST(ApplyPermutation, Examples) {
  GrayImage constant(4, 4, 77);
  EXPECT_EQ(apply_permutation(constant, build_index_map(default_plan(), 4, 4)), constant);

  GrayImage img(2, 2, {1, 2, 3, 4});
  EXPECT_EQ(apply_permutation(img, IndexMap{{3, 2, 1, 0}}), GrayImage(2, 2, {4, 3, 2, 1}));
  EXPECT_EQ(apply_permutation(img, identity_map(4)), img);
}

TEST(ApplyPermutation, SizeMismatch) {
  EXPECT_THROW(apply_permutation(GrayImage(2, 2), identity_map(3)), SizeMismatch);
}

TEST(InvertIndexMap, Examples) {
  EXPECT_EQ(invert_index_map(identity_map(5)), identity_map(5));
  EXPECT_EQ(invert_index_map(IndexMap{{2, 0, 1}}).forward, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(InvertIndexMap, RejectsNonPermutations) {
  EXPECT_THROW(invert_index_map(IndexMap{{0, 0, 1}}), NotAPermutation);
  EXPECT_THROW(invert_index_map(IndexMap{{0, 3, 1}}), NotAPermutation);
}

TEST(InvertIndexMap, RoundTripOverRandomPermutations) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 20;
    const std::size_t cols = 1 + rng() % 20;
    IndexMap map = identity_map(rows * cols);
    std::shuffle(map.forward.begin(), map.forward.end(), rng);
    const GrayImage img = random_image(rows, cols, rng);
    const GrayImage scrambled = apply_permutation(img, map);
    EXPECT_EQ(apply_permutation(scrambled, invert_index_map(map)), img);
    EXPECT_EQ(compute_histogram(scrambled), compute_histogram(img));
  }
}

TEST(InvertIndexMap, RoundTripThroughPlans) {
  std::mt19937 rng(11);
  for (std::size_t m : {2u, 6u, 16u, 64u}) {
    for (std::size_t n : {2u, 4u, 10u, 64u}) {
      for (const char* plan : {"LURV", "JJJJ", "RVUL", "VRJU"}) {
        const IndexMap map = build_index_map(parse_plan(plan), m, n);
        const GrayImage img = random_image(m, n, rng);
        EXPECT_EQ(apply_permutation(apply_permutation(img, map), invert_index_map(map)), img);
      }
    }
  }
}

}  // namespace
}  // namespace chaoscrypt
