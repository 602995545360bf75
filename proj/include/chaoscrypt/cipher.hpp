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

#include <cstddef>
#include <cstdint>

#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/image.hpp"
#include "chaoscrypt/permute.hpp"
#include "chaoscrypt/sbox.hpp"

namespace chaoscrypt {

struct CipherConfig {
  CipherKey key = default_key();
  PermutationPlan plan = default_plan();
  SBoxSet sboxes = default_sbox_set();
};

// Individual stages. encrypt() is permute -> xor -> substitute; decrypt()
// runs the inverses in reverse order.

inline GrayImage permute_layer(const GrayImage& img, const PermutationPlan& plan) {
  return apply_permutation(img, build_index_map(plan, img.rows(), img.cols()));
}

inline GrayImage inverse_permute_layer(const GrayImage& img, const PermutationPlan& plan) {
  return apply_permutation(img, invert_index_map(build_index_map(plan, img.rows(), img.cols())));
}

/// XOR with the Hénon seed matrix. Self-inverse.
inline GrayImage xor_layer(const GrayImage& img, const CipherKey& key) {
  const SeedMatrix seed = gen_seed_matrix(key, img.rows(), img.cols());
  GrayImage out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = static_cast<std::uint8_t>(px[i] ^ seed.values[i]);
  }
  return out;
}

/// Selection is indexed by row-major position in the (already diffused) image.
inline GrayImage substitute_layer(const GrayImage& img, const CipherKey& key,
                                  const SBoxSet& sboxes) {
  const SelectionSequence sel = gen_selection_sequence(key, img.size());
  GrayImage out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = substitute(px[i], sel[i], sboxes);
  }
  return out;
}

inline GrayImage inverse_substitute_layer(const GrayImage& img, const CipherKey& key,
                                          const SBoxSet& sboxes) {
  const SelectionSequence sel = gen_selection_sequence(key, img.size());
  GrayImage out = img;
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = inverse_substitute(px[i], sel[i], sboxes);
  }
  return out;
}

inline GrayImage encrypt(const GrayImage& img, const CipherConfig& cfg) {
  require_even_dims(img.rows(), img.cols());
  cfg.key.validate();
  return substitute_layer(xor_layer(permute_layer(img, cfg.plan), cfg.key), cfg.key, cfg.sboxes);
}

inline GrayImage decrypt(const GrayImage& img, const CipherConfig& cfg) {
  require_even_dims(img.rows(), img.cols());
  cfg.key.validate();
  return inverse_permute_layer(xor_layer(inverse_substitute_layer(img, cfg.key, cfg.sboxes), cfg.key),
                               cfg.plan);
}

}  // namespace chaoscrypt
