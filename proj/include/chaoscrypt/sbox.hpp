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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

using ByteTable = std::array<std::uint8_t, 256>;

/// Bijective byte substitution with its precomputed inverse.
class SBox {
 public:
  /// Throws NotAPermutation unless `table` is a bijection on [0, 255].
  static SBox from_table(const ByteTable& table) {
    SBox box;
    box.table_ = table;
    std::array<bool, 256> seen{};
    for (std::size_t i = 0; i < 256; ++i) {
      const std::uint8_t v = table[i];
      if (seen[v]) {
        throw NotAPermutation("S-box is not a bijection: value " + std::to_string(v) +
                              " appears more than once");
      }
      seen[v] = true;
      box.inverse_[v] = static_cast<std::uint8_t>(i);
    }
    return box;
  }

  std::uint8_t forward(std::uint8_t v) const noexcept { return table_[v]; }
  std::uint8_t inverse(std::uint8_t v) const noexcept { return inverse_[v]; }

  const ByteTable& table() const noexcept { return table_; }
  const ByteTable& inverse_table() const noexcept { return inverse_; }

  friend bool operator==(const SBox&, const SBox&) = default;

 private:
  SBox() = default;
  ByteTable table_{};
  ByteTable inverse_{};
};

namespace gf256 {

/// Multiplication in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b != 0) {
    if (b & 1) p ^= a;
    const bool carry = (a & 0x80) != 0;
    a = static_cast<std::uint8_t>(a << 1);
    if (carry) a ^= 0x1B;
    b >>= 1;
  }
  return p;
}

/// a^254, which is a^-1 for a != 0 and 0 for a == 0.
constexpr std::uint8_t inv(std::uint8_t a) {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  unsigned e = 254;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return a == 0 ? 0 : result;
}

constexpr std::uint8_t rotl(std::uint8_t v, unsigned s) {
  return static_cast<std::uint8_t>((v << s) | (v >> (8 - s)));
}

}  // namespace gf256

/// The AES S-box, computed from GF(2^8) inversion plus the affine map.
inline SBox build_aes_sbox() {
  ByteTable t{};
  for (unsigned i = 0; i < 256; ++i) {
    const std::uint8_t b = gf256::inv(static_cast<std::uint8_t>(i));
    t[i] = static_cast<std::uint8_t>(b ^ gf256::rotl(b, 1) ^ gf256::rotl(b, 2) ^
                                     gf256::rotl(b, 3) ^ gf256::rotl(b, 4) ^ 0x63);
  }
  return SBox::from_table(t);
}

constexpr std::uint8_t to_gray(std::uint8_t v) { return static_cast<std::uint8_t>(v ^ (v >> 1)); }

/// Gray recoding of the AES S-box output.
inline SBox build_gray_sbox() {
  const SBox aes = build_aes_sbox();
  ByteTable t{};
  for (unsigned i = 0; i < 256; ++i) {
    t[i] = to_gray(aes.forward(static_cast<std::uint8_t>(i)));
  }
  return SBox::from_table(t);
}

/// Default occupant of slot 1: ranks 256 logistic-map iterates
/// (r = 3.99, z0 = 0.5, 100 discarded steps). Ties go to the lower index.
inline SBox build_default_sbox2() {
  constexpr double r = 3.99;
  double z = 0.5;
  for (int n = 0; n < 100; ++n) z = r * z * (1.0 - z);
  std::array<double, 256> zs{};
  for (double& v : zs) {
    z = r * z * (1.0 - z);
    v = z;
  }

  std::array<std::size_t, 256> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&zs](std::size_t a, std::size_t b) { return zs[a] < zs[b]; });
  ByteTable t{};
  for (std::size_t rank = 0; rank < 256; ++rank) {
    t[order[rank]] = static_cast<std::uint8_t>(rank);
  }
  return SBox::from_table(t);
}

/// Three substitution boxes addressed by selector 0 (AES), 1 (slot 1,
/// replaceable), 2 (Gray).
struct SBoxSet {
  std::array<SBox, 3> boxes;

  const SBox& operator[](std::size_t i) const { return boxes[i]; }
};

inline SBoxSet default_sbox_set() {
  return SBoxSet{{build_aes_sbox(), build_default_sbox2(), build_gray_sbox()}};
}

inline SBoxSet sbox_set_with_slot1(SBox slot1) {
  return SBoxSet{{build_aes_sbox(), std::move(slot1), build_gray_sbox()}};
}

inline void check_selector(std::uint8_t selector) {
  if (selector > 2) {
    throw InvalidArgument("S-box selector must be 0, 1 or 2, got " + std::to_string(selector));
  }
}

/// High nibble picks the row, low nibble the column of the 16x16 table.
inline std::uint8_t substitute(std::uint8_t byte, std::uint8_t selector, const SBoxSet& set) {
  check_selector(selector);
  const unsigned row = byte >> 4;
  const unsigned col = byte & 0x0F;
  return set[selector].table()[row * 16 + col];
}

inline std::uint8_t inverse_substitute(std::uint8_t byte, std::uint8_t selector,
                                       const SBoxSet& set) {
  check_selector(selector);
  return set[selector].inverse(byte);
}

}  // namespace chaoscrypt
