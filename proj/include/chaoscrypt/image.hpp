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
#include <span>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

/// Row-major 8-bit grayscale image.
///
/// Any positive size is representable; the permutation and cipher layers
/// additionally require both dimensions to be even.
class GrayImage {
 public:
  GrayImage() = default;

  GrayImage(std::size_t rows, std::size_t cols, std::uint8_t fill = 0)
      : rows_(rows), cols_(cols), pixels_(checked_count(rows, cols), fill) {}

  GrayImage(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> pixels)
      : rows_(rows), cols_(cols), pixels_(std::move(pixels)) {
    if (pixels_.size() != checked_count(rows, cols)) {
      throw SizeMismatch("pixel buffer holds " + std::to_string(pixels_.size()) +
                         " values, expected " + std::to_string(rows * cols));
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept {
    return pixels_[r * cols_ + c];
  }
  std::uint8_t& operator()(std::size_t r, std::size_t c) noexcept {
    return pixels_[r * cols_ + c];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  static std::size_t checked_count(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("image dimensions must be positive");
    }
    return rows * cols;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> pixels_;
};

inline void require_even_dims(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0) {
    throw OddDimensions("image is " + std::to_string(rows) + "x" + std::to_string(cols) +
                        "; both dimensions must be even and at least 2");
  }
}

}  // namespace chaoscrypt
