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

#include <stdexcept>
#include <string>

namespace chaoscrypt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (zero counts, bad modulus, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Hénon orbit left the bounded region; the key is unusable.
class DivergentOrbit : public Error {
 public:
  using Error::Error;
};

class OddDimensions : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class OffsetTooLarge : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined because a marginal has zero variance.
class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: PGM, key JSON, S-box table file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoscrypt
