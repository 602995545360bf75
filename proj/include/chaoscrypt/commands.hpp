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

// Command implementations behind the chaoscrypt executable. Each returns the
// process exit code so they can be driven in-process by tests.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include "chaoscrypt/analysis.hpp"
#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/io.hpp"

namespace chaoscrypt::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,
  kBadImage = 2,
  kBadKey = 3,
  kBadSBox = 4,
};

struct KeygenOptions {
  std::filesystem::path out;
  std::optional<std::uint64_t> seed;
};

struct CryptOptions {
  std::filesystem::path in;
  std::filesystem::path key;
  std::filesystem::path out;
  std::optional<std::string> plan;
  std::optional<std::filesystem::path> sbox2;
};

struct AnalyzeOptions {
  std::filesystem::path in;
  std::filesystem::path report;
  Offset offset;
  std::size_t levels = 256;
};

/// Draws x0, y0 uniformly from [-0.1, 0.1] for both orbits. Candidates whose
/// orbit diverges within a 256x256 generation are redrawn.
template <class Rng>
CipherKey random_key(Rng& rng) {
  std::uniform_real_distribution<double> init(-0.1, 0.1);
  auto draw = [&]() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      HenonParams p{.a = 1.4, .b = 0.3, .x0 = init(rng), .y0 = init(rng), .burn_in = 1000};
      try {
        iterate_orbit(p, 256 * 256);
        return p;
      } catch (const DivergentOrbit&) {
      }
    }
    throw DivergentOrbit("keygen: no bounded orbit found after 1000 draws");
  };
  CipherKey key;
  key.seed_orbit = draw();
  key.select_orbit = draw();
  key.modulus = 256;
  return key;
}

inline int cmd_keygen(const KeygenOptions& opt, std::ostream& err) {
  try {
    std::mt19937_64 rng(opt.seed ? *opt.seed : std::random_device{}());
    write_key(opt.out, KeyFile{random_key(rng), default_plan()});
    return kOk;
  } catch (const Error& e) {
    err << "keygen: " << e.what() << "\n";
    return kIoFailure;
  }
}

namespace detail {

struct LoadedCrypt {
  GrayImage image;
  CipherConfig cfg;
};

/// Loads every input, mapping failures onto the exit-code contract.
inline std::optional<LoadedCrypt> load_crypt_inputs(const CryptOptions& opt, const char* verb,
                                                    std::ostream& err, int& code) {
  LoadedCrypt lc;
  try {
    lc.image = read_pgm(opt.in);
    require_even_dims(lc.image.rows(), lc.image.cols());
  } catch (const Error& e) {
    err << verb << ": bad image: " << e.what() << "\n";
    code = kBadImage;
    return std::nullopt;
  }

  try {
    KeyFile kf = read_key(opt.key);
    lc.cfg.key = kf.key;
    lc.cfg.plan = opt.plan ? parse_plan(*opt.plan, kf.plan.flip) : kf.plan;
  } catch (const Error& e) {
    err << verb << ": bad key: " << e.what() << "\n";
    code = kBadKey;
    return std::nullopt;
  }

  if (opt.sbox2) {
    try {
      lc.cfg.sboxes = sbox_set_with_slot1(read_sbox_table(*opt.sbox2));
    } catch (const Error& e) {
      err << verb << ": bad S-box override: " << e.what() << "\n";
      code = kBadSBox;
      return std::nullopt;
    }
  }
  return lc;
}

template <class Fn>
int run_crypt(const CryptOptions& opt, const char* verb, std::ostream& err, Fn&& transform) {
  int code = kOk;
  auto loaded = load_crypt_inputs(opt, verb, err, code);
  if (!loaded) return code;

  GrayImage result;
  try {
    result = transform(loaded->image, loaded->cfg);
  } catch (const DivergentOrbit& e) {
    err << verb << ": bad key: " << e.what() << "\n";
    return kBadKey;
  } catch (const OddDimensions& e) {
    err << verb << ": bad image: " << e.what() << "\n";
    return kBadImage;
  }

  try {
    write_pgm(opt.out, result);
  } catch (const Error& e) {
    err << verb << ": " << e.what() << "\n";
    return kIoFailure;
  }
  return kOk;
}

}  // namespace detail

inline int cmd_encrypt(const CryptOptions& opt, std::ostream& err) {
  return detail::run_crypt(opt, "encrypt", err, [](const GrayImage& img, const CipherConfig& cfg) {
    return encrypt(img, cfg);
  });
}

inline int cmd_decrypt(const CryptOptions& opt, std::ostream& err) {
  return detail::run_crypt(opt, "decrypt", err, [](const GrayImage& img, const CipherConfig& cfg) {
    return decrypt(img, cfg);
  });
}

inline int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  AnalysisReport rep;
  try {
    rep = analyze(read_pgm(opt.in), opt.offset, opt.levels);
  } catch (const Error& e) {
    err << "analyze: bad image: " << e.what() << "\n";
    return kBadImage;
  }
  try {
    write_report(opt.report, rep);
  } catch (const Error& e) {
    err << "analyze: " << e.what() << "\n";
    return kIoFailure;
  }

  auto show = [](const std::optional<double>& v) {
    if (!v) return std::string("null");
    std::ostringstream os;
    os << std::setprecision(6) << *v;
    return os.str();
  };
  out << std::fixed << std::setprecision(6) << "entropy=" << rep.entropy
      << " horizontal_correlation=" << show(rep.adjacent.horizontal)
      << " chi_square=" << std::setprecision(3) << rep.chi_square << "\n";
  out.unsetf(std::ios::floatfield);
  return kOk;
}

}  // namespace chaoscrypt::cli
