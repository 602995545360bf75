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

// Minimal library usage: encrypt a PGM with a fixed key, verify the round
// trip and print the statistics of plaintext and ciphertext side by side.

#include <cstdio>
#include <exception>

#include "chaoscrypt/chaoscrypt.hpp"
#include "chaoscrypt/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s image.pgm\n", argv[0]);
    return 1;
  }
  try {
    using namespace chaoscrypt;
    const GrayImage plain = read_pgm(argv[1]);

    CipherConfig cfg;  // default key, plan "LURV" with flip, default S-boxes
    const GrayImage cipher = encrypt(plain, cfg);
    if (decrypt(cipher, cfg) != plain) {
      std::fprintf(stderr, "round trip failed\n");
      return 1;
    }

    for (const auto& [label, img] : {std::pair{"plain", &plain}, std::pair{"cipher", &cipher}}) {
      const AnalysisReport r = analyze(*img);
      std::printf("%-6s entropy %.4f  chi2 %10.2f  contrast %9.2f  energy %.5f  "
                  "homogeneity %.4f  r_h %s\n",
                  label, r.entropy, r.chi_square, r.glcm.contrast, r.glcm.energy,
                  r.glcm.homogeneity,
                  r.adjacent.horizontal ? std::to_string(*r.adjacent.horizontal).c_str() : "n/a");
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
