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

#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chaoscrypt/commands.hpp"

namespace {

bool parse_offset(const std::string& text, chaoscrypt::Offset& out) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  auto parse_int = [](std::string_view s, int& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  const std::string_view sv(text);
  return parse_int(sv.substr(0, comma), out.dr) && parse_int(sv.substr(comma + 1), out.dc);
}

void add_crypt_flags(CLI::App* cmd, chaoscrypt::cli::CryptOptions& opt) {
  cmd->add_option("--in", opt.in, "Input PGM (P5, maxval 255)")->required();
  cmd->add_option("--key", opt.key, "Key file (JSON)")->required();
  cmd->add_option("--out", opt.out, "Output PGM")->required();
  cmd->add_option("--plan", opt.plan, "Shapes for quadrants A,B,C,D over {L,J,U,V,R}");
  cmd->add_option("--sbox2", opt.sbox2, "Replacement table for S-box slot 1 (256 integers)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = chaoscrypt::cli;

  CLI::App app{"Chaotic image cipher: geometric block permutation, Henon keystream XOR, "
               "dynamic S-box substitution"};
  app.require_subcommand(1);

  cli::KeygenOptions keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a random key file");
  keygen_cmd->add_option("--out", keygen.out, "Key file to write")->required();
  keygen_cmd->add_option("--seed", keygen.seed, "RNG seed for reproducible keys");

  cli::CryptOptions enc;
  add_crypt_flags(app.add_subcommand("encrypt", "Encrypt a grayscale PGM"), enc);
  cli::CryptOptions dec;
  add_crypt_flags(app.add_subcommand("decrypt", "Decrypt a grayscale PGM"), dec);

  cli::AnalyzeOptions ana;
  std::string offset_text = "0,1";
  auto* analyze_cmd = app.add_subcommand("analyze", "Statistical analysis report");
  analyze_cmd->add_option("--in", ana.in, "Input PGM")->required();
  analyze_cmd->add_option("--report", ana.report, "Report JSON to write")->required();
  analyze_cmd->add_option("--offset", offset_text, "GLCM displacement as dr,dc")
      ->capture_default_str();
  analyze_cmd->add_option("--levels", ana.levels, "GLCM gray levels")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("keygen")) {
    return cli::cmd_keygen(keygen, std::cerr);
  }
  if (app.got_subcommand("encrypt")) {
    return cli::cmd_encrypt(enc, std::cerr);
  }
  if (app.got_subcommand("decrypt")) {
    return cli::cmd_decrypt(dec, std::cerr);
  }
  if (!parse_offset(offset_text, ana.offset)) {
    std::cerr << "analyze: --offset must look like dr,dc\n";
    return cli::kIoFailure;
  }
  return cli::cmd_analyze(ana, std::cout, std::cerr);
}
