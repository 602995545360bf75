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

// File formats: binary PGM (P5), key JSON, S-box override tables and the
// analysis report JSON.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "chaoscrypt/analysis.hpp"
#include "chaoscrypt/chaos.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/image.hpp"
#include "chaoscrypt/permute.hpp"
#include "chaoscrypt/sbox.hpp"

namespace chaoscrypt {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

// ---------------------------------------------------------------------------
// PGM

namespace detail {

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::string_view data) : data_(data) {}

  std::size_t read_uint(const char* what) {
    skip_space_and_comments();
    const char* begin = data_.data() + pos_;
    const char* end = data_.data() + data_.size();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  /// A single whitespace byte separates maxval from the raster.
  void consume_single_space() {
    if (pos_ >= data_.size() || !std::isspace(static_cast<unsigned char>(data_[pos_]))) {
      throw FormatError("PGM header: missing whitespace before raster");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      const char c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GrayImage parse_pgm(std::string_view data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5') {
    throw FormatError("not a binary PGM (missing P5 magic)");
  }
  detail::PnmHeaderReader rd(data.substr(2));
  const std::size_t width = rd.read_uint("width");
  const std::size_t height = rd.read_uint("height");
  const std::size_t maxval = rd.read_uint("maxval");
  if (width == 0 || height == 0) {
    throw FormatError("PGM dimensions must be positive");
  }
  if (maxval != 255) {
    throw FormatError("PGM maxval must be 255, got " + std::to_string(maxval));
  }
  rd.consume_single_space();
  const std::size_t offset = 2 + rd.pos();
  const std::size_t expected = width * height;
  const std::size_t available = data.size() - offset;
  if (available < expected) {
    throw FormatError("PGM raster truncated: " + std::to_string(available) + " of " +
                      std::to_string(expected) + " bytes");
  }
  if (available > expected) {
    throw FormatError("PGM has " + std::to_string(available - expected) +
                      " trailing bytes after the raster");
  }
  const auto* raw = reinterpret_cast<const std::uint8_t*>(data.data() + offset);
  return GrayImage(height, width, std::vector<std::uint8_t>(raw, raw + expected));
}

inline std::string format_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n255\n";
  const auto px = img.pixels();
  out.append(reinterpret_cast<const char*>(px.data()), px.size());
  return out;
}

inline GrayImage read_pgm(const std::filesystem::path& path) { return parse_pgm(read_file(path)); }

inline void write_pgm(const std::filesystem::path& path, const GrayImage& img) {
  write_file(path, format_pgm(img));
}

// ---------------------------------------------------------------------------
// Key file

/// Contents of a key file. The plan is optional in the file and defaults
/// to "LURV" with the 180° flip.
struct KeyFile {
  CipherKey key;
  PermutationPlan plan = default_plan();
};

namespace detail {

inline std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string orbit_json(const HenonParams& p, const char* indent) {
  std::ostringstream os;
  os << "{\n"
     << indent << "  \"a\": " << fmt_real(p.a) << ",\n"
     << indent << "  \"b\": " << fmt_real(p.b) << ",\n"
     << indent << "  \"x0\": " << fmt_real(p.x0) << ",\n"
     << indent << "  \"y0\": " << fmt_real(p.y0) << ",\n"
     << indent << "  \"burn_in\": " << p.burn_in << "\n"
     << indent << "}";
  return os.str();
}

inline double json_real(const nlohmann::json& obj, const char* field) {
  if (!obj.contains(field) || !obj[field].is_number()) {
    throw FormatError(std::string("key file: '") + field + "' must be a number");
  }
  return obj[field].get<double>();
}

inline HenonParams parse_orbit(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_object()) {
    throw FormatError(std::string("key file: missing object '") + name + "'");
  }
  const auto& o = j[name];
  HenonParams p;
  p.a = json_real(o, "a");
  p.b = json_real(o, "b");
  p.x0 = json_real(o, "x0");
  p.y0 = json_real(o, "y0");
  if (!o.contains("burn_in") || !o["burn_in"].is_number_unsigned()) {
    throw FormatError(std::string("key file: '") + name +
                      ".burn_in' must be a non-negative integer");
  }
  p.burn_in = o["burn_in"].get<std::uint64_t>();
  return p;
}

}  // namespace detail

/// Reals are written with 17 significant digits so they parse back to the
/// same binary64 value.
inline std::string format_key(const KeyFile& kf) {
  std::ostringstream os;
  os << "{\n"
     << "  \"seed_orbit\": " << detail::orbit_json(kf.key.seed_orbit, "  ") << ",\n"
     << "  \"select_orbit\": " << detail::orbit_json(kf.key.select_orbit, "  ") << ",\n"
     << "  \"modulus\": " << kf.key.modulus << ",\n"
     << "  \"plan\": \"" << plan_to_string(kf.plan) << "\",\n"
     << "  \"flip\": " << (kf.plan.flip ? "true" : "false") << "\n"
     << "}\n";
  return os.str();
}

inline KeyFile parse_key(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("key file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw FormatError("key file must contain a JSON object");
  }
  KeyFile kf;
  kf.key.seed_orbit = detail::parse_orbit(j, "seed_orbit");
  kf.key.select_orbit = detail::parse_orbit(j, "select_orbit");
  if (!j.contains("modulus") || !j["modulus"].is_number_integer()) {
    throw FormatError("key file: 'modulus' must be an integer");
  }
  kf.key.modulus = j["modulus"].get<int>();

  bool flip = true;
  if (j.contains("flip")) {
    if (!j["flip"].is_boolean()) throw FormatError("key file: 'flip' must be a boolean");
    flip = j["flip"].get<bool>();
  }
  std::string plan = "LURV";
  if (j.contains("plan")) {
    if (!j["plan"].is_string()) throw FormatError("key file: 'plan' must be a string");
    plan = j["plan"].get<std::string>();
  }
  try {
    kf.plan = parse_plan(plan, flip);
    kf.key.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("key file: ") + e.what());
  }
  return kf;
}

inline KeyFile read_key(const std::filesystem::path& path) { return parse_key(read_file(path)); }

inline void write_key(const std::filesystem::path& path, const KeyFile& kf) {
  write_file(path, format_key(kf));
}

// ---------------------------------------------------------------------------
// S-box override table

/// 256 whitespace-separated integers, decimal or 0x-prefixed hex.
inline SBox parse_sbox_table(std::string_view text) {
  ByteTable table{};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    int base = 10;
    if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
      tok.remove_prefix(2);
      base = 16;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, base);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > 255) {
      throw FormatError("S-box table: invalid entry '" + std::string(tok) + "'");
    }
    if (count == 256) {
      throw FormatError("S-box table: more than 256 entries");
    }
    table[count++] = static_cast<std::uint8_t>(value);
  }
  if (count != 256) {
    throw FormatError("S-box table: expected 256 entries, found " + std::to_string(count));
  }
  try {
    return SBox::from_table(table);
  } catch (const NotAPermutation& e) {
    throw FormatError(std::string("S-box table: ") + e.what());
  }
}

inline SBox read_sbox_table(const std::filesystem::path& path) {
  return parse_sbox_table(read_file(path));
}

// ---------------------------------------------------------------------------
// Analysis report

inline nlohmann::json report_to_json(const AnalysisReport& rep) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["entropy"] = rep.entropy;
  j["glcm"] = {{"contrast", rep.glcm.contrast},
               {"energy", rep.glcm.energy},
               {"homogeneity", rep.glcm.homogeneity},
               {"correlation", opt(rep.glcm.correlation)}};
  j["glcm_offset"] = {rep.glcm_offset.dr, rep.glcm_offset.dc};
  j["glcm_levels"] = rep.glcm_levels;
  j["adjacent_correlation"] = {{"horizontal", opt(rep.adjacent.horizontal)},
                               {"vertical", opt(rep.adjacent.vertical)},
                               {"diagonal", opt(rep.adjacent.diagonal)}};
  j["chi_square"] = rep.chi_square;
  j["histogram"] = rep.histogram.counts;
  return j;
}

inline void write_report(const std::filesystem::path& path, const AnalysisReport& rep) {
  write_file(path, report_to_json(rep).dump(2) + "\n");
}

}  // namespace chaoscrypt
