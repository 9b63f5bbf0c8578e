// Copyright 2026 The gmplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <memory>

namespace gmplab::cli {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw IoError("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json RunManifest::to_json() const {
  Json doc;
  doc["command_line"] = command_line;
  doc["seed"] = seed;
  doc["version"] = version;
  doc["timestamp"] = timestamp;
  doc["parameters"] = parameters;
  doc["timing"] = timing;
  Json files = Json::array();
  for (const auto& path : outputs) {
    files.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
  }
  doc["outputs"] = files;
  return doc;
}

std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& primary) {
  std::filesystem::path path = primary;
  path += ".manifest.json";
  write_file(path, render_json(manifest.to_json()));
  return path;
}

ManifestCheck verify_manifest(const std::filesystem::path& manifest_path) {
  ManifestCheck check;
  const Json doc = Json::parse(read_file(manifest_path));
  for (const auto& entry : doc.at("outputs")) {
    const std::filesystem::path path = entry.at("path").get<std::string>();
    if (!std::filesystem::exists(path)) {
      check.problems.push_back("missing: " + path.string());
      continue;
    }
    if (sha256_file(path) != entry.at("sha256").get<std::string>()) {
      check.problems.push_back("digest mismatch: " + path.string());
    }
  }
  check.ok = check.problems.empty();
  return check;
}

}  // namespace gmplab::cli
