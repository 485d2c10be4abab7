// Copyright 2026 The Jubileo Authors
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

#ifndef JUBILEO_BEHAVIOR_IDENTITY_HPP_
#define JUBILEO_BEHAVIOR_IDENTITY_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jubileo/sim/world.hpp"

namespace jubileo::behavior {

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdentityRecord {
  std::string name;
  sim::Embedding embedding{};
  double enrolled_at = 0.0;  // seconds since the Unix epoch

  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

struct IdentityMatch {
  std::string name;
  double score = 0.0;

  friend bool operator==(const IdentityMatch&, const IdentityMatch&) = default;
};

inline constexpr double kDefaultIdentityThreshold = 0.80;

// Enrolled faces, persisted one record per line:
//
//   <name> <16 embedding components> <enrolled_at>
//
// Numbers are written with enough digits to read back bit-identical.
class IdentityRegistry {
 public:
  explicit IdentityRegistry(double threshold = kDefaultIdentityThreshold) : threshold_(threshold) {}

  // Replaces an existing record with the same name. Embeddings with norm in
  // [0.9, 1.1] are normalized; anything else, or a name that is empty or
  // contains whitespace, throws RegistryError.
  void Enroll(std::string name, const sim::Embedding& embedding, double enrolled_at);

  std::optional<IdentityMatch> Identify(const sim::Embedding& probe) const;

  const std::vector<IdentityRecord>& records() const { return records_; }
  double threshold() const { return threshold_; }

  std::string Serialize() const;
  static IdentityRegistry Parse(std::string_view text, double threshold = kDefaultIdentityThreshold);

  // A missing file loads as an empty registry.
  static IdentityRegistry Load(const std::filesystem::path& path,
                               double threshold = kDefaultIdentityThreshold);
  // Writes a sibling temporary file and renames it over `path`.
  void Save(const std::filesystem::path& path) const;

  friend bool operator==(const IdentityRegistry&, const IdentityRegistry&) = default;

 private:
  double threshold_;
  std::vector<IdentityRecord> records_;
};

}  // namespace jubileo::behavior

#endif  // JUBILEO_BEHAVIOR_IDENTITY_HPP_
