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

#include "jubileo/behavior/identity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <system_error>

#include "jubileo/common/text.hpp"

namespace jubileo::behavior {

void IdentityRegistry::Enroll(std::string name, const sim::Embedding& embedding, double enrolled_at) {
  if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); })) {
    throw RegistryError("identity name must be a single non-empty word");
  }
  const double norm = sim::Norm(embedding);
  if (!(norm >= 0.9 && norm <= 1.1)) {
    throw RegistryError("embedding for '" + name + "' has norm " + FormatNumber(norm) + ", expected about 1");
  }
  IdentityRecord record{std::move(name), sim::Normalized(embedding), enrolled_at};
  for (auto& r : records_) {
    if (r.name == record.name) {
      r = std::move(record);
      return;
    }
  }
  records_.push_back(std::move(record));
}

std::optional<IdentityMatch> IdentityRegistry::Identify(const sim::Embedding& probe) const {
  std::optional<IdentityMatch> best;
  for (const auto& r : records_) {
    double dot = 0.0;
    for (std::size_t i = 0; i < sim::kEmbeddingDim; ++i) dot += r.embedding[i] * probe[i];
    if (!best || dot > best->score) best = IdentityMatch{r.name, dot};
  }
  if (!best || best->score < threshold_) return std::nullopt;
  return best;
}

std::string IdentityRegistry::Serialize() const {
  std::string out;
  for (const auto& r : records_) {
    out += r.name;
    for (double x : r.embedding) out += " " + FormatNumber(x);
    out += " " + FormatNumber(r.enrolled_at) + "\n";
  }
  return out;
}

IdentityRegistry IdentityRegistry::Parse(std::string_view text, double threshold) {
  IdentityRegistry registry(threshold);
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const auto fields = SplitWhitespace(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    const auto fail = [&](const std::string& what) {
      return RegistryError("registry line " + std::to_string(line_no) + ": " + what);
    };
    if (fields.size() != sim::kEmbeddingDim + 2) {
      throw fail("expected a name, 16 numbers and a timestamp");
    }
    sim::Embedding e;
    for (std::size_t i = 0; i < sim::kEmbeddingDim; ++i) {
      const auto v = ParseNumber(fields[i + 1]);
      if (!v) throw fail("bad number '" + std::string(fields[i + 1]) + "'");
      e[i] = *v;
    }
    const auto t = ParseNumber(fields.back());
    if (!t) throw fail("bad timestamp");
    const std::string name(fields[0]);
    if (std::any_of(registry.records_.begin(), registry.records_.end(),
                    [&](const IdentityRecord& r) { return r.name == name; })) {
      throw fail("duplicate name '" + name + "'");
    }
    if (std::abs(sim::Norm(e) - 1.0) > 1e-6) throw fail("embedding is not unit length");
    // Stored verbatim so a load/save cycle is bit-exact.
    registry.records_.push_back({name, e, *t});
  }
  return registry;
}

IdentityRegistry IdentityRegistry::Load(const std::filesystem::path& path, double threshold) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return IdentityRegistry(threshold);
  return Parse(ReadTextFile(path), threshold);
}

void IdentityRegistry::Save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw RegistryError("cannot write " + tmp.string());
    out << Serialize();
    out.flush();
    if (!out) throw RegistryError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw RegistryError("cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace jubileo::behavior
