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

#ifndef JUBILEO_TESTS_SUPPORT_GEN_HPP_
#define JUBILEO_TESTS_SUPPORT_GEN_HPP_

// Small hand-rolled generators for property tests. Every generator draws
// from one seeded engine so a failing case is reproduced by its seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace jubileo::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  std::uint64_t Bits() { return engine_(); }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::size_t Index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  double Real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double Normal(double sigma) { return std::normal_distribution<double>(0.0, sigma)(engine_); }
  bool Coin(double p = 0.5) { return Real(0.0, 1.0) < p; }

  template <typename T>
  const T& Pick(const std::vector<T>& items) {
    return items[Index(items.size())];
  }

  std::vector<std::uint8_t> Bytes(std::size_t max_len) {
    std::vector<std::uint8_t> out(Index(max_len + 1));
    for (auto& b : out) b = static_cast<std::uint8_t>(Int(0, 255));
    return out;
  }

  // Valid topic path: one to four segments of [a-z0-9_].
  std::string Topic() {
    static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
    std::string out;
    const int segments = Int(1, 4);
    for (int s = 0; s < segments; ++s) {
      out += '/';
      const int len = Int(1, 8);
      for (int i = 0; i < len; ++i) out += kAlphabet[Index(sizeof(kAlphabet) - 1)];
    }
    return out;
  }

  // Printable ASCII with occasional spaces and punctuation.
  std::string Text(std::size_t max_len) {
    std::string out(Index(max_len + 1), ' ');
    for (char& c : out) c = static_cast<char>(Int(32, 126));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jubileo::testing

#endif  // JUBILEO_TESTS_SUPPORT_GEN_HPP_
