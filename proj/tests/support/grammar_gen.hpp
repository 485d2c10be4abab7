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

#ifndef JUBILEO_TESTS_SUPPORT_GRAMMAR_GEN_HPP_
#define JUBILEO_TESTS_SUPPORT_GRAMMAR_GEN_HPP_

#include <string>
#include <vector>

#include "jubileo/grammar/command.hpp"
#include "support/gen.hpp"

namespace jubileo::testing {

// Any command shape; Say text never contains a double quote.
inline grammar::CommandAst RandomAst(Gen& gen) {
  static const std::vector<std::string> nouns = {"ball", "cube", "object", "thing", "cup"};
  const Color color = kAllColors[gen.Index(kAllColors.size())];
  switch (gen.Int(0, 6)) {
    case 0: return grammar::LookAtMe{};
    case 1: {
      grammar::LookAtColor c{color, std::nullopt};
      if (gen.Coin()) c.noun = gen.Pick(nouns);
      return c;
    }
    case 2: return grammar::ShowExpression{motion::kAllExpressions[gen.Index(motion::kAllExpressions.size())]};
    case 3: {
      std::string text = gen.Text(30);
      std::erase(text, '"');
      return grammar::Say{text};
    }
    case 4: return grammar::Mimic{};
    case 5: return grammar::Grab{color};
    default: return grammar::Stop{};
  }
}

}  // namespace jubileo::testing

#endif  // JUBILEO_TESTS_SUPPORT_GRAMMAR_GEN_HPP_
