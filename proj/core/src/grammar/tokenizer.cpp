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

#include "jubileo/grammar/command.hpp"

namespace jubileo::grammar {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool IsTerminalPunct(char c) { return c == '.' || c == '!' || c == '?' || c == ','; }

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string word;
  int word_column = 0;
  const auto flush = [&] {
    while (!word.empty() && IsTerminalPunct(word.back())) word.pop_back();
    if (!word.empty()) tokens.push_back({TokenKind::kWord, word, word_column});
    word.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      flush();
      const auto close = text.find('"', i + 1);
      if (close == std::string_view::npos) throw LexError("unterminated quote", static_cast<int>(i) + 1);
      tokens.push_back({TokenKind::kQuoted, std::string(text.substr(i + 1, close - i - 1)),
                        static_cast<int>(i) + 1});
      i = close;
    } else if (IsSpace(c)) {
      flush();
    } else {
      if (word.empty()) word_column = static_cast<int>(i) + 1;
      word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    }
  }
  flush();
  return tokens;
}

}  // namespace jubileo::grammar
