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

#ifndef JUBILEO_GRAMMAR_COMMAND_HPP_
#define JUBILEO_GRAMMAR_COMMAND_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jubileo/common/color.hpp"
#include "jubileo/motion/expression.hpp"

namespace jubileo::grammar {

enum class TokenKind { kWord, kQuoted };

struct Token {
  TokenKind kind = TokenKind::kWord;
  std::string text;
  int column = 1;  // 1-based byte offset of the token start

  friend bool operator==(const Token&, const Token&) = default;
};

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& what, int column)
      : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

// Words are ASCII-lowercased and lose trailing '.', '!', '?' and ','.
// A double-quoted span becomes one kQuoted token, kept verbatim. Throws
// LexError for an unterminated quote.
std::vector<Token> Tokenize(std::string_view text);

struct LookAtMe {
  friend bool operator==(const LookAtMe&, const LookAtMe&) = default;
};
struct LookAtColor {
  Color color = Color::kRed;
  std::optional<std::string> noun;
  friend bool operator==(const LookAtColor&, const LookAtColor&) = default;
};
struct ShowExpression {
  motion::ExpressionId expression = motion::ExpressionId::kNeutral;
  friend bool operator==(const ShowExpression&, const ShowExpression&) = default;
};
struct Say {
  std::string text;
  friend bool operator==(const Say&, const Say&) = default;
};
struct Mimic {
  friend bool operator==(const Mimic&, const Mimic&) = default;
};
struct Grab {
  Color color = Color::kRed;
  friend bool operator==(const Grab&, const Grab&) = default;
};
struct Stop {
  friend bool operator==(const Stop&, const Stop&) = default;
};

using CommandAst = std::variant<LookAtMe, LookAtColor, ShowExpression, Say, Mimic, Grab, Stop>;

enum class ParseErrc { kLex, kEmpty, kUnknownCommand, kSyntax };

struct ParseError {
  ParseErrc code = ParseErrc::kSyntax;
  std::string message;
  int column = 0;  // 0 when the error is about the end of input

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

using ParseResult = std::variant<CommandAst, ParseError>;

inline bool Succeeded(const ParseResult& r) { return std::holds_alternative<CommandAst>(r); }

ParseResult Parse(const std::vector<Token>& tokens);
// Tokenize then Parse; lexical errors come back as kLex. Never throws.
ParseResult ParseCommand(std::string_view text);

// Text that parses back to `ast`. Nouns must be single lowercase words and
// Say text must not contain '"'.
std::string Render(const CommandAst& ast);
// Debug form, e.g. "LookAtColor(red, noun=ball)".
std::string Describe(const CommandAst& ast);
std::string_view ErrcName(ParseErrc code);

}  // namespace jubileo::grammar

#endif  // JUBILEO_GRAMMAR_COMMAND_HPP_
