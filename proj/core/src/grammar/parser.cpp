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

#include <string>

#include "jubileo/grammar/command.hpp"

namespace jubileo::grammar {
namespace {

constexpr std::string_view kHeads = "look, show, say, mimic, imitate, grab, stop";

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ParseResult Run() {
    if (tokens_.empty()) return ParseError{ParseErrc::kEmpty, "empty command", 0};
    const Token& head = tokens_[0];
    pos_ = 1;
    if (head.kind == TokenKind::kWord) {
      if (head.text == "look") return Finish(Look());
      if (head.text == "show") return Finish(Show());
      if (head.text == "say") return Finish(SayCommand());
      if (head.text == "mimic" || head.text == "imitate") {
        Accept("me");
        return Finish(CommandAst{Mimic{}});
      }
      if (head.text == "grab") return Finish(GrabCommand());
      if (head.text == "stop") return Finish(CommandAst{Stop{}});
    }
    return ParseError{ParseErrc::kUnknownCommand,
                      "unknown command '" + head.text + "'; expected one of: " + std::string(kHeads),
                      head.column};
  }

 private:
  using Step = std::variant<CommandAst, ParseError>;

  const Token* Peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  bool Accept(std::string_view word) {
    const Token* t = Peek();
    if (t != nullptr && t->kind == TokenKind::kWord && t->text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParseError Expected(std::string_view what) const {
    const Token* t = Peek();
    if (t == nullptr) return {ParseErrc::kSyntax, "expected " + std::string(what) + " at end of input", 0};
    return {ParseErrc::kSyntax, "expected " + std::string(what) + ", found '" + t->text + "'", t->column};
  }

  std::optional<Color> AcceptColor() {
    const Token* t = Peek();
    if (t == nullptr || t->kind != TokenKind::kWord) return std::nullopt;
    auto color = ParseColor(t->text);
    if (color) ++pos_;
    return color;
  }

  std::optional<std::string> AcceptNoun() {
    const Token* t = Peek();
    if (t == nullptr || t->kind != TokenKind::kWord) return std::nullopt;
    ++pos_;
    return t->text;
  }

  Step Look() {
    if (!Accept("at")) return Expected("'at'");
    if (Accept("me")) return CommandAst{LookAtMe{}};
    if (!Accept("the")) Accept("a");
    const auto color = AcceptColor();
    if (!color) return Expected("'me' or a color (red, green, blue, yellow)");
    return CommandAst{LookAtColor{*color, AcceptNoun()}};
  }

  Step Show() {
    Accept("me");
    const Token* t = Peek();
    std::optional<motion::ExpressionId> id;
    if (t != nullptr && t->kind == TokenKind::kWord) id = motion::ParseExpressionId(t->text);
    if (!id) return Expected("an expression (joy, neutral, sadness, surprise, disgust, anger, fear, thinking)");
    ++pos_;
    return CommandAst{ShowExpression{*id}};
  }

  Step SayCommand() {
    const Token* t = Peek();
    if (t == nullptr || t->kind != TokenKind::kQuoted) return Expected("a quoted utterance");
    ++pos_;
    return CommandAst{Say{t->text}};
  }

  Step GrabCommand() {
    if (!Accept("the")) Accept("a");
    const auto color = AcceptColor();
    if (!color) return Expected("a color (red, green, blue, yellow)");
    AcceptNoun();
    return CommandAst{Grab{*color}};
  }

  ParseResult Finish(Step step) {
    if (auto* error = std::get_if<ParseError>(&step)) return *error;
    if (const Token* t = Peek()) {
      return ParseError{ParseErrc::kSyntax, "unexpected '" + t->text + "' after a complete command", t->column};
    }
    return std::get<CommandAst>(step);
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ParseResult Parse(const std::vector<Token>& tokens) { return Parser(tokens).Run(); }

ParseResult ParseCommand(std::string_view text) {
  try {
    return Parse(Tokenize(text));
  } catch (const LexError& e) {
    return ParseError{ParseErrc::kLex, e.what(), e.column()};
  }
}

std::string Render(const CommandAst& ast) {
  return std::visit(
      Overloaded{
          [](const LookAtMe&) { return std::string("look at me"); },
          [](const LookAtColor& c) {
            std::string out = "look at the " + std::string(ColorName(c.color));
            if (c.noun) out += " " + *c.noun;
            return out;
          },
          [](const ShowExpression& s) { return "show " + std::string(motion::ExpressionName(s.expression)); },
          [](const Say& s) { return "say \"" + s.text + "\""; },
          [](const Mimic&) { return std::string("mimic me"); },
          [](const Grab& g) { return "grab the " + std::string(ColorName(g.color)); },
          [](const Stop&) { return std::string("stop"); },
      },
      ast);
}

std::string Describe(const CommandAst& ast) {
  return std::visit(
      Overloaded{
          [](const LookAtMe&) { return std::string("LookAtMe"); },
          [](const LookAtColor& c) {
            std::string out = "LookAtColor(" + std::string(ColorName(c.color));
            if (c.noun) out += ", noun=" + *c.noun;
            return out + ")";
          },
          [](const ShowExpression& s) {
            return "ShowExpression(" + std::string(motion::ExpressionTitle(s.expression)) + ")";
          },
          [](const Say& s) { return "Say(\"" + s.text + "\")"; },
          [](const Mimic&) { return std::string("Mimic"); },
          [](const Grab& g) { return "Grab(" + std::string(ColorName(g.color)) + ")"; },
          [](const Stop&) { return std::string("Stop"); },
      },
      ast);
}

std::string_view ErrcName(ParseErrc code) {
  switch (code) {
    case ParseErrc::kLex: return "lex";
    case ParseErrc::kEmpty: return "empty";
    case ParseErrc::kUnknownCommand: return "unknown-command";
    case ParseErrc::kSyntax: return "syntax";
  }
  return "syntax";
}

}  // namespace jubileo::grammar
