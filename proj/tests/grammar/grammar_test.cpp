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

#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "jubileo/grammar/command.hpp"
#include "support/gen.hpp"
#include "support/grammar_gen.hpp"

namespace jubileo::grammar {
namespace {

std::string Expected(const ParseResult& r) {
  if (const auto* e = std::get_if<ParseError>(&r)) return "error:" + std::string(ErrcName(e->code));
  return Describe(std::get<CommandAst>(r));
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : Tokenize(text)) out.push_back(t.text);
  return out;
}

TEST(Tokenize, Examples) {
  EXPECT_EQ(Words("Look at me!"), (std::vector<std::string>{"look", "at", "me"}));
  EXPECT_TRUE(Words("").empty());
  const auto say = Tokenize("say \"Hello there\"");
  ASSERT_EQ(say.size(), 2u);
  EXPECT_EQ(say[0].text, "say");
  EXPECT_EQ(say[1].kind, TokenKind::kQuoted);
  EXPECT_EQ(say[1].text, "Hello there");
  EXPECT_EQ(say[1].column, 5);
}

TEST(Tokenize, UnbalancedQuoteReportsColumn) {
  try {
    Tokenize("say \"oops");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(Parse, GoldenCorpus) {
  std::ifstream in(std::string(JUBILEO_TEST_DATA_DIR) + "/grammar_corpus.tsv");
  ASSERT_TRUE(in);
  std::string line;
  int cases = 0;
  bool saw_look_at_me = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.rfind('\t');
    ASSERT_NE(tab, std::string::npos) << line;
    const std::string input = line.substr(0, tab);
    EXPECT_EQ(Expected(ParseCommand(input)), line.substr(tab + 1)) << "input: '" << input << "'";
    saw_look_at_me = saw_look_at_me || input == "Look at me";
    ++cases;
  }
  EXPECT_GE(cases, 30);
  EXPECT_TRUE(saw_look_at_me);
}

TEST(Parse, UnknownCommandListsHeads) {
  const auto r = ParseCommand("dance");
  const auto& e = std::get<ParseError>(r);
  EXPECT_EQ(e.code, ParseErrc::kUnknownCommand);
  for (const char* head : {"look", "show", "say", "mimic", "grab", "stop"}) {
    EXPECT_NE(e.message.find(head), std::string::npos) << head;
  }
}

TEST(Parse, SyntaxErrorNamesExpectedClass) {
  const auto& e = std::get<ParseError>(ParseCommand("look at purple"));
  EXPECT_NE(e.message.find("color"), std::string::npos) << e.message;
  EXPECT_EQ(e.column, 9);
}

TEST(Parse, CaseAndPunctuationInsensitive) {
  EXPECT_EQ(ParseCommand("LOOK AT ME!"), ParseCommand("look at me"));
  EXPECT_EQ(ParseCommand("Show Me Joy."), ParseCommand("show me joy"));
}

TEST(Render, RoundTripsEveryAstShape) {
  testing::Gen gen(81);
  for (int i = 0; i < 5000; ++i) {
    const CommandAst ast = testing::RandomAst(gen);
    const auto r = ParseCommand(Render(ast));
    ASSERT_TRUE(Succeeded(r)) << Render(ast);
    ASSERT_EQ(std::get<CommandAst>(r), ast) << Render(ast);
  }
}

// Mutates valid commands and splices random vocabulary and bytes; every
// input must come back as an AST or a categorized error.
TEST(Parse, FuzzTotality) {
  testing::Gen gen(82);
  const std::vector<std::string> vocab = {"look", "at",  "me",   "the", "a",    "red",  "green", "show", "say",
                                          "\"",   "joy", "grab", "stop", "mimic", "imitate", "!",  "?",    ",",
                                          "\"hi\"", "ball", "fear", "\xC3\xA9", "\xFF"};
  for (int i = 0; i < 20000; ++i) {
    std::string input;
    const int mode = gen.Int(0, 2);
    if (mode == 0) {
      input = Render(testing::RandomAst(gen));
      if (!input.empty()) input[gen.Index(input.size())] = static_cast<char>(gen.Int(1, 255));
    } else if (mode == 1) {
      const int n = gen.Int(0, 8);
      for (int k = 0; k < n; ++k) input += gen.Pick(vocab) + (gen.Coin(0.8) ? " " : "");
    } else {
      const auto bytes = gen.Bytes(1024);
      input.assign(bytes.begin(), bytes.end());
    }
    const auto r = ParseCommand(input);
    if (const auto* e = std::get_if<ParseError>(&r)) {
      ASSERT_TRUE(e->code == ParseErrc::kLex || e->code == ParseErrc::kEmpty ||
                  e->code == ParseErrc::kUnknownCommand || e->code == ParseErrc::kSyntax);
      ASSERT_FALSE(e->message.empty());
    }
  }
}

}  // namespace
}  // namespace jubileo::grammar
