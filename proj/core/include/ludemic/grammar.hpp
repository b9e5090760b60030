// Copyright 2026 The Ludemic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUDEMIC_GRAMMAR_HPP_
#define LUDEMIC_GRAMMAR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ludemic {

// Lexical surface of a game description. Delimiters are structural; the
// remaining kinds carry text.
enum class TokenKind {
  kOpenParen,
  kCloseParen,
  kOpenBrace,
  kCloseBrace,
  kIdentifier,
  kString,
  kInteger,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  // String literals are stored unquoted and unescaped.
  std::string text;
  int line = 1;
  int column = 1;

  bool IsDelimiter() const {
    return kind == TokenKind::kOpenParen || kind == TokenKind::kCloseParen ||
           kind == TokenKind::kOpenBrace || kind == TokenKind::kCloseBrace;
  }
};

// Splits `text` into tokens. Whitespace and `//` line comments are dropped.
// Throws SyntaxError on an unterminated string, an illegal character or a
// malformed numeric literal.
std::vector<Token> Tokenize(std::string_view text);

// One node of a parsed description. A call is `(head child...)`, a list is
// `{child...}`; everything else is an atom.
struct LudemeNode {
  enum class Kind { kCall, kList, kIdentifier, kString, kInteger };

  Kind kind = Kind::kIdentifier;
  // Call head, identifier name or unescaped string contents. Empty for lists.
  std::string text;
  std::int64_t integer = 0;
  std::vector<LudemeNode> children;
  int line = 0;
  int column = 0;

  bool is_call() const { return kind == Kind::kCall; }
  bool is_list() const { return kind == Kind::kList; }
  bool is_atom() const { return !is_call() && !is_list(); }
  bool is_call(std::string_view head) const {
    return kind == Kind::kCall && text == head;
  }
  bool is_identifier(std::string_view name) const {
    return kind == Kind::kIdentifier && text == name;
  }

  static LudemeNode Call(std::string head, std::vector<LudemeNode> children);
  static LudemeNode List(std::vector<LudemeNode> children);
  static LudemeNode Identifier(std::string name);
  static LudemeNode String(std::string value);
  static LudemeNode Integer(std::int64_t value);

  // Structural equality; source positions are ignored.
  friend bool operator==(const LudemeNode& a, const LudemeNode& b);
};

using LudemeTree = LudemeNode;

// Builds the tree for a token sequence. The root must be a `game` call whose
// first child is the game's name as a string literal.
LudemeTree Parse(const std::vector<Token>& tokens);

// Tokenize + Parse.
LudemeTree ParseDescription(std::string_view text);

// Number of atoms plus call heads. Delimiters are not counted.
int CountTokens(const LudemeNode& tree);

// Pretty-prints `tree` so that it re-parses to an equal tree.
std::string Format(const LudemeNode& tree);

// The game name carried by a parsed root.
const std::string& GameName(const LudemeTree& tree);

// A named option block: (option "Name" <Placeholder> {(item "Label" value
// ["description"] [default])...}).
struct OptionItem {
  std::string label;
  LudemeNode value;
  std::string description;
};

struct OptionBlock {
  std::string name;
  std::string placeholder;
  std::vector<OptionItem> items;
  int default_item = 0;
};

std::vector<OptionBlock> ListOptions(const LudemeTree& tree);

// Option name -> selected item label. Options not named keep their default.
using OptionSelection = std::map<std::string, std::string>;

// Removes every option block from `tree` and substitutes each placeholder
// atom with the selected item's value. Throws CompileError for an unknown
// option or item name.
LudemeTree ResolveOptions(const LudemeTree& tree,
                          const OptionSelection& selection = {});

}  // namespace ludemic

#endif  // LUDEMIC_GRAMMAR_HPP_
