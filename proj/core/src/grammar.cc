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

#include "ludemic/grammar.hpp"

#include <charconv>
#include <set>
#include <utility>

#include "ludemic/error.hpp"

namespace ludemic {
namespace {

constexpr int kMaxNestingDepth = 512;
constexpr std::size_t kFormatWidth = 80;

bool IsIdentifierChar(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
      (c >= '0' && c <= '9')) {
    return true;
  }
  switch (c) {
    case '_': case '-': case '+': case '*': case '/': case '<': case '>':
    case '.': case ':': case '!': case '?': case '=': case '#': case '$':
    case '%': case '&': case '@': case '^': case '~': case '\'':
      return true;
    default:
      return false;
  }
}

bool LooksLikeInteger(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
        continue;
      }
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
        continue;
      }
      const int line = line_;
      const int column = column_;
      switch (c) {
        case '(':
          tokens.push_back({TokenKind::kOpenParen, "(", line, column});
          Advance();
          continue;
        case ')':
          tokens.push_back({TokenKind::kCloseParen, ")", line, column});
          Advance();
          continue;
        case '{':
          tokens.push_back({TokenKind::kOpenBrace, "{", line, column});
          Advance();
          continue;
        case '}':
          tokens.push_back({TokenKind::kCloseBrace, "}", line, column});
          Advance();
          continue;
        case '"':
          tokens.push_back(LexString(line, column));
          continue;
        default:
          break;
      }
      if (!IsIdentifierChar(c)) {
        throw SyntaxError(IllegalCharMessage(c), line, column);
      }
      const std::size_t start = pos_;
      while (pos_ < text_.size() && IsIdentifierChar(text_[pos_])) Advance();
      std::string word(text_.substr(start, pos_ - start));
      if (LooksLikeInteger(word)) {
        std::int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc() || ptr != word.data() + word.size()) {
          throw SyntaxError("integer literal out of range: " + word, line,
                            column);
        }
        tokens.push_back({TokenKind::kInteger, std::move(word), line, column});
      } else if (word[0] >= '0' && word[0] <= '9') {
        throw SyntaxError("malformed numeric literal: " + word, line, column);
      } else {
        tokens.push_back(
            {TokenKind::kIdentifier, std::move(word), line, column});
      }
    }
    return tokens;
  }

 private:
  static std::string IllegalCharMessage(char c) {
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f) {
      return std::string("illegal character '") + c + "'";
    }
    static const char* kHex = "0123456789abcdef";
    std::string hex = "0x";
    hex += kHex[byte >> 4];
    hex += kHex[byte & 0xf];
    return "illegal character " + hex;
  }

  Token LexString(int line, int column) {
    Advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw SyntaxError("unterminated string literal", line, column);
      }
      char c = text_[pos_];
      if (c == '"') {
        Advance();
        break;
      }
      if (c == '\\') {
        Advance();
        if (pos_ >= text_.size()) {
          throw SyntaxError("unterminated string literal", line, column);
        }
        char e = text_[pos_];
        switch (e) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default:
            throw SyntaxError(std::string("unknown escape sequence \\") + e,
                              line_, column_ - 1);
        }
        Advance();
        continue;
      }
      value += c;
      Advance();
    }
    return {TokenKind::kString, std::move(value), line, column};
  }

  void Advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xc0) != 0x80) {
      // Columns count code points, not UTF-8 continuation bytes.
      ++column_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  LudemeTree Run() {
    if (tokens_.empty()) {
      throw SyntaxError("empty description: expected (game ...)", 1, 1);
    }
    LudemeNode root = ParseNode(0);
    if (pos_ != tokens_.size()) {
      const Token& extra = tokens_[pos_];
      if (extra.kind == TokenKind::kCloseParen ||
          extra.kind == TokenKind::kCloseBrace) {
        throw SyntaxError("unbalanced delimiter '" + extra.text + "'",
                          extra.line, extra.column);
      }
      throw SyntaxError("unexpected content after the game description",
                        extra.line, extra.column);
    }
    if (!root.is_call("game")) {
      throw SyntaxError("root must be a (game ...) call", root.line,
                        root.column);
    }
    if (root.children.empty() ||
        root.children[0].kind != LudemeNode::Kind::kString) {
      throw SyntaxError("game must start with its name as a string literal",
                        root.line, root.column);
    }
    return root;
  }

 private:
  LudemeNode ParseNode(int depth) {
    const Token& tok = tokens_[pos_];
    if (depth > kMaxNestingDepth) {
      throw SyntaxError("nesting too deep", tok.line, tok.column);
    }
    LudemeNode node;
    node.line = tok.line;
    node.column = tok.column;
    switch (tok.kind) {
      case TokenKind::kIdentifier:
        node.kind = LudemeNode::Kind::kIdentifier;
        node.text = tok.text;
        ++pos_;
        return node;
      case TokenKind::kString:
        node.kind = LudemeNode::Kind::kString;
        node.text = tok.text;
        ++pos_;
        return node;
      case TokenKind::kInteger: {
        node.kind = LudemeNode::Kind::kInteger;
        node.text = tok.text;
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                        node.integer);
        ++pos_;
        return node;
      }
      case TokenKind::kCloseParen:
      case TokenKind::kCloseBrace:
        throw SyntaxError("unbalanced delimiter '" + tok.text + "'", tok.line,
                          tok.column);
      case TokenKind::kOpenParen:
      case TokenKind::kOpenBrace:
        break;
    }
    const bool is_call = tok.kind == TokenKind::kOpenParen;
    const TokenKind closer =
        is_call ? TokenKind::kCloseParen : TokenKind::kCloseBrace;
    ++pos_;
    if (is_call) {
      node.kind = LudemeNode::Kind::kCall;
      if (pos_ >= tokens_.size()) {
        throw SyntaxError("unbalanced delimiter '('", tok.line, tok.column);
      }
      const Token& head = tokens_[pos_];
      if (head.kind == TokenKind::kCloseParen) {
        throw SyntaxError("empty call ()", tok.line, tok.column);
      }
      if (head.kind != TokenKind::kIdentifier) {
        if (head.kind == TokenKind::kCloseBrace) {
          throw SyntaxError("unbalanced delimiter '}'", head.line,
                            head.column);
        }
        throw SyntaxError("call head must be an identifier", head.line,
                          head.column);
      }
      node.text = head.text;
      ++pos_;
    } else {
      node.kind = LudemeNode::Kind::kList;
    }
    while (true) {
      if (pos_ >= tokens_.size()) {
        throw SyntaxError(std::string("unbalanced delimiter '") +
                              (is_call ? "(" : "{") + "'",
                          tok.line, tok.column);
      }
      const Token& next = tokens_[pos_];
      if (next.kind == closer) {
        ++pos_;
        return node;
      }
      if (next.kind == TokenKind::kCloseParen ||
          next.kind == TokenKind::kCloseBrace) {
        throw SyntaxError("mismatched delimiter '" + next.text + "'",
                          next.line, next.column);
      }
      node.children.push_back(ParseNode(depth + 1));
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

void AppendInline(const LudemeNode& node, std::string& out) {
  switch (node.kind) {
    case LudemeNode::Kind::kIdentifier:
      out += node.text;
      return;
    case LudemeNode::Kind::kString:
      out += Quote(node.text);
      return;
    case LudemeNode::Kind::kInteger:
      out += std::to_string(node.integer);
      return;
    case LudemeNode::Kind::kCall:
      out += '(';
      out += node.text;
      for (const auto& child : node.children) {
        out += ' ';
        AppendInline(child, out);
      }
      out += ')';
      return;
    case LudemeNode::Kind::kList:
      out += '{';
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) out += ' ';
        AppendInline(node.children[i], out);
      }
      out += '}';
      return;
  }
}

void AppendPretty(const LudemeNode& node, std::size_t indent,
                  std::string& out) {
  std::string flat;
  AppendInline(node, flat);
  if (node.is_atom() || node.children.empty() ||
      indent + flat.size() <= kFormatWidth) {
    out += flat;
    return;
  }
  const std::string inner(indent + 2, ' ');
  if (node.is_call()) {
    out += '(';
    out += node.text;
  } else {
    out += '{';
  }
  for (const auto& child : node.children) {
    out += '\n';
    out += inner;
    AppendPretty(child, indent + 2, out);
  }
  out += '\n';
  out += std::string(indent, ' ');
  out += node.is_call() ? ')' : '}';
}

OptionBlock ReadOptionBlock(const LudemeNode& node) {
  auto fail = [&](const std::string& why) -> CompileError {
    return CompileError("malformed option block: " + why, node.line,
                        node.column);
  };
  if (node.children.size() != 3 ||
      node.children[0].kind != LudemeNode::Kind::kString ||
      node.children[1].kind != LudemeNode::Kind::kIdentifier ||
      !node.children[2].is_list()) {
    throw fail("expected (option \"Name\" <Placeholder> {items})");
  }
  OptionBlock block;
  block.name = node.children[0].text;
  block.placeholder = node.children[1].text;
  int defaults = 0;
  for (const auto& item : node.children[2].children) {
    if (!item.is_call("item") || item.children.size() < 2 ||
        item.children[0].kind != LudemeNode::Kind::kString) {
      throw fail("expected (item \"Label\" value [\"description\"] [default])");
    }
    OptionItem parsed{item.children[0].text, item.children[1], ""};
    for (std::size_t i = 2; i < item.children.size(); ++i) {
      const auto& extra = item.children[i];
      if (extra.kind == LudemeNode::Kind::kString && parsed.description.empty()) {
        parsed.description = extra.text;
      } else if (extra.is_identifier("default")) {
        block.default_item = static_cast<int>(block.items.size());
        ++defaults;
      } else {
        throw fail("unexpected item argument");
      }
    }
    block.items.push_back(std::move(parsed));
  }
  if (block.items.empty()) throw fail("no items");
  if (defaults > 1) throw fail("more than one default item");
  return block;
}

void Substitute(LudemeNode& node,
                const std::map<std::string, const LudemeNode*>& values) {
  if (node.kind == LudemeNode::Kind::kIdentifier) {
    auto it = values.find(node.text);
    if (it != values.end()) {
      const int line = node.line;
      const int column = node.column;
      node = *it->second;
      node.line = line;
      node.column = column;
    }
    return;
  }
  for (auto& child : node.children) Substitute(child, values);
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kOpenParen: return "open-paren";
    case TokenKind::kCloseParen: return "close-paren";
    case TokenKind::kOpenBrace: return "open-brace";
    case TokenKind::kCloseBrace: return "close-brace";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kString: return "string-literal";
    case TokenKind::kInteger: return "integer-literal";
  }
  return "?";
}

std::vector<Token> Tokenize(std::string_view text) {
  return Lexer(text).Run();
}

LudemeNode LudemeNode::Call(std::string head, std::vector<LudemeNode> children) {
  LudemeNode node;
  node.kind = Kind::kCall;
  node.text = std::move(head);
  node.children = std::move(children);
  return node;
}

LudemeNode LudemeNode::List(std::vector<LudemeNode> children) {
  LudemeNode node;
  node.kind = Kind::kList;
  node.children = std::move(children);
  return node;
}

LudemeNode LudemeNode::Identifier(std::string name) {
  LudemeNode node;
  node.kind = Kind::kIdentifier;
  node.text = std::move(name);
  return node;
}

LudemeNode LudemeNode::String(std::string value) {
  LudemeNode node;
  node.kind = Kind::kString;
  node.text = std::move(value);
  return node;
}

LudemeNode LudemeNode::Integer(std::int64_t value) {
  LudemeNode node;
  node.kind = Kind::kInteger;
  node.integer = value;
  node.text = std::to_string(value);
  return node;
}

bool operator==(const LudemeNode& a, const LudemeNode& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == LudemeNode::Kind::kInteger) return a.integer == b.integer;
  return a.text == b.text && a.children == b.children;
}

LudemeTree Parse(const std::vector<Token>& tokens) {
  return Parser(tokens).Run();
}

LudemeTree ParseDescription(std::string_view text) {
  return Parse(Tokenize(text));
}

int CountTokens(const LudemeNode& tree) {
  if (tree.is_atom()) return 1;
  int count = tree.is_call() ? 1 : 0;
  for (const auto& child : tree.children) count += CountTokens(child);
  return count;
}

std::string Format(const LudemeNode& tree) {
  std::string out;
  AppendPretty(tree, 0, out);
  out += '\n';
  return out;
}

const std::string& GameName(const LudemeTree& tree) {
  if (!tree.is_call("game") || tree.children.empty() ||
      tree.children[0].kind != LudemeNode::Kind::kString) {
    throw CompileError("not a game description", tree.line, tree.column);
  }
  return tree.children[0].text;
}

std::vector<OptionBlock> ListOptions(const LudemeTree& tree) {
  std::vector<OptionBlock> blocks;
  std::set<std::string> names;
  for (const auto& child : tree.children) {
    if (!child.is_call("option")) continue;
    OptionBlock block = ReadOptionBlock(child);
    if (!names.insert(block.name).second) {
      throw CompileError("duplicate option \"" + block.name + "\"",
                         child.line, child.column);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

LudemeTree ResolveOptions(const LudemeTree& tree,
                          const OptionSelection& selection) {
  const std::vector<OptionBlock> blocks = ListOptions(tree);
  for (const auto& [name, label] : selection) {
    bool known = false;
    for (const auto& block : blocks) known = known || block.name == name;
    if (!known) {
      throw CompileError("unknown option \"" + name + "\"", 0, 0);
    }
  }
  std::map<std::string, const LudemeNode*> values;
  for (const auto& block : blocks) {
    const OptionItem* chosen = &block.items[block.default_item];
    if (auto it = selection.find(block.name); it != selection.end()) {
      chosen = nullptr;
      for (const auto& item : block.items) {
        if (item.label == it->second) chosen = &item;
      }
      if (chosen == nullptr) {
        throw CompileError("option \"" + block.name + "\" has no item \"" +
                               it->second + "\"",
                           0, 0);
      }
    }
    values[block.placeholder] = &chosen->value;
  }
  LudemeTree out = tree;
  std::erase_if(out.children,
                [](const LudemeNode& c) { return c.is_call("option"); });
  Substitute(out, values);
  return out;
}

}  // namespace ludemic
