// Copyright 2026 The memaudit Authors
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

#include "memaudit/tokenize.hpp"

#include <array>
#include <map>
#include <mutex>

namespace memaudit {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ident_start(unsigned char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
         c >= 0x80;
}

bool is_ident_cont(unsigned char c) { return is_ident_start(c) || is_digit(c); }

bool is_quote(char c) { return c == '\'' || c == '"'; }

bool is_literal_prefix(std::string_view s) {
  if (s.empty() || s.size() > 2) return false;
  for (char c : s) {
    switch (c) {
      case 'r': case 'R': case 'b': case 'B':
      case 'u': case 'U': case 'f': case 'F':
        break;
      default:
        return false;
    }
  }
  return true;
}

// Consumes a quoted literal starting at `i` (which must point at a quote).
// Returns the offset one past the closing quote; unterminated literals run
// to the end of line (single-quoted) or end of text (triple-quoted).
std::size_t scan_string(std::string_view text, std::size_t i) {
  const char q = text[i];
  const bool triple = i + 2 < text.size() && text[i + 1] == q &&
                      text[i + 2] == q;
  if (triple) {
    std::size_t j = i + 3;
    while (j < text.size()) {
      if (text[j] == '\\') {
        j += 2;
        continue;
      }
      if (text[j] == q && j + 2 < text.size() && text[j + 1] == q &&
          text[j + 2] == q) {
        return j + 3;
      }
      ++j;
    }
    return text.size();
  }
  std::size_t j = i + 1;
  while (j < text.size()) {
    if (text[j] == '\\') {
      j += 2;
      continue;
    }
    if (text[j] == q) return j + 1;
    if (text[j] == '\n') return j;  // unterminated: stop before the newline
    ++j;
  }
  return text.size();
}

constexpr std::array<std::string_view, 5> kOps3 = {"**=", "//=", "<<=", ">>=",
                                                   "..."};
constexpr std::array<std::string_view, 21> kOps2 = {
    "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "->", ":=", "&&", "||", "::"};

std::size_t scan_operator(std::string_view text, std::size_t i) {
  const std::string_view rest = text.substr(i);
  for (auto op : kOps3)
    if (rest.substr(0, 3) == op) return i + 3;
  for (auto op : kOps2)
    if (rest.substr(0, 2) == op) return i + 2;
  return i + 1;
}

}  // namespace

std::vector<Token> tokenize_code(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (is_quote(c)) {
      i = scan_string(text, i);
    } else if (is_ident_start(static_cast<unsigned char>(c))) {
      while (i < text.size() && is_ident_cont(static_cast<unsigned char>(text[i])))
        ++i;
      // A short r/b/u/f run directly against a quote is a literal prefix.
      if (i < text.size() && is_quote(text[i]) &&
          is_literal_prefix(text.substr(begin, i - begin))) {
        i = scan_string(text, i);
      }
    } else if (is_digit(c)) {
      ++i;
      while (i < text.size() &&
             (is_ident_cont(static_cast<unsigned char>(text[i])) ||
              text[i] == '.'))
        ++i;
    } else {
      i = scan_operator(text, i);
    }
    tokens.push_back({begin, i});
  }
  return tokens;
}

namespace {

std::map<std::string, TokenizerFn, std::less<>>& registry() {
  static std::map<std::string, TokenizerFn, std::less<>> map{
      {"default", TokenizerFn(tokenize_code)}};
  return map;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void register_tokenizer(const std::string& id, TokenizerFn fn) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  registry()[id] = std::move(fn);
}

TokenizerFn get_tokenizer(std::string_view id) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(id);
  if (it == registry().end())
    throw UnknownTokenizer("unknown tokenizer: " + std::string(id));
  return it->second;
}

std::size_t count_tokens(std::string_view text, std::string_view tokenizer_id) {
  return get_tokenizer(tokenizer_id)(text).size();
}

std::string_view truncate_to_tokens(std::string_view text, std::size_t budget,
                                    std::string_view tokenizer_id) {
  const auto tokens = get_tokenizer(tokenizer_id)(text);
  if (tokens.size() <= budget) return text;
  if (budget == 0) return text.substr(0, 0);
  return text.substr(0, tokens[budget - 1].end);
}

}  // namespace memaudit
