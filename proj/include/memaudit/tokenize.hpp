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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "memaudit/errors.hpp"

namespace memaudit {

/// Half-open byte range [begin, end) of one token in the source text.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// The "default" tokenizer splits source text the way code reads:
///   - whitespace separates tokens and is never itself a token
///   - a comment from '#' to end of line is one token
///   - a string literal (single, double or triple quoted, with backslash
///     escapes and an optional r/b/u/f prefix) is one token
///   - an identifier [A-Za-z_][A-Za-z0-9_]* is one token; bytes outside
///     ASCII are treated as identifier characters
///   - a number starting with a digit consumes [0-9A-Za-z_.]* so hex,
///     exponent and separator forms stay single tokens
///   - operators match the longest form in a fixed table, else one symbol
///     character is one token
std::vector<Token> tokenize_code(std::string_view text);

using TokenizerFn = std::function<std::vector<Token>(std::string_view)>;

/// Registers a tokenizer under a name; "default" is pre-registered with
/// tokenize_code. Re-registering a name replaces it.
void register_tokenizer(const std::string& id, TokenizerFn fn);

/// Looks up a registered tokenizer. Throws UnknownTokenizer.
TokenizerFn get_tokenizer(std::string_view id);

/// Number of tokens in `text` under the named tokenizer.
std::size_t count_tokens(std::string_view text,
                         std::string_view tokenizer_id = "default");

/// The prefix of `text` covering its first `budget` tokens, cut on a whole
/// token boundary; `text` itself if it has no more than `budget` tokens.
std::string_view truncate_to_tokens(std::string_view text, std::size_t budget,
                                    std::string_view tokenizer_id = "default");

}  // namespace memaudit
