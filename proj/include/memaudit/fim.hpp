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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memaudit/errors.hpp"

namespace memaudit {

/// The four sentinel tokens used to serialize infill examples. Sentinels are
/// emitted with no surrounding whitespace: the serialized layout is
/// `<pre>prefix<suf>suffix<mid>middle<eos>`, and the inference prompt form
/// stops after `<mid>`.
struct SentinelConfig {
  std::string pre = "[PRE]";
  std::string suf = "[SUF]";
  std::string mid = "[MID]";
  std::string eos = "[EOS]";

  /// All four must be non-empty, pairwise distinct, and no sentinel may be
  /// a substring of another. Throws ConfigError.
  void validate() const;
};

/// A document split into prefix / middle / suffix. Concatenating the three
/// fields always reconstructs the source document text exactly.
struct FimExample {
  std::string example_id;
  std::string prefix;
  std::string middle;
  std::string suffix;
  std::string source_doc;
};

/// Character (Unicode scalar) indices of an explicit split:
/// prefix = doc[0:begin], middle = doc[begin:end], suffix = doc[end:].
struct SplitIndices {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Splits at explicit scalar indices. Requires 0 <= begin <= end <= |doc|
/// and a non-empty doc; throws InvalidSplit otherwise.
FimExample split_document(std::string_view doc, SplitIndices split);

/// Seeded random split with a non-empty middle: begin is uniform over
/// [0, |doc|-1] and end uniform over (begin, |doc|], both in scalars, drawn
/// from the documented generator. Throws InvalidSplit for an empty doc.
FimExample split_document(std::string_view doc, std::uint64_t seed);

/// Serializes an example in sentinel form. With include_target the layout is
/// `<pre>prefix<suf>suffix<mid>middle<eos>`; without it, the inference
/// prompt `<pre>prefix<suf>suffix<mid>`. Throws SentinelCollision if any
/// sentinel occurs inside a field (fields are never escaped, because
/// escaping would change downstream distances).
std::string format_psm(const FimExample& ex, const SentinelConfig& s,
                       bool include_target);

/// Parses sentinel form back into fields. Text must start with the prefix
/// sentinel and contain the suffix and middle sentinels in order; a missing
/// end sentinel yields the prompt form (empty middle), but trailing content
/// after the middle sentinel without an end sentinel is malformed. Throws
/// MalformedPsm naming the first violated sentinel.
FimExample parse_psm(std::string_view text, const SentinelConfig& s);

/// Applies the infill transformation to roughly `rate` of the documents:
/// per document, a seeded uniform draw selects it for transformation
/// (random split + sentinel serialization); unselected documents pass
/// through unchanged. Output order matches input order and the result is a
/// pure function of (docs, rate, seed). Rate must lie in [0, 1].
std::vector<std::string> apply_fim_rate(std::span<const std::string> docs,
                                        double rate, std::uint64_t seed,
                                        const SentinelConfig& s = {});

}  // namespace memaudit
