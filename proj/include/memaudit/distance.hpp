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
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "memaudit/errors.hpp"
#include "memaudit/unicode.hpp"

namespace memaudit {

/// How a target is slid across a longer text.
///
/// Windows are `text[n : n + |target|]` in Unicode scalars for
/// n = 0, stride, 2*stride, ... With clip_tail, offsets past the last full
/// window are also scored against the (shorter) remaining tail. Stride is in
/// scalars and must be at least 1.
struct WindowPolicy {
  enum class Unit { characters };

  Unit unit = Unit::characters;
  std::size_t stride = 1;
  bool clip_tail = true;

  void validate() const {
    if (stride == 0) throw ConfigError("window stride must be >= 1");
  }
};

/// Result of a distance computation. `normalized` is the edit distance
/// divided by the longer of the two lengths, so it always lies in [0, 1]
/// (defined as 0 when both strings are empty). For sliding comparisons,
/// `window_offset` is the scalar index of the first window attaining the
/// minimum (0 when the scanned text is empty).
struct DistanceResult {
  std::size_t distance = 0;
  double normalized = 0.0;
  std::optional<std::size_t> window_offset;
};

/// Minimal number of single-scalar insertions, deletions and substitutions
/// transforming `a` into `b`. Symmetric, and satisfies the triangle
/// inequality. Empty inputs are allowed.
std::size_t edit_distance(const CodePoints& a, const CodePoints& b);
std::size_t edit_distance(std::string_view a, std::string_view b);

/// edit_distance(a, b) / max(|a|, |b|); 0 when both are empty.
double normalized_edit_distance(const CodePoints& a, const CodePoints& b);
double normalized_edit_distance(std::string_view a, std::string_view b);

namespace detail {

/// Per-block bitmasks describing where each scalar occurs in a pattern.
/// Built once per pattern and reused across window evaluations.
struct PatternMasks {
  explicit PatternMasks(const CodePoints& pattern);

  const std::uint64_t* row(char32_t c) const {
    if (c < 128) return ascii.data() + static_cast<std::size_t>(c) * blocks;
    auto it = wide.find(c);
    return it == wide.end() ? zeros.data() : it->second.data();
  }

  std::size_t length = 0;
  std::size_t blocks = 0;
  std::vector<std::uint64_t> ascii;  // 128 * blocks, indexed [c * blocks + b]
  std::unordered_map<char32_t, std::vector<std::uint64_t>> wide;
  std::vector<std::uint64_t> zeros;
};

/// Outcome of a bounded distance evaluation. When `exact` is false, `value`
/// is a proven lower bound (>= the cutoff the caller passed); the true
/// distance was not resolved because it cannot be below the cutoff.
struct BoundedDistance {
  std::size_t value = 0;
  bool exact = true;
};

/// Scratch buffers reused across evaluations of the same pattern.
struct KernelWorkspace {
  std::vector<std::uint64_t> vp;
  std::vector<std::uint64_t> vn;
};

/// Bit-parallel edit distance between the mask pattern and text[0, n).
/// Abandons early, returning a lower bound, once the remaining text cannot
/// bring the distance below `cutoff`.
BoundedDistance banded_distance(const PatternMasks& masks, const char32_t* text,
                                std::size_t n, std::size_t cutoff,
                                KernelWorkspace& ws);

}  // namespace detail

/// A target prepared for repeated sliding scans. Construction costs
/// O(|target|); each scan reuses the pattern bitmasks. Thread-safe: scan()
/// is const and keeps no shared mutable state.
class SlidingScanner {
 public:
  explicit SlidingScanner(CodePoints target, WindowPolicy policy = {});

  /// Minimum normalized edit distance between the target and the policy's
  /// windows of `text`, with the smallest offset attaining it. If the text
  /// is shorter than the target, the whole text is compared at offset 0.
  DistanceResult scan(const CodePoints& text) const;

  const CodePoints& target() const { return target_; }
  const WindowPolicy& policy() const { return policy_; }

 private:
  CodePoints target_;
  WindowPolicy policy_;
  detail::PatternMasks masks_;
};

/// One-shot sliding scan; see SlidingScanner.
DistanceResult sliding_min_ned(const CodePoints& target, const CodePoints& text,
                               const WindowPolicy& policy = {});
DistanceResult sliding_min_ned(std::string_view target, std::string_view text,
                               const WindowPolicy& policy = {});

/// Minimum of the sliding scans of `target` over `prefix` and over `suffix`.
/// An empty prefix or suffix contributes 1.0 (there is no window to match)
/// rather than an error. Used to decide whether a target is already present
/// in its own prompt.
double prompt_overlap_ned(const CodePoints& target, const CodePoints& prefix,
                          const CodePoints& suffix,
                          const WindowPolicy& policy = {});
double prompt_overlap_ned(std::string_view target, std::string_view prefix,
                          std::string_view suffix,
                          const WindowPolicy& policy = {});

}  // namespace memaudit
