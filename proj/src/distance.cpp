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

#include "memaudit/distance.hpp"

#include <algorithm>
#include <limits>

namespace memaudit {

namespace detail {

PatternMasks::PatternMasks(const CodePoints& pattern) {
  length = pattern.size();
  blocks = (length + 63) / 64;
  ascii.assign(128 * blocks, 0);
  zeros.assign(blocks, 0);
  for (std::size_t i = 0; i < length; ++i) {
    const char32_t c = pattern[i];
    const std::uint64_t bit = 1ull << (i % 64);
    if (c < 128) {
      ascii[static_cast<std::size_t>(c) * blocks + i / 64] |= bit;
    } else {
      auto [it, inserted] = wide.try_emplace(c);
      if (inserted) it->second.assign(blocks, 0);
      it->second[i / 64] |= bit;
    }
  }
}

namespace {

// Bit-parallel column update in the style of Myers' algorithm, seeded with a
// +1 horizontal delta at row zero so the full Levenshtein distance (not the
// substring-matching score) is tracked. The score is read at the pattern's
// last row before the carry shift.

BoundedDistance single_word_distance(const PatternMasks& masks,
                                     const char32_t* text, std::size_t n,
                                     std::size_t cutoff) {
  const std::size_t m = masks.length;
  const std::uint64_t last = 1ull << (m - 1);
  std::uint64_t vp = ~0ull;
  std::uint64_t vn = 0;
  std::size_t score = m;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t eq = *masks.row(text[j]);
    const std::uint64_t x = eq | vn;
    const std::uint64_t d0 = (((eq & vp) + vp) ^ vp) | x;
    std::uint64_t hp = vn | ~(d0 | vp);
    std::uint64_t hn = vp & d0;
    if (hp & last) {
      ++score;
    } else if (hn & last) {
      --score;
    }
    hp = (hp << 1) | 1;
    hn <<= 1;
    vp = hn | ~(d0 | hp);
    vn = hp & d0;
    if ((j & 31u) == 31u) {
      const std::size_t remaining = n - 1 - j;
      // The score moves by at most one per column, so it cannot drop below
      // score - remaining by the end of the text.
      if (score >= remaining && score - remaining >= cutoff)
        return {score - remaining, false};
    }
  }
  return {score, true};
}

BoundedDistance block_distance(const PatternMasks& masks, const char32_t* text,
                               std::size_t n, std::size_t cutoff,
                               KernelWorkspace& ws) {
  const std::size_t m = masks.length;
  const std::size_t blocks = masks.blocks;
  const std::size_t last_block = blocks - 1;
  const std::size_t last_bit = (m - 1) % 64;
  ws.vp.assign(blocks, ~0ull);
  ws.vn.assign(blocks, 0);
  std::uint64_t* vp = ws.vp.data();
  std::uint64_t* vn = ws.vn.data();
  std::size_t score = m;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t* eqrow = masks.row(text[j]);
    std::uint64_t ph_in = 1;  // row-zero horizontal delta is +1
    std::uint64_t mh_in = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::uint64_t eq0 = eqrow[b];
      const std::uint64_t vpb = vp[b];
      const std::uint64_t vnb = vn[b];
      const std::uint64_t xv = eq0 | vnb;
      const std::uint64_t eq = eq0 | mh_in;
      const std::uint64_t xh = (((eq & vpb) + vpb) ^ vpb) | eq;
      std::uint64_t ph = vnb | ~(xh | vpb);
      std::uint64_t mh = vpb & xh;
      if (b == last_block) {
        score += (ph >> last_bit) & 1;
        score -= (mh >> last_bit) & 1;
      }
      const std::uint64_t ph_out = ph >> 63;
      const std::uint64_t mh_out = mh >> 63;
      ph = (ph << 1) | ph_in;
      mh = (mh << 1) | mh_in;
      vp[b] = mh | ~(xv | ph);
      vn[b] = ph & xv;
      ph_in = ph_out;
      mh_in = mh_out;
    }
    if ((j & 31u) == 31u) {
      const std::size_t remaining = n - 1 - j;
      if (score >= remaining && score - remaining >= cutoff)
        return {score - remaining, false};
    }
  }
  return {score, true};
}

}  // namespace

BoundedDistance banded_distance(const PatternMasks& masks, const char32_t* text,
                                std::size_t n, std::size_t cutoff,
                                KernelWorkspace& ws) {
  if (masks.length <= 64) return single_word_distance(masks, text, n, cutoff);
  return block_distance(masks, text, n, cutoff, ws);
}

}  // namespace detail

std::size_t edit_distance(const CodePoints& a, const CodePoints& b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const CodePoints& pattern = a.size() <= b.size() ? a : b;
  const CodePoints& text = a.size() <= b.size() ? b : a;
  detail::PatternMasks masks(pattern);
  detail::KernelWorkspace ws;
  const auto r =
      detail::banded_distance(masks, text.data(), text.size(),
                              std::numeric_limits<std::size_t>::max(), ws);
  return r.value;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance(decode_utf8(a), decode_utf8(b));
}

double normalized_edit_distance(const CodePoints& a, const CodePoints& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(edit_distance(a, b)) /
         static_cast<double>(longest);
}

double normalized_edit_distance(std::string_view a, std::string_view b) {
  return normalized_edit_distance(decode_utf8(a), decode_utf8(b));
}

SlidingScanner::SlidingScanner(CodePoints target, WindowPolicy policy)
    : target_(std::move(target)), policy_(policy), masks_(target_) {
  policy_.validate();
  if (target_.empty()) throw EmptyTarget();
}

DistanceResult SlidingScanner::scan(const CodePoints& text) const {
  const std::size_t m = target_.size();
  const std::size_t len = text.size();
  detail::KernelWorkspace ws;
  if (len < m) {
    const auto r =
        detail::banded_distance(masks_, text.data(), len, m + 1, ws);
    return {r.value, static_cast<double>(r.value) / static_cast<double>(m),
            0};
  }
  const std::size_t last_full = len - m;
  const std::size_t max_off = policy_.clip_tail ? len - 1 : last_full;
  std::size_t best = m + 1;
  std::size_t best_off = 0;
  std::size_t off = 0;
  while (off <= max_off) {
    const std::size_t wlen = std::min(m, len - off);
    // Tail windows only get shorter, so once the length gap alone reaches
    // the running best no later offset can improve on it.
    if (m - wlen >= best) break;
    const auto r =
        detail::banded_distance(masks_, text.data() + off, wlen, best, ws);
    if (r.exact && r.value < best) {
      best = r.value;
      best_off = off;
      if (best == 0) break;
    }
    // Shifting a window by delta changes it by at most 2*delta edits, so a
    // window this far above the running best rules out the offsets whose
    // bound cannot drop below it. Skipped offsets can only tie, never beat,
    // which keeps the smallest-offset rule intact.
    const std::size_t skip = r.value > best ? (r.value - best) / 2 : 0;
    const std::size_t next = off + skip + 1;
    const std::size_t rem = next % policy_.stride;
    off = rem == 0 ? next : next + (policy_.stride - rem);
  }
  if (best > m) best = m;
  return {best, static_cast<double>(best) / static_cast<double>(m), best_off};
}

DistanceResult sliding_min_ned(const CodePoints& target, const CodePoints& text,
                               const WindowPolicy& policy) {
  return SlidingScanner(target, policy).scan(text);
}

DistanceResult sliding_min_ned(std::string_view target, std::string_view text,
                               const WindowPolicy& policy) {
  return sliding_min_ned(decode_utf8(target), decode_utf8(text), policy);
}

double prompt_overlap_ned(const CodePoints& target, const CodePoints& prefix,
                          const CodePoints& suffix,
                          const WindowPolicy& policy) {
  SlidingScanner scanner(target, policy);
  return std::min(scanner.scan(prefix).normalized,
                  scanner.scan(suffix).normalized);
}

double prompt_overlap_ned(std::string_view target, std::string_view prefix,
                          std::string_view suffix,
                          const WindowPolicy& policy) {
  return prompt_overlap_ned(decode_utf8(target), decode_utf8(prefix),
                            decode_utf8(suffix), policy);
}

}  // namespace memaudit
