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

#include "memaudit/fim.hpp"

#include <array>

#include "memaudit/rng.hpp"
#include "memaudit/unicode.hpp"

namespace memaudit {

void SentinelConfig::validate() const {
  const std::array<const std::string*, 4> all = {&pre, &suf, &mid, &eos};
  const std::array<const char*, 4> names = {"pre", "suf", "mid", "eos"};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i]->empty())
      throw ConfigError(std::string("sentinel '") + names[i] +
                        "' must be non-empty");
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      if (all[j]->find(*all[i]) != std::string::npos)
        throw ConfigError(std::string("sentinel '") + names[i] +
                          "' occurs inside sentinel '" + names[j] + "'");
    }
  }
}

FimExample split_document(std::string_view doc, SplitIndices split) {
  if (doc.empty()) throw InvalidSplit("cannot split an empty document");
  const auto offsets = code_point_offsets(doc);
  const std::size_t n = offsets.size() - 1;
  if (split.begin > split.end || split.end > n)
    throw InvalidSplit("split indices out of order or out of range");
  FimExample ex;
  ex.prefix = std::string(doc.substr(0, offsets[split.begin]));
  ex.middle = std::string(
      doc.substr(offsets[split.begin], offsets[split.end] - offsets[split.begin]));
  ex.suffix = std::string(doc.substr(offsets[split.end]));
  return ex;
}

FimExample split_document(std::string_view doc, std::uint64_t seed) {
  if (doc.empty()) throw InvalidSplit("cannot split an empty document");
  const std::size_t n = count_code_points(doc);
  auto engine = rng::make_engine(seed);
  // begin uniform over [0, n-1], end uniform over (begin, n]; the middle is
  // therefore never empty.
  const std::size_t begin = rng::index(engine, n);
  const std::size_t end =
      begin + 1 + static_cast<std::size_t>(rng::below(engine, n - begin));
  return split_document(doc, SplitIndices{begin, end});
}

namespace {

void check_collision(const FimExample& ex, const SentinelConfig& s) {
  const std::array<const std::string*, 4> sentinels = {&s.pre, &s.suf, &s.mid,
                                                       &s.eos};
  const std::array<const std::string*, 3> fields = {&ex.prefix, &ex.middle,
                                                    &ex.suffix};
  const std::array<const char*, 3> field_names = {"prefix", "middle", "suffix"};
  for (std::size_t f = 0; f < fields.size(); ++f) {
    for (const auto* sentinel : sentinels) {
      if (fields[f]->find(*sentinel) != std::string::npos)
        throw SentinelCollision("sentinel '" + *sentinel + "' occurs in " +
                                field_names[f]);
    }
  }
}

}  // namespace

std::string format_psm(const FimExample& ex, const SentinelConfig& s,
                       bool include_target) {
  s.validate();
  check_collision(ex, s);
  std::string out;
  out.reserve(ex.prefix.size() + ex.middle.size() + ex.suffix.size() +
              s.pre.size() + s.suf.size() + s.mid.size() + s.eos.size());
  out += s.pre;
  out += ex.prefix;
  out += s.suf;
  out += ex.suffix;
  out += s.mid;
  if (include_target) {
    out += ex.middle;
    out += s.eos;
  }
  return out;
}

FimExample parse_psm(std::string_view text, const SentinelConfig& s) {
  s.validate();
  if (text.substr(0, s.pre.size()) != s.pre)
    throw MalformedPsm(s.pre, "text does not start with '" + s.pre + "'");
  const std::size_t prefix_begin = s.pre.size();
  const std::size_t suf_pos = text.find(s.suf, prefix_begin);
  if (suf_pos == std::string_view::npos)
    throw MalformedPsm(s.suf, "missing '" + s.suf + "'");
  const std::size_t suffix_begin = suf_pos + s.suf.size();
  const std::size_t mid_pos = text.find(s.mid, suffix_begin);
  if (mid_pos == std::string_view::npos)
    throw MalformedPsm(s.mid, "missing '" + s.mid + "'");
  const std::size_t middle_begin = mid_pos + s.mid.size();

  FimExample ex;
  ex.prefix = std::string(text.substr(prefix_begin, suf_pos - prefix_begin));
  ex.suffix = std::string(text.substr(suffix_begin, mid_pos - suffix_begin));
  const std::size_t eos_pos = text.find(s.eos, middle_begin);
  if (eos_pos == std::string_view::npos) {
    // Prompt form: nothing may follow the middle sentinel.
    if (middle_begin != text.size())
      throw MalformedPsm(s.eos, "unterminated middle: missing '" + s.eos + "'");
    return ex;
  }
  if (eos_pos + s.eos.size() != text.size())
    throw MalformedPsm(s.eos, "content after '" + s.eos + "'");
  ex.middle = std::string(text.substr(middle_begin, eos_pos - middle_begin));
  return ex;
}

std::vector<std::string> apply_fim_rate(std::span<const std::string> docs,
                                        double rate, std::uint64_t seed,
                                        const SentinelConfig& s) {
  if (rate < 0.0 || rate > 1.0)
    throw ConfigError("rate must lie in [0, 1]");
  s.validate();
  std::vector<std::string> out;
  out.reserve(docs.size());
  auto engine = rng::make_engine(seed);
  for (const std::string& doc : docs) {
    // One selection draw per document, then an independent per-document
    // split stream so the transformed output does not depend on how many
    // earlier documents were selected.
    const double u = rng::unit(engine);
    const std::uint64_t split_seed = rng::derive_seed(seed, engine());
    if (doc.empty() || u >= rate) {
      out.push_back(doc);
      continue;
    }
    FimExample ex = split_document(doc, split_seed);
    out.push_back(format_psm(ex, s, /*include_target=*/true));
  }
  return out;
}

}  // namespace memaudit
