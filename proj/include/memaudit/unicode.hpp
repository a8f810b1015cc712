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
#include <string>
#include <string_view>
#include <vector>

namespace memaudit {

/// A string decoded to Unicode scalar values. All distances in this library
/// are computed over scalars, not bytes, so multi-byte characters count as
/// single edit units.
using CodePoints = std::u32string;

/// Decodes UTF-8. Bytes that do not form a valid sequence are mapped to
/// 0xDC00 + byte so malformed input stays deterministic and distinct.
CodePoints decode_utf8(std::string_view text);

/// Number of Unicode scalars in the UTF-8 string.
std::size_t count_code_points(std::string_view text);

/// Byte offset of each scalar boundary, including the one-past-the-end
/// offset. Offsets.size() == count_code_points(text) + 1.
std::vector<std::size_t> code_point_offsets(std::string_view text);

}  // namespace memaudit
