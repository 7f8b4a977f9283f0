// Copyright 2026 The Leroy Authors. All rights reserved.
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

#ifndef LEROY_REPORT_HPP
#define LEROY_REPORT_HPP

#include <optional>
#include <string>

#include "leroy/rewrite.hpp"

namespace leroy {

struct OracleSummary {
  std::size_t programs_checked = 0;
  std::size_t mismatches = 0;
};

/// The JSON report, pretty-printed with stable key order.
std::string report_json(const CompressionReport &r,
                        const std::optional<OracleSummary> &oracle = std::nullopt);

}  // namespace leroy

#endif  // LEROY_REPORT_HPP
