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

#ifndef LEROY_PRUNE_HPP
#define LEROY_PRUNE_HPP

#include <optional>
#include <string>

#include "leroy/pattern.hpp"

namespace leroy {

enum class PruneReason { MacroLike, InvalidParameter, TooSmall, CallsLearnedAbstraction };

const char *to_string(PruneReason r);

struct PruneVerdict {
  bool kept = true;
  std::optional<PruneReason> reason;
  std::string detail;

  static PruneVerdict keep() { return {}; }
  static PruneVerdict reject(PruneReason r, std::string detail) {
    return {false, r, std::move(detail)};
  }
};

struct PruneStats {
  long long macro_like = 0;
  long long invalid_parameter = 0;
  long long too_small = 0;
  long long calls_abstraction = 0;

  void add(PruneReason r, long long n = 1);
  long long total() const {
    return macro_like + invalid_parameter + too_small + calls_abstraction;
  }
  PruneStats &operator+=(const PruneStats &o);
  friend bool operator==(const PruneStats &, const PruneStats &) = default;
};

/// Incomplete nodes, malformed spines, misplaced `#rest`, roots that cannot
/// be replaced by a call, and bodies containing `def` or `return` (which only
/// make sense when pasted back textually).
PruneVerdict check_macro_like(const Pattern &p);

/// Holes in any position other than an expression slot.
PruneVerdict check_parameters(const Pattern &p);

/// Body size with holes counting one node each.
PruneVerdict check_size(const Pattern &p, int min_size);

/// Bodies mentioning an already learned `_leroy_fn*` name.
PruneVerdict check_calls_learned(const Pattern &p);

/// All checks in the fixed order above; the first failure wins.
PruneVerdict prune(const Pattern &p, int min_size);

}  // namespace leroy

#endif  // LEROY_PRUNE_HPP
