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

#ifndef LEROY_VOCABULARY_HPP
#define LEROY_VOCABULARY_HPP

#include <span>
#include <string_view>

#include "leroy/sexpr.hpp"

namespace leroy {

/// One head symbol of the encoding: which AST construct it stands for, the
/// syntactic kind it produces, the kinds of its children, and how many AST
/// nodes the head itself accounts for.
struct HeadInfo {
  std::string_view symbol;
  SlotKind produces;
  std::span<const SlotKind> slots;
  int weight;
  bool canonical;  // emitted by lispify; false for input-only aliases
};

/// Head lookup by symbol; nullptr when outside the vocabulary.
const HeadInfo *find_head(std::string_view symbol);

/// All heads, canonical first, in fixed enumeration order.
std::span<const HeadInfo> vocabulary();

/// Kind of syntactic position the node can fill on its own (holes and open
/// tails report nullopt: they fit anywhere).
std::optional<SlotKind> produced_kind(const SExpr &node);

/// True when `node` is acceptable in a slot of kind `slot`.
bool fits(SlotKind slot, const SExpr &node);

/// Slot kind of child `index` under `parent`; nullopt for atoms or
/// out-of-range children.
std::optional<SlotKind> child_slot(const SExpr &parent, std::size_t index);

bool is_spine(SlotKind k);

}  // namespace leroy

#endif  // LEROY_VOCABULARY_HPP
