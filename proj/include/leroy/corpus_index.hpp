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

#ifndef LEROY_CORPUS_INDEX_HPP
#define LEROY_CORPUS_INDEX_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "leroy/sexpr.hpp"

namespace leroy {

/// Flat, read-only view of a lispified corpus. Every node gets an id; ids are
/// assigned in preorder, program by program, so comparing ids compares
/// positions.
struct CorpusNode {
  const SExpr *expr = nullptr;
  int label = 0;     // interned (kind, head/name/value)
  int cls = 0;       // structural class: equal iff subtrees are equal
  int weight = 0;    // AST nodes contributed by this node alone
  int size = 0;      // AST nodes of the whole subtree
  int program = 0;
  int parent = -1;
  int child_index = -1;
  int end = 0;       // id of the last node in this subtree
  SlotKind slot = SlotKind::Expr;
  bool extractable = false;  // may be the root of a match
  std::vector<int> kids;
};

class CorpusIndex {
public:
  explicit CorpusIndex(std::vector<SExpr> programs);

  const CorpusNode &node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int program_count() const { return static_cast<int>(programs_.size()); }
  const SExpr &program(int i) const { return programs_[static_cast<std::size_t>(i)]; }
  int program_root(int i) const { return roots_[static_cast<std::size_t>(i)]; }

  /// Leaf (or head-only) form of a label; kids are left empty.
  const SExpr &label_proto(int label) const { return protos_[static_cast<std::size_t>(label)]; }
  int label_count() const { return static_cast<int>(protos_.size()); }
  /// Interned id of the label of `s`, or -1 when it never occurs.
  int find_label(const SExpr &s) const;

  /// Child-index path from the program root.
  std::vector<int> path_of(int id) const;

  /// Ids of all extractable nodes, in order.
  const std::vector<int> &roots() const { return extractable_; }

private:
  int intern_label(const SExpr &s);
  int add(const SExpr &s, int program, int parent, int child_index, SlotKind slot,
          bool in_learned);

  std::vector<SExpr> programs_;
  std::vector<int> roots_;
  std::vector<CorpusNode> nodes_;
  std::vector<SExpr> protos_;
  std::map<std::tuple<int, std::string, long long>, int> label_ids_;
  std::map<std::pair<int, std::vector<int>>, int> classes_;
  std::vector<int> extractable_;
};

/// Label key used for interning and ordering concrete expansions.
std::tuple<int, std::string, long long> label_key(const SExpr &s);

bool is_learned_name(std::string_view name);

}  // namespace leroy

#endif  // LEROY_CORPUS_INDEX_HPP
