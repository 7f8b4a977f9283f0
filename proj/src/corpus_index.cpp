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

#include "leroy/corpus_index.hpp"

#include "leroy/vocabulary.hpp"

namespace leroy {

bool is_learned_name(std::string_view name) {
  return name.starts_with("_leroy_fn");
}

std::tuple<int, std::string, long long> label_key(const SExpr &s) {
  switch (s.kind) {
  case SKind::App:
  case SKind::Ident:
  case SKind::Op:
    return {static_cast<int>(s.kind), s.text, 0};
  case SKind::Int:
  case SKind::Bool:
  case SKind::Hole:
    return {static_cast<int>(s.kind), "", s.value};
  case SKind::Rest:
  case SKind::Eps:
    return {static_cast<int>(s.kind), "", 0};
  }
  return {};
}

CorpusIndex::CorpusIndex(std::vector<SExpr> programs) : programs_(std::move(programs)) {
  for (std::size_t i = 0; i < programs_.size(); ++i) {
    const SExpr &p = programs_[i];
    SlotKind slot = p.is_app("StatementList") ? SlotKind::StmtSeq
                    : produced_kind(p).value_or(SlotKind::Expr);
    roots_.push_back(add(p, static_cast<int>(i), -1, -1, slot, false));
  }
  for (const CorpusNode &n : nodes_)
    if (n.extractable)
      extractable_.push_back(static_cast<int>(&n - nodes_.data()));
}

int CorpusIndex::intern_label(const SExpr &s) {
  auto key = label_key(s);
  auto [it, inserted] = label_ids_.emplace(key, static_cast<int>(protos_.size()));
  if (inserted) {
    SExpr proto = s;
    proto.kids.clear();
    protos_.push_back(std::move(proto));
  }
  return it->second;
}

int CorpusIndex::find_label(const SExpr &s) const {
  auto it = label_ids_.find(label_key(s));
  return it == label_ids_.end() ? -1 : it->second;
}

int CorpusIndex::add(const SExpr &s, int program, int parent, int child_index,
                     SlotKind slot, bool in_learned) {
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  {
    CorpusNode &n = nodes_.back();
    n.expr = &s;
    n.program = program;
    n.parent = parent;
    n.child_index = child_index;
    n.slot = slot;
  }
  int label = intern_label(s);

  bool learned_here = in_learned;
  if (s.is_app("def") && !s.kids.empty() && s.kids[0].kind == SKind::Ident &&
      is_learned_name(s.kids[0].text))
    learned_here = true;

  std::vector<int> kids;
  int size = 0;
  for (std::size_t i = 0; i < s.kids.size(); ++i) {
    SlotKind ks = child_slot(s, i).value_or(SlotKind::Expr);
    int k = add(s.kids[i], program, id, static_cast<int>(i), ks, learned_here);
    kids.push_back(k);
    size += nodes_[static_cast<std::size_t>(k)].size;
  }
  std::vector<int> kid_classes;
  for (int k : kids)
    kid_classes.push_back(nodes_[static_cast<std::size_t>(k)].cls);
  auto [it, inserted] = classes_.emplace(std::make_pair(label, std::move(kid_classes)),
                                         static_cast<int>(classes_.size()));
  (void)inserted;

  CorpusNode &n = nodes_[static_cast<std::size_t>(id)];
  n.label = label;
  n.cls = it->second;
  n.weight = static_cast<int>(sexpr_ast_size(SExpr{s.kind, s.text, s.value, {}}));
  if (s.kind == SKind::App)
    n.weight = find_head(s.text) ? find_head(s.text)->weight : 0;
  n.size = size + n.weight;
  n.end = static_cast<int>(nodes_.size()) - 1;
  n.kids = std::move(kids);
  bool expr_like = (s.kind == SKind::Int || s.kind == SKind::Bool ||
                    (s.kind == SKind::App && produced_kind(s) == SlotKind::Expr)) &&
                   slot == SlotKind::Expr;
  n.extractable = !in_learned && !learned_here && (expr_like || s.is_app("StatementList"));
  return id;
}

std::vector<int> CorpusIndex::path_of(int id) const {
  std::vector<int> path;
  for (int cur = id; node(cur).parent >= 0; cur = node(cur).parent)
    path.push_back(node(cur).child_index);
  return {path.rbegin(), path.rend()};
}

}  // namespace leroy
