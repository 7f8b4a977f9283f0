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

#include "leroy/search.hpp"

#include <algorithm>

#include "leroy/vocabulary.hpp"

namespace leroy {

bool match_at(const CorpusIndex &index, const SExpr &pat, int node,
              std::vector<int> &bindings, int &rest) {
  const CorpusNode &n = index.node(node);
  const SExpr &s = *n.expr;
  switch (pat.kind) {
  case SKind::Hole: {
    if (s.kind == SKind::Eps || s.kind == SKind::Op || s.is_app("ParamList"))
      return false;
    auto k = static_cast<std::size_t>(pat.value);
    if (bindings.size() <= k)
      bindings.resize(k + 1, -1);
    if (bindings[k] < 0) {
      bindings[k] = node;
      return true;
    }
    return index.node(bindings[k]).cls == n.cls;
  }
  case SKind::Rest:
    if (!(s.is_app("StatementList") || s.kind == SKind::Eps))
      return false;
    rest = node;
    return true;
  default:
    break;
  }
  if (label_key(pat) != label_key(s) || pat.kids.size() != n.kids.size())
    return false;
  for (std::size_t i = 0; i < pat.kids.size(); ++i)
    if (!match_at(index, pat.kids[i], n.kids[i], bindings, rest))
      return false;
  return true;
}

std::vector<std::size_t> select_non_overlapping(const CorpusIndex &index,
                                                const std::vector<int> &roots,
                                                const std::vector<int> &rests) {
  std::vector<std::size_t> chosen;
  int program = -1;
  int last_end = -1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const CorpusNode &n = index.node(roots[i]);
    if (n.program == program && roots[i] <= last_end)
      continue;
    program = n.program;
    last_end = rests[i] >= 0 ? rests[i] - 1 : n.end;
    chosen.push_back(i);
  }
  return chosen;
}

namespace {

MatchSite make_site(const CorpusIndex &index, int root, const std::vector<int> &bindings,
                    int rest) {
  MatchSite site;
  site.node = root;
  site.program = index.node(root).program;
  site.path = index.path_of(root);
  for (int b : bindings)
    site.bindings.push_back(*index.node(b).expr);
  if (rest >= 0)
    site.tail_rest = *index.node(rest).expr;
  return site;
}

}  // namespace

std::vector<MatchSite> find_matches(const Pattern &pat, const CorpusIndex &index) {
  std::vector<int> roots, rests;
  std::vector<std::vector<int>> binds;
  for (int id : index.roots()) {
    std::vector<int> b(static_cast<std::size_t>(pat.arity), -1);
    int rest = -1;
    if (match_at(index, pat.body, id, b, rest)) {
      roots.push_back(id);
      rests.push_back(rest);
      binds.push_back(std::move(b));
    }
  }
  std::vector<MatchSite> sites;
  for (std::size_t i : select_non_overlapping(index, roots, rests))
    sites.push_back(make_site(index, roots[i], binds[i], rests[i]));
  return sites;
}

std::vector<MatchSite> find_matches(const Pattern &pat, const std::vector<SExpr> &corpus) {
  CorpusIndex index(corpus);
  return find_matches(pat, index);
}

Stmt definition_of(const Pattern &pat, const std::string &name) {
  std::vector<std::string> params;
  for (int k = 0; k < pat.arity; ++k)
    params.push_back(param_name(k));
  std::vector<Stmt> body;
  if (pat.root_kind() == RootKind::Spine)
    body = to_stmts(pat.body);
  else
    body.push_back(Stmt::make_return(to_expr(pat.body)));
  return Stmt::make_def(name, std::move(params), std::move(body));
}

Expr call_of(const std::string &name, const std::vector<SExpr> &args) {
  std::vector<Expr> xs;
  for (const SExpr &a : args)
    xs.push_back(to_expr(a));
  return Expr::make_call(Expr::make_name(name), std::move(xs));
}

std::int64_t utility(const Pattern &pat, const std::vector<MatchSite> &sites) {
  const std::string name = "f";
  bool spine = pat.root_kind() == RootKind::Spine;
  auto total = -static_cast<std::int64_t>(ast_size(definition_of(pat, name)));
  for (const MatchSite &site : sites) {
    SExpr region = instantiate(pat.body, site.bindings);
    Expr call = call_of(name, site.bindings);
    std::size_t before = spine ? ast_size(to_stmts(region)) : ast_size(to_expr(region));
    std::size_t after = spine ? ast_size(Stmt::make_expr(std::move(call))) : ast_size(call);
    total += static_cast<std::int64_t>(before) - static_cast<std::int64_t>(after);
  }
  return total;
}

namespace {

struct PNode {
  enum class Type { Open, Concrete, Param, Rest };
  Type type = Type::Open;
  int label = -1;
  int param = -1;
  SlotKind slot = SlotKind::StmtSeq;
  bool tail_ok = false;  // on the root spine: may become #rest
  bool root = false;
  std::vector<int> kids;
};

// A partial pattern together with its match table: cols[p][r] is the node
// that pattern node p is aligned with in match r.
struct State {
  std::vector<PNode> pat;
  std::vector<std::vector<int>> cols;
  std::vector<int> open;   // back() is the leftmost open slot
  std::vector<int> first;  // pattern node of each parameter's first occurrence
  int concrete_weight = 0;
  int occurrences = 0;
  int rest = -1;

  std::size_t rows() const { return cols[0].size(); }
};

class Searcher {
public:
  Searcher(const CorpusIndex &index, const SearchConfig &cfg) : index_(index), cfg_(cfg) {
    order_.resize(static_cast<std::size_t>(index.label_count()));
    auto vocab = vocabulary();
    for (int l = 0; l < index.label_count(); ++l) {
      const SExpr &p = index.label_proto(l);
      int group = 5;
      long long rank = 0;
      switch (p.kind) {
      case SKind::App:
        group = 0;
        for (std::size_t i = 0; i < vocab.size(); ++i)
          if (vocab[i].symbol == p.text)
            rank = static_cast<long long>(i);
        break;
      case SKind::Int: group = 1; rank = p.value; break;
      case SKind::Bool: group = 2; rank = p.value; break;
      case SKind::Ident: group = 3; break;
      case SKind::Eps: group = 4; break;
      default: break;
      }
      order_[static_cast<std::size_t>(l)] = {group, rank, p.text};
    }
  }

  SearchOutcome run() {
    State st;
    PNode root;
    root.root = true;
    st.pat.push_back(root);
    st.cols.push_back(index_.roots());
    st.open.push_back(0);
    expand(st);
    if (best_)
      out_.best = std::move(best_);
    return std::move(out_);
  }

private:
  const CorpusNode &node(int id) const { return index_.node(id); }

  bool spine_root(const State &st) const {
    return st.pat[0].type == PNode::Type::Concrete &&
           index_.label_proto(st.pat[0].label).is_app("StatementList");
  }

  std::int64_t bound(const State &st) const {
    bool spine = spine_root(st);
    std::int64_t base = spine ? 3 : 2;
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < st.rows(); ++r) {
      std::int64_t s = st.concrete_weight - base;
      for (int o : st.open)
        s += node(st.cols[static_cast<std::size_t>(o)][r]).size;
      for (std::size_t p = 0; p < st.pat.size(); ++p)
        if (st.pat[p].type == PNode::Type::Param)
          s += node(st.cols[p][r]).size;
      for (int f : st.first)
        s -= node(st.cols[static_cast<std::size_t>(f)][r]).size;
      sum += std::max<std::int64_t>(0, s);
    }
    std::int64_t def = 1 + static_cast<std::int64_t>(st.first.size()) + st.concrete_weight +
                       st.occurrences;
    if (st.pat[0].type == PNode::Type::Concrete && !spine)
      ++def;  // return
    for (int o : st.open) {
      SlotKind k = st.pat[static_cast<std::size_t>(o)].slot;
      if (k == SlotKind::Expr || k == SlotKind::Stmt || k == SlotKind::Target)
        ++def;
    }
    return sum - def;
  }

  // Largest body any completion can have.
  std::int64_t max_body(const State &st) const {
    std::int64_t most = 0;
    for (std::size_t r = 0; r < st.rows(); ++r) {
      std::int64_t s = 0;
      for (int o : st.open)
        s += node(st.cols[static_cast<std::size_t>(o)][r]).size;
      most = std::max(most, s);
    }
    return st.concrete_weight + st.occurrences + most;
  }

  State filtered(const State &st, const std::vector<char> &keep) const {
    State out = st;
    for (std::size_t p = 0; p < st.cols.size(); ++p) {
      std::vector<int> &c = out.cols[p];
      c.clear();
      for (std::size_t r = 0; r < st.rows(); ++r)
        if (keep[r])
          c.push_back(st.cols[p][r]);
    }
    return out;
  }

  SExpr render(const State &st, int p) const {
    const PNode &n = st.pat[static_cast<std::size_t>(p)];
    switch (n.type) {
    case PNode::Type::Param: return SExpr::hole(n.param);
    case PNode::Type::Rest: return SExpr::rest();
    case PNode::Type::Open: throw InternalError("rendering an incomplete pattern");
    case PNode::Type::Concrete: break;
    }
    SExpr s = index_.label_proto(n.label);
    for (int k : n.kids)
      s.kids.push_back(render(st, k));
    return s;
  }

  void complete(const State &st) {
    Pattern pat;
    pat.body = render(st, 0);
    pat.arity = static_cast<int>(st.first.size());
    for (int k = 0; k < pat.arity; ++k)
      pat.hole_order.push_back(k);
    std::string key = pat.str();
    if (cfg_.excluded.count(key))
      return;
    ++out_.completed;
    PruneVerdict v = prune(pat, cfg_.min_body_size);
    if (!v.kept) {
      out_.pruned.add(*v.reason);
      return;
    }
    std::vector<int> rests(st.rows(), -1);
    if (st.rest >= 0)
      rests = st.cols[static_cast<std::size_t>(st.rest)];
    std::vector<std::size_t> chosen = select_non_overlapping(index_, st.cols[0], rests);
    if (chosen.size() < 2)
      return;
    Candidate c;
    for (std::size_t i : chosen) {
      std::vector<int> binds;
      for (int f : st.first)
        binds.push_back(st.cols[static_cast<std::size_t>(f)][i]);
      c.sites.push_back(make_site(index_, st.cols[0][i], binds, rests[i]));
    }
    c.utility = utility(pat, c.sites);
    if (cfg_.frontier)
      *cfg_.frontier << c.utility << '\t' << key << '\n';
    if (c.utility <= 0)
      return;
    if (!best_ || c.utility > best_->utility ||
        (c.utility == best_->utility && key < best_key_)) {
      c.pattern = std::move(pat);
      best_ = std::move(c);
      best_key_ = std::move(key);
    }
  }

  void expand_concrete(const State &st, int o, int label) {
    std::vector<char> keep(st.rows());
    const std::vector<int> &col = st.cols[static_cast<std::size_t>(o)];
    for (std::size_t r = 0; r < st.rows(); ++r)
      keep[r] = node(col[r]).label == label;
    State ch = filtered(st, keep);
    ch.open.pop_back();
    const CorpusNode &sample = node(ch.cols[static_cast<std::size_t>(o)][0]);
    const SExpr &proto = index_.label_proto(label);
    bool spine = proto.is_app("StatementList");
    bool on_root_spine = st.pat[static_cast<std::size_t>(o)].root ||
                         st.pat[static_cast<std::size_t>(o)].tail_ok;
    ch.concrete_weight += sample.weight;
    std::vector<int> kids;
    for (std::size_t i = 0; i < sample.kids.size(); ++i) {
      PNode k;
      k.slot = child_slot(proto, i).value_or(SlotKind::Expr);
      k.tail_ok = spine && i == 1 && on_root_spine;
      kids.push_back(static_cast<int>(ch.pat.size()));
      ch.pat.push_back(k);
      std::vector<int> c;
      c.reserve(ch.rows());
      for (int id : ch.cols[static_cast<std::size_t>(o)])
        c.push_back(node(id).kids[i]);
      ch.cols.push_back(std::move(c));
    }
    PNode &pn = ch.pat[static_cast<std::size_t>(o)];
    pn.type = PNode::Type::Concrete;
    pn.label = label;
    pn.kids = kids;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
      ch.open.push_back(*it);
    expand(ch);
  }

  void expand(const State &st) {
    ++out_.expanded;
    if (st.rows() < 2)
      return;
    if (!cfg_.exhaustive) {
      std::int64_t b = bound(st);
      if (b <= 0 || (best_ && b < best_->utility))
        return;
    }
    if (max_body(st) < cfg_.min_body_size && st.pat[0].type != PNode::Type::Open) {
      out_.pruned.add(PruneReason::TooSmall);
      return;
    }
    if (st.open.empty()) {
      complete(st);
      return;
    }
    int o = st.open.back();
    const PNode slot = st.pat[static_cast<std::size_t>(o)];
    const std::vector<int> &col = st.cols[static_cast<std::size_t>(o)];

    std::vector<int> labels;
    for (int id : col)
      labels.push_back(node(id).label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::sort(labels.begin(), labels.end(), [&](int a, int b) {
      return order_[static_cast<std::size_t>(a)] < order_[static_cast<std::size_t>(b)];
    });
    for (int l : labels) {
      const SExpr &proto = index_.label_proto(l);
      if (proto.is_app("def") || proto.is_app("return")) {
        out_.pruned.add(PruneReason::MacroLike);
        continue;
      }
      if (proto.kind == SKind::Ident && is_learned_name(proto.text)) {
        out_.pruned.add(PruneReason::CallsLearnedAbstraction);
        continue;
      }
      expand_concrete(st, o, l);
    }
    if (slot.root)
      return;

    if (slot.slot == SlotKind::Expr) {
      for (std::size_t j = 0; j < st.first.size(); ++j) {
        const std::vector<int> &fc = st.cols[static_cast<std::size_t>(st.first[j])];
        std::vector<char> keep(st.rows());
        bool any = false;
        for (std::size_t r = 0; r < st.rows(); ++r) {
          keep[r] = node(col[r]).cls == node(fc[r]).cls;
          any = any || keep[r];
        }
        if (!any)
          continue;
        State ch = filtered(st, keep);
        ch.open.pop_back();
        ch.pat[static_cast<std::size_t>(o)].type = PNode::Type::Param;
        ch.pat[static_cast<std::size_t>(o)].param = static_cast<int>(j);
        ++ch.occurrences;
        expand(ch);
      }
      if (static_cast<int>(st.first.size()) < cfg_.max_arity) {
        State ch = st;
        ch.open.pop_back();
        ch.pat[static_cast<std::size_t>(o)].type = PNode::Type::Param;
        ch.pat[static_cast<std::size_t>(o)].param = static_cast<int>(st.first.size());
        ch.first.push_back(o);
        ++ch.occurrences;
        expand(ch);
      }
    } else {
      out_.pruned.add(PruneReason::InvalidParameter);
    }

    if (slot.tail_ok) {
      State ch = st;
      ch.open.pop_back();
      ch.pat[static_cast<std::size_t>(o)].type = PNode::Type::Rest;
      ch.rest = o;
      expand(ch);
    }
  }

  const CorpusIndex &index_;
  const SearchConfig &cfg_;
  std::vector<std::tuple<int, long long, std::string>> order_;
  SearchOutcome out_;
  std::optional<Candidate> best_;
  std::string best_key_;
};

}  // namespace

SearchOutcome search_best(const CorpusIndex &index, const SearchConfig &cfg) {
  if (cfg.min_body_size < 1 || cfg.max_arity < 0)
    throw Error("search needs min_body_size >= 1 and max_arity >= 0");
  return Searcher(index, cfg).run();
}

std::optional<Candidate> search_best(const std::vector<SExpr> &corpus, const SearchConfig &cfg) {
  CorpusIndex index(corpus);
  return search_best(index, cfg).best;
}

}  // namespace leroy
