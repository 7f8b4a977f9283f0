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

#ifndef LEROY_CLOSING_HPP
#define LEROY_CLOSING_HPP

#include <set>
#include <string>
#include <vector>

#include "leroy/search.hpp"

namespace leroy {

struct LivenessFacts {
  std::vector<std::string> live_in;   // first-use order
  std::vector<std::string> assigned;  // first-assignment order
  std::vector<std::vector<std::string>> live_out_per_site;  // sorted, one per site
};

struct ReturnPlan {
  enum class Kind {
    Single,    // return x; call sites needing x write `x = f(...)`
    Multiple,  // return [a, b, ...]; call sites unpack by subscription
    LastExpr,  // value of the trailing expression (or nothing); bare call
  };
  Kind kind = Kind::LastExpr;
  std::vector<std::string> names;
};

const char *to_string(ReturnPlan::Kind k);

struct ClosedAbstraction {
  std::string name;
  Pattern pattern;
  std::vector<std::string> params;  // _param0.. then live-in names
  std::vector<Stmt> body;           // including the trailing return, if any
  ReturnPlan plan;
  LivenessFacts facts;

  int hole_params() const { return pattern.arity; }
  Stmt definition() const { return Stmt::make_def(name, params, body); }
};

class ClosureFailure : public Error {
public:
  using Error::Error;
};

/// Identifiers a fragment reads, in evaluation order (duplicates kept).
void reads_of(const Expr &e, std::vector<std::string> &out);
void reads_of(const Stmt &s, std::vector<std::string> &out);

/// Every identifier appearing anywhere in a fragment.
void names_of(const Expr &e, std::set<std::string> &out);
void names_of(const Stmt &s, std::set<std::string> &out);

/// Straight-line liveness for every site of `c`. `corpus` holds the
/// lispified programs the sites refer to.
LivenessFacts analyze_liveness(const Candidate &c, const std::vector<SExpr> &corpus);

/// Adds live-in parameters and the return statement. Throws ClosureFailure
/// when a body identifier collides with a generated parameter name.
ClosedAbstraction close(const Candidate &c, const LivenessFacts &facts, const std::string &name);

}  // namespace leroy

#endif  // LEROY_CLOSING_HPP
