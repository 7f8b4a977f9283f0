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

#include "fixtures.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "leroy/parser.hpp"
#include "leroy/unparse.hpp"

namespace fs = std::filesystem;

namespace leroy::testing {

fs::path data_dir() { return LEROY_TEST_DATA; }

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture load_fixture(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.path().extension() == ".py") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Fixture f;
  for (const auto &p : files) {
    f.names.push_back(p.stem().string());
    f.programs.push_back(parse_program(slurp(p), p.filename().string()));
    auto in = fs::path(p).replace_extension(".in");
    f.has_input.push_back(fs::exists(in));
    f.inputs.push_back(fs::exists(in) ? parse_input_script(slurp(in)) : InputScript{});
  }
  return f;
}

LearnResult learn(const Fixture &f, int min_size, int threads) {
  LearnOptions opts;
  opts.search.min_body_size = min_size;
  opts.threads = threads;
  return learn_library(f.programs, opts);
}

std::string semantic_mismatches(const Fixture &f, const LearnResult &r) {
  std::string bad;
  for (std::size_t i = 0; i < f.programs.size(); ++i) {
    if (!f.has_input[i]) continue;
    // Compare what would be written to disk, not the in-memory tree.
    Program emitted = parse_program(unparse(with_definitions(r.rewritten[i], r.library)));
    auto before = run_capture(f.programs[i], f.inputs[i]);
    auto after = run_capture(emitted, f.inputs[i]);
    if (!before.agrees_with(after)) bad += f.names[i] + " ";
  }
  return bad;
}

int run_command(const std::string &cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace leroy::testing
