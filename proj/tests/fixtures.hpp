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

// Loading fixture corpora from tests/data and checking rewritten corpora
// against the originals with the interpreter.

#ifndef LEROY_TESTS_FIXTURES_HPP
#define LEROY_TESTS_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "leroy/interp.hpp"
#include "leroy/learn.hpp"

namespace leroy::testing {

struct Fixture {
  std::vector<std::string> names;  // file stems, sorted
  std::vector<Program> programs;
  std::vector<InputScript> inputs;  // empty script when there is no .in file
  std::vector<bool> has_input;
};

std::filesystem::path data_dir();
std::string slurp(const std::filesystem::path &p);
Fixture load_fixture(const std::filesystem::path &dir);

LearnResult learn(const Fixture &f, int min_size = 20, int threads = 1);

/// Programs (with input scripts) whose emitted rewrite prints something
/// different from the original; "" when all agree.
std::string semantic_mismatches(const Fixture &f, const LearnResult &r);

/// Runs a command through the shell and returns its exit status.
int run_command(const std::string &cmd);

}  // namespace leroy::testing

#endif  // LEROY_TESTS_FIXTURES_HPP
