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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "leroy/interp.hpp"
#include "leroy/learn.hpp"
#include "leroy/parallel.hpp"
#include "leroy/parser.hpp"
#include "leroy/report.hpp"
#include "leroy/unparse.hpp"

namespace fs = std::filesystem;
using namespace leroy;

namespace {

// Bad input: parse errors, missing files, empty corpus.
class UsageError : public Error {
public:
  using Error::Error;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path &p, const std::string &text) {
  std::ofstream out(p, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + p.string());
  out << text;
}

struct CorpusFile {
  fs::path path;
  std::string name;
  Program program;
  std::optional<InputScript> input;
};

std::vector<CorpusFile> load_corpus(const fs::path &dir, int threads) {
  if (!fs::is_directory(dir))
    throw UsageError(dir.string() + ": not a directory");
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".py")
      files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path &a, const fs::path &b) { return a.filename() < b.filename(); });
  if (files.empty())
    throw UsageError(dir.string() + ": no programs found");
  std::vector<CorpusFile> corpus(files.size());
  parallel_for(files.size(), threads, [&](std::size_t i) {
    CorpusFile &f = corpus[i];
    f.path = files[i];
    f.name = files[i].filename().string();
    f.program = parse_program(slurp(files[i]), files[i].string(), static_cast<int>(i));
    fs::path in = files[i];
    in.replace_extension(".in");
    if (fs::exists(in))
      f.input = parse_input_script(slurp(in));
  });
  return corpus;
}

std::string text_of(const Program &p) { return unparse(p) + "\n"; }

int learn_command(const fs::path &corpus_dir, const fs::path &out_dir, int min_size,
                  int max_arity, std::optional<fs::path> report_path, bool dump_sexpr,
                  bool oracle_check, std::optional<fs::path> frontier, bool verbose) {
  int threads = thread_count();
  std::vector<CorpusFile> corpus = load_corpus(corpus_dir, threads);
  std::vector<Program> programs;
  for (const CorpusFile &f : corpus)
    programs.push_back(f.program);

  LearnOptions opts;
  opts.search.min_body_size = min_size;
  opts.search.max_arity = max_arity;
  opts.threads = threads;
  std::ofstream frontier_out;
  if (frontier) {
    frontier_out.open(*frontier);
    opts.search.frontier = &frontier_out;
  }
  if (verbose)
    opts.log = &std::cerr;
  LearnResult res = learn_library(programs, opts);

  fs::create_directories(out_dir);
  std::vector<Program> emitted(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    emitted[i] = with_definitions(res.rewritten[i], res.library);
    std::string text = text_of(emitted[i]);
    if (!(parse_program(text, corpus[i].name) == emitted[i]))
      throw InternalError(corpus[i].name + ": emitted text does not re-parse to the same program");
    write_file(out_dir / corpus[i].name, text);
    if (dump_sexpr) {
      write_file(out_dir / (corpus[i].name + ".orig.sexpr"),
                 to_string(lispify(corpus[i].program)) + "\n");
      write_file(out_dir / (corpus[i].name + ".sexpr"), to_string(lispify(emitted[i])) + "\n");
    }
  });
  write_file(out_dir / "library.py",
             res.library.empty() ? std::string() : text_of(library_program(res.library)));

  std::optional<OracleSummary> oracle;
  if (oracle_check) {
    OracleSummary sum;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!corpus[i].input)
        continue;
      ++sum.programs_checked;
      RunOutcome before = run_capture(corpus[i].program, *corpus[i].input);
      RunOutcome after = run_capture(emitted[i], *corpus[i].input);
      if (!before.agrees_with(after)) {
        ++sum.mismatches;
        std::cerr << corpus[i].name << ": rewritten program behaves differently\n";
      }
    }
    oracle = sum;
  }

  std::string json = report_json(res.report, oracle);
  write_file(report_path.value_or(out_dir / "report.json"), json);
  std::cout << res.library.size() << " abstraction(s), compression ratio "
            << res.report.compression_ratio << ", library growth "
            << res.report.library_growth_pct << "%\n";
  if (oracle && oracle->mismatches > 0)
    throw InternalError("oracle check failed for " + std::to_string(oracle->mismatches) +
                        " program(s)");
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Library learning for a Python subset"};
  app.require_subcommand(1);

  fs::path corpus_dir, out_dir;
  int min_size = 20, max_arity = 4;
  std::optional<fs::path> report_path, frontier;
  bool dump_sexpr = false, oracle_check = false, verbose = false;
  CLI::App *learn = app.add_subcommand("learn", "learn a library and rewrite the corpus");
  learn->add_option("--corpus", corpus_dir, "directory of .py programs")->required();
  learn->add_option("--out", out_dir, "output directory")->required();
  learn->add_option("--min-size", min_size, "minimum abstraction body size in AST nodes")
      ->check(CLI::PositiveNumber);
  learn->add_option("--max-arity", max_arity, "maximum number of hole parameters")
      ->check(CLI::NonNegativeNumber);
  learn->add_option("--report", report_path, "report path (default OUT/report.json)");
  learn->add_flag("--dump-sexpr", dump_sexpr, "also write s-expressions of every program");
  learn->add_flag("--oracle-check", oracle_check,
                  "run original and rewritten programs that have a .in script and compare");
  learn->add_option("--frontier", frontier, "write every scored pattern with its utility");
  learn->add_flag("-v,--verbose", verbose, "log each round to stderr");

  fs::path file;
  std::optional<fs::path> input;
  CLI::App *lisp = app.add_subcommand("lispify", "print the s-expression of a program");
  lisp->add_option("file", file)->required();
  CLI::App *delisp = app.add_subcommand("delispify", "print the program of an s-expression");
  delisp->add_option("file", file)->required();
  CLI::App *run_cmd = app.add_subcommand("run", "interpret a program");
  run_cmd->add_option("file", file)->required();
  run_cmd->add_option("--input", input, "input script, one literal per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*learn)
      return learn_command(corpus_dir, out_dir, min_size, max_arity, report_path, dump_sexpr,
                           oracle_check, frontier, verbose);
    if (*lisp) {
      std::cout << to_string(lispify(parse_program(slurp(file), file.string()))) << "\n";
      return 0;
    }
    if (*delisp) {
      auto back = delispify(parse_sexpr(slurp(file)));
      if (!std::holds_alternative<Program>(back))
        throw UsageError(file.string() + ": not a complete program");
      std::cout << text_of(std::get<Program>(back));
      return 0;
    }
    if (*run_cmd) {
      InputScript script;
      if (input)
        script = parse_input_script(slurp(*input));
      RunOutcome r = run_capture(parse_program(slurp(file), file.string()), script);
      std::cout << r.output;
      if (r.failed) {
        std::cerr << file.string() << ": " << r.error << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const InternalError &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
