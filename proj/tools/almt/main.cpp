// Copyright 2026 The almt Authors.
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

// almt: alphabetic minimax trees and alphabetic prefix codes.
//
// Exit status: 0 on success, 2 on invalid input, 3 on an internal invariant
// violation (including a benchmark cross-check disagreement).

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "almt/codebook_io.hpp"
#include "almt/coder.hpp"
#include "almt/errors.hpp"
#include "almt/instances.hpp"
#include "almt/level_tree.hpp"
#include "almt/minimax.hpp"
#include "almt/real_weights.hpp"
#include "almt/tree.hpp"
#include "almt/weights.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using almt::tools::Counts;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw almt::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw almt::InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const ordered_json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

ordered_json stats_json(const almt::SearchStats& s) {
  return {{"sets", s.sets},
          {"undos", s.undos},
          {"finds", s.finds},
          {"find_steps", s.find_steps},
          {"unions", s.unions},
          {"deunions", s.deunions},
          {"partition_work", s.partition_work},
          {"steps", s.steps},
          {"cost_queries", s.cost_queries}};
}

// ---------------------------------------------------------------- tree

struct TreeArgs {
  std::string input = "-";
  bool integer = false;
  std::string algo = "auto";
  bool dump_level_tree = false;
};

int run_tree(const TreeArgs& a, bool pretty) {
  const std::vector<double> w = almt::parse_weights(read_input(a.input));
  const almt::WeightSeq seq(w);
  ordered_json out;
  out["n"] = w.size();
  out["d"] = seq.distinct_ceilings();
  std::vector<int> depths;
  if (a.integer) {
    const auto y = almt::to_int_weights(w);
    almt::IntMinimaxTree t = almt::alpha_int_fast(y);
    out["algo"] = "int";
    out["alpha"] = t.cost;
    out["offset_b"] = 0;
    out["int_cost"] = t.cost;
    depths = std::move(t.depths);
    out["instrumentation"] = stats_json({});
  } else {
    almt::RealCostResult r;
    if (a.algo == "new") {
      r = almt::alpha_real(seq, almt::Strategy::kNew);
    } else if (a.algo == "sorted") {
      r = almt::alpha_real(seq, almt::Strategy::kSorted);
    } else {
      r = almt::alpha_real(seq);
    }
    out["algo"] = almt::to_string(r.strategy);
    out["alpha"] = r.alpha;
    out["offset_b"] = r.offset;
    out["int_cost"] = r.int_cost;
    depths = std::move(r.depths);
    out["instrumentation"] = stats_json(r.stats);
  }
  const auto tree = almt::OrderedTree::from_depths(depths);
  out["depths"] = depths;
  out["parent_array"] = tree.parent_array();
  out["tree"] = tree.to_parens();
  if (a.dump_level_tree) {
    out["level_tree"] = ordered_json::parse(almt::LevelTree(w).serialize());
  }
  std::cout << dump(out, pretty);
  return 0;
}

// ---------------------------------------------------------------- code

struct CodeArgs {
  std::string sample;
  bool csv = false;
  std::string smoothing = "none";
  std::string alphabet = "auto";
  std::string out;
};

Counts sample_counts(const std::string& text, bool csv, bool all_bytes) {
  if (csv) return almt::tools::parse_counts_csv(text);
  return all_bytes ? almt::tools::count_all_bytes(text) : almt::tools::count_bytes(text);
}

int run_code(const CodeArgs& a, bool pretty) {
  const std::string text = read_input(a.sample);
  if (!a.csv && text.empty()) throw almt::InputError("sample is empty");
  const bool smooth = a.smoothing == "add_one";
  const bool all_bytes = a.alphabet == "bytes" || (a.alphabet == "auto" && smooth);
  Counts c = sample_counts(text, a.csv, all_bytes);
  if (!smooth) {
    // Symbols absent from the sample get no codeword.
    Counts kept;
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
      if (c.counts[i] > 0) {
        kept.labels.push_back(c.labels[i]);
        kept.counts.push_back(c.counts[i]);
      }
    }
    c = std::move(kept);
  }
  if (c.labels.empty()) throw almt::InputError("sample has no symbols with positive count");
  const auto q = almt::empirical_distribution(c.labels, c.counts,
                                              smooth ? almt::Smoothing::kAddOne
                                                     : almt::Smoothing::kNone);
  const auto code = almt::build_code(q);
  const auto book = almt::tools::codebook_to_json(code, q);
  if (a.out.empty()) {
    std::cout << dump(book, pretty);
    return 0;
  }
  write_output(a.out, dump(book, pretty));
  int max_len = 0;
  for (const int l : code.lengths()) max_len = std::max(max_len, l);
  ordered_json summary = {{"out", a.out},
                          {"symbols", code.size()},
                          {"max_length", max_len},
                          {"bound", almt::achieved_redundancy(q, code)}};
  std::cout << dump(summary, pretty);
  return 0;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string code;
  std::string target;
  bool csv = false;
};

int run_stats(const StatsArgs& a, bool pretty) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_input(a.code));
  } catch (const nlohmann::json::parse_error& e) {
    throw almt::InputError("codebook '" + a.code + "' is not valid JSON: " + e.what());
  }
  const auto loaded = almt::tools::codebook_from_json(j);
  const std::string text = read_input(a.target);
  const Counts c = a.csv ? almt::tools::parse_counts_csv(text) : almt::tools::count_bytes(text);

  std::vector<std::uint64_t> counts(loaded.code.size(), 0);
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (c.counts[i] == 0) continue;
    const int k = loaded.code.find(c.labels[i]);
    if (k < 0) {
      throw almt::InputError("symbol '" + almt::tools::escape_label(c.labels[i]) +
                             "' occurs in the target but has no codeword (q = 0 where p > 0, "
                             "so the relative entropy is undefined; rebuild the code with "
                             "--smoothing add_one)");
    }
    counts[static_cast<std::size_t>(k)] = c.counts[i];
  }
  const auto p = almt::empirical_distribution(loaded.q.labels(), counts);
  const auto r = almt::evaluate(p, loaded.code, loaded.q);
  ordered_json out = {{"avg_len", r.avg_len},
                      {"entropy", r.entropy},
                      {"relative_entropy", r.relative_entropy},
                      {"excess", r.excess},
                      {"bound", r.bound}};
  std::cout << dump(out, pretty);
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> n = {1 << 14};
  std::vector<std::size_t> d = {2};
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> algos = {"new", "sorted"};
  unsigned threads = 1;
  bool no_timing = false;
  std::string select = "mom";
  std::string out;
};

struct BenchRow {
  almt::RealCostResult result;
  std::int64_t wall_ns = 0;
};

struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_bench(const BenchArgs& a) {
  for (const auto& name : a.algos) {
    if (name != "new" && name != "sorted") throw almt::InputError("unknown algorithm '" + name + "'");
  }
  almt::SearchOptions options;
  options.select = a.select == "random" ? almt::SelectMethod::kRandomized
                                        : almt::SelectMethod::kMedianOfMedians;
  std::ostringstream csv;
  csv << "n,d,algo,wall_ns,sets,undos,finds,unions,trial,alpha,offset_b\n";
  for (const std::size_t n : a.n) {
    for (const std::size_t d : a.d) {
      if (d < 1 || d > n) {
        throw almt::InputError("need 1 <= d <= n (got n=" + std::to_string(n) +
                               ", d=" + std::to_string(d) + ")");
      }
      // rows[t][k]: trial t, algorithm k. Workers take trials in any order;
      // output is assembled by trial index.
      std::vector<std::vector<BenchRow>> rows(a.trials, std::vector<BenchRow>(a.algos.size()));
      std::atomic<std::size_t> next{0};
      std::vector<std::string> failures(a.trials);
      auto worker = [&] {
        // One search workspace per worker, reused across its trials.
        almt::SearchWorkspace workspace;
        almt::SearchOptions local = options;
        local.workspace = &workspace;
        for (std::size_t t; (t = next.fetch_add(1)) < a.trials;) {
          const almt::WeightSeq w(almt::generate_weights(n, d, almt::trial_seed(a.seed, t)));
          for (std::size_t k = 0; k < a.algos.size(); ++k) {
            const auto start = std::chrono::steady_clock::now();
            rows[t][k].result = a.algos[k] == "new" ? almt::alpha_real_new(w, local)
                                                    : almt::alpha_real_sorted(w);
            const auto stop = std::chrono::steady_clock::now();
            rows[t][k].wall_ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
          }
          for (std::size_t k = 1; k < a.algos.size(); ++k) {
            const auto& x = rows[t][0].result;
            const auto& y = rows[t][k].result;
            if (x.offset != y.offset || std::abs(x.alpha - y.alpha) > 1e-9) {
              failures[t] = "algorithms disagree at n=" + std::to_string(n) +
                            " d=" + std::to_string(d) + " trial=" + std::to_string(t) +
                            " (instance seed " + std::to_string(almt::trial_seed(a.seed, t)) +
                            "): " + a.algos[0] + " alpha=" + format_double(x.alpha) + " b=" +
                            format_double(x.offset) + ", " + a.algos[k] +
                            " alpha=" + format_double(y.alpha) + " b=" + format_double(y.offset);
            }
          }
        }
      };
      const unsigned threads = std::max(1u, std::min<unsigned>(a.threads, a.trials));
      std::vector<std::thread> pool;
      for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
      for (const auto& f : failures) {
        if (!f.empty()) throw Disagreement(f);
      }
      for (std::size_t t = 0; t < a.trials; ++t) {
        for (std::size_t k = 0; k < a.algos.size(); ++k) {
          const auto& r = rows[t][k];
          const auto& s = r.result.stats;
          csv << n << ',' << d << ',' << a.algos[k] << ',' << (a.no_timing ? 0 : r.wall_ns) << ','
              << s.sets << ',' << s.undos << ',' << s.finds << ',' << s.unions << ',' << t << ','
              << format_double(r.result.alpha) << ',' << format_double(r.result.offset) << '\n';
        }
      }
    }
  }
  write_output(a.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alphabetic minimax trees and alphabetic prefix codes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output for reading");

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("tree", "Build an alphabetic minimax tree for a weight file");
  tree->add_option("weights", tree_args.input, "Weight file, one weight per line or comma separated ('-' for stdin)")
      ->required();
  tree->add_flag("--int", tree_args.integer, "Weights are integers; use the linear-time integer algorithm");
  tree->add_option("--algo", tree_args.algo, "Real-weight algorithm")
      ->check(CLI::IsMember({"new", "sorted", "auto"}));
  tree->add_flag("--dump-level-tree", tree_args.dump_level_tree,
                 "Include the initial level tree in the output");

  CodeArgs code_args;
  auto* code = app.add_subcommand("code", "Build an alphabetic prefix code from a sample");
  code->add_option("sample", code_args.sample, "Sample file: raw bytes, or label,count lines with --csv")
      ->required();
  code->add_flag("--csv", code_args.csv, "Read label,count lines instead of raw bytes");
  code->add_option("--smoothing", code_args.smoothing, "Count smoothing")
      ->check(CLI::IsMember({"none", "add_one"}));
  code->add_option("--alphabet", code_args.alphabet,
                   "Raw-byte alphabet: 'bytes' (all 256), 'sample' (seen bytes) or 'auto' "
                   "(bytes when smoothing, else sample)")
      ->check(CLI::IsMember({"auto", "bytes", "sample"}));
  code->add_option("--out", code_args.out, "Write the codebook JSON here instead of stdout");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Evaluate a codebook on a target file");
  stats->add_option("--code", stats_args.code, "Codebook JSON written by 'code'")->required();
  stats->add_option("target", stats_args.target, "Target file: raw bytes, or label,count lines with --csv")
      ->required();
  stats->add_flag("--csv", stats_args.csv, "Read label,count lines instead of raw bytes");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Compare real-weight algorithms on generated instances");
  bench->add_option("--n", bench_args.n, "Instance sizes")->delimiter(',');
  bench->add_option("--d", bench_args.d, "Numbers of distinct ceilings")->delimiter(',');
  bench->add_option("--trials", bench_args.trials, "Instances per (n, d)");
  bench->add_option("--seed", bench_args.seed, "Base seed");
  bench->add_option("--algos", bench_args.algos, "Algorithms to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"new", "sorted"}));
  bench->add_option("--threads", bench_args.threads, "Worker threads over trials");
  bench->add_flag("--no-timing", bench_args.no_timing, "Write wall_ns as 0 for byte-identical output");
  bench->add_option("--select", bench_args.select, "Median selection in the new algorithm")
      ->check(CLI::IsMember({"mom", "random"}));
  bench->add_option("--out", bench_args.out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*tree) return run_tree(tree_args, pretty);
    if (*code) return run_code(code_args, pretty);
    if (*stats) return run_stats(stats_args, pretty);
    if (*bench) return run_bench(bench_args);
  } catch (const almt::InputError& e) {
    std::cerr << "almt: error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Disagreement& e) {
    std::cerr << "almt: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "almt: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "almt: error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
