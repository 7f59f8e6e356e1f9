// Copyright 2026 The Namematch Authors.
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

// Command-line front end: normalization, matching, dataset generation and
// the evaluation harness.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11/CLI11.hpp"
#include "namematch.hpp"

namespace {

using namespace namematch;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIoFailure = 3,
  kBadFile = 4,
  kBadInput = 5,
};

struct MatcherOptions {
  std::string algorithm = "hybrid";
  double alpha = 1.0;
  double beta = 0.7;
  double theta = 0.1;
  double freq_floor = 0.0;
  bool no_border_frequency = false;
  double soft_theta = 0.9;
  bool lev_normalized = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--algorithm", algorithm,
                    "hybrid, basic-levenshtein, token-levenshtein, jaccard, "
                    "tfidf, soft-tfidf, jaro-winkler, monge-elkan")
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "hybrid frequency weight")
        ->capture_default_str();
    cmd->add_option("--beta", beta, "hybrid middle-position weight")
        ->capture_default_str();
    cmd->add_option("--theta", theta, "hybrid token similarity threshold")
        ->capture_default_str();
    cmd->add_option("--freq-floor", freq_floor,
                    "lower bound on the hybrid frequency weight")
        ->capture_default_str();
    cmd->add_flag("--no-border-frequency", no_border_frequency,
                  "apply only the position weight on the first row and column");
    cmd->add_option("--soft-theta", soft_theta, "soft-tfidf closeness threshold")
        ->capture_default_str();
    cmd->add_flag("--lev-normalized", lev_normalized,
                  "divide whole-name Levenshtein by the longer length");
  }

  MatcherSpec spec() const {
    MatcherSpec s;
    s.algorithm = parse_algorithm(algorithm);
    s.hybrid.alpha = alpha;
    s.hybrid.beta = beta;
    s.hybrid.theta = theta;
    s.hybrid.freq_floor = freq_floor;
    s.hybrid.frequency_on_borders = !no_border_frequency;
    s.soft_theta = soft_theta;
    s.levenshtein_normalized = lev_normalized;
    s.validate();
    return s;
  }
};

struct DataOptions {
  std::string base;
  std::string rules;
  std::string freq;
  bool freq_from_base = false;

  void add_to(CLI::App* cmd, bool need_base) {
    auto* b = cmd->add_option("--base", base, "base set CSV (B_ID,BName)");
    if (need_base) b->required();
    add_rules(cmd);
    auto* f = cmd->add_option("--freq", freq,
                              "frequency table CSV (token,proportion)");
    cmd->add_flag("--freq-from-base", freq_from_base,
                  "derive token frequencies from the base set")
        ->excludes(f);
  }

  void add_rules(CLI::App* cmd) {
    cmd->add_option("--rules", rules,
                    "normalization rules JSON (default: $NAMEMATCH_RULES or "
                    "built-in)");
  }

  FrequencyTable table(const BaseSet& b) const {
    if (freq_from_base) return build_frequency_table(b.normalized);
    if (!freq.empty()) return load_frequency_table(freq);
    return default_frequency_table();
  }
};

// Output sink: a file when a path other than "-" is given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("write failed for '" + display() + "'");
  }

 private:
  std::string display() const { return file_ ? path_ : "stdout"; }
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::unique_ptr<std::ifstream> file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw IoError("cannot open '" + path + "'");
    in = file.get();
  }
  std::vector<std::string> out;
  std::string line;
  for (std::size_t no = 1; std::getline(*in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!unicode::is_valid_utf8(line)) {
      throw InputError("line " + std::to_string(no) + " is not valid UTF-8");
    }
    if (!detail::trim(line).empty()) out.push_back(line);
  }
  if (in->bad()) throw IoError("read failed");
  return out;
}

std::string read_stdin() {
  std::stringstream buf;
  buf << std::cin.rdbuf();
  if (std::cin.bad()) throw IoError("read failed on stdin");
  return buf.str();
}

std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!detail::parse_double(detail::trim(item), &v)) {
      throw ParameterError(std::string("bad ") + what + " value '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParameterError(std::string(what) + " grid is empty");
  return out;
}

std::vector<TestSet> load_tests(const std::vector<std::string>& paths) {
  std::vector<TestSet> tests;
  for (const auto& p : paths) tests.push_back(load_test_set(p));
  return tests;
}

void finish_report(EvaluationReport* report, const std::string& out_path,
                   std::chrono::steady_clock::time_point start) {
  report->wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Output out(out_path);
  write_report_csv(out.stream(), *report);
  out.close();
  std::fprintf(stderr, "elapsed %.2fs\n", report->wall_seconds);
}

int run(int argc, char** argv) {
  CLI::App app{"Arabic person-name matching and evaluation"};
  app.require_subcommand(1);
  std::size_t workers = default_workers();
  std::string out_path;

  // normalize
  auto* normalize = app.add_subcommand(
      "normalize", "normalize a B_ID,BName file, or the names given");
  DataOptions norm_data;
  norm_data.add_rules(normalize);
  std::string norm_input;
  std::vector<std::string> norm_names;
  normalize->add_option("names", norm_names, "names to normalize");
  normalize->add_option("--input", norm_input, "B_ID,BName file")
      ->excludes(normalize->get_option("names"));
  normalize->add_option("--out", out_path, "output path (default stdout)");

  // match
  auto* match = app.add_subcommand("match", "rank base names against queries");
  DataOptions match_data;
  match_data.add_to(match, true);
  MatcherOptions match_opts;
  match_opts.add_to(match);
  std::vector<std::string> queries;
  std::string match_input;
  std::size_t top_k = 5;
  match->add_option("queries", queries, "query names (default: read lines)");
  match->add_option("--input", match_input, "file with one query per line");
  match->add_option("--top-k", top_k, "results per query")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // gen-base
  auto* gen_base = app.add_subcommand("gen-base", "write a synthetic base set");
  std::size_t gb_n = 2000, gb_pool = 400;
  std::uint64_t gb_seed = 1;
  double gb_kinship = 0.0;
  std::string gb_freq;
  gen_base->add_option("--n", gb_n, "number of names")->capture_default_str();
  gen_base->add_option("--pool", gb_pool, "rare-token pool size")
      ->capture_default_str();
  gen_base->add_option("--seed", gb_seed)->capture_default_str();
  gen_base->add_option("--kinship", gb_kinship,
                       "probability of deriving a name from a relative")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_base->add_option("--freq", gb_freq, "common-token frequency table CSV");
  gen_base->add_option("--out", out_path, "output path (default stdout)");

  // gen-testset
  auto* gen_test = app.add_subcommand("gen-testset",
                                      "write a distorted test set");
  DataOptions gt_data;
  gt_data.add_to(gen_test, true);
  std::string gt_error;
  std::size_t gt_n = 300;
  std::uint64_t gt_seed = 1;
  gen_test->add_option("--error-type", gt_error,
                       "one-char, two-char, omit-first, omit-second, "
                       "omit-third, omit-second-and-third")
      ->required();
  gen_test->add_option("--n", gt_n, "rows")->capture_default_str();
  gen_test->add_option("--seed", gt_seed)->capture_default_str();
  gen_test->add_option("--out", out_path, "output path (default stdout)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate",
                                      "top-1 success of one matcher");
  DataOptions ev_data;
  ev_data.add_to(evaluate, true);
  MatcherOptions ev_opts;
  ev_opts.add_to(evaluate);
  std::vector<std::string> ev_tests;
  evaluate->add_option("--test", ev_tests, "test set CSV (repeatable)")
      ->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep",
                                   "hybrid success over a beta x theta grid");
  DataOptions sw_data;
  sw_data.add_to(sweep, true);
  MatcherOptions sw_opts;
  sw_opts.add_to(sweep);
  std::string sw_test;
  std::string betas = "0,0.1,0.3,0.5,0.7,1";
  std::string thetas = "0,0.1,0.3,0.5,0.7,1";
  sweep->add_option("--test", sw_test, "test set CSV")->required();
  sweep->add_option("--betas", betas, "comma-separated beta grid")
      ->capture_default_str();
  sweep->add_option("--thetas", thetas, "comma-separated theta grid")
      ->capture_default_str();

  // compare
  auto* compare = app.add_subcommand(
      "compare", "success of several matchers on several test sets");
  DataOptions cmp_data;
  cmp_data.add_to(compare, true);
  std::vector<std::string> cmp_tests;
  std::vector<std::string> cmp_algorithms;
  compare->add_option("--test", cmp_tests, "test set CSV (repeatable)")
      ->required();
  compare->add_option("--algorithm", cmp_algorithms,
                      "algorithms at default settings (default: the "
                      "reference five)");

  for (auto* cmd : {evaluate, sweep, compare}) {
    cmd->add_option("--workers", workers, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path,
                    "machine-readable report path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();

  if (*normalize) {
    const auto rules = resolve_rules(norm_data.rules);
    Output out(out_path);
    if (!norm_names.empty()) {
      for (const auto& n : norm_names) {
        if (!unicode::is_valid_utf8(n)) {
          throw InputError("argument is not valid UTF-8");
        }
        out.stream() << join_tokens(normalize_name(n, rules)) << '\n';
      }
    } else {
      // Rows keep their identifiers, so the output is itself a base file.
      const auto base = norm_input.empty() || norm_input == "-"
                            ? parse_base_set(read_stdin(), rules, "stdin")
                            : load_base_set(norm_input, rules);
      out.stream() << "B_ID,BName\n";
      for (std::size_t i = 0; i < base.size(); ++i) {
        out.stream() << base.records[i].id << ','
                     << join_tokens(base.normalized[i]) << '\n';
      }
    }
    out.close();
    return kOk;
  }

  if (*match) {
    const auto rules = resolve_rules(match_data.rules);
    const auto spec = match_opts.spec();
    const auto base = load_base_set(match_data.base, rules);
    const MatchContext ctx(base, match_data.table(base), rules);
    if (queries.empty()) queries = read_lines(match_input);
    for (const auto& q : queries) {
      if (!unicode::is_valid_utf8(q)) {
        throw InputError("query is not valid UTF-8");
      }
      const auto prepared = ctx.prepare_raw(q);
      if (prepared.name.empty()) {
        throw InputError("query '" + q + "' is empty after normalization");
      }
      std::cout << "# " << q << '\n';
      for (const auto& m : top_matches(spec, prepared, ctx, top_k)) {
        const auto& rec = base.records[m.index];
        std::cout << rec.id << '\t' << rec.raw << '\t'
                  << detail::format_fixed(m.similarity, 6) << '\n';
      }
    }
    return kOk;
  }

  if (*gen_base) {
    const auto table =
        gb_freq.empty() ? default_frequency_table() : load_frequency_table(gb_freq);
    SyntheticOptions opts;
    opts.kinship_rate = gb_kinship;
    const auto base = generate_synthetic_base(gb_n, gb_pool, table, gb_seed, opts);
    Output out(out_path);
    write_base_set(out.stream(), base);
    out.close();
    return kOk;
  }

  if (*gen_test) {
    const auto rules = resolve_rules(gt_data.rules);
    const auto error_type = parse_error_type(gt_error);
    const auto base = load_base_set(gt_data.base, rules);
    const auto test = generate_test_set(base, error_type, gt_n, gt_seed, rules);
    Output out(out_path);
    write_test_set(out.stream(), test);
    out.close();
    return kOk;
  }

  if (*evaluate) {
    const auto rules = resolve_rules(ev_data.rules);
    const auto spec = ev_opts.spec();
    const auto base = load_base_set(ev_data.base, rules);
    const MatchContext ctx(base, ev_data.table(base), rules);
    auto report = compare_algorithms(load_tests(ev_tests), ctx, {spec}, workers);
    render_comparison_grid(std::cerr, report);
    finish_report(&report, out_path, start);
    return kOk;
  }

  if (*sweep) {
    const auto rules = resolve_rules(sw_data.rules);
    auto params = sw_opts.spec().hybrid;
    const auto beta_grid = parse_grid(betas, "beta");
    const auto theta_grid = parse_grid(thetas, "theta");
    const auto base = load_base_set(sw_data.base, rules);
    const MatchContext ctx(base, sw_data.table(base), rules);
    auto report = parameter_sweep(load_test_set(sw_test), ctx, beta_grid,
                                  theta_grid, params, workers);
    render_sweep_grid(std::cerr, report, beta_grid, theta_grid);
    finish_report(&report, out_path, start);
    return kOk;
  }

  if (*compare) {
    const auto rules = resolve_rules(cmp_data.rules);
    std::vector<MatcherSpec> specs;
    if (cmp_algorithms.empty()) {
      specs = reference_comparison_specs();
    } else {
      for (const auto& a : cmp_algorithms) {
        MatcherOptions o;
        o.algorithm = a;
        specs.push_back(o.spec());
      }
    }
    const auto base = load_base_set(cmp_data.base, rules);
    const MatchContext ctx(base, cmp_data.table(base), rules);
    auto report = compare_algorithms(load_tests(cmp_tests), ctx, specs, workers);
    render_comparison_grid(std::cerr, report);
    finish_report(&report, out_path, start);
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const namematch::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const namematch::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoFailure;
  } catch (const namematch::LoadError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadFile;
  } catch (const namematch::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
}
