// Command line front end for the Hammersley word process library.
//
// Exit codes: 0 member / success, 1 non-member / mismatch verdicts,
// 2 invalid input or runtime failure.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hammersley/increments.hpp"
#include "hammersley/json_io.hpp"
#include "hammersley/process.hpp"
#include "hammersley/recognize.hpp"
#include "hammersley/series.hpp"
#include "hammersley/word_stats.hpp"

namespace {

using namespace hammersley;

constexpr std::uint64_t kDefaultSeed = 271828;

struct Options {
  int k = 2;
  int n = 1;
  int threads = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string word;
  std::string which = "dominant";
  bool interval = false;
  bool exact = false;
  bool shifted = false;
  bool digits = false;
  std::string format = "plain";
  std::string output;
};

int emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << opt.output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

// Returns `verdict` unless writing the output failed.
int emit_verdict(const Options& opt, const std::string& text, int verdict) {
  const int status = emit(opt, text);
  return status == 0 ? verdict : status;
}

int reject_csv(const std::string& command) {
  std::cerr << "error: csv output is not available for " << command << "\n";
  return 2;
}

// ---------------------------------------------------------------------------
// Persistent multiplicity cache: one file per (process, k, word) holding the
// count as a decimal string.

std::filesystem::path memo_path(const std::string& dir, Process p, int k, const Word& w) {
  const std::string key = (p == Process::had ? std::string("had") : std::string("int")) + ".k" +
                          std::to_string(k) + "." + w.text();
  return std::filesystem::path(dir) / key;
}

std::optional<Nat> memo_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string text;
  in >> text;
  if (text.empty()) return std::nullopt;
  for (const char c : text) {
    if (c < '0' || c > '9') {
      std::cerr << "warning: ignoring malformed cache file " << path << "\n";
      return std::nullopt;
    }
  }
  return Nat(text);
}

void memo_store(const std::filesystem::path& path, const Nat& value) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "warning: cannot write cache file " << path << "\n";
    return;
  }
  out << decimal(value) << "\n";
}

// ---------------------------------------------------------------------------
// check

std::string trace_text(const PdaRun& run) {
  std::string out = "[";
  for (std::size_t i = 0; i < run.trace.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(run.trace[i].counter);
  }
  out += ']';
  return out;
}

std::string interval_condition(IntervalReport::Failure f) {
  switch (f) {
    case IntervalReport::Failure::condition_1: return "1";
    case IntervalReport::Failure::condition_2a: return "2a";
    case IntervalReport::Failure::condition_2b: return "2b";
    case IntervalReport::Failure::none: break;
  }
  return "none";
}

int run_check(const Options& opt) {
  if (opt.format == "csv") return reject_csv("check");
  const Word w = Word::parse(opt.word);
  const std::string text = w.text();
  bool member = false;
  std::string plain;
  Json diagnostic = Json::object();

  if (opt.which == "dominant" || opt.which == "effective") {
    const DominanceReport report = check_dominant(w, opt.k);
    member = report.member;
    const std::string prefix = text.substr(0, report.prefix_length);
    diagnostic["prefix"] = prefix;
    diagnostic["prefix_length"] = report.prefix_length;
    diagnostic["difference"] = report.difference;
    plain = member ? "member"
                   : "non-member, prefix " + prefix + " difference " +
                         std::to_string(report.difference);
  } else if (opt.which == "pda") {
    const PdaRun run = pda_run(w, opt.k);
    member = run.accepted;
    diagnostic["accepted"] = run.accepted;
    diagnostic["trace"] = pda_trace_json(run);
    if (run.rejected_at) diagnostic["rejected_at"] = *run.rejected_at;
    if (member) {
      plain = "member, trace " + trace_text(run);
    } else if (run.rejected_at) {
      plain = "non-member, rejected at letter " + std::to_string(*run.rejected_at) + ", trace " +
              trace_text(run);
    } else {
      plain = "non-member, trace " + trace_text(run);
    }
  } else if (opt.which == "interval") {
    const IntervalReport report = check_interval(w, opt.k);
    member = report.member;
    diagnostic["failure"] = interval_condition(report.failure);
    diagnostic["prefix_length"] = report.prefix_length;
    if (member) {
      plain = "member";
    } else {
      plain = "non-member, condition " + interval_condition(report.failure);
      if (report.prefix_length > 0) {
        diagnostic["prefix"] = text.substr(0, report.prefix_length);
        plain += ", prefix " + text.substr(0, report.prefix_length);
      }
    }
  } else {  // sk
    const auto sol = sk_decompose(w, opt.k);
    member = sol.has_value();
    diagnostic["solvable"] = member;
    if (sol) {
      diagnostic["c"] = sol->c;
      diagnostic["d"] = sol->d;
      diagnostic["e"] = sol->e;
      plain = "member, (c,d,e) = (" + std::to_string(sol->c) + "," + std::to_string(sol->d) +
              "," + std::to_string(sol->e) + ")";
    } else {
      plain = "non-member";
    }
  }

  const int verdict = member ? 0 : 1;
  if (opt.format == "json") {
    const Json j{{"command", "check"}, {"which", opt.which},         {"k", opt.k},
                 {"word", text},       {"member", member},           {"diagnostic", diagnostic}};
    return emit_verdict(opt, dump(j), verdict);
  }
  return emit_verdict(opt, plain + "\n", verdict);
}

// ---------------------------------------------------------------------------
// mult

int run_mult(const Options& opt) {
  if (opt.format == "csv") return reject_csv("mult");
  const Word w = Word::parse(opt.word);
  const Process process = opt.interval ? Process::interval : Process::had;
  const Nat mass = opt.interval ? interval_mass(static_cast<int>(w.size() / 2))
                                : factorial(static_cast<int>(w.size()));

  Nat value;
  bool computed = false;
  const char* memo_dir = std::getenv("HAMMERSLEY_MEMO_DIR");
  std::filesystem::path cache;
  if (memo_dir != nullptr && *memo_dir != '\0') {
    cache = memo_path(memo_dir, process, opt.k, w);
    if (const auto cached = memo_load(cache)) {
      value = *cached;
      computed = true;
    }
  }
  if (!computed) {
    value = opt.interval ? interval_multiplicity(w, opt.k) : multiplicity(w, opt.k);
    if (!cache.empty()) memo_store(cache, value);
  }

  if (opt.format == "json") {
    Json j{{"command", "mult"},
           {"k", opt.k},
           {"process", process_name(process)},
           {"word", w.text()},
           {"multiplicity", decimal(value)},
           {"mass", decimal(mass)},
           {"probability", fraction(Rat(value, mass))}};
    if (opt.interval) j["normalization"] = "ordered-pairs";
    return emit(opt, dump(j));
  }
  if (opt.interval) {
    return emit(opt, decimal(value) + " of " + decimal(mass) + "\n");
  }
  return emit(opt, decimal(value) + ", " + decimal(value) + "/" + decimal(mass) + "\n");
}

// ---------------------------------------------------------------------------
// table / enum-oracle

std::vector<std::pair<std::string, Nat>> sorted_rows(const CountTable& t) {
  std::vector<std::pair<std::string, Nat>> rows;
  rows.reserve(t.counts.size());
  for (const auto& [word, count] : t.counts) rows.emplace_back(word.text(), count);
  std::sort(rows.begin(), rows.end());
  return rows;
}

int run_table(const Options& opt) {
  const CountTable t =
      opt.interval ? interval_table(opt.n, opt.k) : series_table(opt.n, opt.k);
  if (opt.format == "json") return emit(opt, dump(table_json(t)));
  if (opt.format == "csv") return emit(opt, table_csv(t));
  std::string out;
  for (const auto& [text, count] : sorted_rows(t)) {
    out += text;
    out += ' ';
    out += decimal(count);
    out += '\n';
  }
  return emit(opt, out);
}

int run_enum_oracle(const Options& opt) {
  if (opt.format == "csv") return reject_csv("enum-oracle");
  const Process process = opt.interval ? Process::interval : Process::had;
  const CountTable collapsed = opt.interval ? interval_enumerate(opt.n, opt.k, EnumMode::collapsed)
                                            : had_enumerate(opt.n, opt.k, EnumMode::collapsed);
  const CountTable literal = opt.interval ? interval_enumerate(opt.n, opt.k, EnumMode::literal)
                                          : had_enumerate(opt.n, opt.k, EnumMode::literal);

  std::vector<std::pair<std::string, std::pair<Nat, Nat>>> differences;
  for (const auto& [word, count] : collapsed.counts) {
    const auto it = literal.counts.find(word);
    const Nat other = it == literal.counts.end() ? Nat(0) : it->second;
    if (other != count) differences.emplace_back(word.text(), std::make_pair(count, other));
  }
  for (const auto& [word, count] : literal.counts) {
    if (!collapsed.counts.contains(word)) {
      differences.emplace_back(word.text(), std::make_pair(Nat(0), count));
    }
  }
  std::sort(differences.begin(), differences.end());
  const bool identical = differences.empty();
  const Nat mass = collapsed.total_mass();

  if (opt.format == "json") {
    Json diffs = Json::array();
    for (const auto& [text, counts] : differences) {
      diffs.push_back(Json{{"word", text},
                           {"collapsed", decimal(counts.first)},
                           {"literal", decimal(counts.second)}});
    }
    const Json j{{"command", "enum-oracle"},
                 {"k", opt.k},
                 {"n", opt.n},
                 {"process", process_name(process)},
                 {"identical", identical},
                 {"mass", decimal(mass)},
                 {"rows", collapsed.counts.size()},
                 {"differences", std::move(diffs)}};
    return emit_verdict(opt, dump(j), identical ? 0 : 1);
  }
  if (identical) {
    return emit(opt, "tables identical, mass " + decimal(mass) + "\n");
  }
  std::string out = "tables differ: " + std::to_string(differences.size()) + " words\n";
  for (std::size_t i = 0; i < differences.size() && i < 10; ++i) {
    out += differences[i].first + " collapsed " + decimal(differences[i].second.first) +
           " literal " + decimal(differences[i].second.second) + "\n";
  }
  return emit_verdict(opt, out, 1);
}

// ---------------------------------------------------------------------------
// inc / lambda

IncrementDistribution make_distribution(const Options& opt) {
  if (opt.exact) return exact_increment_distribution(opt.n, opt.k);
  return sampled_increment_distribution(opt.n, opt.k, opt.samples, opt.seed, opt.threads);
}

int run_inc(const Options& opt) {
  const IncrementDistribution d = make_distribution(opt);
  if (opt.format == "json") return emit(opt, dump(distribution_json(d)));
  if (opt.format == "csv") return emit(opt, distribution_csv(d, opt.shifted));
  std::string out;
  if (d.mode == StatMode::exact) {
    for (const auto& [i, p] : d.exact_pmf) {
      out += std::to_string(i) + " " + format6(to_double(p)) + "\n";
    }
    const Rat mean = d.exact_mean();
    out += "mean " + decimal_truncated(mean, 3) + " (" + fraction(mean) + ")\n";
  } else {
    for (const auto& [i, c] : d.counts) {
      out += std::to_string(i) + " " + format6(d.probability(i)) + "\n";
    }
    out += "mean " + format6(d.mean()) + "\n";
    out += "samples " + std::to_string(d.samples) + " seed " + std::to_string(d.seed) + "\n";
  }
  return emit(opt, out);
}

int run_lambda(const Options& opt) {
  if (opt.format == "csv") return reject_csv("lambda");
  if (opt.exact && opt.digits) {
    std::cerr << "error: --digits requires sampled mode\n";
    return 2;
  }
  const ScalingEstimate est = opt.exact
                                  ? lambda_estimate_exact(opt.n, opt.k)
                                  : lambda_estimate(opt.n, opt.k, opt.samples, opt.seed,
                                                    opt.threads);
  std::optional<DigitFrequencies> freq;
  if (opt.digits) {
    freq = digit_frequencies(opt.n, opt.k, opt.samples, opt.seed, opt.threads);
  }

  if (opt.format == "json") {
    Json j = estimate_json(est);
    if (freq) j["digit_frequencies"] = frequencies_json(*freq);
    return emit(opt, dump(j));
  }
  std::string out;
  if (est.mode == StatMode::sampled) {
    out += "lambda_hat " + format6(est.lambda_hat) + " ± " + format6(est.half_width) + "\n";
  } else {
    out += "lambda_hat " + format6(est.lambda_hat) + " (exact mean " + fraction(est.exact_mean) +
           ")\n";
  }
  out += "mean_increments " + format6(est.mean_increments) + "\n";
  out += "fitted_p " + format6(est.fitted_p) + "\n";
  out += "phi " + format6(ScalingEstimate::kPhi) + "\n";
  out += "p_star " + format6(ScalingEstimate::kPStar) + "\n";
  out += "gap_to_phi " + format6(est.gap_to_phi()) + "\n";
  if (est.mode == StatMode::sampled) {
    out += "n " + std::to_string(est.n) + " k " + std::to_string(est.k) + " samples " +
           std::to_string(est.samples) + " seed " + std::to_string(est.seed) + "\n";
  } else {
    out += "n " + std::to_string(est.n) + " k " + std::to_string(est.k) + "\n";
  }
  if (freq) {
    for (std::size_t digit = 0; digit < freq->frequency.size(); ++digit) {
      out += "digit " + std::to_string(digit) + " frequency " +
             format6(freq->frequency[digit]) + "\n";
    }
  }
  return emit(opt, out);
}

// ---------------------------------------------------------------------------
// simulate / witness

int run_simulate(const Options& opt) {
  if (opt.format == "csv") return reject_csv("simulate");
  const auto n = static_cast<std::size_t>(opt.n);
  if (opt.interval) {
    const IntervalTrajectory t = sample_interval_trajectory(n, opt.seed);
    const Word w = interval_sample(n, opt.k, opt.seed);
    if (opt.format == "json") {
      const Json j{{"command", "simulate"}, {"process", "interval"}, {"k", opt.k},
                   {"n", opt.n},            {"seed", opt.seed},      {"picks", trajectory_json(t)},
                   {"word", w.text()}};
      return emit(opt, dump(j));
    }
    std::string out = "picks";
    for (const auto& pick : t.picks) {
      out += " " + std::to_string(pick.x) + "," + std::to_string(pick.y);
    }
    out += "\nword " + w.text() + "\n";
    return emit(opt, out);
  }
  const Trajectory t = sample_trajectory(n, opt.seed);
  const Word w = had_sample(n, opt.k, opt.seed);
  if (opt.format == "json") {
    const Json j{{"command", "simulate"},
                 {"process", "had"},
                 {"k", opt.k},
                 {"n", opt.n},
                 {"seed", opt.seed},
                 {"gaps", trajectory_json(t)},
                 {"word", w.text()},
                 {"increments", increment_count(w)}};
    return emit(opt, dump(j));
  }
  std::string out = "gaps";
  for (const auto gap : t.gaps) out += " " + std::to_string(gap);
  out += "\nword " + w.text() + "\nincrements " + std::to_string(increment_count(w)) + "\n";
  return emit(opt, out);
}

int run_witness(const Options& opt) {
  if (opt.format == "csv") return reject_csv("witness");
  const Word w = Word::parse(opt.word);
  if (!is_k_dominant(w, opt.k)) {
    std::cerr << "word is not " << opt.k << "-dominant; no trajectory produces it\n";
    return 1;
  }
  const Trajectory t = witness_trajectory(w, opt.k);
  if (had_replay(t, opt.k) != w) {
    throw std::logic_error("witness replay mismatch for \"" + w.text() + "\"");
  }
  if (opt.format == "json") {
    const Json j{
        {"command", "witness"}, {"k", opt.k}, {"word", w.text()}, {"gaps", trajectory_json(t)}};
    return emit(opt, dump(j));
  }
  std::string out = "gaps";
  for (const auto gap : t.gaps) out += " " + std::to_string(gap);
  out += "\n";
  return emit(opt, out);
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", opt.output, "Write output to this file instead of stdout");
}

void add_k_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--k", opt.k, "Number of lives per letter")
      ->check(CLI::Range(1, 9))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "Hammersley word processes: dynamics, recognizers, exact multiplicities\n"
      "and increment statistics. Honors HAMMERSLEY_MEMO_DIR as a persistent\n"
      "multiplicity cache for the mult command."};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "Test membership of a word");
  check->add_option("word", opt.word, "Word over digits 0..k, diamond as '*'")->required();
  check->add_option("--which", opt.which, "Recognizer to apply")
      ->check(CLI::IsMember({"dominant", "pda", "interval", "effective", "sk"}))
      ->capture_default_str();
  add_k_option(check, opt);
  add_output_options(check, opt);

  CLI::App* mult = app.add_subcommand("mult", "Exact multiplicity and probability of a word");
  mult->add_option("word", opt.word, "Word over digits 0..k, diamond as '*'")->required();
  mult->add_flag("--interval", opt.interval, "Use the interval process");
  add_k_option(mult, opt);
  add_output_options(mult, opt);

  CLI::App* table = app.add_subcommand("table", "Multiplicity table of every length-n word");
  table->add_option("--n", opt.n, "Number of process steps")->required();
  table->add_flag("--interval", opt.interval, "Use the interval process");
  add_k_option(table, opt);
  add_output_options(table, opt);

  CLI::App* oracle = app.add_subcommand(
      "enum-oracle", "Diff the word-level DP against literal trajectory enumeration");
  oracle->add_option("--n", opt.n, "Number of process steps")->required();
  oracle->add_flag("--interval", opt.interval, "Use the interval process");
  add_k_option(oracle, opt);
  add_output_options(oracle, opt);

  CLI::App* inc = app.add_subcommand("inc", "Increment-count distribution at length n");
  inc->add_option("--n", opt.n, "Word length")->required();
  auto* inc_exact = inc->add_flag("--exact", opt.exact, "Exact rational distribution (n <= 13)");
  auto* inc_samples =
      inc->add_option("--samples", opt.samples, "Monte Carlo sample count")->excludes(inc_exact);
  inc_exact->excludes(inc_samples);
  inc->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  inc->add_option("--threads", opt.threads, "Worker threads (deterministic per seed)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  inc->add_flag("--shifted", opt.shifted, "CSV only: report i-1 instead of i");
  add_k_option(inc, opt);
  add_output_options(inc, opt);

  CLI::App* lambda = app.add_subcommand("lambda", "Scaling constant estimate at length n");
  lambda->add_option("--n", opt.n, "Word length")->required();
  auto* lam_exact =
      lambda->add_flag("--exact", opt.exact, "Exact mean via the table DP (n <= 13)");
  auto* lam_samples =
      lambda->add_option("--samples", opt.samples, "Monte Carlo sample count")
          ->excludes(lam_exact);
  lam_exact->excludes(lam_samples);
  lambda->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  lambda->add_option("--threads", opt.threads, "Worker threads (deterministic per seed)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  lambda->add_flag("--digits", opt.digits, "Also report sampled digit frequencies");
  add_k_option(lambda, opt);
  add_output_options(lambda, opt);

  CLI::App* simulate = app.add_subcommand("simulate", "Print one random trajectory and its word");
  simulate->add_option("--n", opt.n, "Number of process steps")->required();
  simulate->add_flag("--interval", opt.interval, "Use the interval process");
  simulate->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  add_k_option(simulate, opt);
  add_output_options(simulate, opt);

  CLI::App* witness = app.add_subcommand("witness", "Emit a trajectory that replays to the word");
  witness->add_option("word", opt.word, "Dominant word over digits 0..k")->required();
  add_k_option(witness, opt);
  add_output_options(witness, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if ((inc->parsed() || lambda->parsed()) && !opt.exact && inc_samples->count() == 0 &&
        lam_samples->count() == 0) {
      std::cerr << "error: choose --exact or --samples\n";
      return 2;
    }
    if (check->parsed()) return run_check(opt);
    if (mult->parsed()) return run_mult(opt);
    if (table->parsed()) return run_table(opt);
    if (oracle->parsed()) return run_enum_oracle(opt);
    if (inc->parsed()) return run_inc(opt);
    if (lambda->parsed()) return run_lambda(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (witness->parsed()) return run_witness(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
