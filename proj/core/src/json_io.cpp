#include "hammersley/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace hammersley {

namespace {

// Table rows sorted by word text; the letter order of Word agrees with the
// byte order of the text form, so this is also the natural word order.
std::vector<std::pair<std::string, const Nat*>> sorted_rows(const CountTable& t) {
  std::vector<std::pair<std::string, const Nat*>> rows;
  rows.reserve(t.counts.size());
  for (const auto& [word, count] : t.counts) rows.emplace_back(word.text(), &count);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return rows;
}

Nat table_mass(const CountTable& t) {
  return t.process == Process::had ? factorial(t.n) : interval_mass(t.n);
}

}  // namespace

double fixed6(double x) { return std::round(x * 1e6) / 1e6 + 0.0; }

std::string format6(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", x + 0.0);
  return buffer;
}

Json table_json(const CountTable& t) {
  Json counts = Json::object();
  for (const auto& [text, count] : sorted_rows(t)) counts[text] = decimal(*count);
  return Json{{"k", t.k},
              {"n", t.n},
              {"process", process_name(t.process)},
              {"counts", std::move(counts)}};
}

Json distribution_json(const IncrementDistribution& d) {
  Json j = Json::object();
  j["mode"] = d.mode == StatMode::exact ? "exact" : "sampled";
  j["k"] = d.k;
  j["n"] = d.n;
  if (d.mode == StatMode::sampled) {
    j["samples"] = d.samples;
    j["seed"] = d.seed;
  }
  Json pmf = Json::object();
  if (d.mode == StatMode::exact) {
    for (const auto& [i, p] : d.exact_pmf) pmf[std::to_string(i)] = fraction(p);
  } else {
    for (const auto& [i, c] : d.counts) pmf[std::to_string(i)] = format6(d.probability(i));
  }
  j["pmf"] = std::move(pmf);
  j["mean"] = d.mode == StatMode::exact ? fraction(d.exact_mean()) : format6(d.mean());
  j["fitted_p"] = fixed6(1.0 / d.mean());
  j["lambda_hat"] = fixed6(d.mean());
  return j;
}

Json estimate_json(const ScalingEstimate& e) {
  Json j = Json::object();
  j["mode"] = e.mode == StatMode::exact ? "exact" : "sampled";
  j["k"] = e.k;
  j["n"] = e.n;
  if (e.mode == StatMode::sampled) {
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    j["half_width"] = fixed6(e.half_width);
  } else {
    j["exact_mean"] = fraction(e.exact_mean);
  }
  j["mean_increments"] = fixed6(e.mean_increments);
  j["fitted_p"] = fixed6(e.fitted_p);
  j["lambda_hat"] = fixed6(e.lambda_hat);
  j["phi"] = fixed6(ScalingEstimate::kPhi);
  j["p_star"] = fixed6(ScalingEstimate::kPStar);
  j["gap_to_phi"] = fixed6(e.gap_to_phi());
  return j;
}

Json frequencies_json(const DigitFrequencies& f) {
  Json frequency = Json::array();
  for (const double value : f.frequency) frequency.push_back(fixed6(value));
  return Json{{"k", f.k},
              {"n", f.n},
              {"samples", f.samples},
              {"seed", f.seed},
              {"frequency", std::move(frequency)}};
}

Json trajectory_json(const Trajectory& t) {
  Json gaps = Json::array();
  for (const auto gap : t.gaps) gaps.push_back(gap);
  return gaps;
}

Json trajectory_json(const IntervalTrajectory& t) {
  Json picks = Json::array();
  for (const auto& pick : t.picks) picks.push_back(Json::array({pick.x, pick.y}));
  return picks;
}

Json pda_trace_json(const PdaRun& r) {
  Json trace = Json::array();
  for (const auto& config : r.trace) trace.push_back(config.counter);
  return trace;
}

std::string table_csv(const CountTable& t) {
  const Nat mass = table_mass(t);
  std::string out = "word,multiplicity,probability\n";
  for (const auto& [text, count] : sorted_rows(t)) {
    out += text;
    out += ',';
    out += decimal(*count);
    out += ',';
    out += format6(to_double(Rat(*count, mass)));
    out += '\n';
  }
  return out;
}

std::string distribution_csv(const IncrementDistribution& d, bool shifted) {
  std::string out = "i,probability\n";
  const auto row = [&](int i) {
    out += std::to_string(shifted ? i - 1 : i);
    out += ',';
    out += format6(d.probability(i));
    out += '\n';
  };
  if (d.mode == StatMode::exact) {
    for (const auto& [i, p] : d.exact_pmf) row(i);
  } else {
    for (const auto& [i, c] : d.counts) row(i);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string process_name(Process p) { return p == Process::had ? "had" : "interval"; }

}  // namespace hammersley
