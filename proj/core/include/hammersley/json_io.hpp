#pragma once

#include <string>

#include <json.hpp>

#include "hammersley/increments.hpp"
#include "hammersley/process.hpp"
#include "hammersley/recognize.hpp"
#include "hammersley/series.hpp"

namespace hammersley {

using Json = nlohmann::ordered_json;

// Floating-point values in machine output are fixed to 6 decimals.
double fixed6(double x);
std::string format6(double x);

// {"k", "n", "process", "counts"}; counts as decimal strings, keys in text
// order.
Json table_json(const CountTable& t);

// {"mode", "k", "n", "samples"?, "seed"?, "pmf", "mean", "fitted_p",
// "lambda_hat"}; pmf values and the mean are fraction strings in exact mode
// and 6-decimal strings in sampled mode.
Json distribution_json(const IncrementDistribution& d);

// Scaling estimate with the reference constants phi and p_star and the gap.
Json estimate_json(const ScalingEstimate& e);

Json frequencies_json(const DigitFrequencies& f);

Json trajectory_json(const Trajectory& t);
Json trajectory_json(const IntervalTrajectory& t);

// Counter values after each processed letter.
Json pda_trace_json(const PdaRun& r);

// CSV rows "word,multiplicity,probability" (probability to 6 decimals),
// words in text order, header included.
std::string table_csv(const CountTable& t);

// CSV rows "i,probability"; shifted subtracts 1 from i for plotting the
// increment count without the baseline insertion.
std::string distribution_csv(const IncrementDistribution& d, bool shifted = false);

// Canonical serialization: 2-space indent plus trailing newline. Identical
// inputs produce byte-identical output.
std::string dump(const Json& j);

std::string process_name(Process p);

}  // namespace hammersley
