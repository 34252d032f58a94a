#pragma once

#include <map>
#include <string>
#include <vector>

#include "convobench/schema.hpp"
#include "convobench/transcript.hpp"

namespace convobench {

// Per-run scores, all percentages in [0, 100].
struct RunMetrics {
  double completeness = 0.0;  // populated leaves, Unclear included
  double unclear = 0.0;       // leaves left Unclear
  bool correct = false;       // every leaf matches the ground truth exactly

  bool operator==(const RunMetrics&) const = default;
};

double completeness(const DataModelInstance& instance, const DataSchema& schema);
double unclear_score(const DataModelInstance& instance, const DataSchema& schema);
bool correctness_run(const DataModelInstance& instance, const GroundTruthProfile& ground_truth,
                     const DataSchema& schema);
RunMetrics score_run(const DataModelInstance& instance, const GroundTruthProfile& ground_truth,
                     const DataSchema& schema);

// Per leaf, the percentage of runs whose final instance matches the ground
// truth on that leaf. Throws ConfigError on an empty record list.
std::map<std::string, double> field_level_correctness(const std::vector<RunRecord>& records,
                                                      const GroundTruthProfile& ground_truth,
                                                      const DataSchema& schema);

struct Stat {
  double mean = 0.0;
  double var = 0.0;  // sample variance, n-1 denominator; 0 by convention for n=1

  bool operator==(const Stat&) const = default;
};

// Aggregates for one batch cell. Completeness/unclear variances are over the
// per-run 0-100 percentages; the correctness variance is the sample variance
// of the per-run 0/1 indicator.
struct CellAggregate {
  int n = 0;
  Stat completeness;
  Stat unclear;
  double correctness_rate = 0.0;  // percent of correct runs
  double correctness_var = 0.0;   // indicator scale
  std::map<std::string, double> field_level;
  std::map<std::string, int> terminations;
};

// Means and variances over a cell's runs. field_level and terminations are
// filled in by the caller (they need the records, not just the scores).
// Throws ConfigError on an empty list.
CellAggregate aggregate(const std::vector<RunMetrics>& runs);

}  // namespace convobench
