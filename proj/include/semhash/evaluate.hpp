#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semhash/classifiers.hpp"
#include "semhash/corpus.hpp"
#include "semhash/pipeline.hpp"

namespace semhash {

// Micro-aggregated confusion counts. For single-label multiclass over one
// dataset every error is one fp and one fn, so fp == fn there; pooled
// counts across datasets keep the same structure.
struct ConfusionTally {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
};

ConfusionTally operator+(const ConfusionTally& a, const ConfusionTally& b);

struct MicroF1Result {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool degenerate = false;  // tp == 0 or an undefined denominator
};

// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 computed as
// 2*tp / (2*tp + fp + fn) so that for fp == fn it is bit-identical to
// accuracy.
MicroF1Result micro_f1(const ConfusionTally& tally);

// Fraction of exact matches. Throws on empty or mismatched lengths.
double accuracy(std::span<const int> predictions, std::span<const int> gold);

ConfusionTally tally_predictions(std::span<const int> predictions,
                                 std::span<const int> gold);

struct FoldSplit {
  std::vector<int> train_indices;
  std::vector<int> validation_indices;
};

// Partitions 0..n-1 into k folds preserving per-class proportions: within
// every class, fold counts differ by at most one. Classes smaller than k
// produce a warning. k must be >= 2 (a single fold cannot form a
// train/validation pair).
std::vector<FoldSplit> stratified_kfold(
    std::span<const int> labels, int k, std::uint64_t seed,
    std::vector<std::string>* warnings = nullptr);

struct GridPointScore {
  ClassifierConfig config;
  double mean_validation_accuracy = 0.0;
};

struct GridSearchResult {
  ClassifierConfig best;
  // Per-point CV scores in grid order; empty when the grid was a singleton
  // and no cross-validation ran.
  std::vector<GridPointScore> scores;
};

// K-fold cross-validated selection over the grid, highest mean validation
// accuracy winning, ties to the earlier grid point. Augmentation and
// vectorizer fitting happen inside each training fold.
GridSearchResult grid_search(std::span<const ClassifierConfig> grid,
                             std::span<const LabeledUtterance> train,
                             const Thesaurus& th,
                             const PipelineOptions& options, int k,
                             std::uint64_t seed,
                             std::vector<std::string>* warnings = nullptr);

struct BenchmarkOptions {
  int runs = 10;
  std::uint64_t base_seed = 0;
  bool augment = true;
  int max_replacements_per_sentence = 2;
  int cv_folds = 5;
  bool grid_search_enabled = true;
};

// One (dataset, classifier) cell aggregated over runs.
struct CellResult {
  std::string dataset;
  ClassifierKind classifier;
  std::vector<double> accuracies;
  std::vector<ConfusionTally> tallies;
  std::vector<std::string> chosen_params;
  std::vector<double> train_seconds;
  std::vector<double> test_seconds;
  double mean_accuracy = 0.0;
  double variance = 0.0;  // population variance over runs
};

struct EvalReport {
  std::vector<std::string> dataset_names;
  std::vector<int> test_sizes;
  std::vector<ClassifierKind> classifiers;
  int runs = 0;
  std::uint64_t base_seed = 0;
  bool augment = true;
  std::vector<CellResult> cells;  // dataset-major, classifier order inside
  std::vector<std::string> warnings;

  const CellResult* find_cell(std::string_view dataset,
                              ClassifierKind kind) const;
};

// Per run: augment the training split, fit the vector space on the
// augmented data, grid-search where the kind has a non-trivial grid, train
// on the full augmented training set, evaluate on the untouched test set.
// Run r uses seeds derived from base_seed + r salted with the cell id, so
// any evaluation order produces the identical report.
EvalReport benchmark(std::span<const Dataset> datasets,
                     std::span<const ClassifierKind> kinds,
                     const Thesaurus& th, const BenchmarkOptions& options);

// --- Summary and reproduction checks ---------------------------------------

struct ClassifierSummary {
  ClassifierKind kind;
  std::vector<double> accuracy_by_dataset;  // aligned with dataset_names
  double average_accuracy = 0.0;            // unweighted mean over datasets
  double overall_micro_f1 = 0.0;  // pooled over datasets, mean over runs
};

struct ReportSummary {
  std::vector<ClassifierSummary> per_classifier;
  // Best mean-accuracy classifier per dataset, aligned with dataset_names.
  std::vector<ClassifierKind> best_by_dataset;
  std::vector<double> best_accuracy_by_dataset;
  ClassifierKind best_single;  // best average over datasets
  double best_single_average = 0.0;
  double best_single_overall_f1 = 0.0;
  // Pooled micro-F1 using each dataset's own best classifier.
  double best_per_dataset_overall_f1 = 0.0;
};

ReportSummary summarize(const EvalReport& report);

// Reproduction gate thresholds for the benchmark corpora.
inline constexpr double kChatbotBestMeanMin = 0.95;
inline constexpr double kChatbotAnyMeanMin = 0.98;
inline constexpr double kAskUbuntuBestMeanMin = 0.88;
inline constexpr double kWebApplicationBestMeanMin = 0.74;
inline constexpr double kOverallMicroF1Min = 0.88;
inline constexpr double kVarianceHardMax = 1e-2;
inline constexpr double kVarianceExpectedMax = 1e-3;

struct CheckOutcome {
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  bool passed() const { return failures.empty(); }
};

// Applies every threshold that the report's datasets cover; the pooled
// micro-F1 gate requires all three corpora to be present.
CheckOutcome check_reproduction_thresholds(const EvalReport& report);

}  // namespace semhash
