#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semhash/augment.hpp"
#include "semhash/classifiers.hpp"
#include "semhash/corpus.hpp"
#include "semhash/vectorize.hpp"

namespace semhash {

struct PipelineOptions {
  bool augment = true;
  int max_replacements_per_sentence = 2;
  int target_count = 0;  // 0: largest original class count
};

// Class names in first-appearance order over the samples.
std::vector<std::string> collect_class_names(
    std::span<const LabeledUtterance> samples);

// Class ids for samples against a fixed name list; labels that never
// occurred in training map to -1 and can only be scored as errors.
std::vector<int> map_labels(std::span<const LabeledUtterance> samples,
                            const std::vector<std::string>& class_names);

// Augmented, fitted and vectorized training data, ready for any trainer.
struct PreparedTraining {
  FeatureSpace space;
  TrainingMatrix matrix;
};

PreparedTraining prepare_training(std::span<const LabeledUtterance> train,
                                  const Thesaurus& th,
                                  const PipelineOptions& options,
                                  std::uint64_t seed);

struct TrainedPipeline {
  FeatureSpace space;
  ClassifierModel model;
  ClassifierConfig config;
};

TrainedPipeline train_pipeline(std::span<const LabeledUtterance> train,
                               const ClassifierConfig& config,
                               const Thesaurus& th,
                               const PipelineOptions& options,
                               std::uint64_t seed);

// normalize -> featurize -> transform for raw query text.
SparseVector vectorize_text(const FeatureSpace& space,
                            std::string_view raw_text);

int predict_text(const TrainedPipeline& pipeline, std::string_view raw_text);

std::vector<int> predict_samples(const TrainedPipeline& pipeline,
                                 std::span<const LabeledUtterance> samples);

}  // namespace semhash
