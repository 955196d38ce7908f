#include "semhash/pipeline.hpp"

#include <stdexcept>
#include <unordered_map>

#include "semhash/dataflow.hpp"
#include "semhash/featurizer.hpp"
#include "semhash/preprocess.hpp"
#include "semhash/rng.hpp"

namespace semhash {

std::vector<std::string> collect_class_names(
    std::span<const LabeledUtterance> samples) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> seen;
  for (const auto& s : samples) {
    if (seen.try_emplace(s.intent, 0).second) names.push_back(s.intent);
  }
  return names;
}

std::vector<int> map_labels(std::span<const LabeledUtterance> samples,
                            const std::vector<std::string>& class_names) {
  std::unordered_map<std::string, int> ids;
  for (std::size_t c = 0; c < class_names.size(); ++c) {
    ids[class_names[c]] = static_cast<int>(c);
  }
  std::vector<int> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    auto it = ids.find(s.intent);
    out.push_back(it == ids.end() ? -1 : it->second);
  }
  return out;
}

PreparedTraining prepare_training(std::span<const LabeledUtterance> train,
                                  const Thesaurus& th,
                                  const PipelineOptions& options,
                                  std::uint64_t seed) {
  if (train.empty()) {
    throw std::invalid_argument("prepare_training: no training samples");
  }

  std::vector<LabeledUtterance> data;
  if (options.augment) {
    AugmentationPlan plan;
    plan.target_count = options.target_count;
    plan.seed = salted_seed(seed, "augment");
    plan.max_replacements_per_sentence =
        options.max_replacements_per_sentence;
    data = balance_classes(train, th, plan);
  } else {
    data.assign(train.begin(), train.end());
  }

  for (const auto& s : data) observe_dataflow("vectorizer_fit", s);

  std::vector<NormalizedText> normalized;
  normalized.reserve(data.size());
  for (const auto& s : data) normalized.push_back(normalize_text(s.text));

  std::vector<FeaturizedText> featurized;
  featurized.reserve(normalized.size());
  for (const auto& nt : normalized) featurized.push_back(featurize_text(nt));

  PreparedTraining prepared;
  prepared.space = fit(featurized);
  prepared.matrix.class_names = collect_class_names(data);
  prepared.matrix.labels = map_labels(data, prepared.matrix.class_names);
  prepared.matrix.n_features = prepared.space.vocabulary_size();
  prepared.matrix.rows.reserve(featurized.size());
  for (const auto& ft : featurized) {
    prepared.matrix.rows.push_back(transform(prepared.space, ft));
  }
  return prepared;
}

TrainedPipeline train_pipeline(std::span<const LabeledUtterance> train,
                               const ClassifierConfig& config,
                               const Thesaurus& th,
                               const PipelineOptions& options,
                               std::uint64_t seed) {
  PreparedTraining prepared = prepare_training(train, th, options, seed);
  TrainedPipeline pipeline;
  pipeline.model = train_classifier(config, prepared.matrix,
                                    salted_seed(seed, "train"));
  pipeline.space = std::move(prepared.space);
  pipeline.config = config;
  return pipeline;
}

SparseVector vectorize_text(const FeatureSpace& space,
                            std::string_view raw_text) {
  return transform(space, featurize_text(normalize_text(raw_text)));
}

int predict_text(const TrainedPipeline& pipeline, std::string_view raw_text) {
  return predict(pipeline.model, vectorize_text(pipeline.space, raw_text));
}

std::vector<int> predict_samples(const TrainedPipeline& pipeline,
                                 std::span<const LabeledUtterance> samples) {
  std::vector<int> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(predict_text(pipeline, s.text));
  return out;
}

}  // namespace semhash
