#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "semhash/classifiers.hpp"
#include "semhash/vectorize.hpp"

namespace semhash {

inline constexpr int kModelFormatVersion = 1;
inline constexpr const char* kModelFileExtension = ".shm";

// Everything needed to reproduce predictions: the fitted vector space, the
// trained classifier, a tag of the preprocessing rules the model was built
// under, and provenance. Serialized as versioned JSON; doubles round-trip
// exactly, so a saved and reloaded model predicts bit-identically.
struct ModelArtifact {
  int format_version = kModelFormatVersion;
  std::uint64_t preprocessing_hash = 0;
  std::string stop_characters;
  FeatureSpace space;
  ClassifierModel model;
  // provenance
  std::string corpus_name;
  std::uint64_t seed = 0;
  bool augmented = true;
  std::string thesaurus_path;
  std::string created_at;
};

void save_model(const ModelArtifact& artifact,
                const std::filesystem::path& path);

// Throws std::runtime_error on I/O problems, unknown format version, or a
// preprocessing tag that does not match this build.
ModelArtifact load_model(const std::filesystem::path& path);

}  // namespace semhash
