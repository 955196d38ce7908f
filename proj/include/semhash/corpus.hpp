#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace semhash {

// One text sample with its intent label and train/test flag.
struct LabeledUtterance {
  std::string text;
  std::string intent;
  bool is_training = true;
};

struct Dataset {
  std::string name;
  std::vector<LabeledUtterance> samples;

  std::vector<LabeledUtterance> training_samples() const;
  std::vector<LabeledUtterance> test_samples() const;
};

enum class Split { kTrain, kTest };

// Loads a corpus file. ".json" files use the benchmark repository layout
// (top-level "sentences" array with "text"/"intent"/"training" fields,
// entity annotations ignored); anything else is parsed as CSV with header
// text,intent,split and split in {train,test}.
//
// Throws std::runtime_error for I/O failures and for malformed records,
// naming the offending record index. Structural oddities that are not
// fatal (empty splits, test labels unseen in training) are appended to
// *warnings when provided.
Dataset load_dataset(const std::filesystem::path& path,
                     const std::string& name,
                     std::vector<std::string>* warnings = nullptr);

std::map<std::string, int> class_distribution(const Dataset& ds, Split split);

}  // namespace semhash
