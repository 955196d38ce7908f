#include "semhash/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semhash {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void validate_sample(const LabeledUtterance& u, const std::string& name,
                     std::size_t record) {
  if (trimmed(u.text).empty()) {
    throw std::runtime_error(name + ": record " + std::to_string(record) +
                             ": empty text");
  }
  if (u.intent.empty()) {
    throw std::runtime_error(name + ": record " + std::to_string(record) +
                             ": empty intent");
  }
}

Dataset load_json(const std::filesystem::path& path, const std::string& name) {
  std::ifstream in(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(name + ": malformed JSON in " + path.string() +
                             ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("sentences") ||
      !doc["sentences"].is_array()) {
    throw std::runtime_error(name + ": " + path.string() +
                             ": missing top-level \"sentences\" array");
  }

  Dataset ds;
  ds.name = name;
  const auto& sentences = doc["sentences"];
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    for (const char* field : {"text", "intent", "training"}) {
      if (!s.is_object() || !s.contains(field)) {
        throw std::runtime_error(name + ": record " + std::to_string(i) +
                                 ": missing field \"" + field + "\"");
      }
    }
    if (!s["text"].is_string() || !s["intent"].is_string() ||
        !s["training"].is_boolean()) {
      throw std::runtime_error(name + ": record " + std::to_string(i) +
                               ": wrong field type");
    }
    LabeledUtterance u;
    u.text = s["text"].get<std::string>();
    u.intent = trimmed(s["intent"].get<std::string>());
    u.is_training = s["training"].get<bool>();
    // "entities", answers, authors and URLs are parsed permissively and
    // dropped.
    validate_sample(u, name, i);
    ds.samples.push_back(std::move(u));
  }
  return ds;
}

// One CSV record; handles quoted fields with embedded commas and "" escapes.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

Dataset load_csv(const std::filesystem::path& path, const std::string& name) {
  std::ifstream in(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(name + ": " + path.string() + ": empty file");
  }
  auto header = split_csv_line(line);
  if (header.size() < 3 || trimmed(header[0]) != "text" ||
      trimmed(header[1]) != "intent" || trimmed(header[2]) != "split") {
    throw std::runtime_error(name + ": " + path.string() +
                             ": expected header text,intent,split");
  }

  Dataset ds;
  ds.name = name;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() < 3) {
      throw std::runtime_error(name + ": record " + std::to_string(record) +
                               ": expected 3 columns");
    }
    LabeledUtterance u;
    u.text = fields[0];
    u.intent = trimmed(fields[1]);
    std::string split = trimmed(fields[2]);
    if (split == "train") {
      u.is_training = true;
    } else if (split == "test") {
      u.is_training = false;
    } else {
      throw std::runtime_error(name + ": record " + std::to_string(record) +
                               ": split must be train or test, got \"" +
                               split + "\"");
    }
    validate_sample(u, name, record);
    ds.samples.push_back(std::move(u));
    ++record;
  }
  return ds;
}

}  // namespace

std::vector<LabeledUtterance> Dataset::training_samples() const {
  std::vector<LabeledUtterance> out;
  for (const auto& s : samples) {
    if (s.is_training) out.push_back(s);
  }
  return out;
}

std::vector<LabeledUtterance> Dataset::test_samples() const {
  std::vector<LabeledUtterance> out;
  for (const auto& s : samples) {
    if (!s.is_training) out.push_back(s);
  }
  return out;
}

Dataset load_dataset(const std::filesystem::path& path,
                     const std::string& name,
                     std::vector<std::string>* warnings) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error(name + ": no such corpus file: " + path.string());
  }
  Dataset ds = path.extension() == ".json" ? load_json(path, name)
                                           : load_csv(path, name);

  if (warnings) {
    std::set<std::string> train_labels, test_labels;
    std::size_t n_train = 0, n_test = 0;
    for (const auto& s : ds.samples) {
      if (s.is_training) {
        train_labels.insert(s.intent);
        ++n_train;
      } else {
        test_labels.insert(s.intent);
        ++n_test;
      }
    }
    if (n_train == 0) warnings->push_back(name + ": no training samples");
    if (n_test == 0) warnings->push_back(name + ": no test samples");
    for (const auto& label : test_labels) {
      if (!train_labels.count(label)) {
        warnings->push_back(name + ": test label \"" + label +
                            "\" has no training samples");
      }
    }
  }
  return ds;
}

std::map<std::string, int> class_distribution(const Dataset& ds, Split split) {
  std::map<std::string, int> counts;
  for (const auto& s : ds.samples) {
    if ((split == Split::kTrain) == s.is_training) counts[s.intent] += 1;
  }
  return counts;
}

}  // namespace semhash
