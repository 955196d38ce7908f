#include "semhash/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "semhash/preprocess.hpp"

namespace semhash {

namespace {

using nlohmann::ordered_json;

ordered_json sparse_to_json(const SparseVector& v) {
  std::vector<int> cols;
  std::vector<double> weights;
  cols.reserve(v.entries.size());
  weights.reserve(v.entries.size());
  for (const auto& [col, w] : v.entries) {
    cols.push_back(col);
    weights.push_back(w);
  }
  return ordered_json{{"cols", cols}, {"weights", weights}};
}

SparseVector sparse_from_json(const ordered_json& j) {
  SparseVector v;
  const auto& cols = j.at("cols");
  const auto& weights = j.at("weights");
  if (cols.size() != weights.size()) {
    throw std::runtime_error("model file: sparse vector cols/weights differ");
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    v.entries.emplace_back(cols[i].get<int>(), weights[i].get<double>());
  }
  return v;
}

ordered_json params_to_json(const ClassifierParams& params) {
  ordered_json j;
  if (const auto* lin = std::get_if<LinearParams>(&params)) {
    j["type"] = "linear";
    j["weights"] = lin->weights;
    j["bias"] = lin->bias;
  } else if (const auto* mnb = std::get_if<MultinomialNbParams>(&params)) {
    j["type"] = "multinomial_nb";
    j["class_log_prior"] = mnb->class_log_prior;
    j["feature_log_prob"] = mnb->feature_log_prob;
  } else if (const auto* bnb = std::get_if<BernoulliNbParams>(&params)) {
    j["type"] = "bernoulli_nb";
    j["class_log_prior"] = bnb->class_log_prior;
    j["log_theta"] = bnb->log_theta;
    j["log_one_minus_theta"] = bnb->log_one_minus_theta;
    j["absent_log_sum"] = bnb->absent_log_sum;
    j["binarize_threshold"] = bnb->binarize_threshold;
  } else if (const auto* cen = std::get_if<CentroidParams>(&params)) {
    j["type"] = "centroid";
    j["centroids"] = cen->centroids;
    j["centroid_labels"] = cen->centroid_labels;
  } else if (const auto* knn = std::get_if<KnnParams>(&params)) {
    j["type"] = "knn";
    j["k"] = knn->k;
    ordered_json rows = ordered_json::array();
    for (const auto& row : knn->rows) rows.push_back(sparse_to_json(row));
    j["rows"] = std::move(rows);
    j["labels"] = knn->labels;
  }
  return j;
}

ClassifierParams params_from_json(const ordered_json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "linear") {
    LinearParams p;
    p.weights = j.at("weights").get<std::vector<std::vector<double>>>();
    p.bias = j.at("bias").get<std::vector<double>>();
    return p;
  }
  if (type == "multinomial_nb") {
    MultinomialNbParams p;
    p.class_log_prior = j.at("class_log_prior").get<std::vector<double>>();
    p.feature_log_prob =
        j.at("feature_log_prob").get<std::vector<std::vector<double>>>();
    return p;
  }
  if (type == "bernoulli_nb") {
    BernoulliNbParams p;
    p.class_log_prior = j.at("class_log_prior").get<std::vector<double>>();
    p.log_theta = j.at("log_theta").get<std::vector<std::vector<double>>>();
    p.log_one_minus_theta =
        j.at("log_one_minus_theta").get<std::vector<std::vector<double>>>();
    p.absent_log_sum = j.at("absent_log_sum").get<std::vector<double>>();
    p.binarize_threshold = j.at("binarize_threshold").get<double>();
    return p;
  }
  if (type == "centroid") {
    CentroidParams p;
    p.centroids = j.at("centroids").get<std::vector<std::vector<double>>>();
    p.centroid_labels = j.at("centroid_labels").get<std::vector<int>>();
    return p;
  }
  if (type == "knn") {
    KnnParams p;
    p.k = j.at("k").get<int>();
    for (const auto& row : j.at("rows")) {
      p.rows.push_back(sparse_from_json(row));
    }
    p.labels = j.at("labels").get<std::vector<int>>();
    return p;
  }
  throw std::runtime_error("model file: unknown parameter type \"" + type +
                           "\"");
}

}  // namespace

void save_model(const ModelArtifact& artifact,
                const std::filesystem::path& path) {
  ordered_json doc;
  doc["format"] = "semhash-model";
  doc["version"] = artifact.format_version;

  ordered_json pre;
  pre["hash"] = artifact.preprocessing_hash;
  pre["stop_characters"] = artifact.stop_characters;
  doc["preprocessing"] = pre;

  ordered_json space;
  space["tokens"] = artifact.space.tokens;
  space["doc_freq"] = artifact.space.doc_freq;
  space["n_docs"] = artifact.space.n_docs;
  doc["feature_space"] = space;

  ordered_json model;
  model["kind"] = to_string(artifact.model.kind);
  model["class_names"] = artifact.model.class_names;
  model["n_features"] = artifact.model.n_features;
  model["params"] = params_to_json(artifact.model.params);
  doc["model"] = model;

  ordered_json prov;
  prov["corpus"] = artifact.corpus_name;
  prov["seed"] = artifact.seed;
  prov["augmented"] = artifact.augmented;
  prov["thesaurus"] = artifact.thesaurus_path;
  prov["created_at"] = artifact.created_at;
  doc["provenance"] = prov;

  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_model: cannot write " + path.string());
  }
  out << doc.dump(1) << "\n";
  if (!out) {
    throw std::runtime_error("save_model: write failed for " + path.string());
  }
}

ModelArtifact load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_model: cannot open " + path.string());
  }
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("load_model: malformed model file " +
                             path.string() + ": " + e.what());
  }

  if (doc.value("format", "") != "semhash-model") {
    throw std::runtime_error("load_model: " + path.string() +
                             " is not a semhash model file");
  }
  int version = doc.value("version", -1);
  if (version != kModelFormatVersion) {
    throw std::runtime_error(
        "load_model: unsupported model format version " +
        std::to_string(version) + " (this build reads version " +
        std::to_string(kModelFormatVersion) + ")");
  }

  ModelArtifact artifact;
  artifact.format_version = version;
  const auto& pre = doc.at("preprocessing");
  artifact.preprocessing_hash = pre.at("hash").get<std::uint64_t>();
  artifact.stop_characters = pre.at("stop_characters").get<std::string>();
  if (artifact.preprocessing_hash != preprocessing_config_hash()) {
    throw std::runtime_error(
        "load_model: model was built under different preprocessing rules");
  }

  const auto& space = doc.at("feature_space");
  artifact.space.tokens = space.at("tokens").get<std::vector<std::string>>();
  artifact.space.doc_freq = space.at("doc_freq").get<std::vector<int>>();
  artifact.space.n_docs = space.at("n_docs").get<int>();
  if (artifact.space.tokens.size() != artifact.space.doc_freq.size()) {
    throw std::runtime_error("load_model: tokens/doc_freq length mismatch");
  }
  for (std::size_t i = 0; i < artifact.space.tokens.size(); ++i) {
    artifact.space.index[artifact.space.tokens[i]] = static_cast<int>(i);
  }

  const auto& model = doc.at("model");
  auto kind = classifier_from_string(model.at("kind").get<std::string>());
  if (!kind) {
    throw std::runtime_error("load_model: unknown classifier kind \"" +
                             model.at("kind").get<std::string>() + "\"");
  }
  artifact.model.kind = *kind;
  artifact.model.class_names =
      model.at("class_names").get<std::vector<std::string>>();
  artifact.model.n_features = model.at("n_features").get<int>();
  artifact.model.params = params_from_json(model.at("params"));

  const auto& prov = doc.at("provenance");
  artifact.corpus_name = prov.value("corpus", "");
  artifact.seed = prov.value("seed", std::uint64_t{0});
  artifact.augmented = prov.value("augmented", true);
  artifact.thesaurus_path = prov.value("thesaurus", "");
  artifact.created_at = prov.value("created_at", "");
  return artifact;
}

}  // namespace semhash
