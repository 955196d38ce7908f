#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semhash/augment.hpp"
#include "semhash/corpus.hpp"
#include "semhash/evaluate.hpp"
#include "semhash/featurizer.hpp"
#include "semhash/model_io.hpp"
#include "semhash/pipeline.hpp"
#include "semhash/preprocess.hpp"
#include "semhash/report.hpp"

namespace fs = std::filesystem;
using namespace semhash;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string valid_classifier_names() {
  std::string names;
  for (ClassifierKind kind : all_classifier_kinds()) {
    if (!names.empty()) names += ", ";
    names += to_string(kind);
  }
  return names;
}

// --thesaurus flag, then SEMHASH_THESAURUS, then thesaurus.tsv next to the
// corpora. Without any of those the benchmark still runs: oversampling
// degenerates to plain duplication.
Thesaurus resolve_thesaurus(const std::string& flag_path,
                            const fs::path& corpus_dir,
                            std::string* used_path) {
  fs::path path;
  if (!flag_path.empty()) {
    path = flag_path;
  } else if (const char* env = std::getenv("SEMHASH_THESAURUS");
             env && *env) {
    path = env;
  } else if (!corpus_dir.empty() &&
             fs::exists(corpus_dir / "thesaurus.tsv")) {
    path = corpus_dir / "thesaurus.tsv";
  }
  if (path.empty()) {
    std::cerr << "note: no thesaurus found; oversampling will duplicate "
                 "sentences verbatim\n";
    if (used_path) used_path->clear();
    return Thesaurus{};
  }
  if (used_path) *used_path = path.string();
  return load_thesaurus_tsv(path);
}

// Dataset name -> corpus file inside --corpus-dir; "webapp" is accepted as
// an alias for webapplication.
fs::path resolve_corpus_file(const fs::path& dir, const std::string& name) {
  std::string resolved = name == "webapp" ? "webapplication" : name;
  for (const char* ext : {".json", ".csv"}) {
    fs::path p = dir / (resolved + ext);
    if (fs::exists(p)) return p;
  }
  throw std::runtime_error("no corpus file for dataset \"" + name +
                           "\" under " + dir.string() +
                           " (looked for " + resolved + ".json/.csv)");
}

std::string canonical_dataset_name(const std::string& name) {
  return name == "webapp" ? "webapplication" : name;
}

int run_bench(const std::string& corpus_dir, const std::string& datasets_csv,
              const std::string& classifiers_csv, int runs,
              std::uint64_t seed, const std::string& thesaurus_path,
              bool no_augment, bool check, const std::string& report_base) {
  std::vector<ClassifierKind> kinds;
  if (classifiers_csv.empty()) {
    auto all = all_classifier_kinds();
    kinds.assign(all.begin(), all.end());
  } else {
    for (const std::string& name : split_list(classifiers_csv)) {
      auto kind = classifier_from_string(name);
      if (!kind) {
        std::cerr << "error: unknown classifier \"" << name
                  << "\"; valid names: " << valid_classifier_names() << "\n";
        return kExitUsage;
      }
      kinds.push_back(*kind);
    }
  }

  fs::path dir(corpus_dir);
  std::vector<std::string> warnings;
  std::vector<Dataset> datasets;
  for (const std::string& name : split_list(datasets_csv)) {
    fs::path file = resolve_corpus_file(dir, name);
    datasets.push_back(
        load_dataset(file, canonical_dataset_name(name), &warnings));
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  std::string used_thesaurus;
  Thesaurus th = resolve_thesaurus(thesaurus_path, dir, &used_thesaurus);

  BenchmarkOptions options;
  options.runs = runs;
  options.base_seed = seed;
  options.augment = !no_augment;
  EvalReport report = benchmark(datasets, kinds, th, options);

  std::string text = render_report_text(report);
  std::cout << text;

  fs::path txt_path = report_base + ".txt";
  fs::path json_path = report_base + ".json";
  std::ofstream txt_out(txt_path);
  txt_out << text;
  std::ofstream json_out(json_path);
  json_out << report_to_json(report);
  if (!txt_out || !json_out) {
    std::cerr << "error: cannot write report files at " << report_base
              << "\n";
    return kExitUsage;
  }
  std::cerr << "report written to " << txt_path.string() << " and "
            << json_path.string() << "\n";

  if (check) {
    CheckOutcome outcome = check_reproduction_thresholds(report);
    for (const auto& w : outcome.warnings) {
      std::cerr << "check warning: " << w << "\n";
    }
    for (const auto& f : outcome.failures) {
      std::cerr << "check FAILED: " << f << "\n";
    }
    if (!outcome.passed()) return kExitCheckFailed;
    std::cerr << "all reproduction checks passed\n";
  }
  return kExitOk;
}

int run_train(const std::string& corpus_file, const std::string& classifier,
              std::uint64_t seed, const std::string& thesaurus_path,
              bool no_augment, const std::string& out_path) {
  auto kind = classifier_from_string(classifier);
  if (!kind) {
    std::cerr << "error: unknown classifier \"" << classifier
              << "\"; valid names: " << valid_classifier_names() << "\n";
    return kExitUsage;
  }

  fs::path corpus(corpus_file);
  std::vector<std::string> warnings;
  Dataset ds = load_dataset(corpus, corpus.stem().string(), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  std::vector<LabeledUtterance> train = ds.training_samples();
  if (train.empty()) {
    std::cerr << "error: corpus has no training samples\n";
    return kExitUsage;
  }

  std::string used_thesaurus;
  Thesaurus th =
      resolve_thesaurus(thesaurus_path, corpus.parent_path(), &used_thesaurus);

  PipelineOptions popt;
  popt.augment = !no_augment;
  ClassifierConfig config = hyperparameter_grid(*kind)[0];
  TrainedPipeline pipeline = train_pipeline(train, config, th, popt, seed);

  ModelArtifact artifact;
  artifact.preprocessing_hash = preprocessing_config_hash();
  artifact.stop_characters = std::string(kStopCharacters);
  artifact.space = std::move(pipeline.space);
  artifact.model = std::move(pipeline.model);
  artifact.corpus_name = ds.name;
  artifact.seed = seed;
  artifact.augmented = !no_augment;
  artifact.thesaurus_path = used_thesaurus;
  artifact.created_at = iso_timestamp();
  save_model(artifact, out_path);
  std::cerr << "model written to " << out_path << " ("
            << artifact.model.class_names.size() << " classes, vocabulary "
            << artifact.space.vocabulary_size() << ")\n";
  return kExitOk;
}

int run_predict(const std::string& model_path, const std::string& input_path,
                bool with_scores) {
  ModelArtifact artifact = load_model(model_path);

  std::istream* in = &std::cin;
  std::ifstream file;
  if (!input_path.empty()) {
    file.open(input_path);
    if (!file) {
      std::cerr << "error: cannot open input file " << input_path << "\n";
      return kExitUsage;
    }
    in = &file;
  }

  std::string line;
  while (std::getline(*in, line)) {
    SparseVector v = vectorize_text(artifact.space, line);
    int label = predict(artifact.model, v);
    std::cout << artifact.model.class_names[label];
    if (with_scores) {
      std::vector<double> scores = decision_scores(artifact.model, v);
      for (std::size_t c = 0; c < scores.size(); ++c) {
        std::cout << "\t" << artifact.model.class_names[c] << "="
                  << scores[c];
      }
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_featurize(const std::string& text, bool as_json) {
  NormalizedText nt = normalize_text(text);
  std::vector<std::vector<std::string>> subtokens;
  for (const std::string& tok : nt.tokens) {
    subtokens.push_back(featurize_text(tok));
  }

  if (as_json) {
    nlohmann::ordered_json doc;
    doc["input"] = text;
    doc["normalized"] = nt.text;
    doc["tokens"] = nt.tokens;
    doc["subtokens"] = subtokens;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "normalized: " << nt.text << "\n";
  for (std::size_t i = 0; i < nt.tokens.size(); ++i) {
    std::cout << nt.tokens[i] << ":";
    for (const std::string& gram : subtokens[i]) std::cout << " " << gram;
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subword semantic hashing intent classifier"};
  app.require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Run the multi-run benchmark over one or more corpora");
  std::string corpus_dir = "data";
  std::string datasets_csv = "chatbot,askubuntu,webapplication";
  std::string classifiers_csv;
  int runs = 10;
  std::uint64_t seed = 0;
  std::string thesaurus_path;
  bool no_augment = false;
  bool check = false;
  std::string report_base = "semhash_report";
  bench->add_option("--corpus-dir", corpus_dir,
                    "Directory with <dataset>.json/.csv corpus files");
  bench->add_option("--datasets", datasets_csv,
                    "Comma-separated dataset names");
  bench->add_option("--classifiers", classifiers_csv,
                    "Comma-separated classifier names (default: all)");
  bench->add_option("--runs", runs, "Seeded runs per cell");
  bench->add_option("--seed", seed, "Base seed");
  bench->add_option("--thesaurus", thesaurus_path, "Synonym lexicon (TSV)");
  bench->add_flag("--no-augment", no_augment, "Disable oversampling");
  bench->add_flag("--check", check,
                  "Exit 2 unless the reproduction thresholds hold");
  bench->add_option("--report", report_base,
                    "Report path base; writes <base>.txt and <base>.json");

  // train
  auto* train = app.add_subcommand("train", "Train and save a model");
  std::string corpus_file;
  std::string classifier = "passive_aggressive";
  std::string out_path = "model.shm";
  train->add_option("--corpus", corpus_file, "Corpus file (.json or .csv)")
      ->required();
  train->add_option("--classifier", classifier, "Classifier name");
  train->add_option("--seed", seed, "Seed");
  train->add_option("--thesaurus", thesaurus_path, "Synonym lexicon (TSV)");
  train->add_flag("--no-augment", no_augment, "Disable oversampling");
  train->add_option("--out", out_path, "Output model file (.shm)");

  // predict
  auto* predict_cmd =
      app.add_subcommand("predict", "Predict labels for input lines");
  std::string model_path;
  std::string input_path;
  bool with_scores = false;
  predict_cmd->add_option("--model", model_path, "Model file (.shm)")
      ->required();
  predict_cmd->add_option("--input", input_path,
                          "Input text file (default: stdin)");
  predict_cmd->add_flag("--scores", with_scores,
                        "Append per-class decision values");

  // featurize
  auto* featurize_cmd = app.add_subcommand(
      "featurize", "Show normalization and sub-tokens for a text");
  std::string text;
  bool as_json = false;
  featurize_cmd->add_option("text", text, "Input text");
  featurize_cmd->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bench->parsed()) {
      return run_bench(corpus_dir, datasets_csv, classifiers_csv, runs, seed,
                       thesaurus_path, no_augment, check, report_base);
    }
    if (train->parsed()) {
      return run_train(corpus_file, classifier, seed, thesaurus_path,
                       no_augment, out_path);
    }
    if (predict_cmd->parsed()) {
      return run_predict(model_path, input_path, with_scores);
    }
    if (featurize_cmd->parsed()) {
      return run_featurize(text, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
