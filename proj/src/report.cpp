#include "semhash/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace semhash {

namespace {

std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

std::string time_ms(double seconds) {
  char buf[32];
  if (seconds >= 1.0) {
    std::snprintf(buf, sizeof(buf), "%.2f s", seconds);
  } else {
    std::snprintf(buf, sizeof(buf), "%.1f ms", seconds * 1e3);
  }
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::string render_report_text(const EvalReport& report) {
  ReportSummary summary = summarize(report);
  std::ostringstream out;

  for (std::size_t d = 0; d < report.dataset_names.size(); ++d) {
    const std::string& name = report.dataset_names[d];
    out << "Dataset: " << name << " (test size " << report.test_sizes[d]
        << ", " << report.runs << " runs)\n";
    out << "  " << std::left;
    char header[128];
    std::snprintf(header, sizeof(header), "%-20s %-9s %-9s %-11s %-11s %s",
                  "classifier", "avg acc", "variance", "train time",
                  "test time", "params");
    out << header << "\n";
    for (ClassifierKind kind : report.classifiers) {
      const CellResult* cell = report.find_cell(name, kind);
      char row[160];
      std::snprintf(row, sizeof(row), "%-20s %-9s %-9.1e %-11s %-11s %s",
                    std::string(to_string(kind)).c_str(),
                    fixed3(cell->mean_accuracy).c_str(), cell->variance,
                    time_ms(mean_of(cell->train_seconds)).c_str(),
                    time_ms(mean_of(cell->test_seconds)).c_str(),
                    cell->chosen_params.empty()
                        ? ""
                        : cell->chosen_params.front().c_str());
      out << "  " << row << "\n";
    }
    out << "\n";
  }

  out << "Summary (micro-F1 pooled over all test sets; Avg. = unweighted "
         "mean accuracy)\n";
  char header[128];
  std::snprintf(header, sizeof(header), "%-20s", "classifier");
  out << "  " << header;
  for (const auto& n : report.dataset_names) {
    char col[32];
    std::snprintf(col, sizeof(col), " %-15s", n.c_str());
    out << col;
  }
  out << " Overall  Avg.\n";
  for (const auto& cs : summary.per_classifier) {
    char row[64];
    std::snprintf(row, sizeof(row), "%-20s",
                  std::string(to_string(cs.kind)).c_str());
    out << "  " << row;
    for (double acc : cs.accuracy_by_dataset) {
      char col[32];
      std::snprintf(col, sizeof(col), " %-15s", fixed3(acc).c_str());
      out << col;
    }
    out << " " << fixed3(cs.overall_micro_f1) << "    "
        << fixed3(cs.average_accuracy) << "\n";
  }
  out << "\n";
  out << "  Best single classifier: " << to_string(summary.best_single)
      << " (Overall " << fixed3(summary.best_single_overall_f1) << ", Avg. "
      << fixed3(summary.best_single_average) << ")\n";
  out << "  Best per dataset:";
  for (std::size_t d = 0; d < report.dataset_names.size(); ++d) {
    out << " " << report.dataset_names[d] << "="
        << to_string(summary.best_by_dataset[d]) << " ("
        << fixed3(summary.best_accuracy_by_dataset[d]) << ")";
  }
  out << " | pooled micro-F1 " << fixed3(summary.best_per_dataset_overall_f1)
      << "\n";

  if (!report.warnings.empty()) {
    out << "\nWarnings:\n";
    for (const auto& w : report.warnings) out << "  " << w << "\n";
  }
  return out.str();
}

std::string report_to_json(const EvalReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["format"] = "semhash-report";
  doc["version"] = 1;
  if (include_timing) doc["generated_at"] = iso_timestamp();

  nlohmann::ordered_json config;
  config["datasets"] = report.dataset_names;
  std::vector<std::string> kind_names;
  for (ClassifierKind kind : report.classifiers) {
    kind_names.emplace_back(to_string(kind));
  }
  config["classifiers"] = kind_names;
  config["runs"] = report.runs;
  config["seed"] = report.base_seed;
  config["augment"] = report.augment;
  doc["config"] = config;

  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& cell : report.cells) {
    nlohmann::ordered_json c;
    c["dataset"] = cell.dataset;
    c["classifier"] = to_string(cell.classifier);
    c["mean_accuracy"] = cell.mean_accuracy;
    c["variance"] = cell.variance;
    c["accuracies"] = cell.accuracies;
    c["params"] = cell.chosen_params;
    nlohmann::ordered_json tallies = nlohmann::ordered_json::array();
    for (const auto& tally : cell.tallies) {
      tallies.push_back({{"tp", tally.tp}, {"fp", tally.fp}, {"fn", tally.fn}});
    }
    c["tallies"] = tallies;
    if (include_timing) {
      c["train_seconds"] = cell.train_seconds;
      c["test_seconds"] = cell.test_seconds;
    }
    doc["cells"].push_back(std::move(c));
  }

  ReportSummary summary = summarize(report);
  nlohmann::ordered_json sj;
  sj["per_classifier"] = nlohmann::ordered_json::array();
  for (const auto& cs : summary.per_classifier) {
    nlohmann::ordered_json e;
    e["classifier"] = to_string(cs.kind);
    nlohmann::ordered_json by_dataset;
    for (std::size_t d = 0; d < report.dataset_names.size(); ++d) {
      by_dataset[report.dataset_names[d]] = cs.accuracy_by_dataset[d];
    }
    e["accuracy_by_dataset"] = by_dataset;
    e["average_accuracy"] = cs.average_accuracy;
    e["overall_micro_f1"] = cs.overall_micro_f1;
    sj["per_classifier"].push_back(std::move(e));
  }
  nlohmann::ordered_json best;
  for (std::size_t d = 0; d < report.dataset_names.size(); ++d) {
    best[report.dataset_names[d]] = {
        {"classifier", to_string(summary.best_by_dataset[d])},
        {"mean_accuracy", summary.best_accuracy_by_dataset[d]}};
  }
  sj["best_by_dataset"] = best;
  sj["best_single_classifier"] = to_string(summary.best_single);
  sj["best_single_average_accuracy"] = summary.best_single_average;
  sj["best_single_overall_micro_f1"] = summary.best_single_overall_f1;
  sj["best_per_dataset_overall_micro_f1"] =
      summary.best_per_dataset_overall_f1;
  doc["summary"] = std::move(sj);

  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace semhash
