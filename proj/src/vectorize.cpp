#include "semhash/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace semhash {

double sparse_dot(const SparseVector& a, const SparseVector& b) {
  double acc = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() && j < b.entries.size()) {
    int ca = a.entries[i].first;
    int cb = b.entries[j].first;
    if (ca == cb) {
      acc += a.entries[i].second * b.entries[j].second;
      ++i;
      ++j;
    } else if (ca < cb) {
      ++i;
    } else {
      ++j;
    }
  }
  return acc;
}

double sparse_squared_norm(const SparseVector& v) {
  double acc = 0.0;
  for (const auto& [col, w] : v.entries) acc += w * w;
  return acc;
}

double dense_dot(const std::vector<double>& dense, const SparseVector& v) {
  double acc = 0.0;
  for (const auto& [col, w] : v.entries) acc += dense[col] * w;
  return acc;
}

void add_scaled(std::vector<double>& dense, const SparseVector& v,
                double scale) {
  for (const auto& [col, w] : v.entries) dense[col] += scale * w;
}

double squared_distance(const std::vector<double>& dense,
                        const SparseVector& v) {
  // ||d - v||^2 = ||d||^2 - 2 d.v + ||v||^2, computed directly to avoid a
  // dense subtraction per call.
  double dd = 0.0;
  for (double x : dense) dd += x * x;
  return dd - 2.0 * dense_dot(dense, v) + sparse_squared_norm(v);
}

FeatureSpace fit(std::span<const FeaturizedText> docs) {
  if (docs.empty()) {
    throw std::invalid_argument("fit: empty document collection");
  }
  FeatureSpace fs;
  fs.n_docs = static_cast<int>(docs.size());
  for (const FeaturizedText& doc : docs) {
    // Count each token once per document.
    std::vector<int> seen_cols;
    for (const std::string& tok : doc) {
      auto [it, inserted] =
          fs.index.try_emplace(tok, static_cast<int>(fs.tokens.size()));
      if (inserted) {
        fs.tokens.push_back(tok);
        fs.doc_freq.push_back(0);
      }
      seen_cols.push_back(it->second);
    }
    std::sort(seen_cols.begin(), seen_cols.end());
    seen_cols.erase(std::unique(seen_cols.begin(), seen_cols.end()),
                    seen_cols.end());
    for (int col : seen_cols) fs.doc_freq[col] += 1;
  }
  return fs;
}

double idf(const FeatureSpace& fs, std::string_view token) {
  auto it = fs.index.find(std::string(token));
  if (it == fs.index.end()) {
    throw std::out_of_range("idf: token not in feature space: " +
                            std::string(token));
  }
  int df = fs.doc_freq[it->second];
  return std::log((1.0 + fs.n_docs) / (1.0 + df)) + 1.0;
}

SparseVector transform(const FeatureSpace& fs, const FeaturizedText& doc) {
  std::map<int, int> counts;  // ordered: entries come out sorted by column
  for (const std::string& tok : doc) {
    auto it = fs.index.find(tok);
    if (it == fs.index.end()) continue;  // out-of-vocabulary: skipped
    counts[it->second] += 1;
  }

  SparseVector v;
  v.entries.reserve(counts.size());
  double squared = 0.0;
  for (const auto& [col, tf] : counts) {
    double w =
        tf * (std::log((1.0 + fs.n_docs) / (1.0 + fs.doc_freq[col])) + 1.0);
    v.entries.emplace_back(col, w);
    squared += w * w;
  }
  if (squared > 0.0) {
    double norm = std::sqrt(squared);
    for (auto& [col, w] : v.entries) w /= norm;
  }
  return v;
}

}  // namespace semhash
