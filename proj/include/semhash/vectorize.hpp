#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semhash/featurizer.hpp"

namespace semhash {

// Fitted vector space model over sub-tokens. Column ids are dense and
// assigned in first-appearance order over the fitted documents.
struct FeatureSpace {
  std::unordered_map<std::string, int> index;
  std::vector<std::string> tokens;  // column id -> sub-token
  std::vector<int> doc_freq;        // per column, number of documents
  int n_docs = 0;

  int vocabulary_size() const { return static_cast<int>(tokens.size()); }
};

// L2-normalized tf-idf document vector. Entries are sorted by column id
// with nonzero weights; an all-out-of-vocabulary document is the empty
// (zero) vector.
struct SparseVector {
  std::vector<std::pair<int, double>> entries;

  bool empty() const { return entries.empty(); }
};

double sparse_dot(const SparseVector& a, const SparseVector& b);
double sparse_squared_norm(const SparseVector& v);
double dense_dot(const std::vector<double>& dense, const SparseVector& v);
void add_scaled(std::vector<double>& dense, const SparseVector& v,
                double scale);
// Squared Euclidean distance between a dense point and a sparse vector.
double squared_distance(const std::vector<double>& dense,
                        const SparseVector& v);

// Fits index, document frequencies and document count over the corpus.
// Throws std::invalid_argument on an empty collection.
FeatureSpace fit(std::span<const FeaturizedText> docs);

// Smoothed inverse document frequency, ln((1+n)/(1+df)) + 1. The token must
// be present in the space; out-of-vocabulary tokens are skipped at
// transform time and never reach this function.
double idf(const FeatureSpace& fs, std::string_view token);

// Raw-count tf times idf, divided by the Euclidean norm. Unknown sub-tokens
// are skipped; if nothing remains the zero vector is returned.
SparseVector transform(const FeatureSpace& fs, const FeaturizedText& doc);

}  // namespace semhash
