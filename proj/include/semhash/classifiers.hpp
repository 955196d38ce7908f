#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semhash/vectorize.hpp"

namespace semhash {

enum class ClassifierKind {
  kRidge,
  kKnn,
  kPassiveAggressive,
  kLinearSvc,
  kSgd,
  kNearestCentroid,
  kMultinomialNb,
  kBernoulliNb,
  kKmeans,
};

std::string_view to_string(ClassifierKind kind);
std::optional<ClassifierKind> classifier_from_string(std::string_view name);
std::span<const ClassifierKind> all_classifier_kinds();

struct TrainingMatrix {
  std::vector<SparseVector> rows;
  std::vector<int> labels;  // class ids, indexing class_names
  std::vector<std::string> class_names;
  int n_features = 0;

  int n_classes() const { return static_cast<int>(class_names.size()); }
};

// One-vs-rest weight vector (and bias) per class; prediction is the argmax
// of the affine decision values.
struct LinearParams {
  std::vector<std::vector<double>> weights;
  std::vector<double> bias;
};

struct MultinomialNbParams {
  std::vector<double> class_log_prior;
  // log P(token | class) with additive smoothing over tf-idf mass.
  std::vector<std::vector<double>> feature_log_prob;
};

struct BernoulliNbParams {
  std::vector<double> class_log_prior;
  std::vector<std::vector<double>> log_theta;
  std::vector<std::vector<double>> log_one_minus_theta;
  // Per class: sum_j log(1 - theta_cj), the all-absent baseline.
  std::vector<double> absent_log_sum;
  double binarize_threshold = 0.0;
};

// Shared by nearest-centroid (one centroid per class) and k-means (one per
// cluster, tagged with the cluster's majority training label).
struct CentroidParams {
  std::vector<std::vector<double>> centroids;
  std::vector<int> centroid_labels;
};

struct KnnParams {
  int k = 1;
  std::vector<SparseVector> rows;
  std::vector<int> labels;
};

using ClassifierParams =
    std::variant<LinearParams, MultinomialNbParams, BernoulliNbParams,
                 CentroidParams, KnnParams>;

struct ClassifierModel {
  ClassifierKind kind = ClassifierKind::kRidge;
  std::vector<std::string> class_names;
  int n_features = 0;
  ClassifierParams params;
};

// --- Training -------------------------------------------------------------
//
// All trainers validate the matrix (rows/labels aligned, class ids in
// range, columns inside n_features) and throw std::invalid_argument on a
// degenerate input. Linear trainers require at least two classes;
// Naive Bayes, nearest-centroid, KNN and k-means accept one.

// One-vs-rest ridge regression on +-1 targets: per class, solves
// (X^T X + alpha I) w = X^T y by conjugate gradient to residual norm 1e-8.
ClassifierModel train_ridge(const TrainingMatrix& tm, double alpha = 1.0);

// PA-I updates: tau = min(C, hinge / ||x||^2), one pass per epoch over a
// seeded shuffle of the rows.
ClassifierModel train_passive_aggressive(const TrainingMatrix& tm,
                                         double C = 1.0, int epochs = 5,
                                         std::uint64_t seed = 0);

// L2-regularized L1-loss SVM per class, solved by dual coordinate descent
// in fixed row order until the dual objective gain per sweep drops below
// 1e-6.
ClassifierModel train_linear_svc(const TrainingMatrix& tm, double C = 1.0);

// Hinge loss + L2 penalty alpha, stochastic subgradient descent with step
// 1/(alpha * (t + t0)), t0 = 1/alpha so the first step is 1.
ClassifierModel train_sgd(const TrainingMatrix& tm, double alpha = 1e-4,
                          int epochs = 20, std::uint64_t seed = 0);

ClassifierModel train_multinomial_nb(const TrainingMatrix& tm,
                                     double smoothing = 1.0);

ClassifierModel train_bernoulli_nb(const TrainingMatrix& tm,
                                   double smoothing = 1.0,
                                   double binarize_threshold = 0.0);

ClassifierModel train_nearest_centroid(const TrainingMatrix& tm);

// Majority vote among the k nearest rows by Euclidean distance; distance
// ties resolved by row index, vote ties by lowest class id. k is clamped
// to the number of rows.
int predict_knn(const TrainingMatrix& tm, const SparseVector& x, int k);
ClassifierModel make_knn(const TrainingMatrix& tm, int k);

// Seeded greedy k-means++ initialization plus Lloyd iterations; each
// cluster predicts the majority training label of its members. k defaults
// to the class count when <= 0.
ClassifierModel train_kmeans(const TrainingMatrix& tm, int k = 0,
                             std::uint64_t seed = 0, int max_iter = 100);

// --- Prediction -----------------------------------------------------------

// Per-class decision values (linear scores, log posteriors, negated
// squared distances, or KNN votes).
std::vector<double> decision_scores(const ClassifierModel& model,
                                    const SparseVector& x);

// Argmax of decision_scores; ties break to the lowest class id.
int predict(const ClassifierModel& model, const SparseVector& x);

std::vector<int> predict_batch(const ClassifierModel& model,
                               std::span<const SparseVector> xs);

// --- Suite dispatch -------------------------------------------------------

// Hyperparameter bundle for the full suite; each kind reads its own knobs.
// The defaults are the suite's fixed operating point.
struct ClassifierConfig {
  ClassifierKind kind = ClassifierKind::kRidge;
  double ridge_alpha = 1.0;
  double pa_c = 1.0;
  int pa_epochs = 5;
  double svc_c = 1.0;
  double sgd_alpha = 1e-4;
  int sgd_epochs = 20;
  double nb_smoothing = 1.0;
  double nb_binarize_threshold = 0.0;
  int knn_k = 5;
  int kmeans_k = 0;  // 0: one cluster per class
  int kmeans_max_iter = 100;
};

ClassifierModel train_classifier(const ClassifierConfig& config,
                                 const TrainingMatrix& tm,
                                 std::uint64_t seed);

// Hyperparameter grid searched for a kind; a single point means the kind
// trains with defaults and no cross-validation.
std::vector<ClassifierConfig> hyperparameter_grid(ClassifierKind kind);

// Compact human-readable form of the kind-specific knobs, e.g. "k=5".
std::string config_description(const ClassifierConfig& config);

}  // namespace semhash
