#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

#include "semhash/classifiers.hpp"
#include "semhash/rng.hpp"

using namespace semhash;

namespace {

SparseVector sparse(std::vector<std::pair<int, double>> entries) {
  return SparseVector{std::move(entries)};
}

std::vector<double> to_dense(const SparseVector& v, int n) {
  std::vector<double> out(n, 0.0);
  for (const auto& [col, w] : v.entries) out[col] = w;
  return out;
}

TrainingMatrix make_matrix(std::vector<SparseVector> rows,
                           std::vector<int> labels, int n_classes,
                           int n_features) {
  TrainingMatrix tm;
  tm.rows = std::move(rows);
  tm.labels = std::move(labels);
  for (int c = 0; c < n_classes; ++c) {
    tm.class_names.push_back("class" + std::to_string(c));
  }
  tm.n_features = n_features;
  return tm;
}

// Uniform random unit-ish sparse vectors for randomized oracle instances.
SparseVector random_vector(Rng& rng, int n_features) {
  SparseVector v;
  for (int j = 0; j < n_features; ++j) {
    if (rng.uniform_real() < 0.6) {
      v.entries.emplace_back(j, 0.1 + rng.uniform_real());
    }
  }
  if (v.entries.empty()) v.entries.emplace_back(0, 1.0);
  return v;
}

// Exhaustive KNN reference: dense distances, stable (distance, index)
// order, majority vote with lowest-class-id ties.
int knn_oracle(const TrainingMatrix& tm, const SparseVector& x, int k) {
  std::vector<double> xd = to_dense(x, tm.n_features);
  std::vector<std::pair<double, int>> dists;
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    std::vector<double> rd = to_dense(tm.rows[i], tm.n_features);
    double d2 = 0.0;
    for (int j = 0; j < tm.n_features; ++j) {
      d2 += (xd[j] - rd[j]) * (xd[j] - rd[j]);
    }
    dists.emplace_back(d2, static_cast<int>(i));
  }
  std::sort(dists.begin(), dists.end());
  std::vector<int> votes(tm.class_names.size(), 0);
  for (int j = 0; j < std::min<int>(k, dists.size()); ++j) {
    votes[tm.labels[dists[j].second]] += 1;
  }
  int best = 0;
  for (std::size_t c = 1; c < votes.size(); ++c) {
    if (votes[c] > votes[best]) best = static_cast<int>(c);
  }
  return best;
}

// Exhaustive nearest-centroid reference with dense means.
int centroid_oracle(const TrainingMatrix& tm, const SparseVector& x) {
  int n_classes = tm.n_classes();
  std::vector<std::vector<double>> centroids(
      n_classes, std::vector<double>(tm.n_features, 0.0));
  std::vector<int> counts(n_classes, 0);
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    auto rd = to_dense(tm.rows[i], tm.n_features);
    for (int j = 0; j < tm.n_features; ++j) {
      centroids[tm.labels[i]][j] += rd[j];
    }
    counts[tm.labels[i]] += 1;
  }
  std::vector<double> xd = to_dense(x, tm.n_features);
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < n_classes; ++c) {
    if (counts[c] == 0) continue;
    double d2 = 0.0;
    for (int j = 0; j < tm.n_features; ++j) {
      double diff = xd[j] - centroids[c][j] / counts[c];
      d2 += diff * diff;
    }
    if (d2 < best_d) {
      best_d = d2;
      best = c;
    }
  }
  return best;
}

const LinearParams& linear_params(const ClassifierModel& model) {
  return std::get<LinearParams>(model.params);
}

}  // namespace

// --------------------------------------------------------------- ridge

TEST_CASE("ridge separates orthogonal unit vectors") {
  TrainingMatrix tm = make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})},
                                  {0, 1}, 2, 2);
  ClassifierModel model = train_ridge(tm);
  CHECK(predict(model, tm.rows[0]) == 0);
  CHECK(predict(model, tm.rows[1]) == 1);
  auto s0 = decision_scores(model, tm.rows[0]);
  auto s1 = decision_scores(model, tm.rows[1]);
  CHECK(s0[0] == doctest::Approx(s1[1]).epsilon(1e-9));
  CHECK(s0[1] == doctest::Approx(s1[0]).epsilon(1e-9));
}

TEST_CASE("ridge matches the dense normal-equations oracle on XOR points") {
  // 4 points in 2 columns, XOR-style labels
  std::vector<SparseVector> rows = {
      sparse({}), sparse({{0, 1.0}, {1, 1.0}}), sparse({{0, 1.0}}),
      sparse({{1, 1.0}})};
  TrainingMatrix tm = make_matrix(rows, {0, 0, 1, 1}, 2, 2);
  double alpha = 1.0;
  ClassifierModel model = train_ridge(tm, alpha);

  // dense closed-form solve of (X^T X + alpha I) w = X^T y per class
  // X^T X = [[2,1],[1,2]]
  double a = 2.0 + alpha, b = 1.0;  // A = [[a,b],[b,a]]
  double det = a * a - b * b;
  for (int c = 0; c < 2; ++c) {
    double b0 = 0.0, b1 = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double y = tm.labels[i] == c ? 1.0 : -1.0;
      auto d = to_dense(rows[i], 2);
      b0 += d[0] * y;
      b1 += d[1] * y;
    }
    double w0 = (a * b0 - b * b1) / det;
    double w1 = (a * b1 - b * b0) / det;
    CHECK(linear_params(model).weights[c][0] ==
          doctest::Approx(w0).epsilon(1e-7));
    CHECK(linear_params(model).weights[c][1] ==
          doctest::Approx(w1).epsilon(1e-7));
  }

  // oracle argmax equals model prediction on every training point
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto d = to_dense(rows[i], 2);
    double best_score = -1e300;
    int best = 0;
    for (int c = 0; c < 2; ++c) {
      double b0 = 0.0, b1 = 0.0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        double y = tm.labels[r] == c ? 1.0 : -1.0;
        auto rd = to_dense(rows[r], 2);
        b0 += rd[0] * y;
        b1 += rd[1] * y;
      }
      double w0 = (a * b0 - b * b1) / det;
      double w1 = (a * b1 - b * b0) / det;
      double score = w0 * d[0] + w1 * d[1];
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    CHECK(predict(model, rows[i]) == best);
  }
}

TEST_CASE("ridge rejects degenerate input") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}})}, {0}, 1, 1);  // single class
  CHECK_THROWS_AS(train_ridge(tm), std::invalid_argument);

  TrainingMatrix mismatch =
      make_matrix({sparse({{0, 1.0}})}, {0, 1}, 2, 1);
  CHECK_THROWS_AS(train_ridge(mismatch), std::invalid_argument);

  TrainingMatrix out_of_range =
      make_matrix({sparse({{5, 1.0}}), sparse({{0, 1.0}})}, {0, 1}, 2, 2);
  CHECK_THROWS_AS(train_ridge(out_of_range), std::invalid_argument);
}

// --------------------------------------------- passive aggressive (PA-I)

TEST_CASE("PA-I single update reaches the clipped margin") {
  // ||x||^2 = 0.5; the second row is a zero vector and is skipped, so only
  // one update happens per class in one epoch
  SparseVector x = sparse({{0, std::sqrt(0.5)}});
  TrainingMatrix tm = make_matrix({x, sparse({})}, {0, 1}, 2, 1);

  ClassifierModel model = train_passive_aggressive(tm, 1.0, 1, 0);
  // post-update margin y.w.x = min(C, 1/||x||^2) * ||x||^2 = 1 * 0.5
  double margin = dense_dot(linear_params(model).weights[0], x);
  CHECK(margin == doctest::Approx(0.5).epsilon(1e-12));
  // the negative class got the mirrored update
  CHECK(dense_dot(linear_params(model).weights[1], x) ==
        doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("PA-I leaves a satisfied margin untouched") {
  SparseVector x = sparse({{0, std::sqrt(0.5)}});
  TrainingMatrix tm = make_matrix({x, sparse({})}, {0, 1}, 2, 1);
  // after two updates the margin is exactly 1; more epochs change nothing
  ClassifierModel two = train_passive_aggressive(tm, 1.0, 2, 7);
  ClassifierModel five = train_passive_aggressive(tm, 1.0, 5, 7);
  CHECK(dense_dot(linear_params(two).weights[0], x) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (int c = 0; c < 2; ++c) {
    for (int j = 0; j < tm.n_features; ++j) {
      CHECK(linear_params(two).weights[c][j] ==
            linear_params(five).weights[c][j]);
    }
  }
}

TEST_CASE("PA-I steps are bounded by C") {
  // with tau <= C every weight coordinate is bounded by
  // C * epochs * n_rows * max|x_j|
  Rng rng(3);
  TrainingMatrix tm;
  for (int i = 0; i < 12; ++i) {
    tm.rows.push_back(random_vector(rng, 4));
    tm.labels.push_back(static_cast<int>(rng.uniform(3)));
  }
  tm.class_names = {"a", "b", "c"};
  tm.n_features = 4;
  double c_small = 1e-3;
  int epochs = 4;
  ClassifierModel model =
      train_passive_aggressive(tm, c_small, epochs, 11);
  double max_abs_x = 0.0;
  for (const auto& row : tm.rows) {
    for (const auto& [col, w] : row.entries) {
      max_abs_x = std::max(max_abs_x, std::abs(w));
    }
  }
  double bound = c_small * epochs * tm.rows.size() * max_abs_x;
  for (const auto& w : linear_params(model).weights) {
    for (double x : w) CHECK(std::abs(x) <= bound + 1e-15);
  }
}

// ---------------------------------------------------------- linear SVC

TEST_CASE("linear SVC finds the max-margin separator for +-e1") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{0, -1.0}})}, {0, 1}, 2, 1);
  ClassifierModel model = train_linear_svc(tm, 1.0);
  // analytic solution per class is w = +-e1
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    double margin = dense_dot(linear_params(model).weights[tm.labels[i]],
                              tm.rows[i]);
    CHECK(margin >= 1.0 - 1e-3);
  }
  CHECK(predict(model, tm.rows[0]) == 0);
  CHECK(predict(model, tm.rows[1]) == 1);
  CHECK(linear_params(model).weights[0][0] ==
        doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("linear SVC: duplicated rows with halved C give the same model") {
  Rng rng(5);
  TrainingMatrix tm;
  for (int i = 0; i < 10; ++i) {
    tm.rows.push_back(random_vector(rng, 5));
    tm.labels.push_back(static_cast<int>(rng.uniform(2)));
  }
  tm.class_names = {"a", "b"};
  tm.n_features = 5;

  TrainingMatrix doubled = tm;
  doubled.rows.insert(doubled.rows.end(), tm.rows.begin(), tm.rows.end());
  doubled.labels.insert(doubled.labels.end(), tm.labels.begin(),
                        tm.labels.end());

  // duplicating every row doubles the loss term; halving C restores the
  // objective, so predictions must match
  ClassifierModel base = train_linear_svc(tm, 1.0);
  ClassifierModel dup = train_linear_svc(doubled, 0.5);
  for (const auto& row : tm.rows) {
    CHECK(predict(base, row) == predict(dup, row));
  }
  for (int c = 0; c < 2; ++c) {
    for (int j = 0; j < tm.n_features; ++j) {
      CHECK(linear_params(base).weights[c][j] ==
            doctest::Approx(linear_params(dup).weights[c][j])
                .epsilon(5e-2).scale(1.0));
    }
  }
}

// ------------------------------------------------------------------ SGD

TEST_CASE("SGD with zero epochs predicts class 0 everywhere") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2);
  ClassifierModel model = train_sgd(tm, 1e-4, 0, 0);
  for (const auto& w : linear_params(model).weights) {
    for (double x : w) CHECK(x == 0.0);
  }
  CHECK(predict(model, sparse({{0, 1.0}})) == 0);
  CHECK(predict(model, sparse({{1, 7.0}})) == 0);
}

TEST_CASE("SGD solves a separable 2-point problem") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2);
  ClassifierModel model = train_sgd(tm, 1e-4, 20, 1);
  CHECK(predict(model, tm.rows[0]) == 0);
  CHECK(predict(model, tm.rows[1]) == 1);
}

// ---------------------------------------------------------- Naive Bayes

TEST_CASE("multinomial NB separates one-hot classes") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2);
  ClassifierModel model = train_multinomial_nb(tm);
  CHECK(predict(model, tm.rows[0]) == 0);
  CHECK(predict(model, tm.rows[1]) == 1);
}

TEST_CASE("multinomial NB matches a brute-force posterior oracle") {
  std::vector<SparseVector> rows = {
      sparse({{0, 0.8}, {1, 0.6}}),
      sparse({{0, 0.3}, {2, 0.9}}),
      sparse({{1, 1.0}}),
  };
  TrainingMatrix tm = make_matrix(rows, {0, 0, 1}, 2, 3);
  double smoothing = 1.0;
  ClassifierModel model = train_multinomial_nb(tm, smoothing);

  // brute force: dense per-class mass, smoothed log-probabilities, then
  // log prior + sum_j x_j log P(j|c)
  std::vector<std::vector<double>> mass(2, std::vector<double>(3, 0.0));
  std::vector<double> count(2, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    count[tm.labels[i]] += 1.0;
    auto d = to_dense(rows[i], 3);
    for (int j = 0; j < 3; ++j) mass[tm.labels[i]][j] += d[j];
  }
  SparseVector query = sparse({{0, 0.5}, {1, 0.5}, {2, 0.2}});
  auto scores = decision_scores(model, query);
  auto q = to_dense(query, 3);
  for (int c = 0; c < 2; ++c) {
    double total = mass[c][0] + mass[c][1] + mass[c][2] + smoothing * 3;
    double expect = std::log(count[c] / rows.size());
    for (int j = 0; j < 3; ++j) {
      expect += q[j] * std::log((mass[c][j] + smoothing) / total);
    }
    CHECK(std::abs(scores[c] - expect) < 1e-10);
  }
}

TEST_CASE("bernoulli NB matches a brute-force posterior oracle") {
  std::vector<SparseVector> rows = {
      sparse({{0, 0.9}}),
      sparse({{0, 0.7}, {1, 0.7}}),
      sparse({{2, 1.0}}),
  };
  TrainingMatrix tm = make_matrix(rows, {0, 0, 1}, 2, 3);
  double smoothing = 1.0;
  ClassifierModel model = train_bernoulli_nb(tm, smoothing, 0.0);

  std::vector<std::vector<double>> present(2, std::vector<double>(3, 0.0));
  std::vector<double> count(2, 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    count[tm.labels[i]] += 1.0;
    auto d = to_dense(rows[i], 3);
    for (int j = 0; j < 3; ++j) {
      if (d[j] > 0.0) present[tm.labels[i]][j] += 1.0;
    }
  }
  SparseVector query = sparse({{0, 0.4}, {2, 0.3}});
  auto q = to_dense(query, 3);
  auto scores = decision_scores(model, query);
  for (int c = 0; c < 2; ++c) {
    double expect = std::log(count[c] / rows.size());
    for (int j = 0; j < 3; ++j) {
      double theta = (present[c][j] + smoothing) / (count[c] + 2 * smoothing);
      expect += q[j] > 0.0 ? std::log(theta) : std::log(1.0 - theta);
    }
    CHECK(std::abs(scores[c] - expect) < 1e-10);
  }

  ClassifierModel sym = train_bernoulli_nb(
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2));
  CHECK(predict(sym, sparse({{0, 1.0}})) == 0);
  CHECK(predict(sym, sparse({{1, 1.0}})) == 1);
}

TEST_CASE("NB accepts single-class input degenerately") {
  TrainingMatrix tm = make_matrix({sparse({{0, 1.0}})}, {0}, 1, 1);
  ClassifierModel mnb = train_multinomial_nb(tm);
  CHECK(predict(mnb, sparse({{0, 2.0}})) == 0);
  ClassifierModel bnb = train_bernoulli_nb(tm);
  CHECK(predict(bnb, sparse({})) == 0);
}

// ------------------------------------------------------ nearest centroid

TEST_CASE("nearest centroid reduces to 1-NN with one sample per class") {
  TrainingMatrix tm = make_matrix(
      {sparse({{0, 1.0}}), sparse({{1, 1.0}}), sparse({{2, 1.0}})},
      {0, 1, 2}, 3, 3);
  ClassifierModel model = train_nearest_centroid(tm);
  CHECK(predict(model, sparse({{0, 0.9}, {1, 0.1}})) == 0);
  CHECK(predict(model, sparse({{1, 0.8}})) == 1);
  CHECK(predict(model, sparse({{2, 1.0}, {0, 0.2}})) == 2);
}

TEST_CASE("nearest centroid uses the per-class mean") {
  TrainingMatrix tm = make_matrix(
      {sparse({{0, 1.0}}), sparse({{0, 3.0}}), sparse({{0, 10.0}})},
      {0, 0, 1}, 2, 1);
  ClassifierModel model = train_nearest_centroid(tm);
  const auto& params = std::get<CentroidParams>(model.params);
  CHECK(params.centroids[0][0] == 2.0);  // midpoint of 1 and 3
  CHECK(params.centroids[1][0] == 10.0);
  // the midpoint of the boundary is (2+10)/2 = 6
  CHECK(predict(model, sparse({{0, 5.9}})) == 0);
  CHECK(predict(model, sparse({{0, 6.1}})) == 1);
}

// ------------------------------------------------------------------ KNN

TEST_CASE("KNN trivial cases") {
  Rng rng(17);
  TrainingMatrix tm;
  for (int i = 0; i < 7; ++i) {
    tm.rows.push_back(random_vector(rng, 3));
    tm.labels.push_back(i < 4 ? 0 : 1);  // class 0 is the global majority
  }
  tm.class_names = {"a", "b"};
  tm.n_features = 3;

  // k=1 on a training row returns that row's label
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    CHECK(predict_knn(tm, tm.rows[i], 1) == tm.labels[i]);
  }
  // k = all rows returns the global majority
  Rng rng2(23);
  for (int t = 0; t < 5; ++t) {
    CHECK(predict_knn(tm, random_vector(rng2, 3), 7) == 0);
  }
}

TEST_CASE("KNN 5-point hand instance, k=3") {
  TrainingMatrix tm = make_matrix(
      {sparse({{0, 0.0}}), sparse({{0, 1.0}}), sparse({{0, 2.0}}),
       sparse({{0, 10.0}}), sparse({{0, 11.0}})},
      {0, 0, 0, 1, 1}, 2, 1);
  CHECK(predict_knn(tm, sparse({{0, 1.5}}), 3) == 0);
  CHECK(predict_knn(tm, sparse({{0, 9.0}}), 3) == 1);
  CHECK(predict_knn(tm, sparse({{0, 9.0}}), 3) ==
        knn_oracle(tm, sparse({{0, 9.0}}), 3));
}

TEST_CASE("KNN and nearest centroid match brute force on random instances") {
  Rng rng(101);
  for (int instance = 0; instance < 20; ++instance) {
    int n_rows = 5 + static_cast<int>(rng.uniform(16));
    int n_classes = 2 + static_cast<int>(rng.uniform(3));
    int n_features = 3 + static_cast<int>(rng.uniform(4));
    TrainingMatrix tm;
    for (int i = 0; i < n_rows; ++i) {
      tm.rows.push_back(random_vector(rng, n_features));
      tm.labels.push_back(i < n_classes
                              ? i  // every class occupied
                              : static_cast<int>(rng.uniform(n_classes)));
    }
    for (int c = 0; c < n_classes; ++c) {
      tm.class_names.push_back("c" + std::to_string(c));
    }
    tm.n_features = n_features;

    ClassifierModel centroid = train_nearest_centroid(tm);
    for (int q = 0; q < 8; ++q) {
      SparseVector x = random_vector(rng, n_features);
      int k = 1 + static_cast<int>(rng.uniform(n_rows));
      CHECK(predict_knn(tm, x, k) == knn_oracle(tm, x, k));
      CHECK(predict(centroid, x) == centroid_oracle(tm, x));
    }
  }
}

// -------------------------------------------------------------- k-means

TEST_CASE("k-means separates two blobs") {
  Rng rng(31);
  TrainingMatrix tm;
  for (int i = 0; i < 20; ++i) {
    double jitter = 0.05 * rng.uniform_real();
    if (i % 2 == 0) {
      tm.rows.push_back(sparse({{0, 1.0 + jitter}, {1, 0.05}}));
      tm.labels.push_back(0);
    } else {
      tm.rows.push_back(sparse({{2, 1.0 + jitter}, {3, 0.05}}));
      tm.labels.push_back(1);
    }
  }
  tm.class_names = {"a", "b"};
  tm.n_features = 4;
  ClassifierModel model = train_kmeans(tm, 2, 9);
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    CHECK(predict(model, tm.rows[i]) == tm.labels[i]);
  }
}

TEST_CASE("k-means with k=1 predicts the global majority") {
  TrainingMatrix tm = make_matrix(
      {sparse({{0, 1.0}}), sparse({{0, 2.0}}), sparse({{1, 1.0}})},
      {1, 1, 0}, 2, 2);
  ClassifierModel model = train_kmeans(tm, 1, 0);
  CHECK(predict(model, sparse({{0, 5.0}})) == 1);
  CHECK(predict(model, sparse({{1, 5.0}})) == 1);
}

// ----------------------------------------------------- shared contracts

TEST_CASE("training is deterministic for a fixed seed") {
  Rng rng(77);
  TrainingMatrix tm;
  for (int i = 0; i < 15; ++i) {
    tm.rows.push_back(random_vector(rng, 6));
    tm.labels.push_back(static_cast<int>(rng.uniform(3)));
  }
  tm.class_names = {"a", "b", "c"};
  tm.n_features = 6;

  auto check_identical = [](const ClassifierModel& m1,
                            const ClassifierModel& m2) {
    const auto* l1 = std::get_if<LinearParams>(&m1.params);
    if (l1) {
      const auto& l2 = std::get<LinearParams>(m2.params);
      for (std::size_t c = 0; c < l1->weights.size(); ++c) {
        for (std::size_t j = 0; j < l1->weights[c].size(); ++j) {
          CHECK(l1->weights[c][j] == l2.weights[c][j]);
        }
      }
      return;
    }
    const auto* k1 = std::get_if<CentroidParams>(&m1.params);
    if (k1) {
      const auto& k2 = std::get<CentroidParams>(m2.params);
      CHECK(k1->centroid_labels == k2.centroid_labels);
      for (std::size_t c = 0; c < k1->centroids.size(); ++c) {
        for (std::size_t j = 0; j < k1->centroids[c].size(); ++j) {
          CHECK(k1->centroids[c][j] == k2.centroids[c][j]);
        }
      }
    }
  };

  check_identical(train_passive_aggressive(tm, 1.0, 5, 42),
                  train_passive_aggressive(tm, 1.0, 5, 42));
  check_identical(train_sgd(tm, 1e-4, 10, 42), train_sgd(tm, 1e-4, 10, 42));
  check_identical(train_kmeans(tm, 3, 42), train_kmeans(tm, 3, 42));
  check_identical(train_ridge(tm), train_ridge(tm));
}

TEST_CASE("prediction is total and ties break to the lowest class id") {
  // zero weights: every score equal
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2);
  ClassifierModel zeros = train_sgd(tm, 1e-4, 0, 0);
  CHECK(predict(zeros, sparse({{0, 3.0}, {1, 3.0}})) == 0);

  // KNN with k=2 and one neighbor from each class: vote tie -> class 0
  TrainingMatrix knn_tm = make_matrix(
      {sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {1, 0}, 2, 2);
  CHECK(predict_knn(knn_tm, sparse({{0, 0.5}, {1, 0.5}}), 2) == 0);
}

TEST_CASE("adding a constant to every class score keeps predictions") {
  Rng rng(55);
  TrainingMatrix tm;
  for (int i = 0; i < 12; ++i) {
    tm.rows.push_back(random_vector(rng, 4));
    tm.labels.push_back(static_cast<int>(rng.uniform(3)));
  }
  tm.class_names = {"a", "b", "c"};
  tm.n_features = 4;
  ClassifierModel model = train_linear_svc(tm);
  ClassifierModel shifted = model;
  for (double& b : std::get<LinearParams>(shifted.params).bias) b += 5.0;
  for (int q = 0; q < 10; ++q) {
    SparseVector x = random_vector(rng, 4);
    CHECK(predict(model, x) == predict(shifted, x));
  }
}

TEST_CASE("decision_scores rejects vectors outside the feature space") {
  TrainingMatrix tm =
      make_matrix({sparse({{0, 1.0}}), sparse({{1, 1.0}})}, {0, 1}, 2, 2);
  ClassifierModel model = train_ridge(tm);
  CHECK_THROWS_AS(decision_scores(model, sparse({{9, 1.0}})),
                  std::invalid_argument);
}

TEST_CASE("classifier name round-trip") {
  for (ClassifierKind kind : all_classifier_kinds()) {
    auto parsed = classifier_from_string(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!classifier_from_string("mlp").has_value());
  CHECK(all_classifier_kinds().size() == 9);
}
