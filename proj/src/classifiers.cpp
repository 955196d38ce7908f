#include "semhash/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "semhash/rng.hpp"

namespace semhash {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Log prior of a class with no training rows. Finite (so NB posteriors stay
// finite and serializable) yet far below any reachable score.
constexpr double kNeverLogPrior = -1e300;

void validate_matrix(const TrainingMatrix& tm, int min_classes,
                     const char* who) {
  std::string where(who);
  if (tm.rows.empty()) {
    throw std::invalid_argument(where + ": no training rows");
  }
  if (tm.rows.size() != tm.labels.size()) {
    throw std::invalid_argument(where + ": rows/labels length mismatch");
  }
  if (tm.n_features <= 0) {
    throw std::invalid_argument(where + ": n_features must be positive");
  }
  if (tm.class_names.empty()) {
    throw std::invalid_argument(where + ": no class names");
  }
  for (int label : tm.labels) {
    if (label < 0 || label >= tm.n_classes()) {
      throw std::invalid_argument(where + ": label id out of range");
    }
  }
  for (const SparseVector& row : tm.rows) {
    if (!row.entries.empty() && row.entries.back().first >= tm.n_features) {
      throw std::invalid_argument(where + ": column id beyond n_features");
    }
  }
  std::vector<char> seen(tm.class_names.size(), 0);
  for (int label : tm.labels) seen[label] = 1;
  int present = std::accumulate(seen.begin(), seen.end(), 0);
  if (present < min_classes) {
    throw std::invalid_argument(where + ": needs at least " +
                                std::to_string(min_classes) +
                                " distinct classes in the labels");
  }
}

std::vector<double> row_squared_norms(const TrainingMatrix& tm) {
  std::vector<double> norms(tm.rows.size());
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    norms[i] = sparse_squared_norm(tm.rows[i]);
  }
  return norms;
}

// argmax with ties to the lowest index.
int argmax_lowest(const std::vector<double>& scores) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(scores.size()); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

ClassifierModel make_model(ClassifierKind kind, const TrainingMatrix& tm,
                           ClassifierParams params) {
  ClassifierModel model;
  model.kind = kind;
  model.class_names = tm.class_names;
  model.n_features = tm.n_features;
  model.params = std::move(params);
  return model;
}

// Conjugate gradient for (X^T X + alpha I) w = b.
std::vector<double> solve_normal_equations_cg(const TrainingMatrix& tm,
                                              double alpha,
                                              const std::vector<double>& b,
                                              double tol) {
  const int d = tm.n_features;
  std::vector<double> w(d, 0.0), r = b, p = b, ap(d), xr(tm.rows.size());

  auto matvec = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < tm.rows.size(); ++i) {
      xr[i] = dense_dot(v, tm.rows[i]);
    }
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < tm.rows.size(); ++i) {
      add_scaled(out, tm.rows[i], xr[i]);
    }
    for (int j = 0; j < d; ++j) out[j] += alpha * v[j];
  };

  double rs = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  const int max_iter = 10 * d + 100;
  for (int iter = 0; iter < max_iter && std::sqrt(rs) > tol; ++iter) {
    matvec(p, ap);
    double pap = std::inner_product(p.begin(), p.end(), ap.begin(), 0.0);
    if (pap <= 0.0) break;  // numerically exhausted
    double step = rs / pap;
    for (int j = 0; j < d; ++j) {
      w[j] += step * p[j];
      r[j] -= step * ap[j];
    }
    double rs_next = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
    double beta = rs_next / rs;
    for (int j = 0; j < d; ++j) p[j] = r[j] + beta * p[j];
    rs = rs_next;
  }
  return w;
}

int majority_label(const std::vector<int>& counts) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(counts.size()); ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return best;
}

}  // namespace

std::string_view to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kRidge:
      return "ridge";
    case ClassifierKind::kKnn:
      return "knn";
    case ClassifierKind::kPassiveAggressive:
      return "passive_aggressive";
    case ClassifierKind::kLinearSvc:
      return "linear_svc";
    case ClassifierKind::kSgd:
      return "sgd";
    case ClassifierKind::kNearestCentroid:
      return "nearest_centroid";
    case ClassifierKind::kMultinomialNb:
      return "multinomial_nb";
    case ClassifierKind::kBernoulliNb:
      return "bernoulli_nb";
    case ClassifierKind::kKmeans:
      return "kmeans";
  }
  return "unknown";
}

std::optional<ClassifierKind> classifier_from_string(std::string_view name) {
  for (ClassifierKind kind : all_classifier_kinds()) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::span<const ClassifierKind> all_classifier_kinds() {
  static const ClassifierKind kinds[] = {
      ClassifierKind::kRidge,          ClassifierKind::kKnn,
      ClassifierKind::kPassiveAggressive, ClassifierKind::kLinearSvc,
      ClassifierKind::kSgd,            ClassifierKind::kNearestCentroid,
      ClassifierKind::kMultinomialNb,  ClassifierKind::kBernoulliNb,
      ClassifierKind::kKmeans,
  };
  return kinds;
}

ClassifierModel train_ridge(const TrainingMatrix& tm, double alpha) {
  validate_matrix(tm, 2, "train_ridge");
  if (alpha < 0.0) {
    throw std::invalid_argument("train_ridge: alpha must be non-negative");
  }
  LinearParams params;
  params.bias.assign(tm.class_names.size(), 0.0);
  for (int c = 0; c < tm.n_classes(); ++c) {
    std::vector<double> b(tm.n_features, 0.0);
    for (std::size_t i = 0; i < tm.rows.size(); ++i) {
      double y = tm.labels[i] == c ? 1.0 : -1.0;
      add_scaled(b, tm.rows[i], y);
    }
    params.weights.push_back(
        solve_normal_equations_cg(tm, alpha, b, /*tol=*/1e-8));
  }
  return make_model(ClassifierKind::kRidge, tm, std::move(params));
}

ClassifierModel train_passive_aggressive(const TrainingMatrix& tm, double C,
                                         int epochs, std::uint64_t seed) {
  validate_matrix(tm, 2, "train_passive_aggressive");
  if (C <= 0.0) {
    throw std::invalid_argument(
        "train_passive_aggressive: C must be positive");
  }
  const std::vector<double> sq = row_squared_norms(tm);
  LinearParams params;
  params.weights.assign(tm.class_names.size(),
                        std::vector<double>(tm.n_features, 0.0));
  params.bias.assign(tm.class_names.size(), 0.0);

  std::vector<std::size_t> order(tm.rows.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      if (sq[i] <= 0.0) continue;
      for (int c = 0; c < tm.n_classes(); ++c) {
        double y = tm.labels[i] == c ? 1.0 : -1.0;
        double margin = y * dense_dot(params.weights[c], tm.rows[i]);
        double loss = std::max(0.0, 1.0 - margin);
        if (loss > 0.0) {
          double tau = std::min(C, loss / sq[i]);
          add_scaled(params.weights[c], tm.rows[i], tau * y);
        }
      }
    }
  }
  return make_model(ClassifierKind::kPassiveAggressive, tm,
                    std::move(params));
}

ClassifierModel train_linear_svc(const TrainingMatrix& tm, double C) {
  validate_matrix(tm, 2, "train_linear_svc");
  if (C <= 0.0) {
    throw std::invalid_argument("train_linear_svc: C must be positive");
  }
  const std::vector<double> sq = row_squared_norms(tm);
  const std::size_t n = tm.rows.size();
  constexpr int kMaxSweeps = 1000;
  constexpr double kDualGainTol = 1e-6;

  LinearParams params;
  params.bias.assign(tm.class_names.size(), 0.0);
  for (int c = 0; c < tm.n_classes(); ++c) {
    std::vector<double> w(tm.n_features, 0.0);
    std::vector<double> a(n, 0.0);  // dual variables
    double prev_dual = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      for (std::size_t i = 0; i < n; ++i) {
        if (sq[i] <= 0.0) continue;
        double y = tm.labels[i] == c ? 1.0 : -1.0;
        double g = y * dense_dot(w, tm.rows[i]) - 1.0;
        double pg;
        if (a[i] <= 0.0) {
          pg = std::min(g, 0.0);
        } else if (a[i] >= C) {
          pg = std::max(g, 0.0);
        } else {
          pg = g;
        }
        if (std::abs(pg) > 1e-12) {
          double old = a[i];
          a[i] = std::clamp(old - g / sq[i], 0.0, C);
          add_scaled(w, tm.rows[i], (a[i] - old) * y);
        }
      }
      double wtw = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
      double dual = std::accumulate(a.begin(), a.end(), 0.0) - 0.5 * wtw;
      if (sweep > 0 && dual - prev_dual < kDualGainTol) break;
      prev_dual = dual;
    }
    params.weights.push_back(std::move(w));
  }
  return make_model(ClassifierKind::kLinearSvc, tm, std::move(params));
}

ClassifierModel train_sgd(const TrainingMatrix& tm, double alpha, int epochs,
                          std::uint64_t seed) {
  validate_matrix(tm, 2, "train_sgd");
  if (alpha <= 0.0) {
    throw std::invalid_argument("train_sgd: alpha must be positive");
  }
  if (epochs < 0) {
    throw std::invalid_argument("train_sgd: epochs must be non-negative");
  }
  const int n_classes = tm.n_classes();
  // w_c is kept as scale_c * v_c so the per-sample L2 decay is O(1).
  std::vector<std::vector<double>> v(
      n_classes, std::vector<double>(tm.n_features, 0.0));
  std::vector<double> scale(n_classes, 1.0);

  std::vector<std::size_t> order(tm.rows.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  // eta_t = 1/(alpha*(t + t0)) with t0 = 1/alpha, so eta_0 = 1.
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      double eta = 1.0 / (1.0 + alpha * static_cast<double>(t));
      ++t;
      for (int c = 0; c < n_classes; ++c) {
        double y = tm.labels[i] == c ? 1.0 : -1.0;
        scale[c] *= 1.0 - eta * alpha;
        if (y * scale[c] * dense_dot(v[c], tm.rows[i]) < 1.0) {
          add_scaled(v[c], tm.rows[i], eta * y / scale[c]);
        }
        if (scale[c] < 1e-9) {
          for (double& x : v[c]) x *= scale[c];
          scale[c] = 1.0;
        }
      }
    }
  }

  LinearParams params;
  params.bias.assign(n_classes, 0.0);
  for (int c = 0; c < n_classes; ++c) {
    for (double& x : v[c]) x *= scale[c];
    params.weights.push_back(std::move(v[c]));
  }
  return make_model(ClassifierKind::kSgd, tm, std::move(params));
}

ClassifierModel train_multinomial_nb(const TrainingMatrix& tm,
                                     double smoothing) {
  validate_matrix(tm, 1, "train_multinomial_nb");
  if (smoothing <= 0.0) {
    throw std::invalid_argument(
        "train_multinomial_nb: smoothing must be positive");
  }
  const int n_classes = tm.n_classes();
  MultinomialNbParams params;
  params.class_log_prior.assign(n_classes, kNeverLogPrior);
  params.feature_log_prob.assign(n_classes,
                                 std::vector<double>(tm.n_features, 0.0));
  std::vector<double> class_count(n_classes, 0.0);
  std::vector<std::vector<double>> mass(
      n_classes, std::vector<double>(tm.n_features, 0.0));
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    class_count[tm.labels[i]] += 1.0;
    add_scaled(mass[tm.labels[i]], tm.rows[i], 1.0);
  }
  for (int c = 0; c < n_classes; ++c) {
    if (class_count[c] > 0.0) {
      params.class_log_prior[c] =
          std::log(class_count[c] / static_cast<double>(tm.rows.size()));
    }
    double total =
        std::accumulate(mass[c].begin(), mass[c].end(), 0.0) +
        smoothing * tm.n_features;
    for (int j = 0; j < tm.n_features; ++j) {
      params.feature_log_prob[c][j] =
          std::log((mass[c][j] + smoothing) / total);
    }
  }
  return make_model(ClassifierKind::kMultinomialNb, tm, std::move(params));
}

ClassifierModel train_bernoulli_nb(const TrainingMatrix& tm, double smoothing,
                                   double binarize_threshold) {
  validate_matrix(tm, 1, "train_bernoulli_nb");
  if (smoothing <= 0.0) {
    throw std::invalid_argument(
        "train_bernoulli_nb: smoothing must be positive");
  }
  if (binarize_threshold < 0.0) {
    throw std::invalid_argument(
        "train_bernoulli_nb: binarize threshold must be non-negative "
        "(absent features binarize to 0)");
  }
  const int n_classes = tm.n_classes();
  BernoulliNbParams params;
  params.binarize_threshold = binarize_threshold;
  params.class_log_prior.assign(n_classes, kNeverLogPrior);
  params.log_theta.assign(n_classes,
                          std::vector<double>(tm.n_features, 0.0));
  params.log_one_minus_theta.assign(n_classes,
                                    std::vector<double>(tm.n_features, 0.0));
  params.absent_log_sum.assign(n_classes, 0.0);

  std::vector<double> class_count(n_classes, 0.0);
  std::vector<std::vector<double>> present(
      n_classes, std::vector<double>(tm.n_features, 0.0));
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    class_count[tm.labels[i]] += 1.0;
    for (const auto& [col, wv] : tm.rows[i].entries) {
      if (wv > binarize_threshold) present[tm.labels[i]][col] += 1.0;
    }
  }
  for (int c = 0; c < n_classes; ++c) {
    if (class_count[c] > 0.0) {
      params.class_log_prior[c] =
          std::log(class_count[c] / static_cast<double>(tm.rows.size()));
    }
    double denom = class_count[c] + 2.0 * smoothing;
    for (int j = 0; j < tm.n_features; ++j) {
      double theta = (present[c][j] + smoothing) / denom;
      params.log_theta[c][j] = std::log(theta);
      params.log_one_minus_theta[c][j] = std::log(1.0 - theta);
      params.absent_log_sum[c] += params.log_one_minus_theta[c][j];
    }
  }
  return make_model(ClassifierKind::kBernoulliNb, tm, std::move(params));
}

ClassifierModel train_nearest_centroid(const TrainingMatrix& tm) {
  validate_matrix(tm, 1, "train_nearest_centroid");
  const int n_classes = tm.n_classes();
  CentroidParams params;
  params.centroids.assign(n_classes,
                          std::vector<double>(tm.n_features, 0.0));
  params.centroid_labels.resize(n_classes);
  std::iota(params.centroid_labels.begin(), params.centroid_labels.end(), 0);
  std::vector<double> counts(n_classes, 0.0);
  for (std::size_t i = 0; i < tm.rows.size(); ++i) {
    counts[tm.labels[i]] += 1.0;
    add_scaled(params.centroids[tm.labels[i]], tm.rows[i], 1.0);
  }
  for (int c = 0; c < n_classes; ++c) {
    if (counts[c] > 0.0) {
      for (double& x : params.centroids[c]) x /= counts[c];
    }
  }
  // Drop centroids of classes absent from the labels, so they never win.
  CentroidParams kept;
  for (int c = 0; c < n_classes; ++c) {
    if (counts[c] > 0.0) {
      kept.centroids.push_back(std::move(params.centroids[c]));
      kept.centroid_labels.push_back(c);
    }
  }
  return make_model(ClassifierKind::kNearestCentroid, tm, std::move(kept));
}

ClassifierModel make_knn(const TrainingMatrix& tm, int k) {
  validate_matrix(tm, 1, "make_knn");
  if (k < 1) throw std::invalid_argument("make_knn: k must be >= 1");
  KnnParams params;
  params.k = std::min<int>(k, static_cast<int>(tm.rows.size()));
  params.rows = tm.rows;
  params.labels = tm.labels;
  return make_model(ClassifierKind::kKnn, tm, std::move(params));
}

int predict_knn(const TrainingMatrix& tm, const SparseVector& x, int k) {
  return predict(make_knn(tm, k), x);
}

ClassifierModel train_kmeans(const TrainingMatrix& tm, int k,
                             std::uint64_t seed, int max_iter) {
  validate_matrix(tm, 1, "train_kmeans");
  const std::size_t n = tm.rows.size();
  if (k <= 0) k = tm.n_classes();
  if (static_cast<std::size_t>(k) > n) k = static_cast<int>(n);

  const std::vector<double> sq = row_squared_norms(tm);
  Rng rng(seed);

  // Row-to-row distances stay in sparse form; the rows themselves are the
  // candidate centers during seeding.
  auto row_dist = [&](std::size_t a, std::size_t b) {
    double d = sq[a] + sq[b] - 2.0 * sparse_dot(tm.rows[a], tm.rows[b]);
    return std::max(d, 0.0);
  };
  auto row_as_dense = [&](std::size_t i) {
    std::vector<double> dense(tm.n_features, 0.0);
    add_scaled(dense, tm.rows[i], 1.0);
    return dense;
  };

  // One seeded restart: greedy k-means++ seeding (several candidates per
  // round, keep the one that lowers total potential the most), then Lloyd.
  auto run_once = [&](std::vector<std::vector<double>>& centers,
                      std::vector<int>& assign) {
    std::vector<std::size_t> seed_rows;
    seed_rows.push_back(rng.uniform(n));
    std::vector<double> min_d2(n);
    for (std::size_t i = 0; i < n; ++i) min_d2[i] = row_dist(seed_rows[0], i);
    const int n_candidates = 2 + static_cast<int>(std::log(std::max(2, k)));
    while (static_cast<int>(seed_rows.size()) < k) {
      double total = std::accumulate(min_d2.begin(), min_d2.end(), 0.0);
      std::size_t best_idx = 0;
      double best_potential = kInf;
      for (int cand = 0; cand < n_candidates; ++cand) {
        std::size_t idx;
        if (total > 0.0) {
          double target = rng.uniform_real() * total;
          double acc = 0.0;
          idx = n - 1;
          for (std::size_t i = 0; i < n; ++i) {
            acc += min_d2[i];
            if (acc >= target) {
              idx = i;
              break;
            }
          }
        } else {
          idx = rng.uniform(n);
        }
        double potential = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          potential += std::min(min_d2[i], row_dist(idx, i));
        }
        if (potential < best_potential) {
          best_potential = potential;
          best_idx = idx;
        }
      }
      seed_rows.push_back(best_idx);
      for (std::size_t i = 0; i < n; ++i) {
        min_d2[i] = std::min(min_d2[i], row_dist(best_idx, i));
      }
    }
    centers.clear();
    for (std::size_t idx : seed_rows) centers.push_back(row_as_dense(idx));

    assign.assign(n, -1);
    std::vector<double> center_sq(centers.size());
    std::vector<double> nearest(n, kInf);
    for (int iter = 0; iter < max_iter; ++iter) {
      for (std::size_t c = 0; c < centers.size(); ++c) {
        center_sq[c] = std::inner_product(
            centers[c].begin(), centers[c].end(), centers[c].begin(), 0.0);
      }
      bool moved = false;
      for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double best_d = kInf;
        for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
          double d = std::max(
              center_sq[c] - 2.0 * dense_dot(centers[c], tm.rows[i]) + sq[i],
              0.0);
          if (d < best_d) {
            best_d = d;
            best = c;
          }
        }
        nearest[i] = best_d;
        if (assign[i] != best) {
          assign[i] = best;
          moved = true;
        }
      }
      // Re-seat any empty cluster on the row farthest from its center.
      std::vector<int> sizes(centers.size(), 0);
      for (std::size_t i = 0; i < n; ++i) sizes[assign[i]] += 1;
      for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
        if (sizes[c] > 0) continue;
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (nearest[i] > nearest[far]) far = i;
        }
        centers[c] = row_as_dense(far);
        assign[far] = c;
        sizes[c] = 1;
        nearest[far] = 0.0;
        moved = true;
      }
      if (!moved) break;
      for (auto& center : centers) {
        std::fill(center.begin(), center.end(), 0.0);
      }
      for (std::size_t i = 0; i < n; ++i) {
        add_scaled(centers[assign[i]], tm.rows[i], 1.0);
      }
      for (int c = 0; c < static_cast<int>(centers.size()); ++c) {
        if (sizes[c] > 0) {
          for (double& x : centers[c]) x /= sizes[c];
        }
      }
    }
    double inertia = 0.0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      center_sq[c] = std::inner_product(centers[c].begin(), centers[c].end(),
                                        centers[c].begin(), 0.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      int c = assign[i];
      inertia += std::max(
          center_sq[c] - 2.0 * dense_dot(centers[c], tm.rows[i]) + sq[i],
          0.0);
    }
    return inertia;
  };

  // Several restarts, lowest inertia wins; first winner kept on ties.
  constexpr int kRestarts = 10;
  std::vector<std::vector<double>> centers, trial_centers;
  std::vector<int> assign, trial_assign;
  double best_inertia = kInf;
  for (int restart = 0; restart < kRestarts; ++restart) {
    double inertia = run_once(trial_centers, trial_assign);
    if (inertia < best_inertia) {
      best_inertia = inertia;
      centers = trial_centers;
      assign = trial_assign;
    }
  }

  CentroidParams params;
  params.centroids = std::move(centers);
  params.centroid_labels.resize(k);
  std::vector<int> global_counts(tm.n_classes(), 0);
  for (int label : tm.labels) global_counts[label] += 1;
  for (int c = 0; c < k; ++c) {
    std::vector<int> counts(tm.n_classes(), 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (assign[i] == c) {
        counts[tm.labels[i]] += 1;
        any = true;
      }
    }
    params.centroid_labels[c] =
        any ? majority_label(counts) : majority_label(global_counts);
  }
  return make_model(ClassifierKind::kKmeans, tm, std::move(params));
}

std::vector<double> decision_scores(const ClassifierModel& model,
                                    const SparseVector& x) {
  if (!x.entries.empty() && x.entries.back().first >= model.n_features) {
    throw std::invalid_argument(
        "decision_scores: input column beyond the model's feature space");
  }
  const int n_classes = static_cast<int>(model.class_names.size());
  std::vector<double> scores(n_classes, 0.0);

  if (const auto* lin = std::get_if<LinearParams>(&model.params)) {
    for (int c = 0; c < n_classes; ++c) {
      scores[c] = dense_dot(lin->weights[c], x) + lin->bias[c];
    }
  } else if (const auto* mnb =
                 std::get_if<MultinomialNbParams>(&model.params)) {
    for (int c = 0; c < n_classes; ++c) {
      double s = mnb->class_log_prior[c];
      for (const auto& [col, w] : x.entries) {
        s += w * mnb->feature_log_prob[c][col];
      }
      scores[c] = s;
    }
  } else if (const auto* bnb = std::get_if<BernoulliNbParams>(&model.params)) {
    for (int c = 0; c < n_classes; ++c) {
      double s = bnb->class_log_prior[c] + bnb->absent_log_sum[c];
      for (const auto& [col, w] : x.entries) {
        if (w > bnb->binarize_threshold) {
          s += bnb->log_theta[c][col] - bnb->log_one_minus_theta[c][col];
        }
      }
      scores[c] = s;
    }
  } else if (const auto* cen = std::get_if<CentroidParams>(&model.params)) {
    std::fill(scores.begin(), scores.end(), -kInf);
    double xx = sparse_squared_norm(x);
    for (std::size_t c = 0; c < cen->centroids.size(); ++c) {
      const auto& center = cen->centroids[c];
      double cc = std::inner_product(center.begin(), center.end(),
                                     center.begin(), 0.0);
      double d2 = std::max(cc - 2.0 * dense_dot(center, x) + xx, 0.0);
      int label = cen->centroid_labels[c];
      scores[label] = std::max(scores[label], -d2);
    }
  } else if (const auto* knn = std::get_if<KnnParams>(&model.params)) {
    double xx = sparse_squared_norm(x);
    std::vector<std::pair<double, std::size_t>> dists;
    dists.reserve(knn->rows.size());
    for (std::size_t i = 0; i < knn->rows.size(); ++i) {
      double d2 = xx + sparse_squared_norm(knn->rows[i]) -
                  2.0 * sparse_dot(x, knn->rows[i]);
      dists.emplace_back(d2, i);
    }
    std::size_t k = std::min<std::size_t>(knn->k, dists.size());
    std::partial_sort(dists.begin(), dists.begin() + k, dists.end());
    for (std::size_t j = 0; j < k; ++j) {
      scores[knn->labels[dists[j].second]] += 1.0;
    }
  }
  return scores;
}

int predict(const ClassifierModel& model, const SparseVector& x) {
  return argmax_lowest(decision_scores(model, x));
}

std::vector<int> predict_batch(const ClassifierModel& model,
                               std::span<const SparseVector> xs) {
  std::vector<int> out;
  out.reserve(xs.size());
  for (const SparseVector& x : xs) out.push_back(predict(model, x));
  return out;
}

ClassifierModel train_classifier(const ClassifierConfig& config,
                                 const TrainingMatrix& tm,
                                 std::uint64_t seed) {
  switch (config.kind) {
    case ClassifierKind::kRidge:
      return train_ridge(tm, config.ridge_alpha);
    case ClassifierKind::kKnn:
      return make_knn(tm, config.knn_k);
    case ClassifierKind::kPassiveAggressive:
      return train_passive_aggressive(tm, config.pa_c, config.pa_epochs,
                                      seed);
    case ClassifierKind::kLinearSvc:
      return train_linear_svc(tm, config.svc_c);
    case ClassifierKind::kSgd:
      return train_sgd(tm, config.sgd_alpha, config.sgd_epochs, seed);
    case ClassifierKind::kNearestCentroid:
      return train_nearest_centroid(tm);
    case ClassifierKind::kMultinomialNb:
      return train_multinomial_nb(tm, config.nb_smoothing);
    case ClassifierKind::kBernoulliNb:
      return train_bernoulli_nb(tm, config.nb_smoothing,
                                config.nb_binarize_threshold);
    case ClassifierKind::kKmeans:
      return train_kmeans(tm, config.kmeans_k, seed, config.kmeans_max_iter);
  }
  throw std::invalid_argument("train_classifier: unknown kind");
}

std::vector<ClassifierConfig> hyperparameter_grid(ClassifierKind kind) {
  std::vector<ClassifierConfig> grid;
  if (kind == ClassifierKind::kKnn) {
    for (int k : {3, 5, 7}) {
      ClassifierConfig c;
      c.kind = kind;
      c.knn_k = k;
      grid.push_back(c);
    }
  } else if (kind == ClassifierKind::kSgd) {
    for (double alpha : {1e-3, 1e-4, 1e-5}) {
      for (int epochs : {10, 20}) {
        ClassifierConfig c;
        c.kind = kind;
        c.sgd_alpha = alpha;
        c.sgd_epochs = epochs;
        grid.push_back(c);
      }
    }
  } else {
    ClassifierConfig c;
    c.kind = kind;
    grid.push_back(c);
  }
  return grid;
}

std::string config_description(const ClassifierConfig& config) {
  std::ostringstream out;
  switch (config.kind) {
    case ClassifierKind::kRidge:
      out << "alpha=" << config.ridge_alpha;
      break;
    case ClassifierKind::kKnn:
      out << "k=" << config.knn_k;
      break;
    case ClassifierKind::kPassiveAggressive:
      out << "C=" << config.pa_c << ",epochs=" << config.pa_epochs;
      break;
    case ClassifierKind::kLinearSvc:
      out << "C=" << config.svc_c;
      break;
    case ClassifierKind::kSgd:
      out << "alpha=" << config.sgd_alpha << ",epochs=" << config.sgd_epochs;
      break;
    case ClassifierKind::kNearestCentroid:
      break;
    case ClassifierKind::kMultinomialNb:
      out << "smoothing=" << config.nb_smoothing;
      break;
    case ClassifierKind::kBernoulliNb:
      out << "smoothing=" << config.nb_smoothing
          << ",binarize=" << config.nb_binarize_threshold;
      break;
    case ClassifierKind::kKmeans:
      out << "k=" << (config.kmeans_k > 0 ? std::to_string(config.kmeans_k)
                                          : std::string("classes"));
      break;
  }
  return out.str();
}

}  // namespace semhash
