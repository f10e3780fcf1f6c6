#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::classify {

struct SubjectFeatureSet {
  std::string subject_id;
  Series features;
  Group label = Group::GS;
  std::string session;
};

struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<SubjectFeatureSet> subjects;

  std::size_t dimension() const { return subjects.empty() ? 0 : subjects.front().features.size(); }
  /// Throws DomainError on unequal feature lengths or empty data.
  void validate() const;
};

using Matrix = std::vector<Series>;  // one row per subject

/// Column statistics of a training fold (population std). Columns with
/// variance below the floor map to 0.
struct Standardizer {
  Series mean;
  Series scale;  // 0 marks a constant column

  static constexpr double kVarianceFloor = 1e-12;
  static Standardizer fit(const Matrix& train);
  Series apply(std::span<const double> row) const;
  Matrix apply(const Matrix& rows) const;
};

std::pair<Matrix, Matrix> standardize(const Matrix& train, const Matrix& test);

/// +1 for PS (the positive class), -1 for GS.
inline double label_sign(Group g) { return g == Group::PS ? 1.0 : -1.0; }

struct LinearModel {
  Series w;
  double b = 0.0;

  double decision(std::span<const double> x) const;
  /// PS when the decision is strictly positive; GS on ties.
  Group predict(std::span<const double> x) const { return decision(x) > 0.0 ? Group::PS : Group::GS; }
};

struct SvmOptions {
  double lambda = 0.1;
  double tolerance = 1e-8;        // maximal KKT violation at convergence
  std::size_t max_iterations = 100000;
};

/// Minimizer of mean hinge loss + lambda * |w|^2 (bias unpenalized), solved in
/// the dual by sequential minimal optimization from alpha = 0.
LinearModel train_svm_linear(const Matrix& x, std::span<const Group> y, const SvmOptions& opt = {});
double svm_objective(const LinearModel& m, const Matrix& x, std::span<const Group> y, double lambda);

struct LogRegOptions {
  double lambda = 0.1;
  double gradient_tolerance = 1e-10;
  std::size_t max_iterations = 200;
};

/// Minimizer of mean negative log-likelihood + lambda * |w|^2 (bias
/// unpenalized) by damped Newton steps from zero.
LinearModel train_logreg(const Matrix& x, std::span<const Group> y, const LogRegOptions& opt = {});
double logreg_objective(const LinearModel& m, const Matrix& x, std::span<const Group> y, double lambda);
/// Gradient with respect to (w..., b).
Series logreg_gradient(const LinearModel& m, const Matrix& x, std::span<const Group> y, double lambda);
/// P(PS | x).
double logreg_probability(const LinearModel& m, std::span<const double> x);

struct LdaModel {
  Series mean_gs, mean_ps;
  Series variance;  // pooled, floored
  double log_prior_gs = 0.0, log_prior_ps = 0.0;

  double score(std::span<const double> x, Group g) const;
  Group predict(std::span<const double> x) const;
};

LdaModel train_lda_diagonal(const Matrix& x, std::span<const Group> y);

/// Inverse-distance weighted vote among the k nearest training rows.
Group knn_predict(const Matrix& x, std::span<const Group> y, std::span<const double> query, std::size_t k = 5);

enum class ClassifierKind { SVM, LDA, KNN, LR };

inline constexpr ClassifierKind kAllClassifiers[] = {ClassifierKind::SVM, ClassifierKind::LDA, ClassifierKind::KNN,
                                                     ClassifierKind::LR};

std::string_view to_string(ClassifierKind k);
ClassifierKind parse_classifier(std::string_view s);

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::SVM;
  double lambda = 0.1;
  std::size_t k = 5;
};

/// Fit on standardized training rows and label the standardized test rows.
std::vector<Group> fit_predict(const ClassifierSpec& spec, const Matrix& train, std::span<const Group> y,
                               const Matrix& test);

struct Confusion {
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;
  std::int64_t total() const { return tp + tn + fp + fn; }
};

Confusion confusion(std::span<const Group> truth, std::span<const Group> predicted);

struct Metrics {
  double acc = 0.0;
  double f1 = 0.0;
  double kappa = 0.0;
};

/// Each value is a single division of exact integer numerator and denominator.
Metrics metrics(const Confusion& c);

struct Fold {
  std::string subject_id;
  std::vector<std::string> training_ids;
  Group truth = Group::GS;
  Group predicted = Group::GS;
  bool single_class_fallback = false;
};

struct ClassificationReport {
  std::string classifier;
  std::string feature;
  std::string session;
  std::vector<Fold> folds;
  Confusion counts;
  Metrics scores;
  std::size_t fallback_folds = 0;
};

/// One fold per subject; standardization is fit inside each fold.
ClassificationReport loso_cv(const Dataset& data, const ClassifierSpec& spec, Execution exec = Execution::Parallel);

/// Table-style cell "0.81 0.73 0.60" (ACC F1 Kappa, two decimals).
std::string format_cell(const Metrics& m);

}  // namespace sqeeg::classify
