#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eventvq/corpus.hpp"

namespace eventvq {

struct LabeledExample {
    std::string event_id;
    std::vector<double> features;
    bool label = false;  // high-activity
};

struct Standardization {
    std::vector<double> mean;
    std::vector<double> stddev;  // zeros replaced by 1 so scaling stays finite
};

struct Model {
    std::vector<double> weights;
    double bias = 0;
    double l2 = 0;
    Standardization standardization;
    std::vector<std::string> feature_names;
};

// prob of the positive class for raw (unstandardized) features
double predict(const Model& model, const std::vector<double>& features);

// Training objective on already-standardized rows: weighted mean negative
// log-likelihood plus (l2/2)||w||^2, bias unregularized. An empty
// example_weights means unweighted.
double logistic_loss(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                     const std::vector<double>& w, double bias, double l2,
                     const std::vector<double>& example_weights = {});
void logistic_gradient(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                       const std::vector<double>& w, double bias, double l2,
                       std::vector<double>& grad_w, double& grad_bias,
                       const std::vector<double>& example_weights = {});

// L2-regularized logistic regression by gradient descent with backtracking
// line search; converges at gradient norm < 1e-6 or 10,000 iterations.
// Standardization statistics come from the given examples only, so training
// on a train split can never see validation/test data. positive_weight != 1
// reweights the positive class against the 8% base-rate imbalance.
Model train(const std::vector<LabeledExample>& examples, double l2, std::uint64_t seed,
            double positive_weight = 1.0);

struct EvalReport {
    double fp_rate = 0;
    double precision = 0;
    double recall = 0;
    double roc_area = 0;
    // [actual][predicted], index 0 = positive
    std::array<std::array<long, 2>, 2> confusion{{{0, 0}, {0, 0}}};

    long tp() const { return confusion[0][0]; }
    long fn() const { return confusion[0][1]; }
    long fp() const { return confusion[1][0]; }
    long tn() const { return confusion[1][1]; }
};

// Threshold metrics from a finished confusion matrix; roc_area is NaN since
// it needs scores.
EvalReport metrics_from_confusion(long tp, long fp, long fn, long tn);

// Confusion at the threshold plus ROC area as the rank statistic (probability
// a random positive outscores a random negative, ties counted half).
EvalReport evaluate(const Model& model, const std::vector<LabeledExample>& examples,
                    double threshold = 0.5);

// ROC area for raw scores/labels (exposed for reuse and oracle checks).
double roc_area_from_scores(const std::vector<double>& scores, const std::vector<bool>& labels);

struct SplitIndices {
    std::vector<std::size_t> train, validation, test;
};

// Deterministic shuffled 60/20/20 split for one round; retries the shuffle
// (up to 20 times) until every part contains both classes.
SplitIndices split_dataset(const std::vector<LabeledExample>& dataset, std::uint64_t seed,
                           int round);

struct SplitRunReport {
    EvalReport averaged;               // mean rates, confusion summed
    std::vector<EvalReport> rounds;
    std::vector<double> chosen_l2;
};

// Per round: shuffle + 60/20/20 split, tune l2 on validation ROC area, report
// test metrics; final report averages the rounds.
SplitRunReport split_and_run(const std::vector<LabeledExample>& dataset, std::uint64_t seed,
                             int rounds = 5,
                             const std::vector<double>& l2_grid = {0.001, 0.01, 0.1, 1, 10},
                             double positive_weight = 1.0);

// First ceil(fraction * n) messages; fraction in (0, 1].
Event early_window(const Event& event, double fraction = 0.05);

std::string model_to_text(const Model& m);
Model model_from_text(const std::string& text);

}  // namespace eventvq
