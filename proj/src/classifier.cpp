#include "eventvq/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eventvq/rng.hpp"

namespace eventvq {
namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double logistic_loss(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                     const std::vector<double>& w, double bias, double l2,
                     const std::vector<double>& example_weights) {
    double nll = 0, mass = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double z = bias + std::inner_product(w.begin(), w.end(), x[i].begin(), 0.0);
        // log(1 + e^z) - y z, computed stably
        double lse = z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
        double ew = example_weights.empty() ? 1.0 : example_weights[i];
        nll += ew * (lse - y[i] * z);
        mass += ew;
    }
    nll /= mass;
    double reg = 0;
    for (double v : w) reg += v * v;
    return nll + 0.5 * l2 * reg;
}

void logistic_gradient(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                       const std::vector<double>& w, double bias, double l2,
                       std::vector<double>& grad_w, double& grad_bias,
                       const std::vector<double>& example_weights) {
    grad_w.assign(w.size(), 0.0);
    grad_bias = 0;
    double mass = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double z = bias + std::inner_product(w.begin(), w.end(), x[i].begin(), 0.0);
        double ew = example_weights.empty() ? 1.0 : example_weights[i];
        double r = ew * (sigmoid(z) - y[i]);
        grad_bias += r;
        for (std::size_t j = 0; j < w.size(); ++j) grad_w[j] += r * x[i][j];
        mass += ew;
    }
    grad_bias /= mass;
    for (std::size_t j = 0; j < w.size(); ++j) grad_w[j] = grad_w[j] / mass + l2 * w[j];
}

double predict(const Model& model, const std::vector<double>& features) {
    if (features.size() != model.weights.size())
        throw std::invalid_argument("predict: feature dimension mismatch");
    double z = model.bias;
    for (std::size_t j = 0; j < features.size(); ++j) {
        double s = (features[j] - model.standardization.mean[j]) / model.standardization.stddev[j];
        z += model.weights[j] * s;
    }
    return sigmoid(z);
}

Model train(const std::vector<LabeledExample>& examples, double l2, std::uint64_t seed,
            double positive_weight) {
    if (examples.empty()) throw std::invalid_argument("train: empty dataset");
    if (l2 < 0) throw std::invalid_argument("train: l2 must be nonnegative");
    if (positive_weight <= 0) throw std::invalid_argument("train: positive_weight must be positive");
    const std::size_t dim = examples.front().features.size();
    bool pos = false, neg = false;
    for (const auto& e : examples) {
        if (e.features.size() != dim) throw std::invalid_argument("train: inconsistent dimensions");
        (e.label ? pos : neg) = true;
    }
    if (!pos || !neg) throw std::invalid_argument("train: both classes must be present");

    Model m;
    m.l2 = l2;
    m.standardization.mean.assign(dim, 0.0);
    m.standardization.stddev.assign(dim, 0.0);
    const double n = static_cast<double>(examples.size());
    for (const auto& e : examples)
        for (std::size_t j = 0; j < dim; ++j) m.standardization.mean[j] += e.features[j];
    for (auto& v : m.standardization.mean) v /= n;
    for (const auto& e : examples)
        for (std::size_t j = 0; j < dim; ++j) {
            double d = e.features[j] - m.standardization.mean[j];
            m.standardization.stddev[j] += d * d;
        }
    for (auto& v : m.standardization.stddev) {
        v = std::sqrt(v / n);
        if (v == 0) v = 1.0;
    }

    std::vector<std::vector<double>> x(examples.size(), std::vector<double>(dim));
    std::vector<double> y(examples.size());
    std::vector<double> ew;
    if (positive_weight != 1.0) ew.assign(examples.size(), 1.0);
    for (std::size_t i = 0; i < examples.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            x[i][j] = (examples[i].features[j] - m.standardization.mean[j]) /
                      m.standardization.stddev[j];
        y[i] = examples[i].label ? 1.0 : 0.0;
        if (!ew.empty() && examples[i].label) ew[i] = positive_weight;
    }

    Rng rng(derive_seed(seed, 0x10c));
    std::vector<double> w(dim);
    for (auto& v : w) v = (rng.uniform01() - 0.5) / (1.0 + l2);
    double b = 0;

    // Backtracking gradient descent on the NLL with the quadratic l2 term
    // applied through its exact shrinkage step, so the line search stays well
    // conditioned for any regularization strength. The stopping rule is the
    // gradient norm of the full objective.
    std::vector<double> g_nll;
    double gb = 0;
    constexpr int kMaxIterations = 10000;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        logistic_gradient(x, y, w, b, 0.0, g_nll, gb, ew);
        double gnorm2 = gb * gb;
        for (std::size_t j = 0; j < dim; ++j) {
            double g = g_nll[j] + l2 * w[j];
            gnorm2 += g * g;
        }
        if (std::sqrt(gnorm2) < 1e-6) break;

        double f = logistic_loss(x, y, w, b, 0.0, ew);
        double step = 1.0;
        std::vector<double> wn(dim);
        double bn = 0;
        while (true) {
            for (std::size_t j = 0; j < dim; ++j)
                wn[j] = (w[j] - step * g_nll[j]) / (1.0 + step * l2);
            bn = b - step * gb;
            double fn = logistic_loss(x, y, wn, bn, 0.0, ew);
            double linear = gb * (bn - b), quad = (bn - b) * (bn - b);
            for (std::size_t j = 0; j < dim; ++j) {
                double d = wn[j] - w[j];
                linear += g_nll[j] * d;
                quad += d * d;
            }
            if (fn <= f + linear + quad / (2.0 * step) + 1e-12 || step < 1e-16) break;
            step *= 0.5;
        }
        if (step < 1e-16) break;  // no progress possible
        w.swap(wn);
        b = bn;
    }

    m.weights = std::move(w);
    m.bias = b;
    return m;
}

EvalReport metrics_from_confusion(long tp, long fp, long fn, long tn) {
    if (tp < 0 || fp < 0 || fn < 0 || tn < 0)
        throw std::invalid_argument("confusion entries must be nonnegative");
    EvalReport r;
    r.confusion = {{{tp, fn}, {fp, tn}}};
    r.fp_rate = (fp + tn) > 0 ? static_cast<double>(fp) / static_cast<double>(fp + tn) : 0.0;
    r.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    r.recall = (tp + fn) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    r.roc_area = std::numeric_limits<double>::quiet_NaN();
    return r;
}

double roc_area_from_scores(const std::vector<double>& scores, const std::vector<bool>& labels) {
    if (scores.size() != labels.size()) throw std::invalid_argument("roc: size mismatch");
    std::size_t n_pos = 0, n_neg = 0;
    for (bool l : labels) (l ? n_pos : n_neg) += 1;
    if (n_pos == 0 || n_neg == 0) return std::numeric_limits<double>::quiet_NaN();

    // average ranks with ties shared, then the Mann-Whitney identity
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    double rank_sum_pos = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
        double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t t = i; t <= j; ++t)
            if (labels[order[t]]) rank_sum_pos += avg_rank;
        i = j + 1;
    }
    double u = rank_sum_pos - static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0) / 2.0;
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

EvalReport evaluate(const Model& model, const std::vector<LabeledExample>& examples,
                    double threshold) {
    long tp = 0, fp = 0, fn = 0, tn = 0;
    std::vector<double> scores;
    std::vector<bool> labels;
    scores.reserve(examples.size());
    labels.reserve(examples.size());
    for (const auto& e : examples) {
        double p = predict(model, e.features);
        bool hat = p >= threshold;
        if (e.label && hat) ++tp;
        else if (e.label) ++fn;
        else if (hat) ++fp;
        else ++tn;
        scores.push_back(p);
        labels.push_back(e.label);
    }
    EvalReport r = metrics_from_confusion(tp, fp, fn, tn);
    r.roc_area = roc_area_from_scores(scores, labels);
    return r;
}

SplitIndices split_dataset(const std::vector<LabeledExample>& dataset, std::uint64_t seed,
                           int round) {
    const std::size_t n = dataset.size();
    if (n < 10) throw std::invalid_argument("split_dataset: need at least 10 examples");

    for (int attempt = 0; attempt < 20; ++attempt) {
        Rng rng(derive_seed(seed, 1000u * static_cast<unsigned>(round) + static_cast<unsigned>(attempt)));
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);

        std::size_t n_train = static_cast<std::size_t>(0.6 * static_cast<double>(n));
        std::size_t n_val = static_cast<std::size_t>(0.2 * static_cast<double>(n));
        SplitIndices s;
        s.train.assign(idx.begin(), idx.begin() + n_train);
        s.validation.assign(idx.begin() + n_train, idx.begin() + n_train + n_val);
        s.test.assign(idx.begin() + n_train + n_val, idx.end());

        auto has_both = [&](const std::vector<std::size_t>& part) {
            bool pos = false, neg = false;
            for (auto i : part) (dataset[i].label ? pos : neg) = true;
            return pos && neg;
        };
        if (has_both(s.train) && has_both(s.validation) && has_both(s.test)) return s;
    }
    throw std::runtime_error("split_dataset: could not produce splits containing both classes");
}

SplitRunReport split_and_run(const std::vector<LabeledExample>& dataset, std::uint64_t seed,
                             int rounds, const std::vector<double>& l2_grid,
                             double positive_weight) {
    if (rounds < 1) throw std::invalid_argument("split_and_run: rounds must be >= 1");
    if (l2_grid.empty()) throw std::invalid_argument("split_and_run: empty l2 grid");

    SplitRunReport report;
    for (int round = 0; round < rounds; ++round) {
        SplitIndices s = split_dataset(dataset, seed, round);
        std::vector<LabeledExample> train_set, val_set, test_set;
        for (auto i : s.train) train_set.push_back(dataset[i]);
        for (auto i : s.validation) val_set.push_back(dataset[i]);
        for (auto i : s.test) test_set.push_back(dataset[i]);

        double best_l2 = l2_grid.front();
        double best_roc = -1;
        Model best_model;
        for (double l2 : l2_grid) {
            Model m = train(train_set, l2, seed, positive_weight);
            double roc = evaluate(m, val_set).roc_area;
            if (roc > best_roc) {  // ties keep the earlier (smaller) l2
                best_roc = roc;
                best_l2 = l2;
                best_model = std::move(m);
            }
        }
        report.rounds.push_back(evaluate(best_model, test_set));
        report.chosen_l2.push_back(best_l2);
    }

    EvalReport& avg = report.averaged;
    for (const auto& r : report.rounds) {
        avg.fp_rate += r.fp_rate;
        avg.precision += r.precision;
        avg.recall += r.recall;
        avg.roc_area += r.roc_area;
        for (int a = 0; a < 2; ++a)
            for (int p = 0; p < 2; ++p) avg.confusion[a][p] += r.confusion[a][p];
    }
    double k = static_cast<double>(report.rounds.size());
    avg.fp_rate /= k;
    avg.precision /= k;
    avg.recall /= k;
    avg.roc_area /= k;
    return report;
}

Event early_window(const Event& event, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("early_window: fraction must be in (0,1]");
    std::size_t take = head_count(fraction, event.messages.size());
    Event out;
    out.event_id = event.event_id;
    out.keywords = event.keywords;
    out.collected_date = event.collected_date;
    out.messages.assign(event.messages.begin(),
                        event.messages.begin() + static_cast<std::ptrdiff_t>(take));
    return out;
}

std::string model_to_text(const Model& m) {
    std::ostringstream out;
    out.precision(17);
    out << "eventvq-model v1\n";
    out << "l2 " << m.l2 << "\n";
    out << "bias " << m.bias << "\n";
    out << "features " << m.weights.size() << "\n";
    for (std::size_t j = 0; j < m.weights.size(); ++j) {
        std::string name = j < m.feature_names.size() ? m.feature_names[j] : ("f" + std::to_string(j));
        out << name << " " << m.standardization.mean[j] << " " << m.standardization.stddev[j]
            << " " << m.weights[j] << "\n";
    }
    return out.str();
}

Model model_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version, key;
    in >> magic >> version;
    if (magic != "eventvq-model") throw std::runtime_error("model file: bad magic");
    Model m;
    std::size_t dim = 0;
    in >> key >> m.l2 >> key >> m.bias >> key >> dim;
    if (!in) throw std::runtime_error("model file: bad header");
    m.weights.resize(dim);
    m.standardization.mean.resize(dim);
    m.standardization.stddev.resize(dim);
    m.feature_names.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        in >> m.feature_names[j] >> m.standardization.mean[j] >> m.standardization.stddev[j] >>
            m.weights[j];
        if (!in) throw std::runtime_error("model file: truncated");
    }
    return m;
}

}  // namespace eventvq
