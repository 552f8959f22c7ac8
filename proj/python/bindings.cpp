#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "eventvq/activity.hpp"
#include "eventvq/classifier.hpp"
#include "eventvq/corpus.hpp"
#include "eventvq/event_graph.hpp"
#include "eventvq/features.hpp"
#include "eventvq/keywords.hpp"
#include "eventvq/stemmer.hpp"
#include "eventvq/synth.hpp"
#include "eventvq/vq.hpp"

namespace py = pybind11;
using namespace eventvq;

PYBIND11_MODULE(_eventvq, m) {
    m.doc() = "event activity analytics: interarrival codebooks, tiers, early prediction";

    // corpus
    py::class_<Message>(m, "Message")
        .def(py::init<>())
        .def_readwrite("id", &Message::id)
        .def_readwrite("timestamp", &Message::timestamp)
        .def_readwrite("text", &Message::text)
        .def_readwrite("author", &Message::author)
        .def_readwrite("is_retweet", &Message::is_retweet)
        .def_readwrite("retweet_count", &Message::retweet_count)
        .def_readwrite("favorite_count", &Message::favorite_count)
        .def_readwrite("reply_to_id", &Message::reply_to_id)
        .def_readwrite("mentions", &Message::mentions)
        .def_readwrite("hashtags", &Message::hashtags)
        .def_readwrite("urls", &Message::urls)
        .def_readwrite("author_verified", &Message::author_verified);

    py::class_<Event>(m, "Event")
        .def(py::init<>())
        .def_readwrite("event_id", &Event::event_id)
        .def_readwrite("keywords", &Event::keywords)
        .def_readwrite("messages", &Event::messages)
        .def_readwrite("collected_date", &Event::collected_date);

    py::class_<CleaningReport>(m, "CleaningReport")
        .def(py::init<>())
        .def_readonly("loaded", &CleaningReport::loaded)
        .def_readonly("skipped", &CleaningReport::skipped)
        .def_readonly("duplicates", &CleaningReport::duplicates);

    py::class_<StatsRow>(m, "StatsRow")
        .def_readonly("min", &StatsRow::min)
        .def_readonly("mean", &StatsRow::mean)
        .def_readonly("median", &StatsRow::median)
        .def_readonly("max", &StatsRow::max);

    py::class_<DatasetStats>(m, "DatasetStats")
        .def_readonly("n_events", &DatasetStats::n_events)
        .def_readonly("total_messages", &DatasetStats::total_messages)
        .def_readonly("message_count", &DatasetStats::message_count)
        .def_readonly("keyword_count", &DatasetStats::keyword_count)
        .def_readonly("duration_hours", &DatasetStats::duration_hours);

    m.def("load_messages",
          [](const std::filesystem::path& p, bool strict) {
              CleaningReport rep;
              auto msgs = load_messages(p, &rep, strict);
              return py::make_tuple(msgs, rep);
          },
          py::arg("path"), py::arg("strict") = false);
    m.def("clean_messages",
          [](std::vector<Message> msgs) { return clean_messages(std::move(msgs)); });
    m.def("drop_head_fraction", &drop_head_fraction, py::arg("event"), py::arg("fraction"));
    m.def("dataset_stats", &dataset_stats);

    // keyword mining
    py::class_<ItemSet>(m, "ItemSet")
        .def_readonly("words", &ItemSet::words)
        .def_readonly("word_scores", &ItemSet::word_scores)
        .def_readonly("total_score", &ItemSet::total_score);

    py::class_<KeywordPair>(m, "KeywordPair")
        .def(py::init([](std::string a, std::string b, std::int64_t hour) {
                 return make_pair_canonical(std::move(a), std::move(b), hour);
             }),
             py::arg("first"), py::arg("second"), py::arg("batch_hour") = 0)
        .def_readonly("first", &KeywordPair::first)
        .def_readonly("second", &KeywordPair::second)
        .def_readonly("batch_hour", &KeywordPair::batch_hour)
        .def("__repr__", [](const KeywordPair& p) {
            return "KeywordPair(" + p.first + ", " + p.second + ")";
        });

    py::class_<ScoredWord>(m, "ScoredWord")
        .def_readonly("word", &ScoredWord::word)
        .def_readonly("score", &ScoredWord::score);

    m.def("porter_stem", [](const std::string& w) { return porter_stem(w); });
    m.def("default_stopwords", [] { return default_stopwords(); });
    m.def("preprocess_headline",
          [](const std::string& text, const std::set<std::string>& stoplist) {
              return preprocess_headline(text, stoplist);
          },
          py::arg("text"), py::arg("stoplist"));
    m.def("detect_keywords", &detect_keywords, py::arg("headlines"), py::arg("k"), py::arg("eta"));
    m.def("top_keyword_pairs", &top_keyword_pairs, py::arg("itemsets"), py::arg("n_sets") = 6,
          py::arg("batch_hour") = 0);
    m.def("maxtf", &maxtf, py::arg("term"), py::arg("doc"), py::arg("corpus"));
    m.def("idf", &idf, py::arg("term"), py::arg("corpus"));
    m.def("maxtf_idf", &maxtf_idf, py::arg("term"), py::arg("doc"), py::arg("corpus"));
    m.def("rank_articulation_words", &rank_articulation_words, py::arg("corpus"));

    // event graph
    py::class_<KeywordGraph>(m, "KeywordGraph")
        .def(py::init<>())
        .def_readwrite("nodes", &KeywordGraph::nodes)
        .def_readwrite("window_start", &KeywordGraph::window_start)
        .def_readwrite("window_length", &KeywordGraph::window_length)
        .def("add_edge", &KeywordGraph::add_edge);

    py::class_<Component>(m, "Component")
        .def(py::init<>())
        .def_readwrite("keywords", &Component::keywords)
        .def_readwrite("pairs", &Component::pairs)
        .def_readwrite("messages", &Component::messages);

    py::class_<SplitResult>(m, "SplitResult")
        .def_readonly("fragments", &SplitResult::fragments)
        .def_readonly("removed_words", &SplitResult::removed_words);

    py::enum_<ClusterMetric>(m, "ClusterMetric")
        .value("I1", ClusterMetric::I1)
        .value("I2", ClusterMetric::I2)
        .value("E1", ClusterMetric::E1)
        .value("G1", ClusterMetric::G1)
        .value("G1Prime", ClusterMetric::G1Prime)
        .value("H1", ClusterMetric::H1)
        .value("H2", ClusterMetric::H2);

    m.def("connected_components", &connected_components, py::arg("graph"));
    m.def("split_on_articulation", &split_on_articulation, py::arg("component"),
          py::arg("ranked_words"));
    m.def("merge_messages", &merge_messages, py::arg("component"), py::arg("per_pair_messages"));
    m.def("cluster_quality", &cluster_quality, py::arg("components"), py::arg("metric"),
          py::arg("include_self_pairs") = true);
    m.def("random_component_baseline", &random_component_baseline, py::arg("pairs"),
          py::arg("sizes"), py::arg("seed"));
    m.def("sample_equal_messages", &sample_equal_messages, py::arg("per_pair_messages"),
          py::arg("seed"), py::arg("cap") = 0);

    // vq model
    py::class_<InterarrivalSeries>(m, "InterarrivalSeries")
        .def(py::init<>())
        .def_readwrite("event_id", &InterarrivalSeries::event_id)
        .def_readwrite("deltas", &InterarrivalSeries::deltas);

    py::class_<TrainingMeta>(m, "TrainingMeta")
        .def_readonly("seed", &TrainingMeta::seed)
        .def_readonly("iterations", &TrainingMeta::iterations)
        .def_readonly("inertia", &TrainingMeta::inertia);

    py::class_<Codebook>(m, "Codebook")
        .def(py::init<>())
        .def_readwrite("centroids", &Codebook::centroids)
        .def_readwrite("k", &Codebook::k)
        .def_readonly("meta", &Codebook::meta);

    py::class_<EventVector>(m, "EventVector")
        .def(py::init<>())
        .def_readwrite("event_id", &EventVector::event_id)
        .def_readwrite("weights", &EventVector::weights);

    py::class_<HistogramBin>(m, "HistogramBin")
        .def_readonly("start", &HistogramBin::start)
        .def_readonly("rel_freq", &HistogramBin::rel_freq);

    m.def("interarrivals", &interarrivals, py::arg("event"));
    m.def("learn_codebook", &learn_codebook, py::arg("series"), py::arg("k"), py::arg("seed"));
    m.def("quantize", &quantize, py::arg("series"), py::arg("codebook"));
    m.def("nearest_codeword", &nearest_codeword, py::arg("delta"), py::arg("codebook"));
    m.def("histogram_export", &histogram_export, py::arg("series"), py::arg("bin_width"),
          py::arg("cutoff"));

    // activity tiers
    py::class_<ActivityTier>(m, "ActivityTier")
        .def_readonly("rank", &ActivityTier::rank)
        .def_readonly("label", &ActivityTier::label)
        .def_readonly("member_ids", &ActivityTier::member_ids)
        .def_readonly("mean_vector", &ActivityTier::mean_vector);

    py::class_<TierSummary>(m, "TierSummary")
        .def_readonly("mean", &TierSummary::mean)
        .def_readonly("stddev", &TierSummary::stddev);

    py::class_<CdfTables>(m, "CdfTables")
        .def_readonly("seconds", &CdfTables::seconds)
        .def_readonly("cdf", &CdfTables::cdf)
        .def_readonly("seconds_log", &CdfTables::seconds_log)
        .def_readonly("log1mcdf", &CdfTables::log1mcdf);

    m.def("cluster_events", &cluster_events, py::arg("vectors"), py::arg("n_tiers"),
          py::arg("seed"));
    m.def("tier_summary", &tier_summary, py::arg("tier"), py::arg("vectors"));
    m.def("cdf_export", &cdf_export, py::arg("tier"), py::arg("series_by_id"));

    // features
    py::class_<FeatureWindow>(m, "FeatureWindow")
        .def_static("full_window", &FeatureWindow::full_window)
        .def_static("early", &FeatureWindow::early, py::arg("fraction"))
        .def("name", &FeatureWindow::name);

    py::class_<FeatureVector>(m, "FeatureVector")
        .def_readonly("event_id", &FeatureVector::event_id)
        .def_readonly("values", &FeatureVector::values)
        .def_readonly("window", &FeatureVector::window)
        .def("get", &FeatureVector::get, py::arg("name"));

    py::class_<SentimentLexicon>(m, "SentimentLexicon")
        .def(py::init<>())
        .def_readwrite("polarity", &SentimentLexicon::polarity);

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("feature_name", &ComparisonRow::feature_name)
        .def_readonly("mean_high", &ComparisonRow::mean_high)
        .def_readonly("mean_other", &ComparisonRow::mean_other)
        .def_readonly("t_statistic", &ComparisonRow::t_statistic)
        .def_readonly("p_value", &ComparisonRow::p_value);

    m.def("feature_names", [] { return feature_names(); });
    m.def("default_lexicon", [] { return default_lexicon(); });
    m.def("load_lexicon", &load_lexicon, py::arg("path"));
    m.def("sentiment_counts", &sentiment_counts, py::arg("messages"), py::arg("lexicon"));
    m.def("extract_features", &extract_features, py::arg("event"), py::arg("window"),
          py::arg("lexicon") = default_lexicon());
    m.def("compare_categories", &compare_categories, py::arg("features_high"),
          py::arg("features_other"));

    // classifier
    py::class_<LabeledExample>(m, "LabeledExample")
        .def(py::init<>())
        .def(py::init([](std::string id, std::vector<double> f, bool label) {
                 return LabeledExample{std::move(id), std::move(f), label};
             }),
             py::arg("event_id"), py::arg("features"), py::arg("label"))
        .def_readwrite("event_id", &LabeledExample::event_id)
        .def_readwrite("features", &LabeledExample::features)
        .def_readwrite("label", &LabeledExample::label);

    py::class_<Model>(m, "Model")
        .def_readonly("weights", &Model::weights)
        .def_readonly("bias", &Model::bias)
        .def_readonly("l2", &Model::l2)
        .def_readonly("feature_names", &Model::feature_names);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("fp_rate", &EvalReport::fp_rate)
        .def_readonly("precision", &EvalReport::precision)
        .def_readonly("recall", &EvalReport::recall)
        .def_readonly("roc_area", &EvalReport::roc_area)
        .def_property_readonly("confusion", [](const EvalReport& r) {
            return py::make_tuple(py::make_tuple(r.tp(), r.fn()), py::make_tuple(r.fp(), r.tn()));
        });

    py::class_<SplitRunReport>(m, "SplitRunReport")
        .def_readonly("averaged", &SplitRunReport::averaged)
        .def_readonly("rounds", &SplitRunReport::rounds)
        .def_readonly("chosen_l2", &SplitRunReport::chosen_l2);

    m.def("predict", &predict, py::arg("model"), py::arg("features"));
    m.def("train", &train, py::arg("examples"), py::arg("l2"), py::arg("seed"),
          py::arg("positive_weight") = 1.0);
    m.def("evaluate", &evaluate, py::arg("model"), py::arg("examples"), py::arg("threshold") = 0.5);
    m.def("metrics_from_confusion", &metrics_from_confusion, py::arg("tp"), py::arg("fp"),
          py::arg("fn"), py::arg("tn"));
    m.def("roc_area_from_scores", &roc_area_from_scores, py::arg("scores"), py::arg("labels"));
    m.def("split_and_run", &split_and_run, py::arg("dataset"), py::arg("seed"),
          py::arg("rounds") = 5,
          py::arg("l2_grid") = std::vector<double>{0.001, 0.01, 0.1, 1, 10},
          py::arg("positive_weight") = 1.0);
    m.def("early_window", &early_window, py::arg("event"), py::arg("fraction") = 0.05);

    // synthetic corpora
    py::class_<TierLaw>(m, "TierLaw")
        .def(py::init<>())
        .def(py::init([](std::string family, double mean) {
                 return TierLaw{std::move(family), mean};
             }),
             py::arg("family"), py::arg("mean_seconds"))
        .def_readwrite("family", &TierLaw::family)
        .def_readwrite("mean_seconds", &TierLaw::mean_seconds);

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init<>())
        .def_readwrite("n_events", &GeneratorSpec::n_events)
        .def_readwrite("tier_mix", &GeneratorSpec::tier_mix)
        .def_readwrite("interarrival_law", &GeneratorSpec::interarrival_law)
        .def_readwrite("feature_contrasts", &GeneratorSpec::feature_contrasts)
        .def_readwrite("msg_count_median", &GeneratorSpec::msg_count_median)
        .def_readwrite("msg_count_sigma", &GeneratorSpec::msg_count_sigma)
        .def_readwrite("msg_count_min", &GeneratorSpec::msg_count_min)
        .def_readwrite("msg_count_max", &GeneratorSpec::msg_count_max)
        .def_readwrite("seed", &GeneratorSpec::seed);

    py::class_<SynthCorpus>(m, "SynthCorpus")
        .def_readonly("events", &SynthCorpus::events)
        .def_readonly("tier_of", &SynthCorpus::tier_of);

    m.def("generate", &generate, py::arg("spec"));
}
