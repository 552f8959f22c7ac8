// eventvq: batch pipeline for interarrival-based event activity analysis.

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "eventvq/activity.hpp"
#include "eventvq/artifacts.hpp"
#include "eventvq/classifier.hpp"
#include "eventvq/config.hpp"
#include "eventvq/corpus.hpp"
#include "eventvq/event_graph.hpp"
#include "eventvq/features.hpp"
#include "eventvq/io_util.hpp"
#include "eventvq/keywords.hpp"
#include "eventvq/rng.hpp"
#include "eventvq/stemmer.hpp"
#include "eventvq/synth.hpp"
#include "eventvq/text.hpp"
#include "eventvq/vq.hpp"

namespace fs = std::filesystem;
using namespace eventvq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMissingInput = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Paths {
    fs::path workdir;
    fs::path messages() const { return workdir / "messages.jsonl"; }
    fs::path labels() const { return workdir / "labels.csv"; }
    fs::path pairs() const { return workdir / "keyword_pairs.csv"; }
    fs::path stopwords() const { return workdir / "stopwords.txt"; }
    fs::path events_index() const { return workdir / "events.csv"; }
    fs::path validation() const { return workdir / "validation.csv"; }
    fs::path codebook() const { return workdir / "codebook.txt"; }
    fs::path vectors() const { return workdir / "event_vectors.csv"; }
    fs::path tiers() const { return workdir / "tiers.csv"; }
    fs::path features(const std::string& window) const {
        return workdir / ("features_" + window + ".csv");
    }
    fs::path comparison() const { return workdir / "comparison.csv"; }
    fs::path model() const { return workdir / "model.txt"; }
    fs::path report() const { return workdir / "report.csv"; }
    fs::path eval_report() const { return workdir / "eval_report.csv"; }
    fs::path stats() const { return workdir / "stats.txt"; }
    fs::path figures() const { return workdir / "figures"; }
};

void require(const fs::path& p) {
    if (!fs::exists(p)) throw MissingArtifact(p);
}

std::set<std::string> effective_stopwords(const PipelineConfig& cfg, const Paths& paths) {
    std::set<std::string> words = default_stopwords();
    if (!cfg.stopword_file.empty()) {
        require(cfg.stopword_file);
        auto extra = load_stopwords(cfg.stopword_file);
        words.insert(extra.begin(), extra.end());
    }
    if (fs::exists(paths.stopwords())) {
        auto learned = load_stopwords(paths.stopwords());
        words.insert(learned.begin(), learned.end());
    }
    return words;
}

SentimentLexicon effective_lexicon(const PipelineConfig& cfg) {
    if (cfg.lexicon_file.empty()) return default_lexicon();
    require(cfg.lexicon_file);
    return load_lexicon(cfg.lexicon_file);
}

std::vector<Event> load_clean_events(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.events_index());
    std::vector<Event> events = load_events(paths.workdir);
    if (cfg.head_drop_fraction > 0)
        for (auto& e : events) e = drop_head_fraction(e, cfg.head_drop_fraction);
    std::erase_if(events, [&](const Event& e) { return e.messages.empty(); });
    return events;
}

// ---- subcommands ----------------------------------------------------------

int cmd_ingest(const PipelineConfig& cfg, const Paths& paths) {
    if (cfg.input_messages.empty()) throw ConfigError("ingest: --input-messages is required");
    require(cfg.input_messages);
    CleaningReport report;
    auto messages = clean_messages(load_messages(cfg.input_messages, &report), &report);
    write_messages_jsonl(paths.messages(), messages);

    std::ostringstream txt;
    txt << "ingested " << cfg.input_messages.string() << "\n"
        << "loaded " << report.loaded << "\nskipped " << report.skipped << "\nduplicates "
        << report.duplicates << "\n";
    write_file_atomic(paths.workdir / "cleaning_report.txt", txt.str());
    nlohmann::json j{{"loaded", report.loaded},
                     {"skipped", report.skipped},
                     {"duplicates", report.duplicates}};
    write_file_atomic(paths.workdir / "cleaning_report.json", j.dump() + "\n");
    std::cout << txt.str();
    return kExitOk;
}

int cmd_synth(const PipelineConfig& cfg, const Paths& paths) {
    GeneratorSpec spec;
    spec.n_events = cfg.synth_events;
    spec.tier_mix = {{"high", cfg.synth_high_fraction}, {"low", 1.0 - cfg.synth_high_fraction}};
    spec.interarrival_law = {{"high", {"exponential", cfg.synth_high_mean}},
                             {"low", {"exponential", cfg.synth_low_mean}}};
    spec.msg_count_median = cfg.synth_msg_median;
    spec.msg_count_sigma = cfg.synth_msg_sigma;
    spec.seed = cfg.seed;
    SynthCorpus corpus = generate(spec);

    write_events(paths.workdir, corpus.events);
    std::map<std::string, std::string> event_of;
    std::vector<Message> flat;
    for (const auto& e : corpus.events)
        for (const auto& m : e.messages) {
            event_of[m.id] = e.event_id;
            flat.push_back(m);
        }
    write_messages_jsonl(paths.messages(), flat, &event_of);
    write_labels_csv(paths.labels(), corpus.tier_of);
    std::cout << "generated " << corpus.events.size() << " events, " << flat.size()
              << " messages\n";
    return kExitOk;
}

int cmd_stats(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.events_index());
    auto events = load_events(paths.workdir);
    if (events.empty()) throw std::runtime_error("stats: no events");
    auto text = dataset_stats_text(dataset_stats(events));
    write_file_atomic(paths.stats(), text);
    std::cout << text;
    return kExitOk;
}

int cmd_detect_keywords(const PipelineConfig& cfg, const Paths& paths) {
    if (cfg.input_headlines.empty())
        throw ConfigError("detect-keywords: --input-headlines is required");
    require(cfg.input_headlines);
    auto stoplist = effective_stopwords(cfg, paths);
    auto headlines = load_headlines(cfg.input_headlines, stoplist);

    std::vector<KeywordPair> all_pairs;
    for (const auto& [hour, batch] : batch_by_hour(headlines)) {
        auto itemsets = detect_keywords(batch, 50, cfg.eta);
        for (auto& p : top_keyword_pairs(itemsets, 6, hour)) all_pairs.push_back(std::move(p));
    }
    write_pairs_csv(paths.pairs(), all_pairs);
    std::cout << "detected " << all_pairs.size() << " keyword pairs\n";
    return kExitOk;
}

// stemmed token set per message, cached across pairs
struct MessageIndex {
    std::vector<Message> messages;
    std::vector<std::set<std::string>> stems;

    explicit MessageIndex(std::vector<Message> msgs) : messages(std::move(msgs)) {
        std::unordered_map<std::string, std::string> cache;
        stems.reserve(messages.size());
        for (const auto& m : messages) {
            std::set<std::string> s;
            for (auto& tok : tokenize_words(m.text)) {
                auto it = cache.find(tok);
                if (it == cache.end()) it = cache.emplace(tok, porter_stem(tok)).first;
                s.insert(it->second);
            }
            stems.push_back(std::move(s));
        }
    }

    std::vector<Message> matching(const KeywordPair& p) const {
        std::vector<Message> out;
        for (std::size_t i = 0; i < messages.size(); ++i)
            if (stems[i].count(p.first) && stems[i].count(p.second)) out.push_back(messages[i]);
        return out;
    }
};

std::map<std::int64_t, std::vector<KeywordPair>> pairs_by_window(
    const std::vector<KeywordPair>& pairs, std::int64_t window_seconds) {
    std::map<std::int64_t, std::vector<KeywordPair>> out;
    for (const auto& p : pairs)
        out[(p.batch_hour * 3600) / window_seconds * window_seconds].push_back(p);
    return out;
}

int cmd_build_events(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.pairs());
    require(paths.messages());
    if (cfg.input_headlines.empty())
        throw ConfigError("build-events: --input-headlines is required (articulation ranking)");
    require(cfg.input_headlines);

    auto stoplist = effective_stopwords(cfg, paths);
    auto headlines = load_headlines(cfg.input_headlines, stoplist);
    MessageIndex index(load_messages(paths.messages()));
    auto pairs = load_pairs_csv(paths.pairs());

    std::set<std::string> learned =
        fs::exists(paths.stopwords()) ? load_stopwords(paths.stopwords()) : std::set<std::string>{};
    std::vector<Event> events;

    for (const auto& [window_start, window_pairs] : pairs_by_window(pairs, cfg.window_seconds)) {
        KeywordGraph graph;
        graph.window_start = window_start;
        graph.window_length = cfg.window_seconds;
        std::map<PairKey, std::vector<Message>> per_pair;
        for (const auto& p : window_pairs) {
            graph.add_edge(make_pair_canonical(p.first, p.second, 0));
            PairKey key{p.first, p.second};
            if (!per_pair.count(key)) per_pair[key] = index.matching(p);
        }

        // articulation ranking over this window's hourly headline documents
        std::vector<std::vector<std::string>> docs;
        for (const auto& [hour, batch] : batch_by_hour(headlines)) {
            if (hour * 3600 < window_start || hour * 3600 >= window_start + cfg.window_seconds)
                continue;
            std::vector<std::string> doc;
            for (const auto& tokens : batch) doc.insert(doc.end(), tokens.begin(), tokens.end());
            if (!doc.empty()) docs.push_back(std::move(doc));
        }
        auto ranked = docs.empty() ? std::vector<ScoredWord>{} : rank_articulation_words(docs);

        for (const auto& component : connected_components(graph)) {
            SplitResult split = split_on_articulation(component, ranked);
            for (const auto& w : split.removed_words) learned.insert(w);
            for (const auto& fragment : split.fragments) {
                Event ev;
                ev.collected_date = utc_date(window_start);
                ev.event_id = ev.collected_date + "-" + *fragment.keywords.begin();
                ev.keywords = fragment.keywords;
                Component merged = merge_messages(fragment, per_pair);
                ev.messages = std::move(merged.messages);
                if (ev.messages.size() < cfg.min_event_messages) continue;
                events.push_back(std::move(ev));
            }
        }
    }

    write_events(paths.workdir, events);
    write_stopwords(paths.stopwords(), learned);
    std::cout << "built " << events.size() << " events\n";
    return kExitOk;
}

int cmd_validate_events(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.pairs());
    require(paths.messages());
    MessageIndex index(load_messages(paths.messages()));
    auto pairs = load_pairs_csv(paths.pairs());

    const ClusterMetric metrics[] = {ClusterMetric::I1, ClusterMetric::I2, ClusterMetric::E1,
                                     ClusterMetric::G1, ClusterMetric::G1Prime, ClusterMetric::H1,
                                     ClusterMetric::H2};
    std::string csv = "day,metric,true_value,baseline_mean\n";

    for (const auto& [window_start, window_pairs] : pairs_by_window(pairs, cfg.window_seconds)) {
        KeywordGraph graph;
        std::map<PairKey, std::vector<Message>> per_pair;
        std::vector<KeywordPair> canon;
        for (const auto& p : window_pairs) {
            auto cp = make_pair_canonical(p.first, p.second, 0);
            graph.add_edge(cp);
            PairKey key{cp.first, cp.second};
            if (!per_pair.count(key)) {
                per_pair[key] = index.matching(cp);
                canon.push_back(cp);
            }
        }
        auto sampled = sample_equal_messages(per_pair, cfg.seed,
                                             static_cast<std::size_t>(cfg.sample_cap));
        if (sampled.empty() || sampled.begin()->second.empty()) continue;

        auto true_components = connected_components(graph);
        std::vector<Component> truth;
        std::vector<int> sizes;
        for (const auto& c : true_components) {
            if (c.pairs.empty()) continue;
            truth.push_back(merge_messages(c, sampled));
            sizes.push_back(static_cast<int>(c.pairs.size()));
        }
        if (truth.empty()) continue;

        std::string day = utc_date(window_start);
        for (auto metric : metrics) {
            double true_value = cluster_quality(truth, metric, !cfg.exclude_self_pairs);
            double baseline_sum = 0;
            for (int r = 0; r < cfg.baseline_rounds; ++r) {
                auto random_parts = random_component_baseline(
                    canon, sizes, derive_seed(cfg.seed, 100 + static_cast<std::uint64_t>(r)));
                std::vector<Component> baseline;
                for (const auto& c : random_parts) baseline.push_back(merge_messages(c, sampled));
                baseline_sum += cluster_quality(baseline, metric, !cfg.exclude_self_pairs);
            }
            csv += day + "," + metric_name(metric) + "," + format_double(true_value) + "," +
                   format_double(baseline_sum / cfg.baseline_rounds) + "\n";
        }
    }
    write_file_atomic(paths.validation(), csv);
    std::cout << "validation written to " << paths.validation().string() << "\n";
    return kExitOk;
}

int cmd_learn_codebook(const PipelineConfig& cfg, const Paths& paths) {
    auto events = load_clean_events(cfg, paths);
    if (events.empty()) throw std::runtime_error("learn-codebook: no events");
    std::vector<InterarrivalSeries> series;
    series.reserve(events.size());
    for (const auto& e : events) series.push_back(interarrivals(e));
    Codebook cb = learn_codebook(series, cfg.k_codewords, cfg.seed);
    write_file_atomic(paths.codebook(), codebook_to_text(cb));
    std::cout << "codebook with " << cb.k << " codewords, inertia " << cb.meta.inertia << "\n";
    return kExitOk;
}

int cmd_vectorize(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.codebook());
    Codebook cb = codebook_from_text(read_file(paths.codebook()));
    auto events = load_clean_events(cfg, paths);
    std::vector<EventVector> vectors;
    vectors.reserve(events.size());
    for (const auto& e : events) vectors.push_back(quantize(interarrivals(e), cb));
    write_vectors_csv(paths.vectors(), vectors);
    std::cout << "vectorized " << vectors.size() << " events\n";
    return kExitOk;
}

int cmd_cluster_tiers(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.vectors());
    auto vectors = load_vectors_csv(paths.vectors());
    auto tiers = cluster_events(vectors, cfg.n_tiers, cfg.seed);
    write_tiers_csv(paths.tiers(), tiers);
    for (const auto& t : tiers)
        std::cout << "tier " << t.rank << " (" << t.label << "): " << t.member_ids.size()
                  << " events, bin0 mean " << format_double(t.mean_vector[0], 4) << "\n";
    return kExitOk;
}

int cmd_export_figures(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.vectors());
    require(paths.tiers());
    require(paths.codebook());
    auto vectors = load_vectors_csv(paths.vectors());
    auto tier_of = load_tiers_csv(paths.tiers());
    Codebook cb = codebook_from_text(read_file(paths.codebook()));

    int n_tiers = 0;
    for (const auto& [id, lr] : tier_of) n_tiers = std::max(n_tiers, lr.second + 1);
    std::vector<ActivityTier> tiers(n_tiers);
    for (const auto& [id, lr] : tier_of) {
        tiers[lr.second].rank = lr.second;
        tiers[lr.second].label = lr.first;
        tiers[lr.second].member_ids.insert(id);
    }

    std::string heatmap = "tier_rank,tier_label,members";
    for (int i = 0; i < cb.k; ++i) heatmap += ",w" + std::to_string(i);
    heatmap += "\n";
    std::string hist = "tier_rank,tier_label,bin,codeword_seconds,mean,std\n";
    for (auto& t : tiers) {
        TierSummary s = tier_summary(t, vectors);
        t.mean_vector = s.mean;
        heatmap += std::to_string(t.rank) + "," + t.label + "," + std::to_string(t.member_ids.size());
        for (double m : s.mean) heatmap += "," + format_double(m);
        heatmap += "\n";
        for (int b = 0; b < cb.k; ++b)
            hist += std::to_string(t.rank) + "," + t.label + "," + std::to_string(b) + "," +
                    format_double(cb.centroids[b]) + "," + format_double(s.mean[b]) + "," +
                    format_double(s.stddev[b]) + "\n";
    }
    write_file_atomic(paths.figures() / "heatmap.csv", heatmap);
    write_file_atomic(paths.figures() / "tier_hist.csv", hist);

    auto events = load_clean_events(cfg, paths);
    std::map<std::string, InterarrivalSeries> series;
    for (const auto& e : events) series[e.event_id] = interarrivals(e);
    std::string cdf_csv = "tier_rank,tier_label,seconds,cdf\n";
    std::string log_csv = "tier_rank,tier_label,seconds,log1mcdf\n";
    for (const auto& t : tiers) {
        CdfTables tables = cdf_export(t, series);
        for (std::size_t i = 0; i < tables.seconds.size(); ++i)
            cdf_csv += std::to_string(t.rank) + "," + t.label + "," +
                       std::to_string(tables.seconds[i]) + "," + format_double(tables.cdf[i]) + "\n";
        for (std::size_t i = 0; i < tables.seconds_log.size(); ++i)
            log_csv += std::to_string(t.rank) + "," + t.label + "," +
                       std::to_string(tables.seconds_log[i]) + "," +
                       format_double(tables.log1mcdf[i]) + "\n";
    }
    write_file_atomic(paths.figures() / "cdf.csv", cdf_csv);
    write_file_atomic(paths.figures() / "log1mcdf.csv", log_csv);
    std::cout << "figures written to " << paths.figures().string() << "\n";
    return kExitOk;
}

int cmd_extract_features(const PipelineConfig& cfg, const Paths& paths) {
    auto events = load_clean_events(cfg, paths);
    if (events.empty()) throw std::runtime_error("extract-features: no events");
    auto lexicon = effective_lexicon(cfg);
    std::vector<FeatureVector> full, early;
    full.reserve(events.size());
    early.reserve(events.size());
    std::map<std::string, Event> raw;
    if (cfg.early_before_head_drop)
        for (auto& e : load_events(paths.workdir)) raw[e.event_id] = std::move(e);
    for (const auto& e : events) {
        full.push_back(extract_features(e, FeatureWindow::full_window(), lexicon));
        const Event& early_source = cfg.early_before_head_drop ? raw.at(e.event_id) : e;
        early.push_back(
            extract_features(early_source, FeatureWindow::early(cfg.early_fraction), lexicon));
    }
    write_features_csv(paths.features("full"), full);
    write_features_csv(paths.features("early"), early);
    std::cout << "features for " << events.size() << " events (full + early "
              << format_double(cfg.early_fraction, 4) << ")\n";
    return kExitOk;
}

std::vector<LabeledExample> labeled_dataset(const PipelineConfig& cfg, const Paths& paths) {
    auto fpath = paths.features(cfg.feature_window);
    require(fpath);
    require(paths.tiers());
    auto features = load_features_csv(fpath);
    auto tier_of = load_tiers_csv(paths.tiers());
    std::vector<LabeledExample> out;
    for (const auto& fv : features) {
        auto it = tier_of.find(fv.event_id);
        if (it == tier_of.end()) continue;
        LabeledExample e;
        e.event_id = fv.event_id;
        for (const auto& [n, v] : fv.values) e.features.push_back(v);
        e.label = it->second.second == 0;  // top tier = high-activity
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::runtime_error("no labeled examples (join of features and tiers)");
    return out;
}

int cmd_compare(const PipelineConfig& cfg, const Paths& paths) {
    auto fpath = paths.features(cfg.feature_window);
    require(fpath);
    require(paths.tiers());
    auto features = load_features_csv(fpath);
    auto tier_of = load_tiers_csv(paths.tiers());
    std::vector<FeatureVector> high, other;
    for (auto& fv : features) {
        auto it = tier_of.find(fv.event_id);
        if (it == tier_of.end()) continue;
        (it->second.second == 0 ? high : other).push_back(std::move(fv));
    }
    auto rows = compare_categories(high, other);
    std::string csv = "feature,mean_high,mean_other,t,p\n";
    for (const auto& r : rows)
        csv += r.feature_name + "," + format_double(r.mean_high) + "," +
               format_double(r.mean_other) + "," + format_double(r.t_statistic) + "," +
               format_double(r.p_value) + "\n";
    write_file_atomic(paths.comparison(), csv);
    std::cout << "comparison written to " << paths.comparison().string() << "\n";
    return kExitOk;
}

std::string report_csv(const SplitRunReport& rep) {
    auto row = [](const std::string& name, const EvalReport& r) {
        return name + "," + format_double(r.fp_rate) + "," + format_double(r.precision) + "," +
               format_double(r.recall) + "," + format_double(r.roc_area) + "\n";
    };
    std::string csv = "class,fp_rate,precision,recall,roc_area\n";
    csv += row("high-activity", rep.averaged);

    // negative-class view, averaged over the same rounds
    EvalReport neg;
    for (const auto& r : rep.rounds) {
        EvalReport n = metrics_from_confusion(r.tn(), r.fn(), r.fp(), r.tp());
        neg.fp_rate += n.fp_rate;
        neg.precision += n.precision;
        neg.recall += n.recall;
        neg.roc_area += r.roc_area;
    }
    double k = static_cast<double>(rep.rounds.size());
    neg.fp_rate /= k;
    neg.precision /= k;
    neg.recall /= k;
    neg.roc_area /= k;
    csv += row("non-high-activity", neg);

    csv += "confusion,predicted_high,predicted_non_high\n";
    csv += "actual_high," + std::to_string(rep.averaged.tp()) + "," +
           std::to_string(rep.averaged.fn()) + "\n";
    csv += "actual_non_high," + std::to_string(rep.averaged.fp()) + "," +
           std::to_string(rep.averaged.tn()) + "\n";
    std::string l2s;
    for (double l2 : rep.chosen_l2) {
        if (!l2s.empty()) l2s += ";";
        l2s += format_double(l2);
    }
    csv += "chosen_l2," + l2s + "\n";
    return csv;
}

int cmd_train(const PipelineConfig& cfg, const Paths& paths) {
    auto dataset = labeled_dataset(cfg, paths);
    SplitRunReport rep =
        split_and_run(dataset, cfg.seed, cfg.rounds, cfg.l2_grid, cfg.class_weight);
    write_file_atomic(paths.report(), report_csv(rep));

    // final model on the full dataset with the most frequently chosen l2
    std::map<double, int> votes;
    for (double l2 : rep.chosen_l2) ++votes[l2];
    double final_l2 = rep.chosen_l2.front();
    int best = -1;
    for (const auto& [l2, n] : votes)
        if (n > best) {
            best = n;
            final_l2 = l2;
        }
    Model model = train(dataset, final_l2, cfg.seed, cfg.class_weight);
    model.feature_names = feature_names();
    write_file_atomic(paths.model(), model_to_text(model));

    std::cout << "averaged over " << cfg.rounds << " rounds (" << cfg.feature_window
              << " features): precision " << format_double(rep.averaged.precision, 4) << ", recall "
              << format_double(rep.averaged.recall, 4) << ", roc_area "
              << format_double(rep.averaged.roc_area, 4) << "\n";
    return kExitOk;
}

int cmd_evaluate(const PipelineConfig& cfg, const Paths& paths) {
    require(paths.model());
    Model model = model_from_text(read_file(paths.model()));
    auto dataset = labeled_dataset(cfg, paths);
    EvalReport r = evaluate(model, dataset);
    std::string csv = "class,fp_rate,precision,recall,roc_area\n";
    csv += "high-activity," + format_double(r.fp_rate) + "," + format_double(r.precision) + "," +
           format_double(r.recall) + "," + format_double(r.roc_area) + "\n";
    csv += "confusion,predicted_high,predicted_non_high\n";
    csv += "actual_high," + std::to_string(r.tp()) + "," + std::to_string(r.fn()) + "\n";
    csv += "actual_non_high," + std::to_string(r.fp()) + "," + std::to_string(r.tn()) + "\n";
    write_file_atomic(paths.eval_report(), csv);
    std::cout << "precision " << format_double(r.precision, 4) << ", recall "
              << format_double(r.recall, 4) << ", roc_area " << format_double(r.roc_area, 4)
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    PipelineConfig cfg;
    std::string l2_grid_text;

    CLI::App app{"event activity analytics from message interarrival times"};
    app.fallthrough();
    app.set_config("--config", "", "flat key=value config file; command-line flags win");
    app.allow_config_extras(false);
    app.add_option("--input-messages", cfg.input_messages, "line-delimited message records");
    app.add_option("--input-headlines", cfg.input_headlines, "line-delimited headline records");
    app.add_option("--workdir", cfg.workdir, "pipeline working directory");
    app.add_option("--stopwords", cfg.stopword_file, "extra stopword file (one word per line)");
    app.add_option("--lexicon", cfg.lexicon_file, "sentiment lexicon (word polarity per line)");
    app.add_option("--eta", cfg.eta, "itemset overlap threshold");
    app.add_option("--k-codewords", cfg.k_codewords, "codebook size");
    app.add_option("--n-tiers", cfg.n_tiers, "activity tier count");
    app.add_option("--head-drop-fraction", cfg.head_drop_fraction, "head fraction discarded");
    app.add_option("--early-fraction", cfg.early_fraction, "early prediction window fraction");
    app.add_option("--seed", cfg.seed, "global random seed");
    app.add_option("--rounds", cfg.rounds, "split-and-run rounds");
    app.add_option("--l2-grid", l2_grid_text, "comma-separated l2 grid");
    app.add_option("--window-seconds", cfg.window_seconds, "event graph window length");
    app.add_option("--bin-width", cfg.bin_width, "histogram bin width (seconds)");
    app.add_option("--hist-cutoff", cfg.hist_cutoff, "histogram display cutoff (seconds)");
    app.add_option("--baseline-rounds", cfg.baseline_rounds, "random baseline rounds");
    app.add_option("--sample-cap", cfg.sample_cap, "per-pair sample cap for validation");
    app.add_option("--feature-window", cfg.feature_window, "features used by train/evaluate: early|full");
    app.add_option("--min-event-messages", cfg.min_event_messages, "drop smaller events");
    app.add_option("--class-weight", cfg.class_weight, "training weight of the high-activity class");
    app.add_flag("--early-before-head-drop", cfg.early_before_head_drop,
                 "take the early window before the head drop instead of after");
    app.add_flag("--exclude-self-pairs", cfg.exclude_self_pairs,
                 "drop u == v terms from the validation metric summations");
    app.add_option("--synth-events", cfg.synth_events, "synthetic corpus size");
    app.add_option("--synth-high-fraction", cfg.synth_high_fraction, "planted high tier share");
    app.add_option("--synth-msg-median", cfg.synth_msg_median, "median messages per event");
    app.add_option("--synth-msg-sigma", cfg.synth_msg_sigma, "log-normal sigma");
    app.add_option("--synth-high-mean", cfg.synth_high_mean, "high tier interarrival mean (s)");
    app.add_option("--synth-low-mean", cfg.synth_low_mean, "low tier interarrival mean (s)");

    struct Sub {
        const char* name;
        const char* desc;
        int (*run)(const PipelineConfig&, const Paths&);
    };
    const Sub subs[] = {
        {"ingest", "normalize and clean a message file into the workdir", cmd_ingest},
        {"synth", "generate a synthetic labeled corpus", cmd_synth},
        {"stats", "dataset summary statistics", cmd_stats},
        {"detect-keywords", "mine keyword pairs from hourly headline batches", cmd_detect_keywords},
        {"build-events", "merge keyword pairs into events over daily windows", cmd_build_events},
        {"validate-events", "clustering metrics of true vs random components", cmd_validate_events},
        {"learn-codebook", "train the interarrival codebook", cmd_learn_codebook},
        {"vectorize", "quantize each event against the codebook", cmd_vectorize},
        {"cluster-tiers", "cluster event vectors into activity tiers", cmd_cluster_tiers},
        {"export-figures", "heatmap, average histograms and CDF tables", cmd_export_figures},
        {"extract-features", "full- and early-window feature matrices", cmd_extract_features},
        {"compare", "t-test comparison of high-activity vs other events", cmd_compare},
        {"train", "split/tune/train the high-activity classifier", cmd_train},
        {"evaluate", "evaluate the saved model on the labeled dataset", cmd_evaluate},
    };
    std::map<std::string, int (*)(const PipelineConfig&, const Paths&)> dispatch;
    for (const auto& s : subs) {
        app.add_subcommand(s.name, s.desc);
        dispatch[s.name] = s.run;
    }
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!l2_grid_text.empty()) {
            cfg.l2_grid.clear();
            std::istringstream ss(l2_grid_text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) cfg.l2_grid.push_back(std::stod(tok));
        }
        validate_config(cfg);
        Paths paths{cfg.workdir};
        std::filesystem::create_directories(cfg.workdir);
        WorkdirLock lock(cfg.workdir);
        for (auto* sub : app.get_subcommands()) return dispatch.at(sub->get_name())(cfg, paths);
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MissingArtifact& e) {
        std::cerr << e.what() << "\n";
        return kExitMissingInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
