#include "eventvq/config.hpp"

namespace eventvq {

void validate_config(const PipelineConfig& cfg) {
    if (cfg.workdir.empty()) throw ConfigError("workdir must be set");
    if (cfg.eta < 2) throw ConfigError("eta must be >= 2");
    if (cfg.k_codewords < 2) throw ConfigError("k_codewords must be >= 2");
    if (cfg.n_tiers < 2) throw ConfigError("n_tiers must be >= 2");
    if (!(cfg.head_drop_fraction >= 0 && cfg.head_drop_fraction < 1))
        throw ConfigError("head_drop_fraction must be in [0,1)");
    if (!(cfg.early_fraction > 0 && cfg.early_fraction < 1))
        throw ConfigError("early_fraction must be in (0,1)");
    if (cfg.rounds < 1) throw ConfigError("rounds must be >= 1");
    if (cfg.l2_grid.empty()) throw ConfigError("l2_grid must be nonempty");
    for (double l2 : cfg.l2_grid)
        if (l2 < 0) throw ConfigError("l2 values must be nonnegative");
    if (cfg.window_seconds < 1) throw ConfigError("window_seconds must be >= 1");
    if (cfg.bin_width < 1) throw ConfigError("bin_width must be >= 1");
    if (cfg.baseline_rounds < 1) throw ConfigError("baseline_rounds must be >= 1");
    if (cfg.feature_window != "early" && cfg.feature_window != "full")
        throw ConfigError("feature_window must be 'early' or 'full'");
    if (cfg.class_weight <= 0) throw ConfigError("class_weight must be positive");
    if (cfg.synth_events < 1) throw ConfigError("synth_events must be >= 1");
    if (!(cfg.synth_high_fraction > 0 && cfg.synth_high_fraction < 1))
        throw ConfigError("synth_high_fraction must be in (0,1)");
    if (cfg.synth_msg_median <= 0 || cfg.synth_msg_sigma < 0)
        throw ConfigError("bad synth message count parameters");
    if (cfg.synth_high_mean <= 0 || cfg.synth_low_mean <= 0)
        throw ConfigError("synth interarrival means must be positive");
}

}  // namespace eventvq
