#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/casebase.hpp"
#include "core/errors.hpp"
#include "core/framework.hpp"
#include "core/mining.hpp"
#include "core/semantics.hpp"
#include "core/translation.hpp"

namespace saacbr {

template <Characterisation C>
struct ModelConfig {
    Mode mode = Mode::Saacbr;
    bool secondary_attacks = false;
    std::string default_outcome;
    C default_characterisation{};
    std::string default_id = "default";
    // Pins the non-default token when the casebase alone cannot determine it.
    std::optional<std::string> complement_outcome;

    void validate() const {
        if (default_outcome.empty()) {
            throw ConfigError("no default outcome configured");
        }
        if (secondary_attacks && mode == Mode::Aacbr) {
            throw ConfigError("secondary attacks require saacbr mode");
        }
    }

    Case<C> make_default_argument() const {
        return Case<C>{default_id, default_characterisation, default_outcome};
    }
};

// Full prediction record: the chosen outcome plus everything needed to
// explain it (both frameworks, the grounded labelling, the spikes).
struct Prediction {
    std::string outcome;
    bool default_accepted = false;
    Mode mode = Mode::Saacbr;
    bool secondary_attacks = false;
    BipolarFramework bipolar;
    AttackFramework translated;
    GroundedResult grounded;
    std::vector<std::string> spikes; // case ids, sorted
};

// Casebase arguments with no directed path to the default argument over
// attacks and supports; such a case can never influence a prediction. The
// default argument and the new case are not spike candidates.
std::vector<std::string> find_spikes(const BipolarFramework& baf);

// Builds a validated casebase from raw cases and the configured default.
template <Characterisation C>
Casebase<C> build_casebase(std::vector<Case<C>> cases, const ModelConfig<C>& config) {
    config.validate();
    return validate_casebase(std::move(cases), config.make_default_argument(),
                             config.complement_outcome);
}

// mine -> spikes -> translate -> grounded -> decide. The prediction is the
// default outcome exactly when the default argument is in the grounded
// extension, and the complement otherwise.
template <Characterisation C>
Prediction predict(const Casebase<C>& casebase, const ModelConfig<C>& config, const C& x_new) {
    config.validate();

    Prediction p;
    p.mode = config.mode;
    p.secondary_attacks = config.secondary_attacks;
    p.bipolar = mine_framework(casebase, x_new, config.mode);
    p.spikes = find_spikes(p.bipolar);
    p.translated = translate(p.bipolar, TranslationOptions{config.secondary_attacks});
    p.grounded = grounded_extension(p.translated);
    p.default_accepted = p.grounded.contains(p.translated.default_index);
    p.outcome = p.default_accepted ? casebase.outcomes.default_outcome
                                   : casebase.outcomes.complement_or_throw();
    return p;
}

struct CaseResult {
    std::string id;
    std::string actual;
    std::string predicted;
    bool correct = false;
    std::size_t spike_count = 0;
};

// Aggregate evaluation over held-out cases. The confusion quadrants treat
// the complement (non-default) outcome as the positive class.
struct EvalReport {
    std::string protocol; // "loo" or "split"
    Mode mode = Mode::Saacbr;
    bool secondary_attacks = false;
    double train_ratio = 0.0; // split protocol only
    std::uint32_t seed = 0;   // split protocol only
    std::vector<CaseResult> rows;
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;
    std::size_t true_positive = 0;  // actual complement, predicted complement
    std::size_t true_negative = 0;  // actual default, predicted default
    std::size_t false_positive = 0; // actual default, predicted complement
    std::size_t false_negative = 0; // actual complement, predicted default
    std::size_t spike_total = 0;    // summed over folds
};

namespace detail {

template <Characterisation C>
void score_fold(EvalReport& report, const Casebase<C>& training, const ModelConfig<C>& config,
                const Case<C>& held_out) {
    Prediction p = predict(training, config, held_out.characterisation);
    CaseResult row{held_out.id, held_out.outcome, p.outcome,
                   p.outcome == held_out.outcome, p.spikes.size()};
    report.spike_total += row.spike_count;
    report.correct += row.correct ? 1 : 0;
    const bool actual_default = held_out.outcome == config.default_outcome;
    const bool predicted_default = p.outcome == config.default_outcome;
    if (actual_default) {
        (predicted_default ? report.true_negative : report.false_positive) += 1;
    } else {
        (predicted_default ? report.false_negative : report.true_positive) += 1;
    }
    report.rows.push_back(std::move(row));
}

inline void finish_report(EvalReport& report) {
    report.total = report.rows.size();
    report.accuracy =
        report.total == 0 ? 0.0
                          : static_cast<double>(report.correct) / static_cast<double>(report.total);
}

} // namespace detail

// Leave-one-out: each case is predicted from the remaining casebase with its
// own characterisation as the new case. The outcome pair of the full
// casebase is pinned up front so folds that lose one label still resolve the
// complement token.
template <Characterisation C>
EvalReport evaluate_loo(const Casebase<C>& casebase, const ModelConfig<C>& config) {
    config.validate();
    if (casebase.cases.size() < 2) {
        throw DataError("leave-one-out needs a casebase of at least two cases");
    }

    ModelConfig<C> fold_config = config;
    fold_config.complement_outcome = casebase.outcomes.complement;

    EvalReport report;
    report.protocol = "loo";
    report.mode = config.mode;
    report.secondary_attacks = config.secondary_attacks;
    for (std::size_t held = 0; held < casebase.cases.size(); ++held) {
        std::vector<Case<C>> remainder;
        remainder.reserve(casebase.cases.size() - 1);
        for (std::size_t i = 0; i < casebase.cases.size(); ++i) {
            if (i != held) remainder.push_back(casebase.cases[i]);
        }
        Casebase<C> training = build_casebase(std::move(remainder), fold_config);
        detail::score_fold(report, training, fold_config, casebase.cases[held]);
    }
    detail::finish_report(report);
    return report;
}

// Single random train/test split. The shuffle draws directly from a seeded
// mt19937 so the partition is identical across platforms.
template <Characterisation C>
EvalReport evaluate_split(const Casebase<C>& casebase, const ModelConfig<C>& config,
                          double train_ratio, std::uint32_t seed) {
    config.validate();
    if (!(train_ratio > 0.0 && train_ratio < 1.0)) {
        throw ConfigError("train ratio must lie strictly between 0 and 1");
    }
    if (casebase.cases.size() < 2) {
        throw DataError("a train/test split needs a casebase of at least two cases");
    }

    std::vector<std::size_t> order(casebase.cases.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937 rng(seed);
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(order[i], order[j]);
    }

    std::size_t train_count =
        static_cast<std::size_t>(train_ratio * static_cast<double>(order.size()));
    train_count = std::max<std::size_t>(1, std::min(train_count, order.size() - 1));

    std::vector<Case<C>> training_cases;
    std::vector<std::size_t> test_indices;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i < train_count) {
            training_cases.push_back(casebase.cases[order[i]]);
        } else {
            test_indices.push_back(order[i]);
        }
    }
    std::sort(test_indices.begin(), test_indices.end());

    ModelConfig<C> fold_config = config;
    fold_config.complement_outcome = casebase.outcomes.complement;
    Casebase<C> training = build_casebase(std::move(training_cases), fold_config);

    EvalReport report;
    report.protocol = "split";
    report.mode = config.mode;
    report.secondary_attacks = config.secondary_attacks;
    report.train_ratio = train_ratio;
    report.seed = seed;
    for (std::size_t idx : test_indices) {
        detail::score_fold(report, training, fold_config, casebase.cases[idx]);
    }
    detail::finish_report(report);
    return report;
}

} // namespace saacbr
