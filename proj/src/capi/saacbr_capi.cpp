// extern-C surface over the core library. Handles own their core objects
// plus caches for every string accessor, so returned pointers stay valid
// for the handle's lifetime.

#include "saacbr.h"

#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"

using saacbr::Casebase;
using saacbr::FeatureSet;
using saacbr::ModelConfig;

struct saacbr_casebase {
    Casebase<FeatureSet> casebase;
    std::string default_features_cache;
    std::string json_cache;
};

struct saacbr_prediction {
    saacbr::Prediction prediction;
    std::string json_cache;
    std::string spikes_json_cache;
    std::string text_cache;
    std::string dot_cache[2];
};

struct saacbr_eval {
    saacbr::EvalReport report;
    std::string json_cache;
    std::string text_cache;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

saacbr_status fail(saacbr_status status, const char* message) {
    set_error(message);
    return status;
}

saacbr_status from_exception() {
    try {
        throw;
    } catch (const saacbr::IoError& e) {
        set_error(e.what());
        return SAACBR_ERROR_IO;
    } catch (const saacbr::ParseError& e) {
        set_error(e.what());
        return SAACBR_ERROR_PARSE;
    } catch (const saacbr::DataError& e) {
        set_error(e.what());
        return SAACBR_ERROR_DATA;
    } catch (const saacbr::ConfigError& e) {
        set_error(e.what());
        return SAACBR_ERROR_CONFIG;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SAACBR_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return SAACBR_ERROR_INTERNAL;
    }
}

saacbr_status make_config(const saacbr_casebase* casebase, const saacbr_options* options,
                          ModelConfig<FeatureSet>& config) {
    const saacbr::Case<FeatureSet>& def = casebase->casebase.default_argument;
    config.default_outcome = def.outcome;
    config.default_characterisation = def.characterisation;
    config.default_id = def.id;
    config.complement_outcome = casebase->casebase.outcomes.complement;
    if (options) {
        if (options->mode != SAACBR_MODE_AACBR && options->mode != SAACBR_MODE_SAACBR) {
            return fail(SAACBR_ERROR_INVALID_ARGUMENT, "unknown mode value");
        }
        config.mode =
            options->mode == SAACBR_MODE_AACBR ? saacbr::Mode::Aacbr : saacbr::Mode::Saacbr;
        config.secondary_attacks = options->secondary_attacks != 0;
    }
    return SAACBR_OK;
}

saacbr_status build_casebase_handle(saacbr::LoadResult loaded, const char* default_outcome,
                                    const char* default_features, saacbr_casebase** out) {
    saacbr::Case<FeatureSet> def = loaded.default_argument.value_or(
        saacbr::Case<FeatureSet>{"default", FeatureSet{}, "-"});
    if (default_outcome) {
        if (*default_outcome == '\0') {
            return fail(SAACBR_ERROR_INVALID_ARGUMENT, "default outcome must not be empty");
        }
        def.outcome = default_outcome;
    }
    if (default_features) def.characterisation = FeatureSet::parse(default_features);

    auto handle = std::make_unique<saacbr_casebase>();
    handle->casebase = saacbr::validate_casebase(std::move(loaded.cases), std::move(def));
    handle->default_features_cache =
        to_display(handle->casebase.default_argument.characterisation);
    *out = handle.release();
    return SAACBR_OK;
}

} // namespace

extern "C" {

const char* saacbr_version(void) { return "1.0.0"; }

const char* saacbr_status_name(saacbr_status status) {
    switch (status) {
    case SAACBR_OK: return "ok";
    case SAACBR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SAACBR_ERROR_IO: return "io error";
    case SAACBR_ERROR_PARSE: return "parse error";
    case SAACBR_ERROR_DATA: return "data error";
    case SAACBR_ERROR_CONFIG: return "config error";
    case SAACBR_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* saacbr_last_error(void) { return g_last_error.c_str(); }

void saacbr_options_init(saacbr_options* options) {
    if (!options) return;
    options->mode = SAACBR_MODE_SAACBR;
    options->secondary_attacks = 0;
}

saacbr_status saacbr_casebase_load(const char* path, const char* format,
                                   const char* default_outcome, const char* default_features,
                                   saacbr_casebase** out) {
    if (!path || !out) return fail(SAACBR_ERROR_INVALID_ARGUMENT, "path and out must be non-null");
    *out = nullptr;
    try {
        std::optional<saacbr::FileFormat> fmt;
        if (format) {
            fmt = saacbr::parse_format(format);
            if (!fmt) return fail(SAACBR_ERROR_INVALID_ARGUMENT, "format must be csv or json");
        }
        return build_casebase_handle(saacbr::load_casebase_file(path, fmt), default_outcome,
                                     default_features, out);
    } catch (...) {
        return from_exception();
    }
}

saacbr_status saacbr_casebase_parse(const char* text, const char* format,
                                    const char* default_outcome, const char* default_features,
                                    saacbr_casebase** out) {
    if (!text || !out) return fail(SAACBR_ERROR_INVALID_ARGUMENT, "text and out must be non-null");
    *out = nullptr;
    try {
        saacbr::FileFormat fmt = saacbr::FileFormat::Json;
        if (format) {
            std::optional<saacbr::FileFormat> parsed = saacbr::parse_format(format);
            if (!parsed) return fail(SAACBR_ERROR_INVALID_ARGUMENT, "format must be csv or json");
            fmt = *parsed;
        }
        return build_casebase_handle(saacbr::parse_casebase(text, fmt), default_outcome,
                                     default_features, out);
    } catch (...) {
        return from_exception();
    }
}

void saacbr_casebase_free(saacbr_casebase* casebase) { delete casebase; }

size_t saacbr_casebase_size(const saacbr_casebase* casebase) {
    return casebase ? casebase->casebase.cases.size() : 0;
}

size_t saacbr_casebase_dropped(const saacbr_casebase* casebase) {
    return casebase ? casebase->casebase.notes.size() : 0;
}

const char* saacbr_casebase_default_outcome(const saacbr_casebase* casebase) {
    return casebase ? casebase->casebase.outcomes.default_outcome.c_str() : nullptr;
}

const char* saacbr_casebase_default_features(const saacbr_casebase* casebase) {
    return casebase ? casebase->default_features_cache.c_str() : nullptr;
}

const char* saacbr_casebase_to_json(saacbr_casebase* casebase) {
    if (!casebase) return nullptr;
    if (casebase->json_cache.empty()) {
        casebase->json_cache = saacbr::serialize_casebase(casebase->casebase);
    }
    return casebase->json_cache.c_str();
}

saacbr_status saacbr_predict(const saacbr_casebase* casebase, const saacbr_options* options,
                             const char* new_features, saacbr_prediction** out) {
    if (!casebase || !new_features || !out) {
        return fail(SAACBR_ERROR_INVALID_ARGUMENT,
                    "casebase, new_features and out must be non-null");
    }
    *out = nullptr;
    try {
        ModelConfig<FeatureSet> config;
        if (saacbr_status st = make_config(casebase, options, config); st != SAACBR_OK) return st;
        auto handle = std::make_unique<saacbr_prediction>();
        handle->prediction =
            saacbr::predict(casebase->casebase, config, FeatureSet::parse(new_features));
        *out = handle.release();
        return SAACBR_OK;
    } catch (...) {
        return from_exception();
    }
}

void saacbr_prediction_free(saacbr_prediction* prediction) { delete prediction; }

const char* saacbr_prediction_outcome(const saacbr_prediction* prediction) {
    return prediction ? prediction->prediction.outcome.c_str() : nullptr;
}

int saacbr_prediction_default_accepted(const saacbr_prediction* prediction) {
    return prediction && prediction->prediction.default_accepted ? 1 : 0;
}

size_t saacbr_prediction_argument_count(const saacbr_prediction* prediction) {
    return prediction ? prediction->prediction.translated.arguments.size() : 0;
}

const char* saacbr_prediction_argument_id(const saacbr_prediction* prediction, size_t index) {
    if (!prediction || index >= prediction->prediction.translated.arguments.size()) return nullptr;
    return prediction->prediction.translated.arguments[index].id.c_str();
}

saacbr_status saacbr_prediction_argument_label(const saacbr_prediction* prediction,
                                               const char* id, saacbr_label* out) {
    if (!prediction || !id || !out) {
        return fail(SAACBR_ERROR_INVALID_ARGUMENT, "prediction, id and out must be non-null");
    }
    int index = prediction->prediction.translated.index_of(id);
    if (index < 0) {
        return fail(SAACBR_ERROR_INVALID_ARGUMENT, "no argument with the given id");
    }
    switch (prediction->prediction.grounded.labelling[static_cast<size_t>(index)]) {
    case saacbr::ArgumentLabel::In: *out = SAACBR_LABEL_IN; break;
    case saacbr::ArgumentLabel::Out: *out = SAACBR_LABEL_OUT; break;
    case saacbr::ArgumentLabel::Undecided: *out = SAACBR_LABEL_UNDECIDED; break;
    }
    return SAACBR_OK;
}

size_t saacbr_prediction_spike_count(const saacbr_prediction* prediction) {
    return prediction ? prediction->prediction.spikes.size() : 0;
}

const char* saacbr_prediction_spike_id(const saacbr_prediction* prediction, size_t index) {
    if (!prediction || index >= prediction->prediction.spikes.size()) return nullptr;
    return prediction->prediction.spikes[index].c_str();
}

const char* saacbr_prediction_to_json(saacbr_prediction* prediction) {
    if (!prediction) return nullptr;
    if (prediction->json_cache.empty()) {
        prediction->json_cache = saacbr::prediction_to_json(prediction->prediction);
    }
    return prediction->json_cache.c_str();
}

const char* saacbr_prediction_spikes_to_json(saacbr_prediction* prediction) {
    if (!prediction) return nullptr;
    if (prediction->spikes_json_cache.empty()) {
        prediction->spikes_json_cache = saacbr::spikes_to_json(prediction->prediction);
    }
    return prediction->spikes_json_cache.c_str();
}

const char* saacbr_prediction_to_text(saacbr_prediction* prediction) {
    if (!prediction) return nullptr;
    if (prediction->text_cache.empty()) {
        prediction->text_cache = saacbr::prediction_to_text(prediction->prediction);
    }
    return prediction->text_cache.c_str();
}

const char* saacbr_prediction_export_dot(saacbr_prediction* prediction, saacbr_stage stage) {
    if (!prediction) return nullptr;
    if (stage != SAACBR_STAGE_BIPOLAR && stage != SAACBR_STAGE_TRANSLATED) return nullptr;
    std::string& cache = prediction->dot_cache[stage == SAACBR_STAGE_BIPOLAR ? 0 : 1];
    if (cache.empty()) {
        cache = stage == SAACBR_STAGE_BIPOLAR
                    ? saacbr::export_dot(prediction->prediction.bipolar)
                    : saacbr::export_dot(prediction->prediction.translated);
    }
    return cache.c_str();
}

saacbr_status saacbr_evaluate_loo(const saacbr_casebase* casebase, const saacbr_options* options,
                                  saacbr_eval** out) {
    if (!casebase || !out) {
        return fail(SAACBR_ERROR_INVALID_ARGUMENT, "casebase and out must be non-null");
    }
    *out = nullptr;
    try {
        ModelConfig<FeatureSet> config;
        if (saacbr_status st = make_config(casebase, options, config); st != SAACBR_OK) return st;
        auto handle = std::make_unique<saacbr_eval>();
        handle->report = saacbr::evaluate_loo(casebase->casebase, config);
        *out = handle.release();
        return SAACBR_OK;
    } catch (...) {
        return from_exception();
    }
}

saacbr_status saacbr_evaluate_split(const saacbr_casebase* casebase, const saacbr_options* options,
                                    double train_ratio, uint32_t seed, saacbr_eval** out) {
    if (!casebase || !out) {
        return fail(SAACBR_ERROR_INVALID_ARGUMENT, "casebase and out must be non-null");
    }
    *out = nullptr;
    try {
        ModelConfig<FeatureSet> config;
        if (saacbr_status st = make_config(casebase, options, config); st != SAACBR_OK) return st;
        auto handle = std::make_unique<saacbr_eval>();
        handle->report = saacbr::evaluate_split(casebase->casebase, config, train_ratio, seed);
        *out = handle.release();
        return SAACBR_OK;
    } catch (...) {
        return from_exception();
    }
}

void saacbr_eval_free(saacbr_eval* eval) { delete eval; }

size_t saacbr_eval_total(const saacbr_eval* eval) { return eval ? eval->report.total : 0; }

size_t saacbr_eval_correct(const saacbr_eval* eval) { return eval ? eval->report.correct : 0; }

double saacbr_eval_accuracy(const saacbr_eval* eval) { return eval ? eval->report.accuracy : 0.0; }

const char* saacbr_eval_to_json(saacbr_eval* eval) {
    if (!eval) return nullptr;
    if (eval->json_cache.empty()) eval->json_cache = saacbr::eval_to_json(eval->report);
    return eval->json_cache.c_str();
}

const char* saacbr_eval_to_text(saacbr_eval* eval) {
    if (!eval) return nullptr;
    if (eval->text_cache.empty()) eval->text_cache = saacbr::eval_to_text(eval->report);
    return eval->text_cache.c_str();
}

} // extern "C"
