/*
 * saacbr - case-based binary classification over bipolar argumentation.
 *
 * C interface to the classifier. All objects are opaque handles created and
 * destroyed through this API; all functions return a status code, with a
 * human-readable detail message available from saacbr_last_error() after a
 * failure. Strings returned by accessor functions are owned by the handle
 * they were read from and stay valid until that handle is freed.
 */

#ifndef SAACBR_H
#define SAACBR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SAACBR_BUILD)
#define SAACBR_API __declspec(dllexport)
#else
#define SAACBR_API __declspec(dllimport)
#endif
#else
#define SAACBR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum saacbr_status {
    SAACBR_OK = 0,
    SAACBR_ERROR_INVALID_ARGUMENT = 1, /* null handle or malformed parameter */
    SAACBR_ERROR_IO = 2,               /* file not readable */
    SAACBR_ERROR_PARSE = 3,            /* malformed CSV or JSON input */
    SAACBR_ERROR_DATA = 4,             /* casebase invariant violated */
    SAACBR_ERROR_CONFIG = 5,           /* inconsistent model options */
    SAACBR_ERROR_INTERNAL = 6
} saacbr_status;

typedef enum saacbr_mode {
    SAACBR_MODE_AACBR = 0,    /* attacks-only baseline */
    SAACBR_MODE_SAACBR = 1    /* attacks and supports */
} saacbr_mode;

typedef enum saacbr_label {
    SAACBR_LABEL_IN = 0,
    SAACBR_LABEL_OUT = 1,
    SAACBR_LABEL_UNDECIDED = 2
} saacbr_label;

typedef enum saacbr_stage {
    SAACBR_STAGE_BIPOLAR = 0,   /* mined framework, attacks and supports */
    SAACBR_STAGE_TRANSLATED = 1 /* attack-only framework after translation */
} saacbr_stage;

typedef struct saacbr_casebase saacbr_casebase;
typedef struct saacbr_prediction saacbr_prediction;
typedef struct saacbr_eval saacbr_eval;

typedef struct saacbr_options {
    saacbr_mode mode;
    int secondary_attacks; /* nonzero enables; needs SAACBR_MODE_SAACBR */
} saacbr_options;

SAACBR_API const char* saacbr_version(void);
SAACBR_API const char* saacbr_status_name(saacbr_status status);

/* Detail message of the most recent failure on this thread ("" if none). */
SAACBR_API const char* saacbr_last_error(void);

/* Fills in the defaults: saacbr mode, no secondary attacks. */
SAACBR_API void saacbr_options_init(saacbr_options* options);

/*
 * Loading. format is "csv", "json", or NULL (by file extension for
 * saacbr_casebase_load, JSON for saacbr_casebase_parse). default_outcome
 * and default_features override the document's default argument; pass NULL
 * to keep the document's values, falling back to outcome "-" with no
 * features. default_features is a comma-separated list such as "A,B".
 */
SAACBR_API saacbr_status saacbr_casebase_load(const char* path, const char* format,
                                              const char* default_outcome,
                                              const char* default_features,
                                              saacbr_casebase** out);
SAACBR_API saacbr_status saacbr_casebase_parse(const char* text, const char* format,
                                               const char* default_outcome,
                                               const char* default_features,
                                               saacbr_casebase** out);
SAACBR_API void saacbr_casebase_free(saacbr_casebase* casebase);

SAACBR_API size_t saacbr_casebase_size(const saacbr_casebase* casebase);
/* Number of input cases dropped as duplicates or merged into the default. */
SAACBR_API size_t saacbr_casebase_dropped(const saacbr_casebase* casebase);
SAACBR_API const char* saacbr_casebase_default_outcome(const saacbr_casebase* casebase);
/* Display form of the default argument's features, e.g. "{}" or "{A,B}". */
SAACBR_API const char* saacbr_casebase_default_features(const saacbr_casebase* casebase);
/* Canonical JSON of the validated casebase; round-trips through parse. */
SAACBR_API const char* saacbr_casebase_to_json(saacbr_casebase* casebase);

/*
 * Prediction. new_features is the comma-separated feature list of the new
 * case ("" for no features). The prediction owns the full explanation:
 * outcome, grounded labelling, spike list, and both framework exports.
 */
SAACBR_API saacbr_status saacbr_predict(const saacbr_casebase* casebase,
                                        const saacbr_options* options,
                                        const char* new_features,
                                        saacbr_prediction** out);
SAACBR_API void saacbr_prediction_free(saacbr_prediction* prediction);

SAACBR_API const char* saacbr_prediction_outcome(const saacbr_prediction* prediction);
SAACBR_API int saacbr_prediction_default_accepted(const saacbr_prediction* prediction);

SAACBR_API size_t saacbr_prediction_argument_count(const saacbr_prediction* prediction);
SAACBR_API const char* saacbr_prediction_argument_id(const saacbr_prediction* prediction,
                                                     size_t index);
SAACBR_API saacbr_status saacbr_prediction_argument_label(const saacbr_prediction* prediction,
                                                          const char* id, saacbr_label* out);

SAACBR_API size_t saacbr_prediction_spike_count(const saacbr_prediction* prediction);
SAACBR_API const char* saacbr_prediction_spike_id(const saacbr_prediction* prediction,
                                                  size_t index);

/* Structured JSON explanation; byte-stable for identical inputs. */
SAACBR_API const char* saacbr_prediction_to_json(saacbr_prediction* prediction);
/* JSON object holding just the mode and the spike list. */
SAACBR_API const char* saacbr_prediction_spikes_to_json(saacbr_prediction* prediction);
/* Plain-text summary (outcome, labelling, spikes). */
SAACBR_API const char* saacbr_prediction_to_text(saacbr_prediction* prediction);
/* DOT graph of the requested stage; byte-stable for identical inputs. */
SAACBR_API const char* saacbr_prediction_export_dot(saacbr_prediction* prediction,
                                                    saacbr_stage stage);

/*
 * Evaluation. Leave-one-out predicts each case from the rest; the split
 * variant holds out a seeded random test fraction (train_ratio in (0,1)).
 */
SAACBR_API saacbr_status saacbr_evaluate_loo(const saacbr_casebase* casebase,
                                             const saacbr_options* options, saacbr_eval** out);
SAACBR_API saacbr_status saacbr_evaluate_split(const saacbr_casebase* casebase,
                                               const saacbr_options* options, double train_ratio,
                                               uint32_t seed, saacbr_eval** out);
SAACBR_API void saacbr_eval_free(saacbr_eval* eval);

SAACBR_API size_t saacbr_eval_total(const saacbr_eval* eval);
SAACBR_API size_t saacbr_eval_correct(const saacbr_eval* eval);
SAACBR_API double saacbr_eval_accuracy(const saacbr_eval* eval);
SAACBR_API const char* saacbr_eval_to_json(saacbr_eval* eval);
SAACBR_API const char* saacbr_eval_to_text(saacbr_eval* eval);

#ifdef __cplusplus
}
#endif

#endif /* SAACBR_H */
