// saacbr command line tool. Talks to the classifier exclusively through the
// C API in saacbr.h. Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "saacbr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonArgs {
    std::string casebase_path;
    std::string format;          // "", "csv", "json"
    std::string default_outcome; // "" keeps the file's default
    std::string default_features;
    CLI::Option* default_features_opt = nullptr; // unset vs. explicit ""
    std::string mode = "saacbr";
    bool secondary_attacks = false;
    bool json = false;

    bool default_features_set() const {
        return default_features_opt && default_features_opt->count() > 0;
    }
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--casebase", args.casebase_path, "casebase file (CSV or JSON)")
        ->required();
    cmd->add_option("--format", args.format, "casebase format: csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--default-outcome", args.default_outcome,
                    "outcome token of the default argument (default: the file's, else \"-\")");
    args.default_features_opt =
        cmd->add_option("--default-features", args.default_features,
                        "features of the default argument, comma-separated (default: none)");
    cmd->add_option("--mode", args.mode, "aacbr (attacks only) or saacbr (default)")
        ->check(CLI::IsMember({"aacbr", "saacbr"}));
    cmd->add_flag("--secondary-attacks", args.secondary_attacks,
                  "also add secondary attacks during translation (saacbr mode only)");
    cmd->add_flag("--json", args.json, "emit structured JSON instead of plain text");
}

int exit_code_for(saacbr_status status) {
    switch (status) {
    case SAACBR_OK:
        return kExitOk;
    case SAACBR_ERROR_INVALID_ARGUMENT:
    case SAACBR_ERROR_CONFIG:
        return kExitUsage;
    default:
        return kExitData;
    }
}

int report_failure(saacbr_status status) {
    std::cerr << "error (" << saacbr_status_name(status) << "): " << saacbr_last_error() << "\n";
    return exit_code_for(status);
}

using CasebaseHandle = std::unique_ptr<saacbr_casebase, decltype(&saacbr_casebase_free)>;
using PredictionHandle = std::unique_ptr<saacbr_prediction, decltype(&saacbr_prediction_free)>;
using EvalHandle = std::unique_ptr<saacbr_eval, decltype(&saacbr_eval_free)>;

int load_casebase(const CommonArgs& args, CasebaseHandle& handle) {
    saacbr_casebase* raw = nullptr;
    saacbr_status status = saacbr_casebase_load(
        args.casebase_path.c_str(), args.format.empty() ? nullptr : args.format.c_str(),
        args.default_outcome.empty() ? nullptr : args.default_outcome.c_str(),
        args.default_features_set() ? args.default_features.c_str() : nullptr, &raw);
    if (status != SAACBR_OK) return report_failure(status);
    handle.reset(raw);
    if (size_t dropped = saacbr_casebase_dropped(raw); dropped > 0) {
        std::cerr << "note: " << dropped << " duplicate case(s) dropped or merged\n";
    }
    return kExitOk;
}

saacbr_options options_from(const CommonArgs& args) {
    saacbr_options options;
    saacbr_options_init(&options);
    options.mode = args.mode == "aacbr" ? SAACBR_MODE_AACBR : SAACBR_MODE_SAACBR;
    options.secondary_attacks = args.secondary_attacks ? 1 : 0;
    return options;
}

int make_prediction(const CommonArgs& args, const std::string& new_features,
                    CasebaseHandle& casebase, PredictionHandle& prediction) {
    if (int code = load_casebase(args, casebase); code != kExitOk) return code;
    saacbr_options options = options_from(args);
    saacbr_prediction* raw = nullptr;
    saacbr_status status =
        saacbr_predict(casebase.get(), &options, new_features.c_str(), &raw);
    if (status != SAACBR_OK) return report_failure(status);
    prediction.reset(raw);
    return kExitOk;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error (io error): cannot write \"" << path << "\"\n";
        return kExitData;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"case-based binary classifier over bipolar argumentation frameworks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", saacbr_version());
    app.failure_message(CLI::FailureMessage::simple);

    CommonArgs predict_args;
    std::string predict_new;
    CLI::App* predict_cmd = app.add_subcommand("predict", "classify a new case");
    add_common_options(predict_cmd, predict_args);
    predict_cmd->add_option("--new", predict_new, "features of the new case, comma-separated")
        ->required();

    CommonArgs spikes_args;
    std::string spikes_new;
    CLI::App* spikes_cmd =
        app.add_subcommand("spikes", "list casebase cases with no path to the default argument");
    add_common_options(spikes_cmd, spikes_args);
    spikes_cmd->add_option("--new", spikes_new, "features of the new case, comma-separated")
        ->required();

    CommonArgs eval_args;
    bool eval_loo = false;
    double eval_split_ratio = 0.0;
    unsigned eval_seed = 0;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "score the model on its own casebase");
    add_common_options(eval_cmd, eval_args);
    CLI::Option* loo_opt = eval_cmd->add_flag("--loo", eval_loo, "leave-one-out (default)");
    CLI::Option* split_opt =
        eval_cmd->add_option("--split", eval_split_ratio, "train fraction in (0,1)")
            ->excludes(loo_opt);
    eval_cmd->add_option("--seed", eval_seed, "split shuffle seed (default 0)")->needs(split_opt);

    CommonArgs export_args;
    std::string export_new;
    std::string export_stage;
    std::string export_output = "-";
    CLI::App* export_cmd = app.add_subcommand("export", "write the framework as a DOT graph");
    add_common_options(export_cmd, export_args);
    export_cmd->add_option("--new", export_new, "features of the new case, comma-separated")
        ->required();
    export_cmd->add_option("--stage", export_stage, "bipolar or translated")
        ->required()
        ->check(CLI::IsMember({"bipolar", "translated"}));
    export_cmd->add_option("-o,--output", export_output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (predict_cmd->parsed()) {
        CasebaseHandle casebase(nullptr, &saacbr_casebase_free);
        PredictionHandle prediction(nullptr, &saacbr_prediction_free);
        if (int code = make_prediction(predict_args, predict_new, casebase, prediction);
            code != kExitOk) {
            return code;
        }
        std::cout << (predict_args.json ? saacbr_prediction_to_json(prediction.get())
                                        : saacbr_prediction_to_text(prediction.get()));
        return kExitOk;
    }

    if (spikes_cmd->parsed()) {
        CasebaseHandle casebase(nullptr, &saacbr_casebase_free);
        PredictionHandle prediction(nullptr, &saacbr_prediction_free);
        if (int code = make_prediction(spikes_args, spikes_new, casebase, prediction);
            code != kExitOk) {
            return code;
        }
        if (std::string(saacbr_casebase_default_features(casebase.get())) != "{}") {
            std::cerr << "note: the default argument has features, so it may not be the least "
                         "element; spike freeness is not guaranteed\n";
        }
        if (spikes_args.json) {
            std::cout << saacbr_prediction_spikes_to_json(prediction.get());
        } else {
            for (size_t i = 0; i < saacbr_prediction_spike_count(prediction.get()); ++i) {
                std::cout << saacbr_prediction_spike_id(prediction.get(), i) << "\n";
            }
        }
        return kExitOk;
    }

    if (eval_cmd->parsed()) {
        CasebaseHandle casebase(nullptr, &saacbr_casebase_free);
        if (int code = load_casebase(eval_args, casebase); code != kExitOk) return code;
        saacbr_options options = options_from(eval_args);
        saacbr_eval* raw = nullptr;
        saacbr_status status =
            split_opt->count() > 0
                ? saacbr_evaluate_split(casebase.get(), &options, eval_split_ratio, eval_seed, &raw)
                : saacbr_evaluate_loo(casebase.get(), &options, &raw);
        if (status != SAACBR_OK) return report_failure(status);
        EvalHandle eval(raw, &saacbr_eval_free);
        std::cout << (eval_args.json ? saacbr_eval_to_json(eval.get())
                                     : saacbr_eval_to_text(eval.get()));
        return kExitOk;
    }

    // export
    CasebaseHandle casebase(nullptr, &saacbr_casebase_free);
    PredictionHandle prediction(nullptr, &saacbr_prediction_free);
    if (int code = make_prediction(export_args, export_new, casebase, prediction);
        code != kExitOk) {
        return code;
    }
    const char* dot = saacbr_prediction_export_dot(
        prediction.get(),
        export_stage == "bipolar" ? SAACBR_STAGE_BIPOLAR : SAACBR_STAGE_TRANSLATED);
    return write_output(export_output, dot);
}
