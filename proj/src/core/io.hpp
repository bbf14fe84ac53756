#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/casebase.hpp"
#include "core/classifier.hpp"
#include "core/feature_set.hpp"
#include "core/framework.hpp"

namespace saacbr {

enum class FileFormat { Csv, Json };

// Picks a format from a file name: .csv for CSV, anything else JSON.
FileFormat format_from_path(std::string_view path);
std::optional<FileFormat> parse_format(std::string_view text);

// Raw load result, before validation. JSON documents may carry their own
// default argument; CSV files never do.
struct LoadResult {
    std::vector<Case<FeatureSet>> cases;
    std::optional<Case<FeatureSet>> default_argument;
    std::vector<std::string> feature_universe; // CSV header, or union over JSON cases
};

// CSV: a header of feature column names plus one "label" column, cells 0/1,
// ids generated as R1, R2, ... in row order.
// JSON: {"default": {"id"?, "features", "outcome"}, "cases": [{"id",
// "features", "outcome"}, ...]} with "default" optional.
LoadResult parse_casebase(std::string_view text, FileFormat format);
LoadResult load_casebase_file(const std::string& path, std::optional<FileFormat> format = {});

// Canonical JSON rendering of a validated casebase: cases sorted by id,
// features sorted, two-space indentation, trailing newline. Loading the
// output reproduces the casebase exactly.
std::string serialize_casebase(const Casebase<FeatureSet>& casebase);

enum class Stage { Bipolar, Translated };
std::optional<Stage> parse_stage(std::string_view text);

// DOT export. Nodes are labelled "id: {features} / outcome" and sorted by
// id; edges are sorted by source, target, kind. Attacks are solid,
// irrelevance attacks solid and grey, supports bold, supported attacks
// dashed, secondary attacks dotted. Output is byte-stable.
std::string export_dot(const BipolarFramework& baf);
std::string export_dot(const AttackFramework& af);

// Structured renderings used by --json output. All deterministic.
std::string prediction_to_json(const Prediction& prediction);
std::string spikes_to_json(const Prediction& prediction);
std::string prediction_to_text(const Prediction& prediction);
std::string eval_to_json(const EvalReport& report);
std::string eval_to_text(const EvalReport& report);

} // namespace saacbr
