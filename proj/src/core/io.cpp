#include "core/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace saacbr {

namespace {

using nlohmann::ordered_json;

std::string trim_copy(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return std::string(s);
}

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) comma = line.size();
        cells.push_back(trim_copy(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return cells;
}

LoadResult parse_csv(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line = trim_copy(text.substr(pos, nl - pos));
        if (!line.empty()) lines.push_back(std::move(line));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("csv: no header row");

    std::vector<std::string> header = split_line(lines[0]);
    int label_column = -1;
    std::vector<std::string> feature_names;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "label") {
            if (label_column >= 0) throw ParseError("csv: more than one \"label\" column");
            label_column = static_cast<int>(i);
        } else {
            if (header[i].empty()) throw ParseError("csv: empty feature column name");
            feature_names.push_back(header[i]);
        }
    }
    if (label_column < 0) throw ParseError("csv: no \"label\" column in header");
    {
        std::vector<std::string> sorted_names = feature_names;
        std::sort(sorted_names.begin(), sorted_names.end());
        if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end()) {
            throw ParseError("csv: duplicate feature column name");
        }
    }

    LoadResult result;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        std::vector<std::string> cells = split_line(lines[row]);
        if (cells.size() != header.size()) {
            throw ParseError("csv: row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        std::vector<std::string> features;
        std::size_t feature_idx = 0;
        std::string outcome;
        for (std::size_t col = 0; col < cells.size(); ++col) {
            if (static_cast<int>(col) == label_column) {
                outcome = cells[col];
                continue;
            }
            if (cells[col] == "1") {
                features.push_back(feature_names[feature_idx]);
            } else if (cells[col] != "0") {
                throw ParseError("csv: row " + std::to_string(row) + " column \"" +
                                 header[col] + "\": expected 0 or 1, got \"" + cells[col] + "\"");
            }
            ++feature_idx;
        }
        if (outcome.empty()) {
            throw ParseError("csv: row " + std::to_string(row) + " has an empty label");
        }
        result.cases.push_back(Case<FeatureSet>{"R" + std::to_string(row),
                                                FeatureSet(std::move(features)), outcome});
    }
    result.feature_universe = std::move(feature_names);
    std::sort(result.feature_universe.begin(), result.feature_universe.end());
    return result;
}

FeatureSet features_from_json(const ordered_json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError("json: " + where + ".features must be an array");
    std::vector<std::string> names;
    for (const auto& item : value) {
        if (!item.is_string()) {
            throw ParseError("json: " + where + ".features must contain strings");
        }
        names.push_back(item.get<std::string>());
    }
    return FeatureSet(std::move(names));
}

std::string outcome_from_json(const ordered_json& object, const std::string& where) {
    if (!object.contains("outcome") || !object.at("outcome").is_string()) {
        throw ParseError("json: " + where + " needs a string \"outcome\"");
    }
    std::string outcome = object.at("outcome").get<std::string>();
    if (outcome.empty()) throw ParseError("json: " + where + ".outcome is empty");
    return outcome;
}

LoadResult parse_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("json: top level must be an object");
    if (!doc.contains("cases") || !doc.at("cases").is_array()) {
        throw ParseError("json: missing \"cases\" array");
    }

    LoadResult result;
    if (doc.contains("default")) {
        const ordered_json& d = doc.at("default");
        if (!d.is_object()) throw ParseError("json: \"default\" must be an object");
        Case<FeatureSet> def;
        def.id = d.value("id", std::string("default"));
        def.characterisation =
            d.contains("features") ? features_from_json(d.at("features"), "default") : FeatureSet{};
        def.outcome = outcome_from_json(d, "default");
        result.default_argument = std::move(def);
    }

    std::size_t index = 0;
    for (const auto& entry : doc.at("cases")) {
        std::string where = "cases[" + std::to_string(index) + "]";
        if (!entry.is_object()) throw ParseError("json: " + where + " must be an object");
        if (!entry.contains("id") || !entry.at("id").is_string()) {
            throw ParseError("json: " + where + " needs a string \"id\"");
        }
        Case<FeatureSet> c;
        c.id = entry.at("id").get<std::string>();
        if (!entry.contains("features")) {
            throw ParseError("json: " + where + " needs a \"features\" array");
        }
        c.characterisation = features_from_json(entry.at("features"), where);
        c.outcome = outcome_from_json(entry, where);
        result.cases.push_back(std::move(c));
        ++index;
    }

    std::set<std::string> universe;
    if (result.default_argument) {
        const auto& features = result.default_argument->characterisation.features();
        universe.insert(features.begin(), features.end());
    }
    for (const Case<FeatureSet>& c : result.cases) {
        universe.insert(c.characterisation.features().begin(),
                        c.characterisation.features().end());
    }
    result.feature_universe.assign(universe.begin(), universe.end());
    return result;
}

std::string escape_dot(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string node_label(const Argument& a) {
    return a.id + ": " + a.characterisation + " / " + a.outcome;
}

constexpr int kSupportRank = 5;

int kind_rank(AttackKind k) { return static_cast<int>(k); }

const char* edge_attributes(int rank) {
    switch (rank) {
    case 0: return "[style=solid]";                // direct attack
    case 1: return "[style=solid]";                // equal attack
    case 2: return "[style=solid, color=grey50]";  // irrelevance attack
    case 3: return "[style=dashed]";               // supported attack
    case 4: return "[style=dotted]";               // secondary attack
    default: return "[style=bold]";                // support
    }
}

struct DotEdge {
    std::string source;
    std::string target;
    int rank = 0;

    friend auto operator<=>(const DotEdge&, const DotEdge&) = default;
};

std::string render_dot(const std::vector<Argument>& arguments, std::vector<DotEdge> edges) {
    std::vector<const Argument*> nodes;
    nodes.reserve(arguments.size());
    for (const Argument& a : arguments) nodes.push_back(&a);
    std::sort(nodes.begin(), nodes.end(),
              [](const Argument* a, const Argument* b) { return a->id < b->id; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::string out = "digraph saacbr {\n  node [shape=box];\n";
    for (const Argument* a : nodes) {
        out += "  \"" + escape_dot(a->id) + "\" [label=\"" + escape_dot(node_label(*a)) + "\"];\n";
    }
    for (const DotEdge& e : edges) {
        out += "  \"" + escape_dot(e.source) + "\" -> \"" + escape_dot(e.target) + "\" " +
               edge_attributes(e.rank) + ";\n";
    }
    out += "}\n";
    return out;
}

ordered_json case_to_json(const Case<FeatureSet>& c, bool with_id = true) {
    ordered_json j = ordered_json::object();
    if (with_id) j["id"] = c.id;
    j["features"] = c.characterisation.features();
    j["outcome"] = c.outcome;
    return j;
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

std::string join_ids(const std::vector<std::string>& ids) {
    if (ids.empty()) return "(none)";
    std::string out;
    for (const std::string& id : ids) {
        if (!out.empty()) out += ", ";
        out += id;
    }
    return out;
}

std::vector<std::string> ids_with_label(const Prediction& p, ArgumentLabel label) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < p.translated.arguments.size(); ++i) {
        if (p.grounded.labelling[i] == label) ids.push_back(p.translated.arguments[i].id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

FileFormat format_from_path(std::string_view path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return FileFormat::Csv;
    return FileFormat::Json;
}

std::optional<FileFormat> parse_format(std::string_view text) {
    if (text == "csv") return FileFormat::Csv;
    if (text == "json") return FileFormat::Json;
    return std::nullopt;
}

std::optional<Stage> parse_stage(std::string_view text) {
    if (text == "bipolar") return Stage::Bipolar;
    if (text == "translated") return Stage::Translated;
    return std::nullopt;
}

LoadResult parse_casebase(std::string_view text, FileFormat format) {
    return format == FileFormat::Csv ? parse_csv(text) : parse_json(text);
}

LoadResult load_casebase_file(const std::string& path, std::optional<FileFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read \"" + path + "\"");
    return parse_casebase(buffer.str(), format ? *format : format_from_path(path));
}

std::string serialize_casebase(const Casebase<FeatureSet>& casebase) {
    ordered_json doc = ordered_json::object();
    doc["default"] = case_to_json(casebase.default_argument);
    std::vector<const Case<FeatureSet>*> sorted;
    for (const Case<FeatureSet>& c : casebase.cases) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(),
              [](const Case<FeatureSet>* a, const Case<FeatureSet>* b) { return a->id < b->id; });
    doc["cases"] = ordered_json::array();
    for (const Case<FeatureSet>* c : sorted) doc["cases"].push_back(case_to_json(*c));
    return doc.dump(2) + "\n";
}

std::string export_dot(const BipolarFramework& baf) {
    std::vector<DotEdge> edges;
    for (const AttackEdge& e : baf.attacks) {
        edges.push_back(DotEdge{baf.arguments[static_cast<std::size_t>(e.source)].id,
                                baf.arguments[static_cast<std::size_t>(e.target)].id,
                                kind_rank(e.kind)});
    }
    for (const SupportEdge& e : baf.supports) {
        edges.push_back(DotEdge{baf.arguments[static_cast<std::size_t>(e.source)].id,
                                baf.arguments[static_cast<std::size_t>(e.target)].id,
                                kSupportRank});
    }
    return render_dot(baf.arguments, std::move(edges));
}

std::string export_dot(const AttackFramework& af) {
    std::vector<DotEdge> edges;
    for (const AttackEdge& e : af.attacks) {
        edges.push_back(DotEdge{af.arguments[static_cast<std::size_t>(e.source)].id,
                                af.arguments[static_cast<std::size_t>(e.target)].id,
                                kind_rank(e.kind)});
    }
    return render_dot(af.arguments, std::move(edges));
}

namespace {

ordered_json attack_edges_json(const AttackFramework& af) {
    std::vector<std::tuple<std::string, std::string, int>> rows;
    for (const AttackEdge& e : af.attacks) {
        rows.emplace_back(af.arguments[static_cast<std::size_t>(e.source)].id,
                          af.arguments[static_cast<std::size_t>(e.target)].id,
                          kind_rank(e.kind));
    }
    std::sort(rows.begin(), rows.end());
    ordered_json arr = ordered_json::array();
    for (const auto& [source, target, rank] : rows) {
        arr.push_back({{"source", source},
                       {"target", target},
                       {"kind", to_string(static_cast<AttackKind>(rank))}});
    }
    return arr;
}

} // namespace

std::string prediction_to_json(const Prediction& p) {
    ordered_json doc = ordered_json::object();
    doc["mode"] = to_string(p.mode);
    doc["secondary_attacks"] = p.secondary_attacks;
    doc["outcome"] = p.outcome;
    doc["default_accepted"] = p.default_accepted;
    doc["iterations"] = p.grounded.iterations;
    doc["in"] = ids_with_label(p, ArgumentLabel::In);
    doc["out"] = ids_with_label(p, ArgumentLabel::Out);
    doc["undecided"] = ids_with_label(p, ArgumentLabel::Undecided);

    std::vector<const Argument*> nodes;
    for (const Argument& a : p.translated.arguments) nodes.push_back(&a);
    std::sort(nodes.begin(), nodes.end(),
              [](const Argument* a, const Argument* b) { return a->id < b->id; });
    doc["arguments"] = ordered_json::array();
    for (const Argument* a : nodes) {
        doc["arguments"].push_back({{"id", a->id},
                                    {"characterisation", a->characterisation},
                                    {"outcome", a->outcome},
                                    {"role", to_string(a->role)}});
    }

    doc["attacks"] = attack_edges_json(p.translated);
    std::vector<std::pair<std::string, std::string>> supports;
    for (const SupportEdge& e : p.bipolar.supports) {
        supports.emplace_back(p.bipolar.arguments[static_cast<std::size_t>(e.source)].id,
                              p.bipolar.arguments[static_cast<std::size_t>(e.target)].id);
    }
    std::sort(supports.begin(), supports.end());
    doc["supports"] = ordered_json::array();
    for (const auto& [source, target] : supports) {
        doc["supports"].push_back({{"source", source}, {"target", target}});
    }
    doc["spikes"] = p.spikes;
    return doc.dump(2) + "\n";
}

std::string spikes_to_json(const Prediction& p) {
    ordered_json doc = ordered_json::object();
    doc["mode"] = to_string(p.mode);
    doc["spikes"] = p.spikes;
    return doc.dump(2) + "\n";
}

std::string prediction_to_text(const Prediction& p) {
    std::string out;
    out += "outcome: " + p.outcome + "\n";
    out += std::string("default: ") + (p.default_accepted ? "accepted" : "rejected") + "\n";
    out += "in: " + join_ids(ids_with_label(p, ArgumentLabel::In)) + "\n";
    out += "out: " + join_ids(ids_with_label(p, ArgumentLabel::Out)) + "\n";
    out += "undecided: " + join_ids(ids_with_label(p, ArgumentLabel::Undecided)) + "\n";
    out += "spikes: " + join_ids(p.spikes) + "\n";
    return out;
}

std::string eval_to_json(const EvalReport& report) {
    ordered_json doc = ordered_json::object();
    doc["protocol"] = report.protocol;
    doc["mode"] = to_string(report.mode);
    doc["secondary_attacks"] = report.secondary_attacks;
    if (report.protocol == "split") {
        doc["train_ratio"] = report.train_ratio;
        doc["seed"] = report.seed;
    }
    doc["rows"] = ordered_json::array();
    for (const CaseResult& row : report.rows) {
        doc["rows"].push_back({{"id", row.id},
                               {"actual", row.actual},
                               {"predicted", row.predicted},
                               {"correct", row.correct},
                               {"spikes", row.spike_count}});
    }
    doc["total"] = report.total;
    doc["correct"] = report.correct;
    doc["accuracy"] = report.accuracy;
    doc["confusion"] = {{"tp", report.true_positive},
                        {"tn", report.true_negative},
                        {"fp", report.false_positive},
                        {"fn", report.false_negative}};
    doc["spike_total"] = report.spike_total;
    return doc.dump(2) + "\n";
}

std::string eval_to_text(const EvalReport& report) {
    std::string out = "protocol: " + report.protocol;
    if (report.protocol == "split") {
        out += " (train ratio " + format_double(report.train_ratio) + ", seed " +
               std::to_string(report.seed) + ")";
    }
    out += "\nmode: " + std::string(to_string(report.mode)) + "\n";
    for (const CaseResult& row : report.rows) {
        out += "case " + row.id + ": actual=" + row.actual + " predicted=" + row.predicted +
               (row.correct ? " right" : " wrong") + " spikes=" +
               std::to_string(row.spike_count) + "\n";
    }
    out += "correct " + std::to_string(report.correct) + "/" + std::to_string(report.total) +
           " accuracy " + format_double(report.accuracy) + "\n";
    out += "confusion: tp=" + std::to_string(report.true_positive) +
           " tn=" + std::to_string(report.true_negative) +
           " fp=" + std::to_string(report.false_positive) +
           " fn=" + std::to_string(report.false_negative) + "\n";
    out += "spikes total: " + std::to_string(report.spike_total) + "\n";
    return out;
}

} // namespace saacbr
