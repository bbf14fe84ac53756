#include "core/feature_set.hpp"

#include <algorithm>

namespace saacbr {

const char* to_string(OrderRelation r) {
    switch (r) {
    case OrderRelation::MoreExceptional: return "more_exceptional";
    case OrderRelation::LessExceptional: return "less_exceptional";
    case OrderRelation::Equal: return "equal";
    case OrderRelation::Incomparable: return "incomparable";
    }
    return "?";
}

FeatureSet::FeatureSet(std::vector<std::string> features) : features_(std::move(features)) {
    std::sort(features_.begin(), features_.end());
    features_.erase(std::unique(features_.begin(), features_.end()), features_.end());
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

FeatureSet FeatureSet::parse(std::string_view text) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = trim(text.substr(pos, comma - pos));
        if (!item.empty()) names.emplace_back(item);
        pos = comma + 1;
    }
    return FeatureSet(std::move(names));
}

bool FeatureSet::contains_all(const FeatureSet& other) const {
    return std::includes(features_.begin(), features_.end(),
                         other.features_.begin(), other.features_.end());
}

OrderRelation compare(const FeatureSet& a, const FeatureSet& b) {
    if (a == b) return OrderRelation::Equal;
    if (a.contains_all(b)) return OrderRelation::MoreExceptional;
    if (b.contains_all(a)) return OrderRelation::LessExceptional;
    return OrderRelation::Incomparable;
}

bool is_irrelevant(const FeatureSet& x_new, const FeatureSet& x_past) {
    return !x_new.contains_all(x_past);
}

std::string to_display(const FeatureSet& fs) {
    std::string out = "{";
    bool first = true;
    for (const std::string& f : fs.features()) {
        if (!first) out += ',';
        out += f;
        first = false;
    }
    out += '}';
    return out;
}

} // namespace saacbr
