#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "core/order.hpp"

namespace saacbr {

// Reference characterisation: a finite set of feature names ordered by
// strict superset. A case is more exceptional than another when its
// features strictly contain the other's.
class FeatureSet {
public:
    FeatureSet() = default;
    explicit FeatureSet(std::vector<std::string> features);

    // Parses a comma-separated feature list ("A, B,C"). Blank entries are
    // dropped, so "" denotes the empty set.
    static FeatureSet parse(std::string_view text);

    const std::vector<std::string>& features() const { return features_; }
    bool empty() const { return features_.empty(); }
    std::size_t size() const { return features_.size(); }

    // True iff this set contains every feature of other (superset or equal).
    bool contains_all(const FeatureSet& other) const;

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
    friend auto operator<=>(const FeatureSet&, const FeatureSet&) = default;

private:
    std::vector<std::string> features_; // sorted, unique
};

OrderRelation compare(const FeatureSet& a, const FeatureSet& b);

// Def. 1 irrelevance for feature sets: a past case is irrelevant to the new
// case unless the new case's features contain all of its features.
bool is_irrelevant(const FeatureSet& x_new, const FeatureSet& x_past);

// Renders as "{A,B,C}" with sorted feature names.
std::string to_display(const FeatureSet& fs);

static_assert(Characterisation<FeatureSet>);

} // namespace saacbr
