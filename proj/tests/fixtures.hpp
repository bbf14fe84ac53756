#pragma once

#include <string>
#include <vector>

#include "core/casebase.hpp"
#include "core/classifier.hpp"
#include "core/feature_set.hpp"

#include "oracles.hpp"

namespace saacbr::testing {

// The patient-diet casebase: default C0 = ({}, -), C1 = ({A}, +),
// C2 = ({A,B,C}, +), C3 = ({A,B}, -), C4 = ({A,B,D}, -), new case {A,B,C,D}.
inline std::vector<Case<FeatureSet>> figure1_cases() {
    return {
        Case<FeatureSet>{"C1", FeatureSet::parse("A"), "+"},
        Case<FeatureSet>{"C2", FeatureSet::parse("A,B,C"), "+"},
        Case<FeatureSet>{"C3", FeatureSet::parse("A,B"), "-"},
        Case<FeatureSet>{"C4", FeatureSet::parse("A,B,D"), "-"},
    };
}

inline ModelConfig<FeatureSet> figure1_config(Mode mode) {
    ModelConfig<FeatureSet> config = default_config(mode);
    config.default_id = "C0";
    return config;
}

inline Casebase<FeatureSet> figure1_casebase(Mode mode) {
    return build_casebase(figure1_cases(), figure1_config(mode));
}

inline FeatureSet figure1_new_case() { return FeatureSet::parse("A,B,C,D"); }

// A second characterisation instantiation: positive integers under the
// divisibility order. n is more exceptional than m when m properly divides
// n; a past value is irrelevant to a new one that it does not divide.
struct Divisibility {
    unsigned value = 1;

    friend bool operator==(const Divisibility&, const Divisibility&) = default;
};

inline OrderRelation compare(const Divisibility& a, const Divisibility& b) {
    if (a.value == b.value) return OrderRelation::Equal;
    if (b.value != 0 && a.value % b.value == 0) return OrderRelation::MoreExceptional;
    if (a.value != 0 && b.value % a.value == 0) return OrderRelation::LessExceptional;
    return OrderRelation::Incomparable;
}

inline bool is_irrelevant(const Divisibility& x_new, const Divisibility& x_past) {
    return x_past.value == 0 || x_new.value % x_past.value != 0;
}

inline std::string to_display(const Divisibility& d) { return std::to_string(d.value); }

static_assert(Characterisation<Divisibility>);

} // namespace saacbr::testing
