#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/order.hpp"

namespace saacbr {

// Reserved argument id of the unlabelled new case.
inline constexpr const char* kNewCaseId = "N";

template <Characterisation C>
struct Case {
    std::string id;
    C characterisation{};
    std::string outcome;
};

// The two outcome tokens of a run. The complement is usually inferred from
// the casebase and may be absent when the data only ever shows the default.
struct OutcomePair {
    std::string default_outcome;
    std::optional<std::string> complement;

    const std::string& complement_or_throw() const {
        if (!complement) {
            throw DataError("no complement outcome is known: the casebase contains no label "
                            "other than the default \"" + default_outcome + "\"");
        }
        return *complement;
    }

    // complement(complement(y)) == y on the two tokens of the pair.
    const std::string& opposite(const std::string& y) const {
        return y == default_outcome ? complement_or_throw() : default_outcome;
    }
};

// A validated casebase: unique ids, set semantics over (characterisation,
// outcome), default duplicates merged away, label alphabet limited to the
// default outcome and one complement.
template <Characterisation C>
struct Casebase {
    std::vector<Case<C>> cases; // input order, post-deduplication
    Case<C> default_argument;
    OutcomePair outcomes;
    std::vector<std::string> notes; // one line per dropped/merged case
};

// Validates raw cases against a default argument. complement_hint pins the
// non-default outcome token when the caller already knows it (e.g. the
// leave-one-out driver passing the full casebase's alphabet).
template <Characterisation C>
Casebase<C> validate_casebase(std::vector<Case<C>> cases, Case<C> default_argument,
                              std::optional<std::string> complement_hint = std::nullopt) {
    if (default_argument.id.empty()) default_argument.id = "default";
    if (default_argument.id == kNewCaseId) {
        throw DataError("the default argument may not use the reserved id \"N\"");
    }

    std::set<std::string> seen_ids{default_argument.id};
    for (const Case<C>& c : cases) {
        if (c.id.empty()) throw DataError("a case has an empty id");
        if (c.id == kNewCaseId) {
            throw DataError("case id \"N\" is reserved for the new case");
        }
        if (!seen_ids.insert(c.id).second) {
            throw DataError("duplicate case id \"" + c.id + "\"");
        }
    }

    Casebase<C> out;
    out.default_argument = std::move(default_argument);

    // Set semantics of the casebase: drop repeated (characterisation,
    // outcome) pairs, and merge any copy of the default argument into it.
    std::vector<std::pair<C, std::string>> kept;
    for (Case<C>& c : cases) {
        if (c.characterisation == out.default_argument.characterisation &&
            c.outcome == out.default_argument.outcome) {
            out.notes.push_back("case \"" + c.id + "\" duplicates the default argument; merged");
            continue;
        }
        bool duplicate = false;
        for (const auto& [ch, y] : kept) {
            if (ch == c.characterisation && y == c.outcome) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) {
            out.notes.push_back("case \"" + c.id + "\" repeats an earlier case; dropped");
            continue;
        }
        kept.emplace_back(c.characterisation, c.outcome);
        out.cases.push_back(std::move(c));
    }

    std::set<std::string> labels;
    labels.insert(out.default_argument.outcome);
    if (complement_hint && !complement_hint->empty()) labels.insert(*complement_hint);
    for (const Case<C>& c : out.cases) labels.insert(c.outcome);
    if (labels.size() > 2) {
        std::string listed;
        for (const std::string& l : labels) {
            if (!listed.empty()) listed += ", ";
            listed += '"' + l + '"';
        }
        throw DataError("more than two outcome labels present: " + listed);
    }

    out.outcomes.default_outcome = out.default_argument.outcome;
    for (const std::string& l : labels) {
        if (l != out.outcomes.default_outcome) out.outcomes.complement = l;
    }
    return out;
}

} // namespace saacbr
