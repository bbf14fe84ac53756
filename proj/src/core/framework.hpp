#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace saacbr {

enum class ArgumentRole { Past, Default, NewCase };

// Provenance of an attack edge. Direct/Equal/Irrelevance edges are mined;
// Supported/Secondary edges are complex attacks added by translation.
enum class AttackKind { Direct, Equal, Irrelevance, Supported, Secondary };

const char* to_string(ArgumentRole r);
const char* to_string(AttackKind k);

// A node of a mined framework. Carries everything the explanation and the
// graph export need; the characterisation itself stays with the casebase.
struct Argument {
    std::string id;
    std::string outcome;          // "?" for the new case
    std::string characterisation; // display text, e.g. "{A,B}"
    ArgumentRole role = ArgumentRole::Past;
};

struct AttackEdge {
    int source = -1;
    int target = -1;
    AttackKind kind = AttackKind::Direct;

    friend bool operator==(const AttackEdge&, const AttackEdge&) = default;
    friend auto operator<=>(const AttackEdge&, const AttackEdge&) = default;
};

struct SupportEdge {
    int source = -1;
    int target = -1;

    friend bool operator==(const SupportEdge&, const SupportEdge&) = default;
    friend auto operator<=>(const SupportEdge&, const SupportEdge&) = default;
};

// Mined bipolar framework: casebase arguments plus the default argument and
// the new case, with attack and support relations. Edge lists are kept in
// canonical sorted order.
struct BipolarFramework {
    std::vector<Argument> arguments;
    std::vector<AttackEdge> attacks; // Direct, Equal, Irrelevance
    std::vector<SupportEdge> supports;
    int default_index = -1;
    int new_case_index = -1; // -1 when the framework has no new case

    int index_of(std::string_view id) const;
    bool has_attack(int source, int target) const;
    bool has_support(int source, int target) const;
};

// Attack-only framework after complex-attack translation. The same
// (source, target) pair may appear once per provenance kind.
struct AttackFramework {
    std::vector<Argument> arguments;
    std::vector<AttackEdge> attacks;
    int default_index = -1;
    int new_case_index = -1;

    int index_of(std::string_view id) const;
    bool has_attack(int source, int target) const;
};

void sort_edges(std::vector<AttackEdge>& edges);
void sort_edges(std::vector<SupportEdge>& edges);

} // namespace saacbr
