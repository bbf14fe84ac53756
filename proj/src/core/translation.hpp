#pragma once

#include <vector>

#include "core/framework.hpp"

namespace saacbr {

struct TranslationOptions {
    bool secondary_attacks = false;
};

// Supported attacks: one edge (a, b) for every non-empty support chain
// a -> ... -> c followed by an attack c -> b. Computed over the original
// attack and support relations only, via forward reachability on supports.
std::vector<AttackEdge> supported_attacks(const BipolarFramework& baf);

// Secondary attacks: one edge (a, b) for every attack a -> c followed by a
// non-empty support chain c -> ... -> b. The new case is excluded as a
// source: its irrelevance attacks stand for deleting a case, and must not
// propagate onto that case's supportees.
std::vector<AttackEdge> secondary_attacks(const BipolarFramework& baf);

// Builds the attack-only framework: the mined attacks with their original
// provenance, plus supported attacks, plus secondary attacks when enabled.
// Supports are dropped. A (source, target) pair may keep several kinds.
AttackFramework translate(const BipolarFramework& baf, const TranslationOptions& options = {});

} // namespace saacbr
