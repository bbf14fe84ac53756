#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/framework.hpp"

namespace saacbr {

enum class ArgumentLabel { In, Out, Undecided };

const char* to_string(ArgumentLabel l);

// Attacker-list view of an attack framework; provenance and duplicate
// (source, target) pairs are irrelevant to the semantics.
struct AttackGraph {
    int argument_count = 0;
    std::vector<std::vector<int>> attackers; // attackers[b], sorted unique

    static AttackGraph from(const AttackFramework& af);
    static AttackGraph from_edges(int argument_count,
                                  std::span<const std::pair<int, int>> edges);
};

struct GroundedResult {
    std::vector<int> extension;          // sorted argument indices
    std::vector<ArgumentLabel> labelling; // one label per argument
    int iterations = 0;                   // fixpoint rounds executed

    bool contains(int argument) const;
};

// True iff every attacker of b is itself attacked by some member of e.
// Unattacked arguments are defended vacuously.
bool defends(const AttackGraph& graph, const std::vector<bool>& members, int b);

// Iterative grounded extension: G_0 is the set of unattacked arguments and
// G_{i+1} collects every argument G_i defends, until nothing changes. The
// labelling marks the extension In, anything it attacks Out, and the rest
// Undecided.
GroundedResult grounded_extension(const AttackGraph& graph);
GroundedResult grounded_extension(const AttackFramework& af);

} // namespace saacbr
