#include "core/semantics.hpp"

#include <algorithm>

namespace saacbr {

const char* to_string(ArgumentLabel l) {
    switch (l) {
    case ArgumentLabel::In: return "in";
    case ArgumentLabel::Out: return "out";
    case ArgumentLabel::Undecided: return "undecided";
    }
    return "?";
}

AttackGraph AttackGraph::from(const AttackFramework& af) {
    AttackGraph g;
    g.argument_count = static_cast<int>(af.arguments.size());
    g.attackers.resize(af.arguments.size());
    for (const AttackEdge& e : af.attacks) {
        g.attackers[static_cast<std::size_t>(e.target)].push_back(e.source);
    }
    for (auto& list : g.attackers) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
}

AttackGraph AttackGraph::from_edges(int argument_count,
                                    std::span<const std::pair<int, int>> edges) {
    AttackGraph g;
    g.argument_count = argument_count;
    g.attackers.resize(static_cast<std::size_t>(argument_count));
    for (const auto& [source, target] : edges) {
        g.attackers[static_cast<std::size_t>(target)].push_back(source);
    }
    for (auto& list : g.attackers) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
}

bool GroundedResult::contains(int argument) const {
    return std::binary_search(extension.begin(), extension.end(), argument);
}

bool defends(const AttackGraph& graph, const std::vector<bool>& members, int b) {
    for (int attacker : graph.attackers[static_cast<std::size_t>(b)]) {
        bool countered = false;
        for (int counter : graph.attackers[static_cast<std::size_t>(attacker)]) {
            if (members[static_cast<std::size_t>(counter)]) {
                countered = true;
                break;
            }
        }
        if (!countered) return false;
    }
    return true;
}

GroundedResult grounded_extension(const AttackGraph& graph) {
    const std::size_t n = static_cast<std::size_t>(graph.argument_count);
    std::vector<bool> current(n, false);

    // G_0: unattacked arguments.
    for (std::size_t i = 0; i < n; ++i) {
        current[i] = graph.attackers[i].empty();
    }

    GroundedResult result;
    result.iterations = 1;
    while (true) {
        std::vector<bool> next(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = defends(graph, current, static_cast<int>(i));
        }
        if (next == current) break;
        current = std::move(next);
        ++result.iterations;
    }

    result.labelling.assign(n, ArgumentLabel::Undecided);
    for (std::size_t i = 0; i < n; ++i) {
        if (current[i]) {
            result.extension.push_back(static_cast<int>(i));
            result.labelling[i] = ArgumentLabel::In;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (current[i]) continue;
        for (int attacker : graph.attackers[i]) {
            if (current[static_cast<std::size_t>(attacker)]) {
                result.labelling[i] = ArgumentLabel::Out;
                break;
            }
        }
    }
    return result;
}

GroundedResult grounded_extension(const AttackFramework& af) {
    return grounded_extension(AttackGraph::from(af));
}

} // namespace saacbr
