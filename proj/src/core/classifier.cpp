#include "core/classifier.hpp"

#include <algorithm>

namespace saacbr {

std::vector<std::string> find_spikes(const BipolarFramework& baf) {
    const std::size_t n = baf.arguments.size();
    std::vector<std::vector<int>> incoming(n); // reversed attack + support edges
    for (const AttackEdge& e : baf.attacks) {
        incoming[static_cast<std::size_t>(e.target)].push_back(e.source);
    }
    for (const SupportEdge& e : baf.supports) {
        incoming[static_cast<std::size_t>(e.target)].push_back(e.source);
    }

    // Reverse reachability from the default argument marks every argument
    // with a path to it.
    std::vector<char> reaches_default(n, 0);
    std::vector<int> stack{baf.default_index};
    reaches_default[static_cast<std::size_t>(baf.default_index)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int source : incoming[static_cast<std::size_t>(v)]) {
            if (!reaches_default[static_cast<std::size_t>(source)]) {
                reaches_default[static_cast<std::size_t>(source)] = 1;
                stack.push_back(source);
            }
        }
    }

    std::vector<std::string> spikes;
    for (std::size_t i = 0; i < n; ++i) {
        if (baf.arguments[i].role != ArgumentRole::Past) continue;
        if (!reaches_default[i]) spikes.push_back(baf.arguments[i].id);
    }
    std::sort(spikes.begin(), spikes.end());
    return spikes;
}

} // namespace saacbr
