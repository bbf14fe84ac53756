#include "core/translation.hpp"

#include <algorithm>

namespace saacbr {

namespace {

// reach[i][j] == true iff j is reachable from i over one or more support
// edges. Plain DFS per node; tolerates cyclic supports in synthetic inputs
// even though mined support relations are strict-order DAGs.
std::vector<std::vector<char>> support_reachability(const BipolarFramework& baf) {
    const std::size_t n = baf.arguments.size();
    std::vector<std::vector<int>> supportees(n);
    for (const SupportEdge& e : baf.supports) {
        supportees[static_cast<std::size_t>(e.source)].push_back(e.target);
    }

    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    std::vector<int> stack;
    for (std::size_t start = 0; start < n; ++start) {
        stack.assign(supportees[start].begin(), supportees[start].end());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (reach[start][static_cast<std::size_t>(v)]) continue;
            reach[start][static_cast<std::size_t>(v)] = 1;
            for (int next : supportees[static_cast<std::size_t>(v)]) stack.push_back(next);
        }
    }
    return reach;
}

} // namespace

std::vector<AttackEdge> supported_attacks(const BipolarFramework& baf) {
    const std::size_t n = baf.arguments.size();
    std::vector<AttackEdge> out;
    if (baf.supports.empty()) return out;

    const auto reach = support_reachability(baf);
    for (std::size_t a = 0; a < n; ++a) {
        for (const AttackEdge& att : baf.attacks) {
            if (static_cast<int>(a) == att.source) continue;
            if (reach[a][static_cast<std::size_t>(att.source)]) {
                out.push_back(AttackEdge{static_cast<int>(a), att.target, AttackKind::Supported});
            }
        }
    }
    sort_edges(out);
    return out;
}

std::vector<AttackEdge> secondary_attacks(const BipolarFramework& baf) {
    std::vector<AttackEdge> out;
    if (baf.supports.empty()) return out;

    const auto reach = support_reachability(baf);
    const std::size_t n = baf.arguments.size();
    for (const AttackEdge& att : baf.attacks) {
        if (att.source == baf.new_case_index) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (reach[static_cast<std::size_t>(att.target)][b]) {
                out.push_back(AttackEdge{att.source, static_cast<int>(b), AttackKind::Secondary});
            }
        }
    }
    sort_edges(out);
    return out;
}

AttackFramework translate(const BipolarFramework& baf, const TranslationOptions& options) {
    AttackFramework af;
    af.arguments = baf.arguments;
    af.default_index = baf.default_index;
    af.new_case_index = baf.new_case_index;
    af.attacks = baf.attacks;

    std::vector<AttackEdge> supported = supported_attacks(baf);
    af.attacks.insert(af.attacks.end(), supported.begin(), supported.end());
    if (options.secondary_attacks) {
        std::vector<AttackEdge> secondary = secondary_attacks(baf);
        af.attacks.insert(af.attacks.end(), secondary.begin(), secondary.end());
    }
    sort_edges(af.attacks);
    return af;
}

} // namespace saacbr
