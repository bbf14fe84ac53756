#include "core/framework.hpp"

#include <algorithm>

namespace saacbr {

const char* to_string(ArgumentRole r) {
    switch (r) {
    case ArgumentRole::Past: return "case";
    case ArgumentRole::Default: return "default";
    case ArgumentRole::NewCase: return "new";
    }
    return "?";
}

const char* to_string(AttackKind k) {
    switch (k) {
    case AttackKind::Direct: return "direct";
    case AttackKind::Equal: return "equal";
    case AttackKind::Irrelevance: return "irrelevance";
    case AttackKind::Supported: return "supported";
    case AttackKind::Secondary: return "secondary";
    }
    return "?";
}

namespace {

template <typename Edge>
void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int find_id(const std::vector<Argument>& args, std::string_view id) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

void sort_edges(std::vector<AttackEdge>& edges) { sort_unique(edges); }
void sort_edges(std::vector<SupportEdge>& edges) { sort_unique(edges); }

int BipolarFramework::index_of(std::string_view id) const { return find_id(arguments, id); }
int AttackFramework::index_of(std::string_view id) const { return find_id(arguments, id); }

bool BipolarFramework::has_attack(int source, int target) const {
    return std::any_of(attacks.begin(), attacks.end(), [&](const AttackEdge& e) {
        return e.source == source && e.target == target;
    });
}

bool BipolarFramework::has_support(int source, int target) const {
    return std::any_of(supports.begin(), supports.end(), [&](const SupportEdge& e) {
        return e.source == source && e.target == target;
    });
}

bool AttackFramework::has_attack(int source, int target) const {
    return std::any_of(attacks.begin(), attacks.end(), [&](const AttackEdge& e) {
        return e.source == source && e.target == target;
    });
}

} // namespace saacbr
