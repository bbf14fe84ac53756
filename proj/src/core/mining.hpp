#pragma once

#include <optional>
#include <span>
#include <string>

#include "core/casebase.hpp"
#include "core/errors.hpp"
#include "core/framework.hpp"
#include "core/order.hpp"

namespace saacbr {

// aacbr mines attacks only; saacbr additionally mines supports.
enum class Mode { Aacbr, Saacbr };

const char* to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

// Attack clause over the pool (casebase plus default argument): a attacks b
// iff the outcomes differ and either a is strictly more exceptional with no
// case of a's own outcome strictly in between, or the characterisations are
// equal. Returns the edge kind so mining can record provenance.
template <Characterisation C>
std::optional<AttackKind> attack_kind(const Case<C>& a, const Case<C>& b,
                                      std::span<const Case<C>> pool) {
    if (a.outcome == b.outcome) return std::nullopt;
    switch (compare(a.characterisation, b.characterisation)) {
    case OrderRelation::Equal:
        return AttackKind::Equal;
    case OrderRelation::MoreExceptional:
        for (const Case<C>& witness : pool) {
            if (witness.outcome != a.outcome) continue;
            if (more_exceptional(a.characterisation, witness.characterisation) &&
                more_exceptional(witness.characterisation, b.characterisation)) {
                return std::nullopt;
            }
        }
        return AttackKind::Direct;
    default:
        return std::nullopt;
    }
}

template <Characterisation C>
bool attacks_definition(const Case<C>& a, const Case<C>& b, std::span<const Case<C>> pool) {
    return attack_kind(a, b, pool).has_value();
}

// Support clause: same outcome, a strictly more exceptional, and no case of
// any outcome strictly in between. Unlike the attack clause the blocking
// witness is not restricted to a's outcome.
template <Characterisation C>
bool supports_definition(const Case<C>& a, const Case<C>& b, std::span<const Case<C>> pool) {
    if (a.outcome != b.outcome) return false;
    if (!more_exceptional(a.characterisation, b.characterisation)) return false;
    for (const Case<C>& witness : pool) {
        if (more_exceptional(a.characterisation, witness.characterisation) &&
            more_exceptional(witness.characterisation, b.characterisation)) {
            return false;
        }
    }
    return true;
}

// Mines the bipolar framework from a validated casebase and a new case.
// Argument order: default argument first, casebase cases next (casebase
// order), the new case last. The new case only ever appears as the source
// of irrelevance attacks. In aacbr mode the support set stays empty.
template <Characterisation C>
BipolarFramework mine_framework(const Casebase<C>& casebase, const C& x_new, Mode mode) {
    std::vector<Case<C>> pool;
    pool.reserve(casebase.cases.size() + 1);
    pool.push_back(casebase.default_argument);
    pool.insert(pool.end(), casebase.cases.begin(), casebase.cases.end());

    BipolarFramework baf;
    baf.default_index = 0;
    for (const Case<C>& c : pool) {
        baf.arguments.push_back(Argument{
            c.id,
            c.outcome,
            to_display(c.characterisation),
            c.id == casebase.default_argument.id ? ArgumentRole::Default : ArgumentRole::Past,
        });
    }
    baf.new_case_index = static_cast<int>(baf.arguments.size());
    baf.arguments.push_back(Argument{kNewCaseId, "?", to_display(x_new), ArgumentRole::NewCase});

    const std::span<const Case<C>> pool_view(pool);
    const int n = static_cast<int>(pool.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::optional<AttackKind> kind = attack_kind(pool[i], pool[j], pool_view)) {
                baf.attacks.push_back(AttackEdge{i, j, *kind});
            }
            if (mode == Mode::Saacbr && supports_definition(pool[i], pool[j], pool_view)) {
                baf.supports.push_back(SupportEdge{i, j});
            }
        }
        if (is_irrelevant(x_new, pool[i].characterisation)) {
            baf.attacks.push_back(AttackEdge{baf.new_case_index, i, AttackKind::Irrelevance});
        }
    }

    sort_edges(baf.attacks);
    sort_edges(baf.supports);
    return baf;
}

} // namespace saacbr
