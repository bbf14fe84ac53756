#include "doctest.h"

#include <random>

#include "core/mining.hpp"
#include "core/translation.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace saacbr;
using namespace saacbr::testing;

TEST_SUITE_BEGIN("translation");

namespace {

// a -> b -> c (supports), c => d (attack), on ids a0..a3
BipolarFramework support_chain_framework() {
    BipolarFramework baf;
    for (int i = 0; i < 4; ++i) {
        baf.arguments.push_back(Argument{"a" + std::to_string(i), i % 2 ? "+" : "-", "{}",
                                         ArgumentRole::Past});
    }
    baf.default_index = 3;
    baf.arguments[3].role = ArgumentRole::Default;
    baf.supports = {SupportEdge{0, 1}, SupportEdge{1, 2}};
    baf.attacks = {AttackEdge{2, 3, AttackKind::Direct}};
    sort_edges(baf.supports);
    return baf;
}

} // namespace

TEST_CASE("supported attack in the worked example") {
    Casebase<FeatureSet> cb = figure1_casebase(Mode::Saacbr);
    BipolarFramework baf = mine_framework(cb, figure1_new_case(), Mode::Saacbr);

    std::vector<AttackEdge> supported = supported_attacks(baf);
    REQUIRE(supported.size() == 1);
    CHECK(baf.arguments[static_cast<std::size_t>(supported[0].source)].id == "C4");
    CHECK(baf.arguments[static_cast<std::size_t>(supported[0].target)].id == "C1");
    CHECK(supported[0].kind == AttackKind::Supported);

    // no argument attacks a supporter here, so no secondary attacks
    CHECK(secondary_attacks(baf).empty());

    AttackFramework af = translate(baf);
    CHECK(af.attacks.size() == 4);

    // baseline mode translates to exactly the mined attacks
    BipolarFramework plain = mine_framework(cb, figure1_new_case(), Mode::Aacbr);
    AttackFramework af_plain = translate(plain);
    CHECK(af_plain.attacks == plain.attacks);
}

TEST_CASE("chains of supports all reach the attacked target") {
    BipolarFramework baf = support_chain_framework();
    std::set<std::pair<int, int>> supported = pairs_of(supported_attacks(baf));
    // frozen from enumerating the support paths 0->1->2 and 1->2 and
    // appending the chain end's attack 2 => 3
    std::set<std::pair<int, int>> expected = {{0, 3}, {1, 3}};
    CHECK(supported == expected);
}

TEST_CASE("secondary attack follows one attack then a support chain") {
    BipolarFramework baf;
    for (int i = 0; i < 3; ++i) {
        baf.arguments.push_back(Argument{"a" + std::to_string(i), i % 2 ? "+" : "-", "{}",
                                         ArgumentRole::Past});
    }
    baf.default_index = 0;
    baf.attacks = {AttackEdge{0, 1, AttackKind::Direct}};
    baf.supports = {SupportEdge{1, 2}};

    std::set<std::pair<int, int>> secondary = pairs_of(secondary_attacks(baf));
    std::set<std::pair<int, int>> expected = {{0, 2}};
    CHECK(secondary == expected);

    // disabled by default
    CHECK(pairs_of(translate(baf).attacks).count({0, 2}) == 0);
    CHECK(pairs_of(translate(baf, TranslationOptions{true}).attacks).count({0, 2}) == 1);
}

TEST_CASE("no supports means no complex attacks") {
    BipolarFramework baf;
    baf.arguments = {Argument{"a0", "-", "{}", ArgumentRole::Default},
                     Argument{"a1", "+", "{}", ArgumentRole::Past}};
    baf.default_index = 0;
    baf.attacks = {AttackEdge{1, 0, AttackKind::Direct}};
    CHECK(supported_attacks(baf).empty());
    CHECK(secondary_attacks(baf).empty());
    CHECK(translate(baf, TranslationOptions{true}).attacks == baf.attacks);
}

TEST_CASE("translation equals the chain oracle on random frameworks") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        BipolarFramework baf = random_bipolar(rng, 9);
        CHECK(pairs_of(supported_attacks(baf)) == oracle_supported_attacks(baf));
        CHECK(pairs_of(secondary_attacks(baf)) == oracle_secondary_attacks(baf));
    }
}

TEST_CASE("translated edge set contains the mined attacks and keeps provenance") {
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        Casebase<FeatureSet> cb = random_casebase(rng, 8, 5);
        FeatureSet x_new = random_feature_set(rng, 5);
        BipolarFramework baf = mine_framework(cb, x_new, Mode::Saacbr);
        AttackFramework af = translate(baf, TranslationOptions{i % 2 == 0});

        for (const AttackEdge& e : baf.attacks) {
            CHECK(std::find(af.attacks.begin(), af.attacks.end(), e) != af.attacks.end());
        }
        for (const AttackEdge& e : af.attacks) {
            bool mined = std::find(baf.attacks.begin(), baf.attacks.end(), e) != baf.attacks.end();
            bool complex =
                e.kind == AttackKind::Supported || e.kind == AttackKind::Secondary;
            CHECK((mined || complex));
        }
    }
}

TEST_CASE("complex attacks join opposite outcomes from strictly above") {
    std::mt19937 rng(47);
    for (int i = 0; i < 150; ++i) {
        Casebase<FeatureSet> cb = random_casebase(rng, 8, 5);
        FeatureSet x_new = random_feature_set(rng, 5);
        BipolarFramework baf = mine_framework(cb, x_new, Mode::Saacbr);
        AttackFramework af = translate(baf, TranslationOptions{true});

        std::vector<Case<FeatureSet>> pool;
        pool.push_back(cb.default_argument);
        pool.insert(pool.end(), cb.cases.begin(), cb.cases.end());

        for (const AttackEdge& e : af.attacks) {
            if (e.kind != AttackKind::Supported && e.kind != AttackKind::Secondary) continue;
            CHECK(e.source != baf.new_case_index);
            const Case<FeatureSet>& a = pool[static_cast<std::size_t>(e.source)];
            const Case<FeatureSet>& b = pool[static_cast<std::size_t>(e.target)];
            CHECK(a.outcome != b.outcome);
            CHECK(compare(a.characterisation, b.characterisation) ==
                  OrderRelation::MoreExceptional);
        }
    }
}

TEST_CASE("one closure pass is complete for supported attacks") {
    // rerunning supported_attacks with the complex edges folded back in as
    // plain attacks must add nothing new
    std::mt19937 rng(53);
    for (int i = 0; i < 100; ++i) {
        BipolarFramework baf = random_bipolar(rng, 8);
        AttackFramework first = translate(baf);

        BipolarFramework again;
        again.arguments = baf.arguments;
        again.default_index = baf.default_index;
        again.new_case_index = baf.new_case_index;
        again.supports = baf.supports;
        again.attacks = first.attacks;
        AttackFramework second = translate(again);

        CHECK(pairs_of(second.attacks) == pairs_of(first.attacks));
    }
}

TEST_CASE("the new case never launches secondary attacks") {
    std::mt19937 rng(59);
    int exercised = 0;
    for (int i = 0; i < 200; ++i) {
        BipolarFramework baf = random_bipolar(rng, 8);
        if (baf.new_case_index < 0) continue;
        for (const AttackEdge& e : secondary_attacks(baf)) {
            CHECK(e.source != baf.new_case_index);
        }
        ++exercised;
    }
    CHECK(exercised > 0);
}

TEST_SUITE_END();
