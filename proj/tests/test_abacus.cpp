#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "bw/abacus.hpp"
#include "bw/blocks.hpp"
#include "oracles.hpp"

using namespace bw;

TEST_CASE("beta-set construction and text form") {
    BetaSet X({1, 9, 3, 7, 4});
    CHECK(X.elements() == std::vector<long long>{9, 7, 4, 3, 1});
    CHECK(X.to_string() == "{9,7,4,3,1}");
    CHECK(X.contains(7));
    CHECK_FALSE(X.contains(5));
    CHECK(BetaSet::parse("{9, 7, 4, 3, 1}") == X);
    CHECK(BetaSet::parse("{0}").elements() == std::vector<long long>{0});
    CHECK_THROWS_AS(BetaSet({}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet::parse("{}"), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet::parse("{1,2"), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet::parse("1,2}"), std::invalid_argument);
}

TEST_CASE("partition_of and beta_set_of") {
    CHECK(partition_of(BetaSet({9, 7, 4, 3, 1})) == Partition({5, 4, 2, 2, 1}));
    CHECK(partition_of(BetaSet({10, 8, 5, 4, 2, 0})) == Partition({5, 4, 2, 2, 1}));
    CHECK(partition_of(BetaSet({4, 3, 2, 1, 0})) == Partition{});
    CHECK(beta_set_of(Partition({5, 4, 2, 2, 1}), 5) == BetaSet({9, 7, 4, 3, 1}));
    CHECK(beta_set_of(Partition({5, 4, 2, 2, 1}), 6) == BetaSet({10, 8, 5, 4, 2, 0}));
    CHECK(beta_set_of(Partition({61, 6, 5, 2, 1}), 5) == BetaSet({65, 9, 7, 3, 1}));
    CHECK_THROWS_AS(beta_set_of(Partition({2, 1, 1}), 2), std::invalid_argument);

    // |P(X)| = sum of X minus t(t-1)/2
    BetaSet Y({12, 9, 5, 2});
    CHECK(partition_of(Y).size() == 12 + 9 + 5 + 2 - 6);
}

TEST_CASE("beta-sets are shift equivalent") {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [](const Partition& lam) {
            for (int t = lam.length(); t <= lam.length() + 5; ++t) {
                if (t < 1) continue;
                BetaSet X = beta_set_of(lam, t);
                CHECK(X.size() == t);
                CHECK(partition_of(X) == lam);
            }
        });
}

TEST_CASE("first-column hook lengths form a beta-set") {
    for (int n = 1; n <= 12; ++n)
        for_each_partition(n, [](const Partition& lam) {
            if (lam.empty()) return;
            std::vector<long long> hooks;
            for (int i = 1; i <= lam.length(); ++i)
                hooks.push_back(hook_length(lam, {i, 1}));
            CHECK(beta_set_of(lam, lam.length()) == BetaSet(std::move(hooks)));
        });
}

TEST_CASE("hook moves") {
    BetaSet X({9, 7, 4, 3, 1});
    BetaSet Y = hook_removal_move(X, 9, 5);
    CHECK(Y == BetaSet({7, 5, 4, 3, 1}));
    CHECK(partition_of(Y) == Partition({3, 2, 2, 2, 1}));
    CHECK(add_hook_move(Y, 5, 9) == X);
    CHECK_THROWS_AS(hook_removal_move(X, 8, 5), std::invalid_argument);
    CHECK_THROWS_AS(hook_removal_move(X, 9, 7), std::invalid_argument);
    CHECK_THROWS_AS(hook_removal_move(X, 9, 10), std::invalid_argument);
    CHECK_THROWS_AS(add_hook_move(X, 9, 4), std::invalid_argument);
}

TEST_CASE("hook moves agree with rim-hook removal") {
    // for every hook size h: the multiset of partitions obtained by the
    // (x, x-h) moves equals the multiset from removing each h-hook directly
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [](const Partition& lam) {
            if (lam.empty()) return;
            BetaSet X = beta_set_of(lam, lam.length());
            for (int h = 1; h <= static_cast<int>(lam.size()); ++h) {
                std::multiset<std::vector<int>> via_moves, via_rim;
                for (long long x : X.elements())
                    if (x - h >= 0 && !X.contains(x - h))
                        via_moves.insert(partition_of(hook_removal_move(X, x, x - h)).parts());
                for (int i = 1; i <= lam.length(); ++i)
                    for (int j = 1; j <= lam.part(i); ++j)
                        if (hook_length(lam, {i, j}) == h)
                            via_rim.insert(remove_rim_hook(lam, {i, j}).parts());
                CHECK(via_moves == via_rim);
            }
        });
}

TEST_CASE("abacus configuration") {
    AbacusConfig cfg = abacus_config(BetaSet({9, 7, 4, 3, 1}), 4);
    REQUIRE(cfg.e == 4);
    CHECK(cfg.runners[0] == std::vector<long long>{1});
    CHECK(cfg.runners[1] == std::vector<long long>{0, 2});
    CHECK(cfg.runners[2].empty());
    CHECK(cfg.runners[3] == std::vector<long long>{0, 1});
    CHECK_THROWS_AS(abacus_config(BetaSet({1}), 0), std::invalid_argument);

    AbacusConfig two = abacus_config(BetaSet({9, 7, 5, 3, 1}), 2);
    CHECK(two.runners[0].empty());
    CHECK(two.runners[1] == std::vector<long long>{0, 1, 2, 3, 4});
}

TEST_CASE("render_abacus") {
    AbacusConfig cfg = abacus_config(BetaSet({9, 7, 4, 3, 1}), 4);
    CHECK(render_abacus(cfg, 4) ==
          "0 1 2 3\n"
          "- • - •\n"
          "• - - •\n"
          "- • - -\n"
          "- - - -\n");
    // default row count covers the lowest bead
    CHECK(render_abacus(cfg) ==
          "0 1 2 3\n"
          "- • - •\n"
          "• - - •\n"
          "- • - -\n");
}

TEST_CASE("core via abacus") {
    BetaSet Y = core_via_abacus(BetaSet({9, 7, 4, 3, 1}), 4);
    CHECK(Y == BetaSet({7, 5, 3, 1, 0}));
    CHECK(partition_of(Y) == Partition({3, 2, 1}));

    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [](const Partition& lam) {
            for (int e = 2; e <= 6; ++e)
                for (int t = std::max(1, lam.length()); t <= lam.length() + 3; ++t) {
                    BetaSet X = beta_set_of(lam, t);
                    BetaSet Y = core_via_abacus(X, e);
                    CHECK(Y.size() == X.size());
                    CHECK(partition_of(Y) == e_core(lam, e));
                }
        });
}

TEST_CASE("parity split and two_core_index") {
    auto [evens, odds] = parity_split(BetaSet({9, 7, 4, 3, 1}));
    CHECK(evens == std::vector<long long>{4});
    CHECK(odds == std::vector<long long>{9, 7, 3, 1});
    CHECK(two_core_index(BetaSet({9, 7, 4, 3, 1})) == 3);
    CHECK(two_core_index(BetaSet({0})) == 0);
    CHECK(two_core_index(BetaSet({65, 9, 7, 3, 1})) == 5);
}

TEST_CASE("two_core_index matches the 2-core, exhaustively") {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [](const Partition& lam) {
            Partition core2 = e_core(lam, 2);
            for (int t = std::max(1, lam.length()); t <= lam.length() + 3; ++t) {
                BetaSet X = beta_set_of(lam, t);
                long long c = two_core_index(X);
                CHECK(core2 == bw::gamma(c));
            }
        });
}

TEST_CASE("even part of a beta-set sized by a 2-block is even") {
    for (int n = 1; n <= 12; ++n)
        for_each_partition(n, [n](const Partition& lam) {
            for (int t = std::max(1, lam.length()); t <= 8; ++t) {
                BlockLabel label{GroupTag::Sym, n, t, BlockSign::None};
                if (!label.valid()) continue;
                BetaSet X = beta_set_of(lam, t);
                CHECK(parity_split(X).first.size() % 2 == 0);
            }
        });
}
