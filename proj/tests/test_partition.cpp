#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bw/blocks.hpp"
#include "bw/partition.hpp"
#include "oracles.hpp"

using namespace bw;

TEST_CASE("construction and normalization") {
    Partition lam({5, 4, 2, 2, 1, 0, 0});
    CHECK(lam.parts() == std::vector<int>{5, 4, 2, 2, 1});
    CHECK(lam.size() == 14);
    CHECK(lam.length() == 5);
    CHECK(lam.part(1) == 5);
    CHECK(lam.part(6) == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition{}.size() == 0);
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
}

TEST_CASE("parse and to_string") {
    CHECK(Partition::parse("(5,4,2,2,1)").parts() == std::vector<int>{5, 4, 2, 2, 1});
    CHECK(Partition::parse("(5,4,2^2,1)").parts() == std::vector<int>{5, 4, 2, 2, 1});
    CHECK(Partition::parse("(1^6)").parts() == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(Partition::parse("()").empty());
    CHECK(Partition::parse(" ( 3 , 2 ) ").parts() == std::vector<int>{3, 2});
    CHECK(Partition({5, 4, 2, 2, 1}).to_string() == "(5,4,2,2,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK_THROWS_AS(Partition::parse("5,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("(5,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("(4,5)"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("(3)x"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(is_self_conjugate(Partition({5, 4, 2, 2, 1})));
    CHECK(is_self_conjugate(Partition({3, 2, 1})));
    CHECK_FALSE(is_self_conjugate(Partition({4, 2, 1})));

    for (int n = 0; n <= 15; ++n)
        for_each_partition(n, [](const Partition& lam) {
            CHECK(conjugate(conjugate(lam)) == lam);
            CHECK(conjugate(lam).size() == lam.size());
        });
}

TEST_CASE("hook lengths") {
    Partition lam({5, 4, 2, 2, 1});
    CHECK(hook_length(lam, {1, 1}) == 9);
    CHECK(hook_length(lam, {1, 3}) == 4);
    CHECK(hook_length(lam, {5, 1}) == 1);
    CHECK(hook_length(Partition({1}), {1, 1}) == 1);
    CHECK_THROWS_AS(hook_length(lam, {1, 6}), std::out_of_range);
    CHECK_THROWS_AS(hook_length(lam, {3, 3}), std::out_of_range);
    CHECK_THROWS_AS(hook_length(lam, {0, 1}), std::out_of_range);

    // hooks of lam transpose to hooks of the conjugate
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [](const Partition& lam) {
            Partition conj = conjugate(lam);
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 1; j <= lam.part(i); ++j)
                    CHECK(hook_length(lam, {i, j}) == hook_length(conj, {j, i}));
        });
}

TEST_CASE("hook_data walks the rim") {
    Partition lam({5, 4, 2, 2, 1});
    HookData hd = hook_data(lam, {1, 3});
    CHECK(hd.length == 4);
    CHECK(hd.corner == Cell{1, 3});
    CHECK(hd.rim_cells ==
          std::vector<Cell>{{1, 5}, {1, 4}, {2, 4}, {2, 3}});

    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [](const Partition& lam) {
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 1; j <= lam.part(i); ++j) {
                    HookData hd = hook_data(lam, {i, j});
                    CHECK(static_cast<int>(hd.rim_cells.size()) == hd.length);
                    CHECK(hd.rim_cells.front().row == i);
                    CHECK(hd.rim_cells.back().col == j);
                }
        });
}

TEST_CASE("remove_rim_hook golden chain") {
    Partition lam({5, 4, 2, 2, 1});
    Partition mu = remove_rim_hook(lam, {1, 3});
    CHECK(mu == Partition({3, 2, 2, 2, 1}));
    CHECK(remove_rim_hook(mu, {3, 1}) == Partition({3, 2, 1}));
    CHECK(remove_rim_hook(Partition({1}), {1, 1}) == Partition{});
    CHECK_THROWS_AS(remove_rim_hook(lam, {3, 3}), std::out_of_range);
}

TEST_CASE("remove_rim_hook removes exactly the hook length") {
    for (int n = 1; n <= 12; ++n)
        for_each_partition(n, [](const Partition& lam) {
            for (int i = 1; i <= lam.length(); ++i)
                for (int j = 1; j <= lam.part(i); ++j) {
                    Partition mu = remove_rim_hook(lam, {i, j});
                    CHECK(mu.size() == lam.size() - hook_length(lam, {i, j}));
                }
        });
}

TEST_CASE("e_core golden values") {
    CHECK(e_core(Partition({5, 4, 2, 2, 1}), 4) == Partition({3, 2, 1}));
    CHECK(e_core(Partition({75}), 11) == Partition({9}));
    CHECK(e_core(Partition({61, 6, 5, 2, 1}), 2) == Partition({5, 4, 3, 2, 1}));
    CHECK(e_core(Partition({3, 2, 1}), 2) == Partition({3, 2, 1}));
    CHECK(e_core(Partition{}, 3) == Partition{});
    CHECK_THROWS_AS(e_core(Partition({2, 1}), 0), std::invalid_argument);

    CHECK(e_weight(Partition({5, 4, 2, 2, 1}), 4) == 2);
    CHECK(e_weight(Partition({3, 2, 1}), 2) == 0);
    CHECK(e_weight(Partition({61, 6, 5, 2, 1}), 2) == 30);
}

TEST_CASE("e_core is independent of removal order") {
    for (int n = 0; n <= 10; ++n)
        for_each_partition(n, [](const Partition& lam) {
            for (int e = 2; e <= 5; ++e) {
                auto cores = bw_test::all_removal_cores(lam, e);
                REQUIRE(cores.size() == 1);
                CHECK(*cores.begin() == e_core(lam, e).parts());
            }
        });
}

TEST_CASE("2-cores are staircases") {
    for (int n = 0; n <= 14; ++n)
        for_each_partition(n, [](const Partition& lam) {
            Partition core = e_core(lam, 2);
            CHECK(core == bw::gamma(core.length()));
        });
}

TEST_CASE("hook multiset is conjugation invariant") {
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [](const Partition& lam) {
            CHECK(bw_test::hook_multiset(lam) == bw_test::hook_multiset(conjugate(lam)));
        });
}

TEST_CASE("diagonal hooks") {
    CHECK(diagonal_hooks(Partition({5, 4, 3, 2, 1})) == Partition({9, 5, 1}));
    CHECK(diagonal_hooks(Partition({4, 3, 2, 1})) == Partition({7, 3}));
    CHECK(diagonal_hooks(Partition({1})) == Partition({1}));
    CHECK(diagonal_hooks(Partition({2, 1})) == Partition({3}));
    CHECK(diagonal_hooks(Partition{}) == Partition{});

    // self-conjugate partitions have odd distinct diagonal hooks summing to n
    for (int n = 1; n <= 14; ++n)
        for_each_partition(n, [](const Partition& lam) {
            if (!is_self_conjugate(lam)) return;
            Partition d = diagonal_hooks(lam);
            CHECK(d.size() == lam.size());
            for (int i = 1; i <= d.length(); ++i) {
                CHECK(d.part(i) % 2 == 1);
                if (i > 1) CHECK(d.part(i - 1) > d.part(i));
            }
        });
}

TEST_CASE("enumeration order and count") {
    std::vector<Partition> p0 = all_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    for (int n = 1; n <= 16; ++n) {
        std::vector<Partition> all = all_partitions(n);
        CHECK(static_cast<long long>(all.size()) == bw_test::partition_count(n));
        CHECK(all.front() == Partition({n}));
        CHECK(all.back() == Partition(std::vector<int>(n, 1)));
        for (size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i].parts() < all[i - 1].parts());
            CHECK(all[i].size() == n);
        }
    }
    CHECK(bw_test::partition_count(14) == 135);
    CHECK_THROWS_AS(all_partitions(-1), std::invalid_argument);
}
