#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "subseq/core.hpp"

using namespace subseq;

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 2, 2})) == Partition({3, 3, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    // involution on everything up to n = 12
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [&](const Partition& lam) { CHECK(conjugate(conjugate(lam)) == lam); });
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths(Partition({3, 2, 2}));
    CHECK(h == std::vector<std::vector<int>>{{5, 4, 1}, {3, 2}, {2, 1}});
    CHECK(hook_lengths(Partition({1})) == std::vector<std::vector<int>>{{1}});
    CHECK(hook_lengths(Partition({2, 1})) == std::vector<std::vector<int>>{{3, 1}, {1}});
}

TEST_CASE("hook multiset is conjugation invariant") {
    for (int n = 1; n <= 10; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            std::multiset<int> a, b;
            for (const auto& row : hook_lengths(lam)) a.insert(row.begin(), row.end());
            for (const auto& row : hook_lengths(conjugate(lam))) b.insert(row.begin(), row.end());
            CHECK(a == b);
        });
}

TEST_CASE("syt_count") {
    CHECK(syt_count(Partition({3, 2, 2})) == 21);
    for (int n = 1; n <= 9; ++n) CHECK(syt_count(Partition({n})) == 1);
    CHECK(syt_count(Partition({2, 2})) == 2);
    CHECK(syt_count(Partition()) == 1);
}

TEST_CASE("sum of squares of f^lambda is n!") {
    for (int n = 0; n <= 8; ++n) {
        BigInt s = 0;
        for_each_partition(n, [&](const Partition& lam) {
            BigInt f = syt_count(lam);
            s += f * f;
        });
        CHECK(s == factorial(n));
    }
}

TEST_CASE("f^lambda equals f^lambda'") {
    for (int n = 0; n <= 12; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            CHECK(syt_count(lam) == syt_count(conjugate(lam)));
        });
}

TEST_CASE("syt_enumerate") {
    auto t21 = syt_enumerate(Partition({2, 1}));
    REQUIRE(t21.size() == 2);
    std::set<Tableau> set21(t21.begin(), t21.end());
    CHECK(set21.count(Tableau({{1, 2}, {3}})) == 1);
    CHECK(set21.count(Tableau({{1, 3}, {2}})) == 1);

    auto col3 = syt_enumerate(Partition({1, 1, 1}));
    REQUIRE(col3.size() == 1);
    CHECK(col3[0] == Tableau({{1}, {2}, {3}}));

    CHECK(syt_enumerate(Partition({3, 2, 2})).size() == 21);
}

TEST_CASE("enumeration agrees with the hook count and produces valid SYT") {
    for (int n = 0; n <= 8; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            auto all = syt_enumerate(lam);
            CHECK(BigInt(all.size()) == syt_count(lam));
            std::set<Tableau> dedup(all.begin(), all.end());
            CHECK(dedup.size() == all.size());
            for (const Tableau& t : all) {
                CHECK(t.is_valid());
                CHECK(t.is_standard());
                CHECK(t.shape() == lam);
            }
        });
}

TEST_CASE("syt_enumerate size bound") {
    CHECK_THROWS_AS(syt_enumerate(Partition({13})), bound_error);
    CHECK_NOTHROW(syt_enumerate(Partition({13}), 13));
}

TEST_CASE("partition generation order is lexicographically decreasing") {
    auto parts = partitions_of(6);
    REQUIRE(parts.size() == 11);  // p(6)
    CHECK(parts.front() == Partition({6}));
    CHECK(parts.back() == Partition({1, 1, 1, 1, 1, 1}));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        CHECK(parts[i + 1].parts < parts[i].parts);
}

TEST_CASE("bounded partition generation") {
    // lambda_1 <= 2 of n = 6: (2,2,2), (2,2,1,1), (2,1,1,1,1), (1^6)
    CHECK(partitions_of(6, 2).size() == 4);
    // l(lambda) <= 2: (6), (5,1), (4,2), (3,3)
    CHECK(partitions_of(6, 6, 2).size() == 4);
}

TEST_CASE("partition serialization") {
    Partition lam({3, 2, 2});
    CHECK(lam.to_string() == "3,2,2");
    CHECK(Partition::parse("3,2,2") == lam);
    CHECK(Partition::parse("") == Partition());
}

TEST_CASE("invalid structures are rejected") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau({{1, 3}, {2, 2}}), std::invalid_argument);  // column not increasing
    CHECK_THROWS_AS(Tableau({{2, 1}}), std::invalid_argument);
}

TEST_CASE("permutation helpers") {
    Permutation w({3, 1, 5, 4, 2});
    CHECK(w.inverse() == Permutation({2, 5, 1, 4, 3}));
    CHECK(w.reversed() == Permutation({2, 4, 5, 1, 3}));
    CHECK(w.inverse().inverse() == w);
    CHECK(Permutation({2, 1, 3}).is_involution());
    CHECK_FALSE(w.is_involution());
    CHECK(Permutation({2, 1, 3}).fixed_points() == 1);
}
