#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "subseq/matchings.hpp"
#include "subseq/rng.hpp"

using namespace subseq;

TEST_CASE("matching parse / print") {
    Matching m = Matching::parse("1-5,2-9,3-10,4-8,6-7");
    CHECK(m.n_arcs() == 5);
    CHECK(m.to_string() == "1-5,2-9,3-10,4-8,6-7");
    CHECK_THROWS_AS(Matching::parse("1-2,2-3"), std::invalid_argument);
    CHECK_THROWS_AS(Matching::parse("1-1"), std::invalid_argument);
}

TEST_CASE("cross_nest on a worked example") {
    Matching m = Matching::parse("1-5,2-9,3-10,4-8,6-7");
    auto [cr, ne] = cross_nest(m);
    CHECK(cr == 3);
    CHECK(ne == 3);
}

TEST_CASE("cross_nest extremes") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> nested, aligned;
        for (int i = 1; i <= n; ++i) {
            nested.push_back({i, 2 * n + 1 - i});
            aligned.push_back({2 * i - 1, 2 * i});
        }
        auto [cr_n, ne_n] = cross_nest(Matching(std::move(nested)));
        CHECK(cr_n == 1);
        CHECK(ne_n == n);
        auto [cr_a, ne_a] = cross_nest(Matching(std::move(aligned)));
        CHECK(cr_a == 1);
        CHECK(ne_a == 1);
    }
}

TEST_CASE("ds(w_M) = 2 ne(M) (exhaustive n <= 6)") {
    for (int n = 1; n <= 6; ++n)
        for_each_matching(n, [&](const Matching& m) {
            CHECK(lds_length(m.to_involution()) == 2 * nesting_number(m));
        });
}

TEST_CASE("sweep crossing number equals the clique search") {
    for (int n = 1; n <= 5; ++n)
        for_each_matching(n, [&](const Matching& m) {
            CHECK(crossing_number_sweep(m) == crossing_number(m));
        });
    Rng rng(2024, 0);
    for (int rep = 0; rep < 200; ++rep) {
        Matching m;
        m.arcs = sample_matching_arcs(28, rng);
        std::sort(m.arcs.begin(), m.arcs.end());
        CHECK(crossing_number_sweep(m) == crossing_number(m));
    }
}

TEST_CASE("phi basics") {
    OscillatingTableau o = phi(Matching::parse("1-2"));
    REQUIRE(o.shapes.size() == 3);
    CHECK(o.shapes[0] == Partition());
    CHECK(o.shapes[1] == Partition({1}));
    CHECK(o.shapes[2] == Partition());
    CHECK(o.is_valid());
}

TEST_CASE("phi realizes the crossing/nesting statistic law") {
    Matching m = Matching::parse("1-5,2-9,3-10,4-8,6-7");
    OscillatingTableau o = phi(m);
    CHECK(o.is_valid());
    int max_rows = 0, max_cols = 0;
    for (const Partition& p : o.shapes) {
        max_rows = std::max(max_rows, p.length());
        max_cols = std::max(max_cols, p.part(0));
    }
    CHECK(max_rows == 3);  // = cr
    CHECK(max_cols == 3);  // = ne
}

TEST_CASE("statistic law holds for all matchings (n <= 5)") {
    for (int n = 1; n <= 5; ++n)
        for_each_matching(n, [&](const Matching& m) {
            OscillatingTableau o = phi(m);
            int max_rows = 0, max_cols = 0;
            for (const Partition& p : o.shapes) {
                max_rows = std::max(max_rows, p.length());
                max_cols = std::max(max_cols, p.part(0));
            }
            auto [cr, ne] = cross_nest(m);
            CHECK(cr == max_rows);
            CHECK(ne == max_cols);
        });
}

TEST_CASE("phi is a bijection onto O_n (n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        std::set<OscillatingTableau> images;
        long long total = 0;
        for_each_matching(n, [&](const Matching& m) {
            OscillatingTableau o = phi(m);
            CHECK(phi_inverse(o) == m);
            images.insert(o);
            ++total;
        });
        CHECK(BigInt(total) == double_factorial(2 * n - 1));
        CHECK(BigInt(images.size()) == double_factorial(2 * n - 1));
    }
}

TEST_CASE("phi_inverse specifics") {
    OscillatingTableau o;
    o.shapes = {Partition(), Partition({1}), Partition()};
    CHECK(phi_inverse(o) == Matching::parse("1-2"));

    // row growth to (1,1) means cr = 2: the crossing matching
    OscillatingTableau crossed;
    crossed.shapes = {Partition(), Partition({1}), Partition({1, 1}), Partition({1}), Partition()};
    CHECK(phi_inverse(crossed) == Matching::parse("1-3,2-4"));
    CHECK(phi(Matching::parse("1-3,2-4")) == crossed);
    // column growth to (2) is ne = 2: the nested matching
    OscillatingTableau nested;
    nested.shapes = {Partition(), Partition({1}), Partition({2}), Partition({1}), Partition()};
    CHECK(phi_inverse(nested) == Matching::parse("1-4,2-3"));

    OscillatingTableau bad;
    bad.shapes = {Partition(), Partition({2}), Partition()};
    CHECK_THROWS_AS(phi_inverse(bad), std::invalid_argument);
}

TEST_CASE("conjugate_matching swaps cr and ne and is an involution (n <= 4)") {
    Matching nested = Matching::parse("1-6,2-5,3-4");
    Matching conj = conjugate_matching(nested);
    auto [cr, ne] = cross_nest(conj);
    CHECK(cr == 3);
    CHECK(ne == 1);
    for (int n = 1; n <= 4; ++n)
        for_each_matching(n, [&](const Matching& m) {
            Matching c = conjugate_matching(m);
            auto [cr1, ne1] = cross_nest(m);
            auto [cr2, ne2] = cross_nest(c);
            CHECK(cr2 == ne1);
            CHECK(ne2 == cr1);
            CHECK(conjugate_matching(c) == m);
        });
}

TEST_CASE("joint table") {
    JointTable t2 = joint_table(2);
    CHECK(t2.f[1][1] == 1);
    CHECK(t2.f[1][2] == 1);
    CHECK(t2.f[2][1] == 1);
    CHECK(t2.f[2][2] == 0);

    JointTable t3 = joint_table(3);
    BigInt no_crossing = 0, no_nesting = 0;
    for (int j = 1; j <= 3; ++j) no_crossing += t3.f[1][j];
    for (int i = 1; i <= 3; ++i) no_nesting += t3.f[i][1];
    CHECK(no_crossing == catalan(3));
    CHECK(no_nesting == catalan(3));

    for (int n = 1; n <= 5; ++n) {
        JointTable t = joint_table(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(t.f[i][j] == t.f[j][i]);
    }
}

TEST_CASE("Sundaram's formula vs path counting (n <= 7)") {
    CHECK(oscillating_count(Partition(), 2) == 1);
    CHECK(oscillating_count(Partition({1}), 3) == 3);
    for (int m = 1; m <= 5; ++m)
        CHECK(oscillating_count(Partition(), 2 * m) == double_factorial(2 * m - 1));
    for (int n = 0; n <= 7; ++n)
        for (int tot = 0; tot <= n; ++tot)
            for_each_partition(tot, [&](const Partition& lam) {
                CHECK(oscillating_count(lam, n) == oscillating_count_paths(lam, n));
            });
    // parity: zero when n and |lambda| disagree mod 2
    CHECK(oscillating_count(Partition({1}), 4) == 0);
}

TEST_CASE("sum of squares of oscillating counts is (2n-1)!! (m <= 5)") {
    for (int m = 1; m <= 5; ++m) {
        BigInt s = 0;
        for (int tot = 0; tot <= m; ++tot)
            for_each_partition(tot, [&](const Partition& lam) {
                BigInt f = oscillating_count(lam, m);
                s += f * f;
            });
        CHECK(s == double_factorial(2 * m - 1));
    }
}

TEST_CASE("transfer matrix h_pq") {
    auto h11 = h_pq(1, 1, 8);
    for (const BigInt& v : h11) CHECK(v == 1);
    auto h12 = h_pq(1, 2, 4);
    CHECK(h12 == std::vector<BigInt>{1, 1, 2, 4, 8});

    // brute-force agreement for n <= 5
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
        auto h = h_pq(p, q, 5);
        for (int n = 0; n <= 5; ++n) {
            long long cnt = 0;
            for_each_matching(n, [&](const Matching& m) {
                auto [cr, ne] = cross_nest(m);
                if (cr <= p && ne <= q) ++cnt;
            });
            CHECK(h[n] == cnt);
        }
    }
}

TEST_CASE("h_pq reproduces the known rational functions (order 12)") {
    for (auto [p, q] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
        auto h = h_pq(p, q, 12);
        RationalH r = known_h_series(p, q);
        for (int n = 0; n <= 12; ++n) {
            BigInt conv = 0;
            for (std::size_t j = 0; j < r.den.size() && static_cast<int>(j) <= n; ++j)
                conv += r.den[j] * h[n - j];
            BigInt want = n < static_cast<int>(r.num.size()) ? r.num[n] : BigInt(0);
            CHECK(conv == want);
        }
    }
}

TEST_CASE("h_pq monotone in p and q; diagonal saturates at (2n-1)!!") {
    for (int n = 0; n <= 5; ++n) {
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q) {
                CHECK(h_pq(p, q, n)[n] <= h_pq(p + 1, q, n)[n]);
                CHECK(h_pq(p, q, n)[n] <= h_pq(p, q + 1, n)[n]);
            }
        if (n >= 1) CHECK(h_pq(n, n, n)[n] == double_factorial(2 * n - 1));
    }
}
