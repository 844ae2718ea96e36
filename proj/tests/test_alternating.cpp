#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "subseq/alternating.hpp"
#include "subseq/core.hpp"
#include "subseq/rsk.hpp"

using namespace subseq;

TEST_CASE("as_length spot values") {
    CHECK(as_length(Permutation::identity(7)) == 1);
    CHECK(as_length(Permutation({5, 4, 3, 2, 1})) == 2);
    CHECK(as_length(Permutation({2, 1, 4, 3})) == 4);
    CHECK(as_length(Permutation({1})) == 1);
    CHECK(as_length(std::vector<int>{}) == 0);
}

TEST_CASE("runs_count") {
    CHECK(runs_count(Permutation::identity(6).word) == 1);
    CHECK(runs_count({2, 1, 4, 3}) == 3);  // 21 | 14 | 43
    CHECK(runs_count({4, 1, 2, 3, 5}) == 2);
    CHECK(runs_count({2, 4, 5, 3, 1}) == 2);
}

TEST_CASE("run formula matches the subsequence DP (exhaustive n <= 9)") {
    for (int n = 1; n <= 9; ++n)
        for_each_permutation(n, [&](const std::vector<int>& w) {
            CHECK(as_length(w) == as_length_dp(w));
        });
}

TEST_CASE("alt_table values") {
    AltTable t = alt_table(10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.b_at(1, n) == 1);
        CHECK(t.b_at(2, n) == boost::multiprecision::pow(BigInt(2), n - 1));
        CHECK(t.b_at(n, n) == factorial(n));
        CHECK(t.b_at(n + 5, n) == factorial(n));
    }
    CHECK(t.b_at(3, 4) == 19);  // (3^4 - 2*4 + 3)/4
    CHECK(t.b_at(4, 4) == 24);
    CHECK(t.b_at(4, 4) - t.b_at(3, 4) == 5);  // E_4
}

TEST_CASE("recurrence matches brute force (n <= 8)") {
    AltTable t = alt_table(8);
    for (int n = 1; n <= 8; ++n) {
        std::map<int, long long> hist;
        for_each_permutation(n, [&](const std::vector<int>& w) { ++hist[as_length(w)]; });
        for (int k = 1; k <= n; ++k) CHECK(t.a_at(k, n) == BigInt(hist[k]));
    }
}

TEST_CASE("closed form matches the recurrence (n <= 20, k <= 8)") {
    AltTable t = alt_table(20);
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= 8; ++k) CHECK(b_closed(n, k) == t.b_at(k, n));
    CHECK(b_closed(0, 3) == 1);
    CHECK(b_closed(5, 2) == 16);
    CHECK(b_closed(4, 4) == 24);
    CHECK(b_closed(7, 1) == 1);
}

TEST_CASE("moments") {
    CHECK(alt_moments(1).mean == BigRat(1));
    CHECK(alt_moments(2).mean == BigRat(3, 2));
    CHECK_FALSE(alt_moments(2).variance.has_value());
    CHECK(alt_moments(4).variance.value() == BigRat(23, 36));
    for (int n = 2; n <= 8; ++n) {
        BigRat sum = 0, sumsq = 0;
        long long cnt = 0;
        for_each_permutation(n, [&](const std::vector<int>& w) {
            int a = as_length(w);
            sum += a;
            sumsq += a * a;
            ++cnt;
        });
        BigRat mean = sum / cnt;
        CHECK(mean == alt_moments(n).mean);
        if (n >= 4) {
            BigRat var = sumsq / cnt - mean * mean;
            CHECK(var == alt_moments(n).variance.value());
        }
    }
}

TEST_CASE("euler numbers") {
    std::vector<BigInt> e = euler_numbers(10);
    std::vector<long long> want{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (int n = 0; n <= 10; ++n) CHECK(e[n] == want[n]);
    // E_n counts alternating permutations
    for (int n = 1; n <= 8; ++n) {
        long long cnt = 0;
        for_each_permutation(n, [&](const std::vector<int>& w) {
            if (as_length(w) == n) ++cnt;
        });
        CHECK(e[n] == cnt);
    }
}

TEST_CASE("a_k(n) = (G(n,k-1) + G(n,k)) / 2 for n >= 2") {
    AltTable t = alt_table(8);
    for (int n = 2; n <= 8; ++n) {
        std::map<int, long long> g;  // runs histogram
        for_each_permutation(n, [&](const std::vector<int>& w) { ++g[runs_count(w)]; });
        for (int k = 1; k <= n; ++k) {
            BigInt lhs = 2 * t.a_at(k, n);
            BigInt rhs = BigInt(g[k - 1]) + BigInt(g[k]);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("k-unimodal lengths") {
    CHECK(k_unimodal_length({4, 1, 2, 3, 5}, 1) == 5);
    CHECK(k_unimodal_length({2, 4, 5, 3, 1}, 1) == 5);
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const std::vector<int>& w) {
            CHECK(k_unimodal_length(w, 0) == std::max(lis_length(w), lds_length(w)));
            CHECK(k_unimodal_length(w, 1) == unimodal2_length(w));
        });
}

TEST_CASE("Chung's sharp 1-unimodal bound (n <= 8)") {
    for (int n = 1; n <= 8; ++n) {
        int min_val = n;
        for_each_permutation(n, [&](const std::vector<int>& w) {
            min_val = std::min(min_val, k_unimodal_length(w, 1));
        });
        CHECK(min_val == chung_bound(n));
    }
}

TEST_CASE("B(x,t) closed form vs numeric summation") {
    for (auto [x, t] : std::vector<std::pair<double, double>>{{0.1, 0.5}, {0.2, 0.3}}) {
        BxtCheck c = bxt_check(x, t);
        CHECK(c.truncation_bound < 1e-8);
        CHECK(std::abs(c.series_value - c.closed_value) < 1e-8);
    }
}
