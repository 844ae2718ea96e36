#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "subseq/enumeration.hpp"

using namespace subseq;

namespace {
BigInt run(Family f, Method m, int n, int k, int p = 0, int q = 0) {
    CountQuery cq;
    cq.family = f;
    cq.method = m;
    cq.n = n;
    cq.k = k;
    cq.p = p;
    cq.q = q;
    return count(cq);
}
}  // namespace

TEST_CASE("count spot values") {
    for (Method m : {Method::brute, Method::shapes, Method::determinant, Method::closed_form})
        CHECK(run(Family::uk, m, 3, 2) == 5);
    CHECK(run(Family::uk, Method::brute, 3, 3) == 6);
    CHECK(run(Family::gpq, Method::shapes, 4, 0, 2, 2) == 4);
    CHECK(run(Family::gpq, Method::brute, 4, 0, 2, 2) == 4);
    CHECK(run(Family::yk, Method::brute, 4, 2) == 6);
    CHECK(run(Family::yk, Method::closed_form, 4, 2) == 6);
}

TEST_CASE("u3 closed form") {
    CHECK(u3_closed(0) == 1);
    CHECK(u3_closed(4) == 23);
    CHECK(u3_closed(6) == run(Family::uk, Method::brute, 6, 3));
    for (int n = 0; n <= 10; ++n) CHECK(u3_closed(n) == run(Family::uk, Method::shapes, n, 3));
}

TEST_CASE("method agreement across families (n <= 7)") {
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; k <= 4; ++k) {
            BigInt b = run(Family::uk, Method::brute, n, k);
            CHECK(run(Family::uk, Method::shapes, n, k) == b);
            CHECK(run(Family::uk, Method::determinant, n, k) == b);
            for (Family f : {Family::yk, Family::v2k, Family::zk}) {
                BigInt fb = run(f, Method::brute, n, k);
                CHECK(run(f, Method::shapes, n, k) == fb);
                CHECK(run(f, Method::determinant, n, k) == fb);
            }
        }
}

TEST_CASE("g_pq sums to n!") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) total += run(Family::gpq, Method::shapes, n, 0, p, q);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("vacuous constraint gives n!") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(run(Family::uk, Method::shapes, n, n) == factorial(n));
        CHECK(run(Family::uk, Method::shapes, n, n + 3) == factorial(n));
    }
}

TEST_CASE("monotonicity in k") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 1; k < 8; ++k) {
            CHECK(run(Family::uk, Method::shapes, n, k) <= run(Family::uk, Method::shapes, n, k + 1));
            CHECK(run(Family::yk, Method::shapes, n, k) <= run(Family::yk, Method::shapes, n, k + 1));
        }
}

TEST_CASE("yk closed forms vs brute force (n <= 9, k <= 5)") {
    for (int n = 0; n <= 9; ++n)
        for (int k = 2; k <= 5; ++k)
            CHECK(yk_closed(n, k) == run(Family::yk, Method::brute, n, k));
}

TEST_CASE("y4 closed form spot check") {
    CHECK(yk_closed(4, 4) == catalan(2) * catalan(3));  // C_2 C_3 = 10 involutions of S_4
    CHECK(yk_closed(4, 4) == 10);
}

TEST_CASE("fixed-point-free families vanish at odd n") {
    for (int n = 1; n <= 9; n += 2) {
        CHECK(run(Family::v2k, Method::shapes, n, 2) == 0);
        CHECK(run(Family::zk, Method::shapes, n, 3) == 0);
        CHECK(run(Family::v2k, Method::determinant, n, 2) == 0);
    }
}

TEST_CASE("doubled conjugate shapes have even columns") {
    for (int n = 0; n <= 6; ++n)
        for_each_partition(n, [&](const Partition& lam) {
            Partition mu = doubled_conjugate(lam);
            CHECK(mu.size() == 2 * n);
            for (int part : conjugate(mu).parts) CHECK(part % 2 == 0);
        });
}

TEST_CASE("z3 determinant series matches brute counts (n <= 10)") {
    TruncatedSeries z3 = involution_series(InvolutionFamily::zk, 3, 10);
    for (int n = 0; n <= 10; ++n)
        CHECK(extract_count(z3, n, Weight::egf) == BigRat(run(Family::zk, Method::brute, n, 3)));
}

TEST_CASE("p-recurrences") {
    RecurrenceReport r4 = check_p_recurrence(4, 12);
    CHECK(r4.all_hold);
    CHECK(r4.values[5] == 119);
    CHECK(r4.values[6] == 694);
    RecurrenceReport r5 = check_p_recurrence(5, 10);
    CHECK(r5.all_hold);
    CHECK(r5.values[6] == 719);
    RecurrenceReport r4b = check_p_recurrence(4, 2);
    CHECK(r4b.all_hold);
}

TEST_CASE("regev asymptotics") {
    RegevEstimate k1 = regev_estimate(1, 5);
    CHECK(k1.exact == 1);
    CHECK(k1.ratio == Catch::Approx(1.0));

    RegevEstimate a = regev_estimate(2, 10), b = regev_estimate(2, 20);
    CHECK(std::abs(b.ratio - 1.0) < std::abs(a.ratio - 1.0));

    // u_3(n)^{1/n} climbs toward 9; convergence is slow (9 * n^{-4/n} scale)
    RegevEstimate c10 = regev_estimate(3, 10), c20 = regev_estimate(3, 20);
    double r10 = std::pow(to_double(c10.exact), 1.0 / 10);
    double r20 = std::pow(to_double(c20.exact), 1.0 / 20);
    CHECK(r20 > r10);
    CHECK(r20 < 9.0);
    CHECK(r20 > 4.5);
}

TEST_CASE("involution_count recurrence matches enumeration") {
    for (int n = 0; n <= 8; ++n) {
        long long cnt = 0;
        for_each_involution(n, [&](const std::vector<int>&) { ++cnt; });
        CHECK(involution_count(n) == cnt);
    }
    // (2m-1)!! fixed-point-free involutions
    for (int m = 1; m <= 4; ++m) {
        long long cnt = 0;
        for_each_ff_involution(2 * m, [&](const std::vector<int>&) { ++cnt; });
        CHECK(double_factorial(2 * m - 1) == cnt);
    }
}

TEST_CASE("unsupported combinations raise") {
    CHECK_THROWS_AS(run(Family::uk, Method::closed_form, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(run(Family::gpq, Method::determinant, 5, 0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(run(Family::uk, Method::brute, 11, 2), bound_error);
}
