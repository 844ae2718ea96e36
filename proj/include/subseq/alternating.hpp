#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subseq/bigint.hpp"
#include "subseq/core.hpp"
#include "subseq/powerseries.hpp"

namespace subseq {

// Number of maximal monotone runs; 2143 has three (21 | 14 | 43).
inline int runs_count(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) throw std::invalid_argument("runs_count needs a nonempty word");
    if (n == 1) return 1;
    int r = 1;
    for (int i = 1; i + 1 < n; ++i)
        if ((w[i - 1] < w[i]) != (w[i] < w[i + 1])) ++r;
    return r;
}

// Length of the longest alternating subsequence b_1 > b_2 < b_3 > ...
// O(n) through the run structure: the count of maximal runs, plus one when
// the word opens with a descent. A singleton alternates trivially.
inline int as_length(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return 0;
    if (n == 1) return 1;
    int r = runs_count(w);
    return w[0] > w[1] ? r + 1 : r;
}

inline int as_length(const Permutation& w) { return as_length(w.word); }

// O(n^2) subsequence DP, the oracle as_length is validated against.
inline int as_length_dp(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return 0;
    std::vector<int> after_desc(n, 0), after_asc(n, 0);
    int best = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (w[j] > w[i]) after_desc[i] = std::max(after_desc[i], std::max(after_asc[j], 1) + 1);
            if (w[j] < w[i] && after_desc[j] > 0)
                after_asc[i] = std::max(after_asc[i], after_desc[j] + 1);
        }
        best = std::max({best, after_desc[i], after_asc[i]});
    }
    return best;
}

// ---------------------------------------------------------------------------
// The a_k(n) / b_k(n) table. a_k(n) counts as(w) = k over S_n, filled by the
// convolution recurrence; base cases a_0(0) = 1, a_k(0) = 0 (k >= 1),
// a_0(n) = 0 (n >= 1) anchor it. b_k(n) = sum_{j<=k} a_j(n).
// ---------------------------------------------------------------------------
struct AltTable {
    int n_max = 0, k_max = 0;
    std::vector<std::vector<BigInt>> a;  // a[n][k], 0 <= k <= n_max
    std::vector<std::vector<BigInt>> b;

    const BigInt& a_at(int k, int n) const { return a[n][k]; }
    const BigInt& b_at(int k, int n) const { return b[n][std::min(k, n_max)]; }
};

inline AltTable alt_table(int n_max) {
    if (n_max > 60) throw bound_error("alt_table limited to n <= 60");
    AltTable t;
    t.n_max = n_max;
    t.k_max = n_max;
    int K = n_max;
    t.a.assign(n_max + 1, std::vector<BigInt>(K + 1));
    t.a[0][0] = 1;
    std::vector<std::vector<BigInt>> binom(n_max + 1, std::vector<BigInt>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : BigInt(0));
    }
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= K; ++k) {
            BigInt acc = 0;
            for (int j = 1; j <= n; ++j) {
                BigInt inner = 0;
                for (int r = 0; 2 * r <= k - 1; ++r) {
                    int s = k - 1 - 2 * r;
                    BigInt left = t.a[j - 1][2 * r];
                    if (2 * r + 1 <= K) left += t.a[j - 1][2 * r + 1];
                    if (left == 0) continue;
                    inner += left * t.a[n - j][s];
                }
                if (inner != 0) acc += binom[n - 1][j - 1] * inner;
            }
            t.a[n][k] = acc;
        }
    }
    t.b.assign(n_max + 1, std::vector<BigInt>(K + 1));
    for (int n = 0; n <= n_max; ++n) {
        t.b[n][0] = t.a[n][0];
        for (int k = 1; k <= K; ++k) t.b[n][k] = t.b[n][k - 1] + t.a[n][k];
    }
    return t;
}

// Closed form for b_k(n), n >= 1. Convention 0^n = 0 for n >= 1, 0^0 = 1
// (the n = 0 column is 1 directly: the empty permutation always counts).
inline BigInt b_closed(int n, int k) {
    if (k < 1) throw std::invalid_argument("b_closed: k >= 1");
    if (n == 0) return 1;
    BigRat s = 0;
    for (int i = (k % 2 == 0) ? 0 : 1; i <= k; i += 2) {
        for (int j = 0; i + 2 * j <= k; ++j) {
            BigInt ipow;
            if (i == 0)
                ipow = (n == 0) ? 1 : 0;
            else {
                ipow = 1;
                for (int t = 0; t < n; ++t) ipow *= i;
            }
            if (ipow == 0) continue;
            BigInt term = binomial(k - j, (k + i) / 2) * binomial(n, j) * ipow;
            if (j % 2)
                s -= BigRat(term * boost::multiprecision::pow(BigInt(2), j));
            else
                s += BigRat(term * boost::multiprecision::pow(BigInt(2), j));
        }
    }
    s /= BigRat(boost::multiprecision::pow(BigInt(2), k - 1));
    return to_integer(s, "b_k(n)");
}

// Mean and variance of as over S_n, exact. The variance formula is stated
// for n >= 4 only; below that it is left unset.
struct AltMoments {
    BigRat mean;
    std::optional<BigRat> variance;
};

inline AltMoments alt_moments(int n) {
    if (n < 1) throw std::invalid_argument("alt_moments: n >= 1");
    AltMoments m;
    m.mean = (n == 1) ? BigRat(1) : BigRat(4 * n + 1, 6);
    if (n >= 4) m.variance = BigRat(8 * n, 45) - BigRat(13, 180);
    return m;
}

// Euler numbers via sec x + tan x = (1 + sin x) / cos x, exact series.
inline std::vector<BigInt> euler_numbers(int n_max) {
    if (n_max > 40) throw bound_error("euler_numbers limited to n <= 40");
    TruncatedSeries s =
        (TruncatedSeries::one(n_max) + sin_series(n_max)) / cos_series(n_max);
    std::vector<BigInt> e;
    e.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        e.push_back(to_integer(extract_count(s, n, Weight::egf), "Euler number"));
    return e;
}

// ---------------------------------------------------------------------------
// k-unimodal subsequences: longest subsequence with at most k+1 alternating
// runs, i.e. at most k direction changes. Exact DP over (last position,
// changes used, current direction); fine through |w| <= 14.
// ---------------------------------------------------------------------------
inline int k_unimodal_length(const std::vector<int>& w, int k) {
    int n = static_cast<int>(w.size());
    if (n > 14) throw bound_error("k_unimodal_length limited to |w| <= 14");
    if (n == 0) return 0;
    // dp[i][c][d]: best length >= 2 ending at i after c direction changes,
    // last step ascending (d=1) or descending (d=0)
    std::vector<std::vector<std::array<int, 2>>> dp(
        n, std::vector<std::array<int, 2>>(k + 1, {0, 0}));
    int best = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            int d = w[j] < w[i] ? 1 : 0;
            for (int c = 0; c <= k; ++c) {
                if (dp[j][c][d] + 1 > dp[i][c][d]) dp[i][c][d] = dp[j][c][d] + 1;
                if (c + 1 <= k && dp[j][c][1 - d] > 0 && dp[j][c][1 - d] + 1 > dp[i][c + 1][d])
                    dp[i][c + 1][d] = dp[j][c][1 - d] + 1;
            }
            if (2 > dp[i][0][d]) dp[i][0][d] = 2;
        }
        for (int c = 0; c <= k; ++c) best = std::max({best, dp[i][c][0], dp[i][c][1]});
    }
    return best;
}

// Longest 1-unimodal subsequence (at most one direction change) in O(n^2):
// the best ascent-to-peak plus descent-from-peak, either orientation. The
// fast path behind the Steele constant trend check.
inline int unimodal2_length(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return 0;
    std::vector<int> lis_end(n, 1), lds_end(n, 1), lis_start(n, 1), lds_start(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (w[j] < w[i]) lis_end[i] = std::max(lis_end[i], lis_end[j] + 1);
            if (w[j] > w[i]) lds_end[i] = std::max(lds_end[i], lds_end[j] + 1);
        }
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j) {
            if (w[j] > w[i]) lis_start[i] = std::max(lis_start[i], lis_start[j] + 1);
            if (w[j] < w[i]) lds_start[i] = std::max(lds_start[i], lds_start[j] + 1);
        }
    int best = 1;
    for (int i = 0; i < n; ++i) {
        best = std::max(best, lis_end[i] + lds_start[i] - 1);  // rise then fall through i
        best = std::max(best, lds_end[i] + lis_start[i] - 1);  // fall then rise through i
    }
    return best;
}

// Chung's sharp bound: every w in S_n has a 1-unimodal subsequence of
// length ceil(sqrt(3n - 3/4) - 1/2), attained for every n.
inline int chung_bound(int n) {
    return static_cast<int>(std::ceil(std::sqrt(3.0 * n - 0.75) - 0.5 - 1e-12));
}

// ---------------------------------------------------------------------------
// Numeric check of the bivariate generating function B(x,t). The k-tail is
// summed exactly (b_k(n) = n! for k >= n gives a geometric tail), so the
// truncation error is controlled by the x-tail alone:
//   |tail| <= sum_{n>N} x^n / (1-t) = x^{N+1} / ((1-x)(1-t)).
// ---------------------------------------------------------------------------
inline double bxt_closed_form(double x, double t) {
    double rho = std::sqrt(1.0 - t * t);
    double e1 = std::exp(rho * x), e2 = std::exp(2.0 * rho * x);
    return (1.0 + rho + 2.0 * t * e1 + (1.0 - rho) * e2) /
           (1.0 + rho - t * t + (1.0 - rho - t * t) * e2);
}

struct BxtCheck {
    double series_value;
    double closed_value;
    double truncation_bound;
};

inline BxtCheck bxt_check(double x, double t, int n_terms = 24) {
    if (!(x > 0 && x < 1 && t > 0 && t < 1))
        throw std::invalid_argument("bxt_check expects 0 < x, t < 1");
    AltTable tab = alt_table(n_terms);
    double total = 0.0, xn = 1.0;  // x^n / n!
    for (int n = 0; n <= n_terms; ++n) {
        double inner = 0.0, tk = t;  // t^k running power, from k = 1
        for (int k = 1; k < n; ++k) {
            inner += to_double(tab.b_at(k, n)) * tk;
            tk *= t;
        }
        // k >= max(n,1): b = n!; geometric tail. k = 0 contributes only at n = 0.
        int k0 = std::max(n, 1);
        double tk0 = std::pow(t, k0);
        inner += to_double(factorial(n)) * tk0 / (1.0 - t);
        if (n == 0) inner += 1.0;
        total += inner * xn;
        xn *= x / (n + 1);
    }
    BxtCheck c;
    c.series_value = total;
    c.closed_value = bxt_closed_form(x, t);
    c.truncation_bound = std::pow(x, n_terms + 1) / ((1.0 - x) * (1.0 - t));
    return c;
}

}  // namespace subseq
