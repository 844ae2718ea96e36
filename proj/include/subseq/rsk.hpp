#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "subseq/core.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Row insertion T <- a. The inserted value bumps the smallest larger entry
// of the first row, which is then inserted into the second row, and so on.
// Returns a fresh tableau; entries(T <- a) = entries(T) u {a}.
// ---------------------------------------------------------------------------
inline Tableau row_insert(const Tableau& t, int a) {
    std::vector<std::vector<int>> rows = t.rows;
    int x = a;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({x});
            break;
        }
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it != row.begin() && *(it - 1) == x)
            throw std::invalid_argument("row_insert: duplicate entry");
        if (it == row.end()) {
            row.push_back(x);
            break;
        }
        std::swap(*it, x);
    }
    Tableau out;
    out.rows = std::move(rows);
    if (!out.is_valid()) throw std::invalid_argument("row_insert: input not a tableau");
    return out;
}

namespace detail {
// In-place bump used by the bulk rsk loop; returns the row where the
// insertion terminated (the row that grew).
inline int bump(std::vector<std::vector<int>>& rows, int a) {
    int x = a;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({x});
            return static_cast<int>(i);
        }
        auto& row = rows[i];
        if (row.empty() || row.back() < x) {
            row.push_back(x);
            return static_cast<int>(i);
        }
        auto it = std::upper_bound(row.begin(), row.end(), x);
        std::swap(*it, x);
    }
}

// Inverse bump: remove the last entry of row r and reverse-insert it up
// through the rows; returns the value that leaves the tableau.
inline int reverse_bump(std::vector<std::vector<int>>& rows, int r) {
    int x = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.erase(rows.begin() + r);
    for (int i = r - 1; i >= 0; --i) {
        auto& row = rows[i];
        // largest entry strictly smaller than x gets bumped out
        auto it = std::lower_bound(row.begin(), row.end(), x);
        --it;
        std::swap(*it, x);
    }
    return x;
}
}  // namespace detail

struct RskPair {
    Tableau p;  // insertion tableau
    Tableau q;  // recording tableau

    bool operator==(const RskPair& o) const { return p == o.p && q == o.q; }
    bool operator<(const RskPair& o) const { return p < o.p || (p == o.p && q < o.q); }
};

inline RskPair rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int i = 0; i < w.size(); ++i) {
        int r = detail::bump(p, w.word[i]);
        if (r == static_cast<int>(q.size()))
            q.push_back({i + 1});
        else
            q[r].push_back(i + 1);
    }
    RskPair out;
    out.p.rows = std::move(p);
    out.q.rows = std::move(q);
    return out;
}

inline Permutation rsk_inverse(const RskPair& pair) {
    if (pair.p.shape() != pair.q.shape())
        throw std::invalid_argument("rsk_inverse: P and Q have different shapes");
    if (!pair.p.is_valid() || !pair.q.is_valid() || !pair.p.is_standard() || !pair.q.is_standard())
        throw std::invalid_argument("rsk_inverse: P, Q must be standard Young tableaux");
    int n = pair.p.size();
    std::vector<std::vector<int>> p = pair.p.rows;
    // location of each recording entry
    std::vector<int> row_of(n + 1, -1);
    for (std::size_t i = 0; i < pair.q.rows.size(); ++i)
        for (int a : pair.q.rows[i]) row_of[a] = static_cast<int>(i);
    std::vector<int> word(n);
    for (int t = n; t >= 1; --t) word[t - 1] = detail::reverse_bump(p, row_of[t]);
    return Permutation(std::move(word));
}

// ---------------------------------------------------------------------------
// Patience sorting: length of the longest increasing subsequence in
// O(n log n). Entries are distinct so no tie handling is needed.
// ---------------------------------------------------------------------------
inline int lis_length(const std::vector<int>& w) {
    std::vector<int> tops;  // smallest pile tops
    for (int a : w) {
        auto it = std::lower_bound(tops.begin(), tops.end(), a);
        if (it == tops.end())
            tops.push_back(a);
        else
            *it = a;
    }
    return static_cast<int>(tops.size());
}

inline int lis_length(const Permutation& w) { return lis_length(w.word); }

inline int lds_length(const std::vector<int>& w) {
    std::vector<int> rev(w.rbegin(), w.rend());
    return lis_length(rev);
}

inline int lds_length(const Permutation& w) { return lds_length(w.word); }

// Common shape of rsk(w); lambda_1 = is(w), lambda'_1 = ds(w) (Schensted).
inline Partition shape_of(const Permutation& w) {
    std::vector<std::vector<int>> p;
    for (int a : w.word) detail::bump(p, a);
    std::vector<int> parts;
    parts.reserve(p.size());
    for (const auto& r : p) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Greene statistic oracle. A position set S is a union of k increasing
// subsequences iff the subword on S has no decreasing subsequence of length
// k+1 (Dilworth). The DP walks positions keeping, per chosen subword, the
// set of maximal tails M_d = max last-value over length-d decreasing
// subsequences; that set determines all future lds growth, and since tails
// are distinct values it packs into a bitmask. Pile count never decreases,
// so one unconstrained sweep answers every k at once.
// ---------------------------------------------------------------------------
namespace detail {
inline std::vector<int> greene_all_k(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    if (n > 20) throw bound_error("greene oracle: n exceeds bound");
    std::size_t m = std::size_t{1} << n;
    std::vector<int> dp(m, -1), nxt;
    dp[0] = 0;
    for (int pos = 0; pos < n; ++pos) {
        nxt = dp;
        unsigned a = static_cast<unsigned>(w[pos] - 1);  // 0-based value
        for (std::size_t mask = 0; mask < m; ++mask) {
            int c = dp[mask];
            if (c < 0) continue;
            // take w[pos]: tails > a keep; the largest tail < a is replaced
            std::size_t below = mask & ((std::size_t{1} << a) - 1);
            std::size_t nm;
            if (below) {
                int hb = 63 - __builtin_clzll(below);
                nm = (mask ^ (std::size_t{1} << hb)) | (std::size_t{1} << a);
            } else {
                nm = mask | (std::size_t{1} << a);
            }
            if (nxt[nm] < c + 1) nxt[nm] = c + 1;
        }
        dp.swap(nxt);
    }
    std::vector<int> best(n + 1, 0);
    for (std::size_t mask = 0; mask < m; ++mask) {
        if (dp[mask] < 0) continue;
        int piles = __builtin_popcountll(mask);
        if (dp[mask] > best[piles]) best[piles] = dp[mask];
    }
    for (int k = 1; k <= n; ++k) best[k] = std::max(best[k], best[k - 1]);
    return best;  // best[k] = greene_union(w, k); best[0] = 0
}
}  // namespace detail

// Largest number of elements in a union of k increasing subsequences,
// computed without RSK. Equals lambda_1 + ... + lambda_k of shape_of(w).
inline int greene_union(const Permutation& w, int k, int oracle_bound = 12) {
    if (k < 1 || k > std::max(w.size(), 1))
        throw std::invalid_argument("greene_union: k out of range");
    if (w.size() > oracle_bound)
        throw bound_error("greene_union: n exceeds oracle bound");
    if (w.size() == 0) return 0;
    return detail::greene_all_k(w.word)[std::min(k, w.size())];
}

// Number of odd-length columns of t's shape, i.e. odd parts of lambda'.
// For an involution w -> (P,P) this counts the fixed points of w.
inline int odd_column_count(const Tableau& t) {
    Partition c = conjugate(t.shape());
    int odd = 0;
    for (int p : c.parts)
        if (p % 2) ++odd;
    return odd;
}

inline int odd_column_count(const Partition& shape) {
    Partition c = conjugate(shape);
    int odd = 0;
    for (int p : c.parts)
        if (p % 2) ++odd;
    return odd;
}

}  // namespace subseq
