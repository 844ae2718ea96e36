#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/bigint.hpp"
#include "subseq/core.hpp"
#include "subseq/powerseries.hpp"
#include "subseq/rsk.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Patterns. A classical pattern constrains relative order only. In the
// Babson-Steingrimsson notation a dash marks a free gap; letters not
// separated by a dash must sit adjacently in the host word. "1-32" therefore
// requires the 3 and the 2 to be consecutive. A digit string without any
// dash parses as a classical pattern.
// ---------------------------------------------------------------------------
struct Pattern {
    std::vector<int> word;
    std::vector<bool> adjacent;  // adjacent[i]: letters i, i+1 must be consecutive

    Pattern() = default;

    static Pattern classical(std::vector<int> w) {
        Pattern p;
        p.adjacent.assign(w.empty() ? 0 : w.size() - 1, false);
        p.word = std::move(w);
        Permutation(p.word);  // validates
        return p;
    }

    static Pattern parse(const std::string& s) {
        Pattern p;
        bool any_dash = s.find('-') != std::string::npos;
        bool prev_was_digit = false;
        for (char ch : s) {
            if (ch == '-') {
                if (!prev_was_digit) throw std::invalid_argument("bad pattern string");
                p.adjacent.push_back(false);
                prev_was_digit = false;
            } else if (ch >= '1' && ch <= '9') {
                if (prev_was_digit) p.adjacent.push_back(true);
                p.word.push_back(ch - '0');
                prev_was_digit = true;
            } else {
                throw std::invalid_argument("bad pattern character");
            }
        }
        if (!prev_was_digit) throw std::invalid_argument("bad pattern string");
        if (!any_dash)  // classical: every gap free
            std::fill(p.adjacent.begin(), p.adjacent.end(), false);
        Permutation(p.word);
        return p;
    }

    int size() const { return static_cast<int>(word.size()); }
    bool is_classical() const {
        return std::none_of(adjacent.begin(), adjacent.end(), [](bool b) { return b; });
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i && !adjacent[i - 1]) s.push_back('-');
            s.push_back(static_cast<char>('0' + word[i]));
        }
        return s;
    }
};

namespace detail {
// Backtracking matcher. chosen holds host positions for pattern letters
// 0..depth-1; order-isomorphism is enforced pairwise, adjacency on entry.
inline bool match_from(const std::vector<int>& w, const Pattern& p, std::vector<int>& chosen,
                       int depth, int start) {
    int k = p.size(), n = static_cast<int>(w.size());
    if (depth == k) return true;
    int lo = start;
    int hi = n - (k - depth);  // leave room for the rest
    for (int i = lo; i <= hi; ++i) {
        if (depth > 0 && p.adjacent[depth - 1] && i != chosen[depth - 1] + 1) {
            if (i > chosen[depth - 1] + 1) break;
            continue;
        }
        bool ok = true;
        for (int d = 0; d < depth; ++d)
            if ((w[chosen[d]] < w[i]) != (p.word[d] < p.word[depth])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen[depth] = i;
        if (match_from(w, p, chosen, depth + 1, i + 1)) return true;
    }
    return false;
}

// Containment where the last pattern letter must land on position `last`;
// the incremental test used by prefix-pruned sweeps.
inline bool match_anchored(const std::vector<int>& w, const Pattern& p, int last) {
    int k = p.size();
    if (k == 0) return true;
    if (k > last + 1) return false;
    std::vector<int> chosen(k);
    chosen[k - 1] = last;
    // recursive backward fill
    std::function<bool(int)> rec = [&](int depth) -> bool {  // depth counts filled suffix letters
        if (depth == k) return true;
        int idx = k - 1 - depth;          // pattern letter to place next
        int right = chosen[idx + 1];      // already-placed neighbor
        int hi = right - 1;
        int lo = p.adjacent[idx] ? right - 1 : idx;  // need idx positions below
        for (int i = hi; i >= lo; --i) {
            bool ok = true;
            for (int d = idx + 1; d < k; ++d)
                if ((w[i] < w[chosen[d]]) != (p.word[idx] < p.word[d])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen[idx] = i;
            if (rec(depth + 1)) return true;
        }
        return false;
    };
    return rec(1);
}
}  // namespace detail

inline bool contains(const std::vector<int>& w, const Pattern& p) {
    if (p.size() > static_cast<int>(w.size())) return false;
    std::vector<int> chosen(p.size());
    return detail::match_from(w, p, chosen, 0, 0);
}

inline bool contains(const Permutation& w, const Pattern& p) { return contains(w.word, p); }

inline bool avoids(const std::vector<int>& w, const std::vector<Pattern>& xs) {
    for (const Pattern& p : xs)
        if (contains(w, p)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive avoider counting by prefix-pruned DFS. A prefix containing a
// pattern can never recover, and new containments must use the freshly
// appended letter, so each extension needs one anchored test per pattern.
// ---------------------------------------------------------------------------
inline BigInt avoiders_count(int n, const std::vector<Pattern>& patterns) {
    if (n > 11) throw bound_error("avoiders_count limited to n <= 11");
    if (n == 0) return 1;
    BigInt total = 0;
    std::vector<int> prefix;
    std::vector<bool> used(n + 1, false);
    prefix.reserve(n);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(prefix.size()) == n) {
            ++total;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            prefix.push_back(v);
            used[v] = true;
            bool hit = false;
            for (const Pattern& p : patterns)
                if (detail::match_anchored(prefix, p, static_cast<int>(prefix.size()) - 1)) {
                    hit = true;
                    break;
                }
            if (!hit) rec();
            used[v] = false;
            prefix.pop_back();
        }
    };
    rec();
    return total;
}

// ---------------------------------------------------------------------------
// Quoted generating functions, expanded exactly.
// ---------------------------------------------------------------------------
enum class KnownSeries { catalan, bona1342, haiman_smooth };

inline TruncatedSeries known_series(KnownSeries which, int order) {
    int N = order + 1;  // one guard coefficient for the valuation shifts
    TruncatedSeries one = TruncatedSeries::one(N);
    TruncatedSeries x = TruncatedSeries::x(N);
    switch (which) {
        case KnownSeries::catalan: {
            // (1 - sqrt(1-4x)) / (2x)
            TruncatedSeries num = one - binomial_series(BigRat(1, 2), BigRat(-4), N);
            TruncatedSeries den = BigRat(2) * x;
            return divide_cancelling(num, den).truncated(order);
        }
        case KnownSeries::bona1342: {
            // 32x / (1 + 20x - 8x^2 - (1-8x)^{3/2})
            TruncatedSeries den = one + BigRat(20) * x - BigRat(8) * (x * x) -
                                  binomial_series(BigRat(3, 2), BigRat(-8), N);
            return divide_cancelling(BigRat(32) * x, den).truncated(order);
        }
        case KnownSeries::haiman_smooth: {
            // 1 / (1 - x - x^2/(1-x) * (2x/(1+x-(1-x)C(x)) - 1))
            TruncatedSeries C =
                divide_cancelling(one - binomial_series(BigRat(1, 2), BigRat(-4), N),
                                  BigRat(2) * x);
            TruncatedSeries inner_den = one + x - (one - x) * C;
            TruncatedSeries frac = divide_cancelling(BigRat(2) * x, inner_den);
            TruncatedSeries term = ((x * x) / (one - x)) * (frac - one);
            return (one / (one - x - term)).truncated(order);
        }
    }
    throw std::logic_error("unreachable");
}

// Reifegerste: #{w in S_n(231) : is(w) < k} = (1/n) sum_{i=1}^{k-1} C(n,i) C(n,i-1),
// a sum of Narayana numbers. Stated for k >= 3.
inline BigInt reifegerste_count(int n, int k) {
    if (n < 1) throw std::invalid_argument("reifegerste_count: n >= 1");
    if (k < 3) throw std::invalid_argument("reifegerste_count: stated for k >= 3");
    BigInt s = 0;
    for (int i = 1; i <= k - 1; ++i) s += binomial(n, i) * binomial(n, i - 1);
    BigInt q = s / n;
    if (q * n != s) throw std::logic_error("Narayana sum not divisible by n (bug)");
    return q;
}

// ---------------------------------------------------------------------------
// Generating trees. Level n holds S_n(v); children come from inserting the
// next largest value into every slot that keeps the word avoiding. The level
// sizes recover s_n(v) and the child-count multisets witness tree
// isomorphism (T_123 = T_132 level-by-level).
// ---------------------------------------------------------------------------
struct GeneratingTreeLevels {
    std::vector<BigInt> level_sizes;                  // s_1(v), ..., s_d(v)
    std::vector<std::vector<int>> child_signatures;   // sorted child counts per level, last level omitted
};

inline GeneratingTreeLevels generating_tree(const Pattern& v, int depth) {
    if (depth > 10) throw bound_error("generating_tree limited to depth <= 10");
    if (!v.is_classical())
        throw std::invalid_argument("generating_tree expects a classical pattern");
    GeneratingTreeLevels out;
    std::vector<std::vector<int>> level{{1}};
    for (int n = 1; n <= depth; ++n) {
        out.level_sizes.push_back(static_cast<int>(level.size()));
        if (n == depth) break;
        std::vector<std::vector<int>> next;
        std::vector<int> sig;
        sig.reserve(level.size());
        for (const auto& w : level) {
            int children = 0;
            for (int slot = 0; slot <= static_cast<int>(w.size()); ++slot) {
                std::vector<int> y(w);
                y.insert(y.begin() + slot, n + 1);
                if (!contains(y, v)) {
                    next.push_back(std::move(y));
                    ++children;
                }
            }
            sig.push_back(children);
        }
        std::sort(sig.begin(), sig.end());
        out.child_signatures.push_back(std::move(sig));
        level = std::move(next);
    }
    return out;
}

// s_n(v)^{1/n} for n = 1..n_max; for v = 12...k the sequence heads toward
// the Stanley-Wilf limit (k-1)^2.
inline std::vector<double> stanley_wilf_estimate(const Pattern& v, int n_max) {
    if (n_max > 11) throw bound_error("stanley_wilf_estimate limited to n <= 11");
    std::vector<double> roots;
    roots.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        BigInt s = avoiders_count(n, {v});
        roots.push_back(std::pow(to_double(s), 1.0 / n));
    }
    return roots;
}

// X is proper iff it avoids holding both an identity and a reverse identity.
inline bool is_proper_pattern_set(const std::vector<Pattern>& xs) {
    bool has_identity = false, has_reverse = false;
    for (const Pattern& p : xs) {
        bool inc = true, dec = true;
        for (int i = 0; i + 1 < p.size(); ++i) {
            inc = inc && p.word[i] < p.word[i + 1];
            dec = dec && p.word[i] > p.word[i + 1];
        }
        if (p.size() >= 1 && inc) has_identity = true;
        if (p.size() >= 1 && dec) has_reverse = true;
    }
    return !(has_identity && has_reverse);
}

// Longest subsequence of w avoiding every pattern in X, by subset search
// from the top size down. Oracle quality over speed.
inline int longest_avoiding_subsequence(const std::vector<int>& w, const std::vector<Pattern>& xs) {
    int n = static_cast<int>(w.size());
    if (n > 12) throw bound_error("longest_avoiding_subsequence limited to |w| <= 12");
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_size[__builtin_popcount(mask)].push_back(mask);
    std::vector<int> sub;
    for (int size = n; size >= 1; --size) {
        for (std::uint32_t mask : by_size[size]) {
            sub.clear();
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(w[i]);
            if (avoids(sub, xs)) return size;
        }
    }
    return 0;
}

inline int longest_avoiding_subsequence(const Permutation& w, const std::vector<Pattern>& xs) {
    return longest_avoiding_subsequence(w.word, xs);
}

}  // namespace subseq
