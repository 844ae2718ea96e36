#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/bigint.hpp"
#include "subseq/core.hpp"
#include "subseq/powerseries.hpp"
#include "subseq/rsk.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Matching: n disjoint arcs covering {1..2n}, stored sorted by left endpoint.
// ---------------------------------------------------------------------------
struct Matching {
    std::vector<std::pair<int, int>> arcs;  // (left, right), left < right

    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> a) : arcs(std::move(a)) {
        for (auto& [l, r] : arcs)
            if (l > r) std::swap(l, r);
        std::sort(arcs.begin(), arcs.end());
        validate();
    }

    int n_arcs() const { return static_cast<int>(arcs.size()); }
    bool operator==(const Matching& o) const { return arcs == o.arcs; }
    bool operator<(const Matching& o) const { return arcs < o.arcs; }

    // The fixed-point-free involution w_M on [2n].
    Permutation to_involution() const {
        std::vector<int> w(2 * n_arcs());
        for (auto [l, r] : arcs) {
            w[l - 1] = r;
            w[r - 1] = l;
        }
        return Permutation(std::move(w));
    }

    static Matching from_involution(const Permutation& w) {
        if (!w.is_involution() || w.fixed_points() != 0)
            throw std::invalid_argument("not a fixed-point-free involution");
        std::vector<std::pair<int, int>> a;
        for (int i = 1; i <= w.size(); ++i)
            if (i < w.word[i - 1]) a.push_back({i, w.word[i - 1]});
        return Matching(std::move(a));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (i) os << ',';
            os << arcs[i].first << '-' << arcs[i].second;
        }
        return os.str();
    }

    static Matching parse(const std::string& s) {
        std::vector<std::pair<int, int>> a;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) throw std::invalid_argument("bad matching token");
            a.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
        }
        return Matching(std::move(a));
    }

private:
    void validate() const {
        int n2 = 2 * n_arcs();
        std::vector<char> seen(n2 + 1, 0);
        for (auto [l, r] : arcs) {
            if (l < 1 || r > n2 || l == r || seen[l] || seen[r])
                throw std::invalid_argument("arcs must partition {1..2n}");
            seen[l] = seen[r] = 1;
        }
    }
};

template <typename F>
void for_each_matching(int n, F&& f) {
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> free_pts(2 * n);
    for (int i = 0; i < 2 * n; ++i) free_pts[i] = i + 1;
    std::function<void()> rec = [&]() {
        if (free_pts.empty()) {
            Matching m;
            m.arcs = arcs;
            std::sort(m.arcs.begin(), m.arcs.end());
            f(const_cast<const Matching&>(m));
            return;
        }
        int a = free_pts.front();
        free_pts.erase(free_pts.begin());
        for (std::size_t i = 0; i < free_pts.size(); ++i) {
            int b = free_pts[i];
            free_pts.erase(free_pts.begin() + i);
            arcs.push_back({a, b});
            rec();
            arcs.pop_back();
            free_pts.insert(free_pts.begin() + i, b);
        }
        free_pts.insert(free_pts.begin(), a);
    };
    rec();
}

// ---------------------------------------------------------------------------
// Crossing and nesting numbers. Mutually nesting arc sets are decreasing
// subsequences of right endpoints in left-endpoint order, so ne reduces to
// lds. Pairwise-crossing sets get an exact branch-and-bound max clique.
// ---------------------------------------------------------------------------
namespace detail {
inline bool arcs_cross(std::pair<int, int> a, std::pair<int, int> b) {
    if (b.first < a.first) std::swap(a, b);
    return a.first < b.first && b.first < a.second && a.second < b.second;
}

inline int max_clique(const std::vector<std::vector<char>>& adj) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    std::vector<int> cand(n), cur;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cands) {
        if (static_cast<int>(cur.size() + cands.size()) <= best) return;
        if (cands.empty()) {
            best = std::max(best, static_cast<int>(cur.size()));
            return;
        }
        std::vector<int> rest = cands;
        while (!rest.empty()) {
            if (static_cast<int>(cur.size() + rest.size()) <= best) return;
            int v = rest.back();
            rest.pop_back();
            cur.push_back(v);
            std::vector<int> next;
            for (int u : rest)
                if (adj[v][u]) next.push_back(u);
            rec(next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    rec(all);
    return best;
}
}  // namespace detail

inline int nesting_number(const Matching& m) {
    std::vector<int> rights;
    rights.reserve(m.n_arcs());
    for (auto [l, r] : m.arcs) rights.push_back(r);
    return lds_length(rights);
}

inline int crossing_number(const Matching& m) {
    int n = m.n_arcs();
    if (n == 0) return 0;
    if (n > 16) throw bound_error("crossing_number clique search limited to n <= 16");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = detail::arcs_cross(m.arcs[i], m.arcs[j]);
    return detail::max_clique(adj);
}

// Sweep form used for large-n sampling: a pairwise-crossing set is a set of
// arcs straddling a common point whose right endpoints increase with their
// left endpoints, so cr = max over anchor arcs of an LIS among straddlers.
// Agrees with the clique search (tested exhaustively for small n).
inline int crossing_number_sweep(const Matching& m) {
    int n = m.n_arcs();
    if (n == 0) return 0;
    int best = 1;
    std::vector<int> straddle;
    for (auto [la, ra] : m.arcs) {
        straddle.clear();
        for (auto [l, r] : m.arcs)  // arcs sorted by left endpoint
            if (l < ra && r >= ra) straddle.push_back(r);
        best = std::max(best, lis_length(straddle));
    }
    return best;
}

inline std::pair<int, int> cross_nest(const Matching& m) {
    return {crossing_number(m), nesting_number(m)};
}

// ---------------------------------------------------------------------------
// The bijection Phi to oscillating tableaux. Right endpoints are labeled
// 1..n from right to left (so positions read left-to-right carry labels
// n..1); left endpoints copy their partner's label. Scanning positions,
// left endpoints row-insert their label and right endpoints delete it. At a
// deletion the label is the tableau maximum, hence sits in a corner.
// ---------------------------------------------------------------------------
struct OscillatingTableau {
    std::vector<Partition> shapes;  // lambda^0 = empty, ..., lambda^k

    int length() const { return static_cast<int>(shapes.size()) - 1; }
    bool operator==(const OscillatingTableau& o) const { return shapes == o.shapes; }
    bool operator<(const OscillatingTableau& o) const {
        return [](const std::vector<Partition>& a, const std::vector<Partition>& b) {
            return std::lexicographical_compare(
                a.begin(), a.end(), b.begin(), b.end(),
                [](const Partition& x, const Partition& y) { return x < y; });
        }(shapes, o.shapes);
    }

    // Consecutive shapes must differ by exactly one square.
    bool is_valid() const {
        if (shapes.empty() || !shapes.front().empty()) return false;
        for (std::size_t i = 0; i + 1 < shapes.size(); ++i) {
            int d = shapes[i + 1].size() - shapes[i].size();
            if (d != 1 && d != -1) return false;
            const Partition& big = d == 1 ? shapes[i + 1] : shapes[i];
            const Partition& small = d == 1 ? shapes[i] : shapes[i + 1];
            int diffs = 0;
            for (int r = 0; r < big.length(); ++r) {
                int delta = big.part(r) - small.part(r);
                if (delta < 0 || delta > 1) return false;
                diffs += delta;
            }
            if (diffs != 1) return false;
        }
        return true;
    }
};

inline OscillatingTableau phi(const Matching& m) {
    int n = m.n_arcs();
    // label arcs: rightmost right endpoint gets 1
    std::vector<std::pair<int, int>> by_right = m.arcs;
    std::sort(by_right.begin(), by_right.end(),
              [](auto a, auto b) { return a.second > b.second; });
    std::vector<int> label_at(2 * n + 1, 0);
    std::vector<bool> is_left(2 * n + 1, false);
    for (int i = 0; i < n; ++i) {
        label_at[by_right[i].second] = i + 1;
        label_at[by_right[i].first] = i + 1;
        is_left[by_right[i].first] = true;
    }
    OscillatingTableau out;
    out.shapes.reserve(2 * n + 1);
    out.shapes.push_back(Partition());
    std::vector<std::vector<int>> t;
    for (int pos = 1; pos <= 2 * n; ++pos) {
        int a = label_at[pos];
        if (is_left[pos]) {
            detail::bump(t, a);
        } else {
            // a is the maximum entry; remove its (corner) cell
            bool removed = false;
            for (auto it = t.begin(); it != t.end() && !removed; ++it)
                if (!it->empty() && it->back() == a) {
                    it->pop_back();
                    if (it->empty()) t.erase(it);
                    removed = true;
                }
            if (!removed) throw std::logic_error("phi: label not at a corner (bug)");
        }
        std::vector<int> parts;
        parts.reserve(t.size());
        for (const auto& row : t) parts.push_back(static_cast<int>(row.size()));
        out.shapes.push_back(Partition(std::move(parts)));
    }
    return out;
}

inline Matching phi_inverse(const OscillatingTableau& o) {
    if (!o.is_valid() || o.length() % 2 != 0 || !o.shapes.back().empty())
        throw std::invalid_argument("phi_inverse: not an oscillating tableau of shape empty");
    int n2 = o.length();
    std::vector<std::vector<int>> t;  // tableau state while walking backwards
    int next_label = 0;
    std::vector<int> left_of(n2 / 2 + 1, 0), right_of(n2 / 2 + 1, 0);
    for (int pos = n2; pos >= 1; --pos) {
        const Partition& before = o.shapes[pos - 1];
        const Partition& after = o.shapes[pos];
        if (after.size() < before.size()) {
            // forward step deleted a label here: restore it with a fresh
            // maximal label at the removed cell
            int row = -1;
            for (int r = 0; r < before.length(); ++r)
                if (before.part(r) != after.part(r)) {
                    row = r;
                    break;
                }
            int label = ++next_label;
            right_of[label] = pos;
            if (row >= static_cast<int>(t.size())) t.push_back({});
            t[row].push_back(label);
        } else {
            // forward step was a row insertion ending at the grown cell;
            // reverse-bump to recover the inserted label
            int row = -1;
            for (int r = 0; r < after.length(); ++r)
                if (after.part(r) != before.part(r)) {
                    row = r;
                    break;
                }
            int label = detail::reverse_bump(t, row);
            left_of[label] = pos;
        }
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(n2 / 2);
    for (int l = 1; l <= n2 / 2; ++l) arcs.push_back({left_of[l], right_of[l]});
    return Matching(std::move(arcs));
}

// Conjugating every shape of Phi(M) and pulling back swaps cr and ne.
inline Matching conjugate_matching(const Matching& m) {
    OscillatingTableau o = phi(m);
    for (Partition& p : o.shapes) p = conjugate(p);
    return phi_inverse(o);
}

// Joint distribution f_n(i, j) = #{M : cr = i, ne = j}, 1-based in i, j.
struct JointTable {
    int n = 0;
    std::vector<std::vector<BigInt>> f;  // f[i][j], 0..n each
};

inline JointTable joint_table(int n) {
    if (n > 7) throw bound_error("joint_table limited to n <= 7");
    JointTable t;
    t.n = n;
    t.f.assign(n + 1, std::vector<BigInt>(n + 1));
    for_each_matching(n, [&](const Matching& m) {
        auto [cr, ne] = cross_nest(m);
        ++t.f[cr][ne];
    });
    return t;
}

// ---------------------------------------------------------------------------
// Sundaram's oscillating hook-length formula and its path-counting oracle.
// ---------------------------------------------------------------------------
inline BigInt oscillating_count(const Partition& lam, int n) {
    int k = lam.size();
    if (n < k || (n - k) % 2) return 0;
    return binomial(n, k) * double_factorial(n - k - 1) * syt_count(lam);
}

// Direct walk counting in Young's lattice (add/remove one square per step).
inline BigInt oscillating_count_paths(const Partition& lam, int n) {
    if (n > 12) throw bound_error("path counting limited to n <= 12");
    std::map<Partition, BigInt> cur;
    cur[Partition()] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Partition, BigInt> next;
        for (const auto& [p, c] : cur) {
            // add a square
            for (int r = 0; r <= p.length(); ++r) {
                int newv = p.part(r) + 1;
                if (r == 0 || p.part(r - 1) >= newv) {
                    std::vector<int> parts = p.parts;
                    if (r < p.length())
                        parts[r] += 1;
                    else
                        parts.push_back(1);
                    next[Partition(std::move(parts))] += c;
                }
            }
            // remove a square
            for (int r = 0; r < p.length(); ++r) {
                if (r + 1 < p.length() && p.parts[r] == p.parts[r + 1]) continue;
                std::vector<int> parts = p.parts;
                parts[r] -= 1;
                next[Partition(std::move(parts))] += c;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(lam);
    return it == cur.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------
// Transfer matrix for h_{p,q}(n): closed walks from the empty shape on the
// add/remove-one-square graph over partitions in the p-row x q-column box.
// Coefficients grow like (2n-1)!!, so the iteration stays in BigInt.
// ---------------------------------------------------------------------------
inline std::vector<Partition> box_partitions(int p, int q) {
    std::vector<Partition> out;
    for (int total = 0; total <= p * q; ++total)
        for_each_partition(total, q, p, [&](const Partition& lam) { out.push_back(lam); });
    return out;
}

inline std::vector<BigInt> h_pq(int p, int q, int n_max) {
    if (p < 1 || q < 1) throw std::invalid_argument("h_pq: p, q >= 1");
    std::vector<Partition> states = box_partitions(p, q);
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
    int m = static_cast<int>(states.size());
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i) {
        const Partition& s = states[i];
        for (int r = 0; r <= s.length(); ++r) {  // add
            int newv = s.part(r) + 1;
            if (newv > q || r >= p) continue;
            if (r == 0 || s.part(r - 1) >= newv) {
                std::vector<int> parts = s.parts;
                if (r < s.length())
                    parts[r] += 1;
                else
                    parts.push_back(1);
                adj[i].push_back(index.at(Partition(std::move(parts))));
            }
        }
        for (int r = 0; r < s.length(); ++r) {  // remove
            if (r + 1 < s.length() && s.parts[r] == s.parts[r + 1]) continue;
            std::vector<int> parts = s.parts;
            parts[r] -= 1;
            adj[i].push_back(index.at(Partition(std::move(parts))));
        }
    }
    std::vector<BigInt> v(m), h;
    v[index.at(Partition())] = 1;
    h.reserve(n_max + 1);
    h.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        for (int step = 0; step < 2; ++step) {
            std::vector<BigInt> w(m);
            for (int i = 0; i < m; ++i) {
                if (v[i] == 0) continue;
                for (int j : adj[i]) w[j] += v[i];
            }
            v = std::move(w);
        }
        h.push_back(v[index.at(Partition())]);
    }
    return h;
}

// Known rational forms of H_{p,q}(x) as integer polynomial (numerator,
// denominator) pairs, cross-checked against the transfer matrix and
// brute-force counts.
struct RationalH {
    std::vector<BigInt> num, den;
};

inline RationalH known_h_series(int p, int q) {
    auto P = [](std::initializer_list<long long> c) {
        std::vector<BigInt> v;
        for (long long x : c) v.push_back(x);
        return v;
    };
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    if (p > q) std::swap(p, q);  // H is symmetric in p, q
    if (p == 1 && q == 1) return {P({1}), P({1, -1})};
    if (p == 1 && q == 2) return {P({1, -1}), P({1, -2})};
    if (p == 1 && q == 3) return {P({1, -2}), P({1, -3, 1})};
    if (p == 2 && q == 2) return {P({1, -5, 2}), mul(P({1, -1}), P({1, -5}))};
    if (p == 2 && q == 3)
        return {P({1, -11, 30, -23, 4}), mul(mul(P({1, -1}), P({1, -3})), P({1, -8, 4}))};
    if (p == 3 && q == 3)
        return {P({1, -24, 186, -567, 690, -285, 15}),
                mul(mul(P({1, -1}), P({1, -19, 83, -1})), P({1, -5, 6, -1}))};
    throw std::invalid_argument("no tabulated H_{p,q} for this (p,q)");
}

}  // namespace subseq
