#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/bigint.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Permutation: a word a_1..a_n on {1..n}, each value exactly once.
// ---------------------------------------------------------------------------
struct Permutation {
    std::vector<int> word;

    Permutation() = default;
    explicit Permutation(std::vector<int> w) : word(std::move(w)) { validate(); }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word.size()); }
    int operator[](int i) const { return word[i]; }  // 0-based position
    bool operator==(const Permutation& o) const { return word == o.word; }
    bool operator<(const Permutation& o) const { return word < o.word; }

    Permutation reversed() const {
        std::vector<int> w(word.rbegin(), word.rend());
        Permutation r;
        r.word = std::move(w);
        return r;
    }

    Permutation inverse() const {
        std::vector<int> w(word.size());
        for (int i = 0; i < size(); ++i) w[word[i] - 1] = i + 1;
        Permutation r;
        r.word = std::move(w);
        return r;
    }

    bool is_involution() const {
        for (int i = 0; i < size(); ++i)
            if (word[word[i] - 1] != i + 1) return false;
        return true;
    }

    int fixed_points() const {
        int c = 0;
        for (int i = 0; i < size(); ++i)
            if (word[i] == i + 1) ++c;
        return c;
    }

    void validate() const {
        std::vector<char> seen(word.size(), 0);
        for (int a : word) {
            if (a < 1 || a > size() || seen[a - 1])
                throw std::invalid_argument("word is not a permutation of {1..n}");
            seen[a - 1] = 1;
        }
    }
};

// Visit all of S_n in lexicographic order; f gets the raw word.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        f(const_cast<const std::vector<int>&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// ---------------------------------------------------------------------------
// Partition: weakly decreasing positive parts, no trailing zeros. The empty
// partition is the canonical zero object, so equality is structural.
// ---------------------------------------------------------------------------
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw std::invalid_argument("parts must be weakly decreasing");
        if (!parts.empty() && parts.back() < 0)
            throw std::invalid_argument("parts must be positive");
    }

    int size() const {  // |lambda|
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& s) {
        std::vector<int> p;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) p.push_back(std::stoi(tok));
        return Partition(std::move(p));
    }
};

inline Partition conjugate(const Partition& lam) {
    std::vector<int> c;
    if (lam.empty()) return Partition();
    c.resize(lam.parts[0]);
    for (int j = 0; j < lam.parts[0]; ++j) {
        int cnt = 0;
        for (int p : lam.parts)
            if (p >= j + 1) ++cnt;
        c[j] = cnt;
    }
    return Partition(std::move(c));
}

// Hook length at (i,j): arm + leg + 1.
inline std::vector<std::vector<int>> hook_lengths(const Partition& lam) {
    Partition conj = conjugate(lam);
    std::vector<std::vector<int>> h(lam.length());
    for (int i = 0; i < lam.length(); ++i) {
        h[i].resize(lam.parts[i]);
        for (int j = 0; j < lam.parts[i]; ++j)
            h[i][j] = (lam.parts[i] - (j + 1)) + (conj.parts[j] - (i + 1)) + 1;
    }
    return h;
}

// Frame-Robinson-Thrall hook-length formula: f^lambda = n! / prod h(u).
inline BigInt syt_count(const Partition& lam) {
    BigInt num = factorial(lam.size());
    BigInt prod = 1;
    for (const auto& row : hook_lengths(lam))
        for (int h : row) prod *= h;
    BigInt q = num / prod;
    if (q * prod != num)
        throw std::logic_error("hook product does not divide n! (bug)");
    return q;
}

// ---------------------------------------------------------------------------
// Tableau: ragged rows, strictly increasing along rows and down columns.
// ---------------------------------------------------------------------------
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
        if (!is_valid()) throw std::invalid_argument("not a row/column-increasing tableau");
    }
    Tableau(std::initializer_list<std::vector<int>> r)
        : Tableau(std::vector<std::vector<int>>(r)) {}

    int size() const {
        int s = 0;
        for (const auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    bool empty() const { return rows.empty(); }

    Partition shape() const {
        std::vector<int> p;
        p.reserve(rows.size());
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }

    bool is_valid() const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) return false;
            if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
            for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
                if (rows[i][j] >= rows[i][j + 1]) return false;
            if (i > 0)
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    if (rows[i - 1][j] >= rows[i][j]) return false;
        }
        return true;
    }

    // Entries are exactly {1..n}.
    bool is_standard() const {
        std::vector<char> seen(size(), 0);
        for (const auto& r : rows)
            for (int a : r) {
                if (a < 1 || a > size() || seen[a - 1]) return false;
                seen[a - 1] = 1;
            }
        return true;
    }

    bool operator==(const Tableau& o) const { return rows == o.rows; }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// ---------------------------------------------------------------------------
// Partition generation. Order is lexicographically decreasing, so the first
// partition of n is (n) and the last is (1^n).
// ---------------------------------------------------------------------------
namespace detail {
template <typename F>
void gen_partitions(int n, int max_part, int max_len, std::vector<int>& acc, F& f) {
    if (n == 0) {
        f(acc);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, max_len - 1, acc, f);
        acc.pop_back();
    }
}
}  // namespace detail

// All lambda |- n with lambda_1 <= max_part and l(lambda) <= max_len.
template <typename F>
void for_each_partition(int n, int max_part, int max_len, F&& f) {
    std::vector<int> acc;
    auto g = [&](const std::vector<int>& parts) { f(Partition(std::vector<int>(parts))); };
    detail::gen_partitions(n, max_part, max_len, acc, g);
}

template <typename F>
void for_each_partition(int n, F&& f) {
    for_each_partition(n, n, n, std::forward<F>(f));
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1) {
    std::vector<Partition> out;
    for_each_partition(n, max_part < 0 ? n : max_part, max_len < 0 ? n : max_len,
                       [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

// ---------------------------------------------------------------------------
// SYT enumeration, the independent oracle for syt_count. Entries 1..n are
// placed in order; entry t may extend any row whose left neighbor row is
// strictly longer. Default size cap keeps output manageable.
// ---------------------------------------------------------------------------
inline std::vector<Tableau> syt_enumerate(const Partition& lam, int size_bound = 12) {
    if (lam.size() > size_bound)
        throw bound_error("syt_enumerate: |lambda| exceeds size bound");
    std::vector<Tableau> out;
    int n = lam.size();
    std::vector<std::vector<int>> rows(lam.length());
    std::vector<int> fill(lam.length(), 0);
    std::function<void(int)> rec = [&](int t) {
        if (t > n) {
            std::vector<std::vector<int>> copy;
            for (const auto& r : rows)
                if (!r.empty()) copy.push_back(r);
            out.push_back(Tableau(std::move(copy)));
            return;
        }
        for (int i = 0; i < lam.length(); ++i) {
            if (fill[i] >= lam.parts[i]) continue;
            if (i > 0 && fill[i - 1] <= fill[i]) continue;
            rows[i].push_back(t);
            ++fill[i];
            rec(t + 1);
            --fill[i];
            rows[i].pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace subseq
