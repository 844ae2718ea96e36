#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/bigint.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// TruncatedSeries: exact rational coefficients c_0..c_N. Arithmetic never
// consults terms beyond x^N; binary operations truncate to the smaller of
// the two orders. No floating point anywhere.
// ---------------------------------------------------------------------------
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    explicit TruncatedSeries(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BigRat& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("coefficient index exceeds order");
        return c_[n];
    }
    BigRat& coeff(int n) {
        if (n < 0 || n > order()) throw std::out_of_range("coefficient index exceeds order");
        return c_[n];
    }
    const std::vector<BigRat>& coeffs() const { return c_; }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries constant(const BigRat& v, int order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(1, order); }
    static TruncatedSeries x(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }
    TruncatedSeries truncated(int order) const {
        std::vector<BigRat> c(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
        c.resize(order + 1);
        return TruncatedSeries(std::move(c));
    }

    // Multiply by x^k (shift up), dropping overflowed terms.
    TruncatedSeries shifted_up(int k) const {
        TruncatedSeries s(order());
        for (int n = k; n <= order(); ++n) s.c_[n] = c_[n - k];
        return s;
    }
    // Divide by x^k; the dropped low coefficients must be zero.
    TruncatedSeries shifted_down(int k) const {
        for (int n = 0; n < k && n <= order(); ++n)
            if (c_[n] != 0) throw std::domain_error("shifted_down: nonzero low-order coefficient");
        TruncatedSeries s(order());
        for (int n = 0; n + k <= order(); ++n) s.c_[n] = c_[n + k];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries s(ord);
        for (int n = 0; n <= ord; ++n) s.c_[n] = a.c_[n] + b.c_[n];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries s(ord);
        for (int n = 0; n <= ord; ++n) s.c_[n] = a.c_[n] - b.c_[n];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries s(a.order());
        for (int n = 0; n <= a.order(); ++n) s.c_[n] = -a.c_[n];
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int ord = std::min(a.order(), b.order());
        TruncatedSeries s(ord);
        for (int i = 0; i <= ord; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= ord; ++j) {
                if (b.c_[j] == 0) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    friend TruncatedSeries operator*(const BigRat& v, const TruncatedSeries& a) {
        TruncatedSeries s(a.order());
        for (int n = 0; n <= a.order(); ++n) s.c_[n] = v * a.c_[n];
        return s;
    }
    // Long division; b must have a nonzero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (b.c_[0] == 0)
            throw std::domain_error("series division by zero constant term");
        int ord = std::min(a.order(), b.order());
        TruncatedSeries q(ord);
        BigRat inv0 = BigRat(1) / b.c_[0];
        for (int n = 0; n <= ord; ++n) {
            BigRat s = a.c_[n];
            for (int i = 0; i < n; ++i)
                if (q.c_[i] != 0 && b.c_[n - i] != 0) s -= q.c_[i] * b.c_[n - i];
            q.c_[n] = s * inv0;
        }
        return q;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int n = 0; n <= order(); ++n) {
            if (c_[n] == 0 && !(n == 0 && order() == 0)) continue;
            if (!first) os << " + ";
            os << c_[n];
            if (n >= 1) os << "*x";
            if (n >= 2) os << '^' << n;
            first = false;
        }
        if (first) os << '0';
        return os.str();
    }

private:
    std::vector<BigRat> c_;
};

enum class Weight { egf, egf2, ogf };

// c_n * n! (egf), c_{2n} * n!^2 (egf2), or c_n (ogf).
inline BigRat extract_count(const TruncatedSeries& s, int n, Weight w) {
    switch (w) {
        case Weight::egf:
            if (n > s.order()) throw std::out_of_range("extract_count: order exceeded");
            return s.coeff(n) * BigRat(factorial(n));
        case Weight::egf2: {
            if (2 * n > s.order()) throw std::out_of_range("extract_count: order exceeded");
            BigInt f = factorial(n);
            return s.coeff(2 * n) * BigRat(f * f);
        }
        case Weight::ogf:
            if (n > s.order()) throw std::out_of_range("extract_count: order exceeded");
            return s.coeff(n);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Stock series.
// ---------------------------------------------------------------------------

// Hyperbolic Bessel I_i(2x) = sum_{n>=0} x^{2n+|i|} / (n! (n+|i|)!).
// I_i = I_{-i}.
inline TruncatedSeries bessel_series(int i, int order) {
    int a = i < 0 ? -i : i;
    TruncatedSeries s(order);
    BigInt nf = 1, naf = factorial(a);
    for (int n = 0; 2 * n + a <= order; ++n) {
        if (n > 0) {
            nf *= n;
            naf *= (n + a);
        }
        s.coeff(2 * n + a) = BigRat(BigInt(1), nf * naf);
    }
    return s;
}

// e^{c x}
inline TruncatedSeries exp_series(const BigRat& c, int order) {
    TruncatedSeries s(order);
    BigRat term = 1;
    s.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        term = term * c / n;
        s.coeff(n) = term;
    }
    return s;
}

inline TruncatedSeries sin_series(int order) {
    TruncatedSeries s(order);
    BigRat term = 1;
    for (int n = 1; n <= order; n += 2) {
        term = (n == 1) ? BigRat(1) : term * BigRat(-1, (n - 1) * n);
        s.coeff(n) = term;
    }
    return s;
}

inline TruncatedSeries cos_series(int order) {
    TruncatedSeries s(order);
    BigRat term = 1;
    s.coeff(0) = 1;
    for (int n = 2; n <= order; n += 2) {
        term = term * BigRat(-1, (n - 1) * n);
        s.coeff(n) = term;
    }
    return s;
}

// (1 + c x)^alpha by the binomial series, exact rationals.
inline TruncatedSeries binomial_series(const BigRat& alpha, const BigRat& c, int order) {
    TruncatedSeries s(order);
    BigRat term = 1;
    s.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        term = term * (alpha - (n - 1)) / n * c;
        s.coeff(n) = term;
    }
    return s;
}

// a / b allowing a common zero valuation: both sides are shifted down by
// val(b) first. Needed for quotients like 32x / (32x + ...).
inline TruncatedSeries divide_cancelling(const TruncatedSeries& a, const TruncatedSeries& b) {
    int v = 0;
    while (v <= b.order() && b.coeff(v) == 0) ++v;
    if (v > b.order()) throw std::domain_error("division by zero series");
    if (v == 0) return a / b;
    return a.shifted_down(v) / b.shifted_down(v);
}

// ---------------------------------------------------------------------------
// SeriesMatrix and exact determinants. Cofactor expansion handles the small
// sizes that dominate usage; Bareiss fraction-free elimination covers the
// rest (divisions are exact when pivots keep nonzero constant terms, which
// the Bessel-type matrices here do; otherwise fall back to cofactor).
// ---------------------------------------------------------------------------
struct SeriesMatrix {
    std::vector<std::vector<TruncatedSeries>> entries;

    int dim() const { return static_cast<int>(entries.size()); }

    static SeriesMatrix build(int k, int order,
                              const std::function<TruncatedSeries(int, int)>& f) {
        SeriesMatrix m;
        m.entries.resize(k);
        for (int i = 0; i < k; ++i) {
            m.entries[i].reserve(k);
            for (int j = 0; j < k; ++j) m.entries[i].push_back(f(i + 1, j + 1).truncated(order));
        }
        return m;
    }
};

namespace detail {
inline TruncatedSeries det_cofactor(const std::vector<std::vector<TruncatedSeries>>& m, int order) {
    int k = static_cast<int>(m.size());
    if (k == 0) return TruncatedSeries::one(order);
    if (k == 1) return m[0][0];
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (int j = 0; j < k; ++j) {
        std::vector<std::vector<TruncatedSeries>> minor;
        minor.reserve(k - 1);
        for (int r = 1; r < k; ++r) {
            std::vector<TruncatedSeries> row;
            row.reserve(k - 1);
            for (int c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        TruncatedSeries t = m[0][j] * det_cofactor(minor, order);
        acc = (j % 2 == 0) ? acc + t : acc - t;
    }
    return acc;
}

inline bool det_bareiss(std::vector<std::vector<TruncatedSeries>> m, int order,
                        TruncatedSeries& out) {
    int k = static_cast<int>(m.size());
    TruncatedSeries prev = TruncatedSeries::one(order);
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (m[p][p].coeff(0) == 0) {
            int swap_row = -1;
            for (int r = p + 1; r < k; ++r)
                if (m[r][p].coeff(0) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return false;  // let cofactor deal with it
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]) / prev;
        prev = m[p][p];
    }
    out = sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
    return true;
}
}  // namespace detail

inline TruncatedSeries series_det(const SeriesMatrix& m) {
    if (m.dim() == 0) return TruncatedSeries::one(0);
    int order = m.entries[0][0].order();
    if (m.dim() <= 5) return detail::det_cofactor(m.entries, order);
    TruncatedSeries out;
    if (detail::det_bareiss(m.entries, order, out)) return out;
    return detail::det_cofactor(m.entries, order);
}

}  // namespace subseq
