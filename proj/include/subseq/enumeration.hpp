#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/core.hpp"
#include "subseq/powerseries.hpp"
#include "subseq/rsk.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Involution sweeps. Involutions are built by pairing or fixing the largest
// remaining element, which visits each exactly once.
// ---------------------------------------------------------------------------
namespace detail {
template <typename F>
void gen_involutions(std::vector<int>& w, std::vector<int>& free_slots, bool fixed_point_free,
                     F& f) {
    if (free_slots.empty()) {
        f(const_cast<const std::vector<int>&>(w));
        return;
    }
    int a = free_slots.back();
    free_slots.pop_back();
    if (!fixed_point_free) {
        w[a - 1] = a;
        gen_involutions(w, free_slots, fixed_point_free, f);
    }
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
        int b = free_slots[i];
        free_slots.erase(free_slots.begin() + i);
        w[a - 1] = b;
        w[b - 1] = a;
        gen_involutions(w, free_slots, fixed_point_free, f);
        free_slots.insert(free_slots.begin() + i, b);
    }
    free_slots.push_back(a);
}
}  // namespace detail

template <typename F>
void for_each_involution(int n, F&& f) {
    std::vector<int> w(n), slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i + 1;
    detail::gen_involutions(w, slots, false, f);
}

template <typename F>
void for_each_ff_involution(int n, F&& f) {
    if (n % 2) return;  // none exist for odd n
    std::vector<int> w(n), slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i + 1;
    detail::gen_involutions(w, slots, true, f);
}

inline BigInt involution_count(int n) {
    // I(n) = I(n-1) + (n-1) I(n-2)
    BigInt a = 1, b = 1;  // I(0), I(1)
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        BigInt c = b + (m - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

// Shape of a fixed-point-free involution class: every column even, i.e.
// conjugate of the doubled partition 2*lambda.
inline Partition doubled_conjugate(const Partition& lam) {
    std::vector<int> dbl;
    dbl.reserve(lam.length());
    for (int p : lam.parts) dbl.push_back(2 * p);
    return conjugate(Partition(std::move(dbl)));
}

// ---------------------------------------------------------------------------
// Count queries: u_k / g_pq over S_n, y_k over involutions, v_2k / z_k over
// fixed-point-free involutions, each by several mutually checking methods.
// ---------------------------------------------------------------------------
enum class Family { uk, gpq, yk, v2k, zk };
enum class Method { brute, shapes, determinant, closed_form };

struct CountQuery {
    Family family = Family::uk;
    Method method = Method::shapes;
    int n = 0;
    int k = 0;  // bound for uk/yk/zk; for v2k the ds bound is 2k
    int p = 0, q = 0;  // gpq only
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::uk: return "uk";
        case Family::gpq: return "gpq";
        case Family::yk: return "yk";
        case Family::v2k: return "v2k";
        case Family::zk: return "zk";
    }
    return "?";
}

inline const char* method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::shapes: return "shapes";
        case Method::determinant: return "determinant";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

// Gessel's closed form for u_3(n) (EC2, Exer. 7.16(e)); exact rational
// summation with an integral result.
inline BigInt u3_closed(int n) {
    BigRat s = 0;
    for (int j = 0; j <= n; ++j) {
        BigInt num = 2 * binomial(2 * j, j) * binomial(n, j) * binomial(n, j);
        BigInt poly = BigInt(3) * j * j + 2 * j + 1 - n - BigInt(2) * j * n;
        BigInt den = BigInt(j + 1) * (j + 1) * (j + 2) * (n - j + 1);
        s += BigRat(num * poly, den);
    }
    return to_integer(s, "u3 sum");
}

inline BigInt u2_closed(int n) { return catalan(n); }

// Closed forms for the small-k involution counts.
inline BigInt yk_closed(int n, int k) {
    switch (k) {
        case 2:
            return binomial(n, n / 2);
        case 3: {
            BigInt s = 0;
            for (int i = 0; 2 * i <= n; ++i) s += binomial(n, 2 * i) * catalan(i);
            return s;
        }
        case 4:
            return catalan((n + 1) / 2) * catalan((n + 2) / 2);
        case 5: {
            BigRat s = 0;
            for (int i = 0; 2 * i <= n; ++i)
                s += BigRat(binomial(n, 2 * i) * catalan(i) * factorial(2 * i + 2),
                            factorial(i + 2) * factorial(i + 3));
            return to_integer(6 * s, "y5 sum");
        }
        default:
            throw std::invalid_argument("yk closed form only documented for k in {2,3,4,5}");
    }
}

// Determinant generating functions. U_k carries weight x^{2n}/n!^2; the
// involution families carry x^n/n!.
inline TruncatedSeries uk_series(int k, int order) {
    auto I = [&](int i) { return bessel_series(i, order); };
    return series_det(SeriesMatrix::build(
        k, order, [&](int i, int j) { return I(i - j); }));
}

enum class InvolutionFamily { yk, v2k, zk };

inline TruncatedSeries involution_series(InvolutionFamily fam, int k, int order) {
    if (k < 1) throw std::invalid_argument("involution_series: k >= 1 required");
    auto I = [&](int i) { return bessel_series(i, order); };
    auto det = [&](int dim, auto entry) {
        if (dim == 0) return TruncatedSeries::one(order);  // empty determinant
        return series_det(SeriesMatrix::build(dim, order, entry));
    };
    switch (fam) {
        case InvolutionFamily::yk:
            if (k % 2 == 0)
                return det(k / 2, [&](int i, int j) { return I(i - j) + I(i + j - 1); });
            return exp_series(1, order) *
                   det((k - 1) / 2, [&](int i, int j) { return I(i - j) - I(i + j); });
        case InvolutionFamily::v2k:
            return det(k, [&](int i, int j) { return I(i - j) - I(i + j); });
        case InvolutionFamily::zk:
            if (k % 2 == 0) {
                int m = k / 2;
                TruncatedSeries d1 =
                    det(m, [&](int i, int j) { return I(i - j) + I(i + j - 2); });
                TruncatedSeries d2 =
                    det(m - 1, [&](int i, int j) { return I(i - j) - I(i + j); });
                return BigRat(1, 4) * d1 + BigRat(1, 2) * d2;
            } else {
                int m = (k - 1) / 2;
                TruncatedSeries d1 =
                    det(m, [&](int i, int j) { return I(i - j) - I(i + j - 1); });
                TruncatedSeries d2 =
                    det(m, [&](int i, int j) { return I(i - j) + I(i + j - 1); });
                return BigRat(1, 2) * (exp_series(1, order) * d1) +
                       BigRat(1, 2) * (exp_series(-1, order) * d2);
            }
    }
    throw std::logic_error("unreachable");
}

namespace detail {

inline BigInt count_brute(const CountQuery& q) {
    if (q.n > 10) throw bound_error("brute method limited to n <= 10");
    BigInt total = 0;
    switch (q.family) {
        case Family::uk:
            for_each_permutation(q.n, [&](const std::vector<int>& w) {
                if (lis_length(w) <= q.k) ++total;
            });
            break;
        case Family::gpq:
            for_each_permutation(q.n, [&](const std::vector<int>& w) {
                if (lis_length(w) == q.p && lds_length(w) == q.q) ++total;
            });
            break;
        case Family::yk:
            for_each_involution(q.n, [&](const std::vector<int>& w) {
                if (lis_length(w) <= q.k) ++total;
            });
            break;
        case Family::v2k:
            for_each_ff_involution(q.n, [&](const std::vector<int>& w) {
                if (lds_length(w) <= 2 * q.k) ++total;
            });
            break;
        case Family::zk:
            for_each_ff_involution(q.n, [&](const std::vector<int>& w) {
                if (lis_length(w) <= q.k) ++total;
            });
            break;
    }
    return total;
}

inline BigInt count_shapes(const CountQuery& q) {
    if (q.n > 40) throw bound_error("shapes method limited to n <= 40");
    BigInt total = 0;
    switch (q.family) {
        case Family::uk:
            // bound lambda_1 <= k during generation, not by post-filtering
            for_each_partition(q.n, std::min(q.k, q.n), q.n, [&](const Partition& lam) {
                BigInt f = syt_count(lam);
                total += f * f;
            });
            break;
        case Family::gpq:
            if (q.p < 1 || q.q < 1) {
                if (q.n == 0 && q.p == 0 && q.q == 0) return 1;
                return 0;
            }
            for_each_partition(q.n, q.p, q.q, [&](const Partition& lam) {
                if (lam.part(0) != q.p || conjugate(lam).part(0) != q.q) return;
                BigInt f = syt_count(lam);
                total += f * f;
            });
            break;
        case Family::yk:
            for_each_partition(q.n, std::min(q.k, q.n), q.n,
                               [&](const Partition& lam) { total += syt_count(lam); });
            break;
        case Family::v2k:
            if (q.n % 2) return 0;
            for_each_partition(q.n / 2, std::min(q.k, q.n), q.n, [&](const Partition& lam) {
                total += syt_count(doubled_conjugate(lam));
            });
            break;
        case Family::zk:
            if (q.n % 2) return 0;
            // l(lambda) <= k, i.e. conjugate first part bounded
            for_each_partition(q.n / 2, q.n, std::min(q.k, q.n), [&](const Partition& lam) {
                total += syt_count(doubled_conjugate(lam));
            });
            break;
    }
    return total;
}

inline BigInt count_determinant(const CountQuery& q) {
    switch (q.family) {
        case Family::uk: {
            int order = 2 * q.n;
            return to_integer(extract_count(uk_series(q.k, order), q.n, Weight::egf2),
                              "u_k coefficient");
        }
        case Family::yk:
            return to_integer(
                extract_count(involution_series(InvolutionFamily::yk, q.k, q.n), q.n, Weight::egf),
                "y_k coefficient");
        case Family::v2k:
            return to_integer(
                extract_count(involution_series(InvolutionFamily::v2k, q.k, q.n), q.n, Weight::egf),
                "v_2k coefficient");
        case Family::zk:
            return to_integer(
                extract_count(involution_series(InvolutionFamily::zk, q.k, q.n), q.n, Weight::egf),
                "z_k coefficient");
        case Family::gpq:
            throw std::invalid_argument("no determinant method for gpq");
    }
    throw std::logic_error("unreachable");
}

inline BigInt count_closed(const CountQuery& q) {
    if (q.family == Family::uk && q.k == 2) return u2_closed(q.n);
    if (q.family == Family::uk && q.k == 3) return u3_closed(q.n);
    if (q.family == Family::yk && q.k >= 2 && q.k <= 5) return yk_closed(q.n, q.k);
    throw std::invalid_argument(
        "closed form only for (uk,2), (uk,3), (yk,2), (yk,3), (yk,4), (yk,5)");
}

}  // namespace detail

inline BigInt count(const CountQuery& q) {
    if (q.n < 0) throw std::invalid_argument("n must be >= 0");
    switch (q.method) {
        case Method::brute: return detail::count_brute(q);
        case Method::shapes: return detail::count_shapes(q);
        case Method::determinant: return detail::count_determinant(q);
        case Method::closed_form: return detail::count_closed(q);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// P-recurrences for u_4 and u_5. The u_5 recurrence is stored with the
// overall sign of the right-hand side corrected; the uncorrected version
// fails against exact values already at n = 2.
// ---------------------------------------------------------------------------
struct RecurrenceReport {
    bool all_hold = true;
    int first_failure = -1;
    std::vector<BigInt> values;  // u_k(0..n_max)
};

inline RecurrenceReport check_p_recurrence(int k, int n_max) {
    if (k != 4 && k != 5) throw std::invalid_argument("recurrences documented for k = 4, 5");
    int order = 2 * n_max;
    TruncatedSeries s = uk_series(k, order);
    RecurrenceReport rep;
    rep.values.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        rep.values.push_back(to_integer(extract_count(s, n, Weight::egf2), "u_k coefficient"));
    auto u = [&](int n) -> BigInt { return n < 0 ? BigInt(0) : rep.values[n]; };
    for (int n = 2; n <= n_max; ++n) {
        bool ok;
        BigInt N(n);
        if (k == 4) {
            ok = (N + 4) * (N + 3) * (N + 3) * u(n) ==
                 (20 * N * N * N + 62 * N * N + 22 * N - 24) * u(n - 1) -
                     64 * N * (N - 1) * (N - 1) * u(n - 2);
        } else {
            // three-term; n = 2 uses u(-1) = 0
            ok = (N + 6) * (N + 6) * (N + 4) * (N + 4) * u(n) ==
                 (35 * N * N * N * N + 322 * N * N * N + 843 * N * N + 400 * N - 375) * u(n - 1) -
                     (259 * N * N + 622 * N + 45) * (N - 1) * (N - 1) * u(n - 2) +
                     225 * (N - 1) * (N - 1) * (N - 2) * (N - 2) * u(n - 3);
        }
        if (!ok) {
            rep.all_hold = false;
            if (rep.first_failure < 0) rep.first_failure = n;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Regev's asymptotic formula for u_k(n); exact value stays integral, the
// comparison side is floating point through the sqrt(2 pi) constant.
// ---------------------------------------------------------------------------
struct RegevEstimate {
    BigInt exact;
    double asymptotic;
    double ratio;  // exact / asymptotic
};

inline RegevEstimate regev_estimate(int k, int n) {
    CountQuery q;
    q.family = Family::uk;
    q.method = Method::shapes;
    q.n = n;
    q.k = k;
    RegevEstimate r;
    r.exact = count(q);
    double pref = 1.0;
    for (int i = 1; i < k; ++i) pref *= to_double(factorial(i));
    pref *= std::pow(1.0 / std::sqrt(2.0 * M_PI), k - 1);
    pref *= std::pow(0.5, (k * k - 1) / 2.0);
    pref *= std::pow(static_cast<double>(k), k * k / 2.0);
    r.asymptotic =
        pref * std::pow(static_cast<double>(k), 2.0 * n) / std::pow(static_cast<double>(n), (k * k - 1) / 2.0);
    r.ratio = to_double(r.exact) / r.asymptotic;
    return r;
}

}  // namespace subseq
