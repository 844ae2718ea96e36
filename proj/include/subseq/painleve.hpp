#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace subseq {

// ---------------------------------------------------------------------------
// Hastings-McLeod solution of Painleve II, u'' = 2u^3 + xu with
// u(x) ~ -exp(-(2/3)x^{3/2}) / (2 sqrt(pi) x^{1/4}) as x -> +inf.
//
// The branch is found by shooting: scale the asymptotic initial data at
// x_max by a multiplier s and integrate leftward. s too large blows down to
// -inf at finite x; s too small decays into the oscillatory family and
// crosses zero. Bisection in long double pins s to the last bit; the
// classification run extends a few units past x_min so the instability is
// detected outside the reported window.
// ---------------------------------------------------------------------------
struct PainleveSolution {
    std::vector<double> x;   // ascending grid
    std::vector<double> u;
    std::vector<double> up;  // u'
    double tol = 0.0;
    double multiplier = 0.0;  // converged shooting parameter

    double x_min() const { return x.front(); }
    double x_max() const { return x.back(); }
    double step() const { return x[1] - x[0]; }

    // Max |u'' - 2u^3 - xu| over interior nodes, u'' from a 5-point stencil
    // on the stored values.
    double max_residual() const {
        double h = step(), worst = 0.0;
        for (std::size_t i = 2; i + 2 < x.size(); ++i) {
            double upp = (-u[i - 2] + 16 * u[i - 1] - 30 * u[i] + 16 * u[i + 1] - u[i + 2]) /
                         (12 * h * h);
            worst = std::max(worst, std::abs(upp - (2 * u[i] * u[i] * u[i] + x[i] * u[i])));
        }
        return worst;
    }
};

namespace detail {
inline long double hm_asym(long double x) {
    return -std::exp(-(2.0L / 3.0L) * std::pow(x, 1.5L)) /
           (2.0L * std::sqrt(static_cast<long double>(M_PI)) * std::pow(x, 0.25L));
}
inline long double hm_asym_deriv(long double x) {
    return hm_asym(x) * (-std::sqrt(x) - 1.0L / (4.0L * x));
}

struct ShootResult {
    int verdict;  // +1 crossed zero (s too small), -1 blew down (s too large), 0 survived
};

// One RK4 pass from x_max down to x_stop; optionally records (u, u') at
// every grid node x_max - k*h_grid.
inline ShootResult integrate_hm(long double s, long double x_max, long double x_stop,
                                long double h_grid, int substeps,
                                std::vector<double>* rec_u, std::vector<double>* rec_up) {
    long double u = s * hm_asym(x_max);
    long double v = s * hm_asym_deriv(x_max);
    long double x = x_max;
    long double h = -h_grid / substeps;
    auto f = [](long double x, long double u, long double v, long double& du, long double& dv) {
        du = v;
        dv = 2.0L * u * u * u + x * u;
    };
    if (rec_u) {
        rec_u->push_back(static_cast<double>(u));
        rec_up->push_back(static_cast<double>(v));
    }
    long long total_nodes = llround(static_cast<double>((x_max - x_stop) / h_grid));
    for (long long node = 0; node < total_nodes; ++node) {
        for (int k = 0; k < substeps; ++k) {
            long double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
            f(x, u, v, k1u, k1v);
            f(x + h / 2, u + h / 2 * k1u, v + h / 2 * k1v, k2u, k2v);
            f(x + h / 2, u + h / 2 * k2u, v + h / 2 * k2v, k3u, k3v);
            f(x + h, u + h * k3u, v + h * k3v, k4u, k4v);
            u += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
            v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
            x += h;
        }
        if (u > 0.0L) return {+1};
        long double guard = 3.0L + 2.0L * std::sqrt(std::max(0.0L, -x) / 2.0L);
        if (u < -guard || u != u) return {-1};  // blow-down (or numeric overflow)
        if (rec_u) {
            rec_u->push_back(static_cast<double>(u));
            rec_up->push_back(static_cast<double>(v));
        }
    }
    return {0};
}
}  // namespace detail

inline PainleveSolution painleve_solve(double x_min = -8.0, double x_max = 6.0,
                                       double tol = 1e-10, double grid_step = 0.02) {
    if (x_max < 6.0 || x_min > -6.0)
        throw std::invalid_argument("painleve_solve needs x_max >= 6 and x_min <= -6");
    if (tol < 1e-12) throw std::invalid_argument("tol >= 1e-12 required");
    const long double margin = 4.0L;  // classify past x_min; instability shows there first
    const long double x_stop = static_cast<long double>(x_min) - margin;
    const int substeps = 25;  // RK4 at h = grid_step/25 keeps local error ~1e-16
    long double lo = 0.5L, hi = 1.5L;
    if (detail::integrate_hm(lo, x_max, x_stop, grid_step, substeps, nullptr, nullptr).verdict !=
            +1 ||
        detail::integrate_hm(hi, x_max, x_stop, grid_step, substeps, nullptr, nullptr).verdict !=
            -1)
        throw std::runtime_error("painleve_solve: no bisection bracket (nonconvergence)");
    for (int it = 0; it < 90 && hi - lo > 0x1.0p-66L * hi; ++it) {
        long double mid = (lo + hi) / 2;
        int v = detail::integrate_hm(mid, x_max, x_stop, grid_step, substeps, nullptr, nullptr)
                    .verdict;
        if (v == +1)
            lo = mid;
        else if (v == -1)
            hi = mid;
        else
            break;  // survived the whole window: good enough
    }
    long double s = (lo + hi) / 2;
    PainleveSolution sol;
    sol.tol = tol;
    sol.multiplier = static_cast<double>(s);
    std::vector<double> ru, rv;
    auto res = detail::integrate_hm(s, x_max, static_cast<long double>(x_min), grid_step, substeps,
                                    &ru, &rv);
    if (res.verdict != 0)
        throw std::runtime_error("painleve_solve: converged multiplier left the branch");
    // recorded right-to-left; store ascending
    long long nodes = llround((x_max - x_min) / grid_step);
    sol.x.resize(nodes + 1);
    sol.u.assign(ru.rbegin(), ru.rend());
    sol.up.assign(rv.rbegin(), rv.rend());
    for (long long i = 0; i <= nodes; ++i) sol.x[i] = x_min + static_cast<double>(i) * grid_step;
    return sol;
}

// ---------------------------------------------------------------------------
// Distribution tables. F(t) = exp(-integral_t^inf (x-t) u(x)^2 dx); the
// Baik-Rains variants combine F^{1/2} with exp or cosh of (1/2) int u.
// Integrals accumulate right-to-left with Hermite-corrected trapezoids
// (integrand derivatives are known along the solution), plus analytic tail
// terms from the x > x_max asymptotic.
// ---------------------------------------------------------------------------
enum class CdfVariant { tracy_widom, br_involution, br_ffi_ds, br_ffi_is, gaussian };

struct CdfTable {
    CdfVariant variant = CdfVariant::tracy_widom;
    std::vector<double> t;
    std::vector<double> F;

    bool weakly_increasing() const {
        for (std::size_t i = 0; i + 1 < F.size(); ++i)
            if (F[i + 1] < F[i]) return false;
        return true;
    }

    // Linear interpolation; clamps beyond the grid.
    double eval(double tv) const {
        if (tv <= t.front()) return F.front();
        if (tv >= t.back()) return F.back();
        std::size_t i = static_cast<std::size_t>((tv - t.front()) / (t[1] - t[0]));
        if (i + 1 >= t.size()) i = t.size() - 2;
        double w = (tv - t[i]) / (t[i + 1] - t[i]);
        return F[i] * (1 - w) + F[i + 1] * w;
    }
};

namespace detail {
// Simpson over [a, b] with m even panels.
template <typename G>
double simpson(G&& g, double a, double b, int m) {
    double h = (b - a) / m, s = g(a) + g(b);
    for (int i = 1; i < m; ++i) s += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

struct TwIntegrals {
    std::vector<double> I;  // int_t^inf (x-t) u^2
    std::vector<double> J;  // int_t^inf u^2
    std::vector<double> K;  // int_t^inf u
};

inline TwIntegrals accumulate_integrals(const PainleveSolution& sol) {
    std::size_t n = sol.x.size();
    double h = sol.step();
    double xm = sol.x_max();
    auto A = [](double x) {
        return -std::exp(-(2.0 / 3.0) * std::pow(x, 1.5)) /
               (2.0 * std::sqrt(M_PI) * std::pow(x, 0.25));
    };
    TwIntegrals out;
    out.I.resize(n);
    out.J.resize(n);
    out.K.resize(n);
    // tails from the asymptotic; integrands are ~1e-10 at x = 6 and collapse fast
    out.J[n - 1] = simpson([&](double x) { return A(x) * A(x); }, xm, xm + 12.0, 2400);
    out.I[n - 1] =
        simpson([&](double x) { return (x - xm) * A(x) * A(x); }, xm, xm + 12.0, 2400);
    out.K[n - 1] = simpson(A, xm, xm + 12.0, 2400);
    for (std::size_t idx = n - 1; idx-- > 0;) {
        double g0 = sol.u[idx] * sol.u[idx], g1 = sol.u[idx + 1] * sol.u[idx + 1];
        double gp0 = 2 * sol.u[idx] * sol.up[idx], gp1 = 2 * sol.u[idx + 1] * sol.up[idx + 1];
        out.J[idx] = out.J[idx + 1] + h / 2 * (g0 + g1) + h * h / 12 * (gp0 - gp1);
        // I' = -J, J' = -u^2
        out.I[idx] = out.I[idx + 1] + h / 2 * (out.J[idx] + out.J[idx + 1]) + h * h / 12 * (-g0 + g1);
        out.K[idx] = out.K[idx + 1] + h / 2 * (sol.u[idx] + sol.u[idx + 1]) +
                     h * h / 12 * (sol.up[idx] - sol.up[idx + 1]);
    }
    return out;
}
}  // namespace detail

struct TwMoments {
    double mean = 0.0;
    double variance = 0.0;
};

inline CdfTable tw_cdf(const PainleveSolution& sol, TwMoments* moments = nullptr) {
    if (sol.x_min() > -8.0 || sol.x_max() < 6.0)
        throw std::invalid_argument("tw_cdf needs the solution to span [-8, 6]");
    detail::TwIntegrals acc = detail::accumulate_integrals(sol);
    CdfTable table;
    table.variant = CdfVariant::tracy_widom;
    table.t = sol.x;
    table.F.resize(sol.x.size());
    for (std::size_t i = 0; i < sol.x.size(); ++i) table.F[i] = std::exp(-acc.I[i]);
    if (moments) {
        // F' = F J; integrate t F J and t^2 F J by Simpson on the grid
        std::size_t n = sol.x.size();
        double h = sol.step();
        auto density = [&](std::size_t i) { return table.F[i] * acc.J[i]; };
        double m1 = 0.0, m2 = 0.0, norm = 0.0;
        // composite Simpson needs an even panel count; fold the last panel
        // with a trapezoid if necessary (its density is ~1e-11 anyway)
        std::size_t panels = n - 1;
        std::size_t even_end = panels % 2 == 0 ? n - 1 : n - 2;
        for (std::size_t i = 0; i < even_end; i += 2) {
            double w0 = 1.0, w1 = 4.0, w2 = 1.0;
            double f0 = density(i), f1 = density(i + 1), f2 = density(i + 2);
            norm += h / 3 * (w0 * f0 + w1 * f1 + w2 * f2);
            m1 += h / 3 * (w0 * f0 * sol.x[i] + w1 * f1 * sol.x[i + 1] + w2 * f2 * sol.x[i + 2]);
            m2 += h / 3 *
                  (w0 * f0 * sol.x[i] * sol.x[i] + w1 * f1 * sol.x[i + 1] * sol.x[i + 1] +
                   w2 * f2 * sol.x[i + 2] * sol.x[i + 2]);
        }
        if (even_end != n - 1) {
            double f0 = density(n - 2), f1 = density(n - 1);
            norm += h / 2 * (f0 + f1);
            m1 += h / 2 * (f0 * sol.x[n - 2] + f1 * sol.x[n - 1]);
            m2 += h / 2 * (f0 * sol.x[n - 2] * sol.x[n - 2] + f1 * sol.x[n - 1] * sol.x[n - 1]);
        }
        moments->mean = m1;  // norm deviates from 1 by the (negligible) tails
        moments->variance = m2 - m1 * m1;
        (void)norm;
    }
    return table;
}

inline CdfTable baik_rains_cdf(CdfVariant variant, const PainleveSolution& sol) {
    if (variant == CdfVariant::tracy_widom || variant == CdfVariant::gaussian)
        throw std::invalid_argument("baik_rains_cdf expects a Baik-Rains variant");
    if (sol.x_min() > -8.0 || sol.x_max() < 6.0)
        throw std::invalid_argument("baik_rains_cdf needs the solution to span [-8, 6]");
    detail::TwIntegrals acc = detail::accumulate_integrals(sol);
    CdfTable table;
    table.variant = variant;
    table.t = sol.x;
    table.F.resize(sol.x.size());
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        double half_logF = -acc.I[i] / 2.0;
        double halfK = acc.K[i] / 2.0;
        if (variant == CdfVariant::br_ffi_is)
            table.F[i] = std::exp(half_logF) * std::cosh(halfK);
        else  // involution law and ffi ds law share the display
            table.F[i] = std::exp(half_logF + halfK);
    }
    return table;
}

inline CdfTable gaussian_cdf(double mean, double stddev, const std::vector<double>& grid) {
    CdfTable t;
    t.variant = CdfVariant::gaussian;
    t.t = grid;
    t.F.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        t.F[i] = 0.5 * std::erfc(-(grid[i] - mean) / (stddev * std::sqrt(2.0)));
    return t;
}

}  // namespace subseq
