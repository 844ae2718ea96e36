#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "subseq/alternating.hpp"
#include "subseq/matchings.hpp"
#include "subseq/painleve.hpp"
#include "subseq/rng.hpp"
#include "subseq/rsk.hpp"

namespace subseq {

// ---------------------------------------------------------------------------
// Monte Carlo over permutations, involutions, fixed-point-free involutions
// and matchings. Work is split across RngSpec.streams independent
// generators; per-stream results merge in stream order, so the outcome is a
// pure function of (seed, streams) whatever the thread schedule does.
// ---------------------------------------------------------------------------
enum class Statistic { is, ds, as, cr, ne };

inline Statistic parse_statistic(const std::string& s) {
    if (s == "is") return Statistic::is;
    if (s == "ds") return Statistic::ds;
    if (s == "as") return Statistic::as;
    if (s == "cr") return Statistic::cr;
    if (s == "ne") return Statistic::ne;
    throw std::invalid_argument("unknown statistic: " + s);
}

struct McSummary {
    long long trials = 0;
    double mean = 0.0;
    double variance = 0.0;  // population variance of the samples
    std::map<int, long long> histogram;

    std::vector<int> sorted_samples;  // filled when keep_samples was set
};

inline int evaluate_statistic(Statistic stat, const std::vector<int>& word,
                              const std::vector<std::pair<int, int>>& arcs) {
    switch (stat) {
        case Statistic::is: return lis_length(word);
        case Statistic::ds: return lds_length(word);
        case Statistic::as: return as_length(word);
        case Statistic::cr: {
            Matching m;
            m.arcs = arcs;
            return m.n_arcs() <= 16 ? crossing_number(m) : crossing_number_sweep(m);
        }
        case Statistic::ne: {
            Matching m;
            m.arcs = arcs;
            return nesting_number(m);
        }
    }
    throw std::logic_error("unreachable");
}

inline bool statistic_valid_for(Statistic stat, SampleKind kind) {
    bool on_matchings = stat == Statistic::cr || stat == Statistic::ne;
    return on_matchings == (kind == SampleKind::matching);
}

inline McSummary monte_carlo(Statistic stat, SampleKind kind, int n, long long trials,
                             const RngSpec& spec, bool keep_samples = false) {
    if (!statistic_valid_for(stat, kind))
        throw std::invalid_argument("statistic not valid for this sample kind");
    if ((kind == SampleKind::ffinvolution && n % 2) ||
        (kind == SampleKind::matching && n < 0))
        throw std::invalid_argument("ground set must be even for fixed-point-free sampling");
    int streams = std::max(1, spec.streams);
    struct StreamAcc {
        double sum = 0.0, sumsq = 0.0;
        std::map<int, long long> hist;
        std::vector<int> samples;
    };
    std::vector<StreamAcc> acc(streams);
    std::shared_ptr<InvolutionSampler> inv_sampler;
    if (kind == SampleKind::involution) inv_sampler = std::make_shared<InvolutionSampler>(n);
    auto run_stream = [&](int si) {
        Rng rng(spec.seed, si);
        long long base = trials / streams, extra = trials % streams;
        long long mine = base + (si < extra ? 1 : 0);
        StreamAcc& a = acc[si];
        if (keep_samples) a.samples.reserve(mine);
        std::vector<int> word;
        std::vector<std::pair<int, int>> arcs;
        for (long long t = 0; t < mine; ++t) {
            switch (kind) {
                case SampleKind::perm: word = sample_permutation_word(n, rng); break;
                case SampleKind::involution: word = (*inv_sampler)(rng); break;
                case SampleKind::ffinvolution: word = sample_ff_involution_word(n, rng); break;
                case SampleKind::matching:
                    arcs = sample_matching_arcs(2 * n, rng);
                    std::sort(arcs.begin(), arcs.end());
                    break;
            }
            int v = evaluate_statistic(stat, word, arcs);
            a.sum += v;
            a.sumsq += static_cast<double>(v) * v;
            ++a.hist[v];
            if (keep_samples) a.samples.push_back(v);
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const char* env = std::getenv("SUBSEQ_LAB_THREADS");
    unsigned want = env ? static_cast<unsigned>(std::max(1, std::atoi(env))) : hw;
    if (streams > 1 && want > 1) {
        std::vector<std::thread> pool;
        unsigned workers = std::min<unsigned>(want, static_cast<unsigned>(streams));
        // static partition keeps determinism trivially
        for (unsigned wkr = 0; wkr < workers; ++wkr) {
            pool.emplace_back([&, wkr]() {
                for (int i = static_cast<int>(wkr); i < streams; i += static_cast<int>(workers))
                    run_stream(i);
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (int si = 0; si < streams; ++si) run_stream(si);
    }
    McSummary s;
    s.trials = trials;
    double sum = 0.0, sumsq = 0.0;
    for (const StreamAcc& a : acc) {  // fixed (stream index) reduction order
        sum += a.sum;
        sumsq += a.sumsq;
        for (auto [k, v] : a.hist) s.histogram[k] += v;
        if (keep_samples)
            s.sorted_samples.insert(s.sorted_samples.end(), a.samples.begin(), a.samples.end());
    }
    s.mean = sum / trials;
    s.variance = sumsq / trials - s.mean * s.mean;
    if (keep_samples) std::sort(s.sorted_samples.begin(), s.sorted_samples.end());
    return s;
}

// ---------------------------------------------------------------------------
// Limit shapes. Psi is the Logan-Shepp / Vershik-Kerov curve in the
// original coordinates; Omega is its 45-degree-rotated form.
// ---------------------------------------------------------------------------
struct CurvePoint {
    double x, y;
};

inline std::vector<CurvePoint> psi_curve(int samples) {
    if (samples < 2) throw std::invalid_argument("psi_curve: samples >= 2");
    std::vector<CurvePoint> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double theta = M_PI * i / (samples - 1);
        double y = (2.0 / M_PI) * (std::sin(theta) - theta * std::cos(theta));
        double x = y + 2.0 * std::cos(theta);
        pts.push_back({x, y});
    }
    return pts;
}

inline double omega(double x) {
    if (std::abs(x) >= 2.0) return std::abs(x);
    return (2.0 / M_PI) * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

inline std::vector<CurvePoint> omega_curve(int samples) {
    if (samples < 2) throw std::invalid_argument("omega_curve: samples >= 2");
    std::vector<CurvePoint> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double x = -2.0 + 4.0 * i / (samples - 1);
        pts.push_back({x, omega(x)});
    }
    return pts;
}

// Rotated-frame profile of a partition scaled by 1/sqrt(n): height of the
// diagram boundary above antidiagonal coordinate t (in units of cells),
// extended by |t| outside the diagram.
inline double rotated_profile(const Partition& lam, double t) {
    double best = std::abs(t);
    for (int i = 1; i <= lam.length(); ++i) {
        double cap = std::min(static_cast<double>(i), lam.parts[i - 1] - t);
        double lo = i - 1;
        if (cap > lo) best = std::max(best, 2.0 * cap + t);
    }
    return best;
}

// Mean sup-distance between the rescaled staircase of a random shape and
// Omega over |x| <= 2; decreases with n (trend, no absolute tolerance).
inline double empirical_shape_deviation(int n, int trials, const RngSpec& spec) {
    if (n < 100) throw std::invalid_argument("empirical_shape_deviation: n >= 100");
    Rng rng(spec.seed, 0);
    double sum = 0.0;
    double sq = std::sqrt(static_cast<double>(n));
    for (int t = 0; t < trials; ++t) {
        Permutation w(sample_permutation_word(n, rng));
        Partition lam = shape_of(w);
        double worst = 0.0;
        for (int i = -200; i <= 200; ++i) {
            double x = i / 100.0;
            double prof = rotated_profile(lam, x * sq) / sq;
            worst = std::max(worst, std::abs(prof - omega(x)));
        }
        sum += worst;
    }
    return sum / trials;
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov distance between scaled Monte Carlo samples and a CDF
// table.
// ---------------------------------------------------------------------------
inline double ks_distance(const std::vector<double>& sorted_samples, const CdfTable& table) {
    std::size_t n = sorted_samples.size();
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double F = table.eval(sorted_samples[i]);
        worst = std::max(worst, std::abs(F - static_cast<double>(i) / n));
        worst = std::max(worst, std::abs(F - static_cast<double>(i + 1) / n));
    }
    return worst;
}

// Centering/scaling per limit law. `n` is the permutation size (or arc
// count for matchings).
inline double scale_statistic(CdfVariant variant, Statistic stat, int n, double value) {
    switch (variant) {
        case CdfVariant::tracy_widom:  // (is_n - 2 sqrt n) / n^{1/6}
            return (value - 2.0 * std::sqrt(static_cast<double>(n))) /
                   std::pow(static_cast<double>(n), 1.0 / 6.0);
        case CdfVariant::br_involution:
        case CdfVariant::br_ffi_ds:
        case CdfVariant::br_ffi_is: {
            if (stat == Statistic::ne || stat == Statistic::cr) {
                // nesting law: (ne - sqrt(2n)) / (2n)^{1/6} <= t/2 with n arcs
                double N = 2.0 * n;
                return 2.0 * (value - std::sqrt(N)) / std::pow(N, 1.0 / 6.0);
            }
            double N = n;  // fixed-point-free involution on [n]
            return (value - 2.0 * std::sqrt(N)) / std::pow(N, 1.0 / 6.0);
        }
        case CdfVariant::gaussian:  // alternating limit: (as - 2n/3) / sqrt(n)
            return (value - 2.0 * n / 3.0) / std::sqrt(static_cast<double>(n));
    }
    throw std::logic_error("unreachable");
}

// Two ways to compare an integer statistic with a continuous limit law.
// `atoms` is the strict Kolmogorov-Smirnov sup, which is bounded below by
// half the largest lattice atom (~0.045 for is at n = 4000) regardless of
// sample size. `lattice_midpoints` evaluates the model CDF at the lattice
// cell midpoints, the usual convention when the observable lives on a grid.
enum class KsConvention { atoms, lattice_midpoints };

inline double mc_vs_cdf(Statistic stat, SampleKind kind, int n, long long trials,
                        const CdfTable& table, const RngSpec& spec,
                        KsConvention conv = KsConvention::atoms) {
    if (n < 500) throw std::invalid_argument("mc_vs_cdf: n >= 500 (limit-law regime)");
    McSummary s = monte_carlo(stat, kind, n, trials, spec, /*keep_samples=*/true);
    if (conv == KsConvention::atoms) {
        std::vector<double> scaled;
        scaled.reserve(s.sorted_samples.size());
        for (int v : s.sorted_samples) scaled.push_back(scale_statistic(table.variant, stat, n, v));
        return ks_distance(scaled, table);
    }
    double worst = 0.0;
    long long cum = 0;
    for (auto [v, c] : s.histogram) {
        cum += c;
        double F = table.eval(scale_statistic(table.variant, stat, n, v + 0.5));
        worst = std::max(worst, std::abs(static_cast<double>(cum) / trials - F));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Romik's constant and curve for extremal square-shaped permutations.
// ---------------------------------------------------------------------------
namespace detail {
template <typename G>
double adaptive_simpson(G&& g, double a, double b, double fa, double fm, double fb, double eps,
                        int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = g(lm), frm = g(rm);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(g, a, m, fa, flm, fm, eps / 2, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, eps / 2, depth - 1);
}

template <typename G>
double integrate(G&& g, double a, double b, double eps = 1e-13) {
    double fa = g(a), fb = g(b), fm = g((a + b) / 2);
    return adaptive_simpson(g, a, b, fa, fm, fb, eps, 40);
}
}  // namespace detail

// alpha = 2*int_0^1 dt/sqrt((1-t^2)(1-(t/3)^2)) - (3/2)*int_0^1 sqrt((1-(t/3)^2)/(1-t^2)) dt,
// evaluated after t = sin(phi) removes the endpoint singularity.
inline double romik_alpha() {
    auto f1 = [](double phi) {
        double s = std::sin(phi) / 3.0;
        return 1.0 / std::sqrt(1.0 - s * s);
    };
    auto f2 = [](double phi) {
        double s = std::sin(phi) / 3.0;
        return std::sqrt(1.0 - s * s);
    };
    return 2.0 * detail::integrate(f1, 0.0, M_PI / 2) -
           1.5 * detail::integrate(f2, 0.0, M_PI / 2);
}

// Points on (x^2-y^2)^2 + 2(x^2+y^2) = 3 with |x| <= 1: y^2 = x^2-1+2*sqrt(1-x^2).
inline double romik_curve_y(double x) {
    if (std::abs(x) > 1.0) throw std::invalid_argument("romik curve: |x| <= 1");
    double y2 = x * x - 1.0 + 2.0 * std::sqrt(1.0 - x * x);
    return std::sqrt(std::max(0.0, y2));
}

inline std::vector<CurvePoint> romik_curve(int samples) {
    std::vector<CurvePoint> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double x = -1.0 + 2.0 * i / (samples - 1);
        pts.push_back({x, romik_curve_y(x)});
    }
    return pts;
}

// ---------------------------------------------------------------------------
// Haar-unitary moment check, E |tr(M)^n|^2 = u_k(n). Ginibre matrix, QR by
// modified Gram-Schmidt, diagonal phases fixed so the factorization is the
// Haar one.
// ---------------------------------------------------------------------------
struct HaarEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long long trials = 0;
};

inline HaarEstimate haar_moment(int k, int n, long long trials, const RngSpec& spec) {
    if (k < 1 || k > 4 || n < 1 || n > 5)
        throw std::invalid_argument("haar_moment: k <= 4, n <= 5");
    if (trials < 100000) throw std::invalid_argument("haar_moment: trials >= 1e5");
    using cd = std::complex<double>;
    Rng rng(spec.seed, 0);
    double sum = 0.0, sumsq = 0.0;
    std::vector<std::vector<cd>> a(k, std::vector<cd>(k));
    for (long long t = 0; t < trials; ++t) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = cd(rng.normal(), rng.normal());
        // modified Gram-Schmidt. Normalizing by the real positive column
        // norm pins diag(R) > 0, the canonical factorization whose Q factor
        // is Haar (left-invariance: Q(UA) = U Q(A)).
        cd trace = 0.0;
        for (int j = 0; j < k; ++j) {
            for (int p = 0; p < j; ++p) {
                cd dot = 0.0;
                for (int i = 0; i < k; ++i) dot += std::conj(a[i][p]) * a[i][j];
                for (int i = 0; i < k; ++i) a[i][j] -= dot * a[i][p];
            }
            double norm = 0.0;
            for (int i = 0; i < k; ++i) norm += std::norm(a[i][j]);
            norm = std::sqrt(norm);
            for (int i = 0; i < k; ++i) a[i][j] /= norm;
        }
        for (int i = 0; i < k; ++i) trace += a[i][i];
        double v = std::pow(std::norm(trace), n);  // |tr M|^(2n)
        sum += v;
        sumsq += v * v;
    }
    HaarEstimate h;
    h.trials = trials;
    h.estimate = sum / trials;
    double var = sumsq / trials - h.estimate * h.estimate;
    h.std_error = std::sqrt(std::max(0.0, var) / trials);
    return h;
}

}  // namespace subseq
