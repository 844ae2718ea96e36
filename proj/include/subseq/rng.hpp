#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subseq/bigint.hpp"

namespace subseq {

// Seed plus worker count. Identical (seed, streams) must reproduce results
// bit-for-bit regardless of scheduling, so each stream owns an independent
// generator and reductions run in stream order.
struct RngSpec {
    std::uint64_t seed = 0;
    int streams = 1;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
}  // namespace detail

// mt19937_64 is bit-specified by the standard; the distributions are not,
// so bounded draws and normals are implemented here.
class Rng {
public:
    explicit Rng(std::uint64_t seed, int stream = 0) {
        std::uint64_t s = seed ^ (0xA0761D6478BD642Full * static_cast<std::uint64_t>(stream + 1));
        gen_.seed(detail::splitmix64(s));
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, bound), rejection from the top range
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        for (;;) {
            std::uint64_t v = gen_();
            if (v <= limit) return v % bound;
        }
    }

    double uniform01() {  // [0, 1) with 53 random bits
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * M_PI * u2);
        have_cached_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    // uniform BigInt in [0, bound)
    BigInt below_big(const BigInt& bound) {
        if (bound <= 0) throw std::invalid_argument("below_big: bound must be positive");
        unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
        unsigned words = (bits + 63) / 64;
        for (;;) {
            BigInt v = 0;
            for (unsigned i = 0; i < words; ++i) {
                v <<= 64;
                v |= BigInt(gen_());
            }
            v >>= (words * 64 - bits);
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 gen_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// ---------------------------------------------------------------------------
// Exactly uniform samplers.
// ---------------------------------------------------------------------------

// Fisher-Yates shuffle of the identity word.
inline std::vector<int> sample_permutation_word(int n, Rng& rng) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(w[i], w[j]);
    }
    return w;
}

// Uniform involution through the recurrence I(n) = I(n-1) + (n-1) I(n-2):
// a distinguished free element is fixed with probability I(m-1)/I(m), else
// paired with a uniformly chosen partner. Mixture weights are exact. The
// sampler object caches the (large) count table across draws.
class InvolutionSampler {
public:
    explicit InvolutionSampler(int n) : n_(n), counts_(n + 1) {
        counts_[0] = 1;
        if (n >= 1) counts_[1] = 1;
        for (int m = 2; m <= n; ++m) counts_[m] = counts_[m - 1] + (m - 1) * counts_[m - 2];
    }

    std::vector<int> operator()(Rng& rng) const {
        std::vector<int> w(n_), alive(n_);
        for (int i = 0; i < n_; ++i) alive[i] = i + 1;
        int m = n_;
        while (m > 0) {
            int a = alive[m - 1];
            if (m == 1 || rng.below_big(counts_[m]) < counts_[m - 1]) {
                w[a - 1] = a;
                --m;
            } else {
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
                int b = alive[j];
                w[a - 1] = b;
                w[b - 1] = a;
                alive[j] = alive[m - 2];
                m -= 2;
            }
        }
        return w;
    }

private:
    int n_;
    std::vector<BigInt> counts_;
};

inline std::vector<int> sample_involution_word(int n, Rng& rng) {
    return InvolutionSampler(n)(rng);
}

// Uniform perfect matching on [n] (n even): a distinguished free point
// picks its partner uniformly among the rest.
inline std::vector<std::pair<int, int>> sample_matching_arcs(int n_points, Rng& rng) {
    if (n_points % 2) throw std::invalid_argument("matching needs an even ground set");
    std::vector<int> free_pts(n_points);
    for (int i = 0; i < n_points; ++i) free_pts[i] = i + 1;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(n_points / 2);
    for (int m = n_points; m > 0; m -= 2) {
        int a = free_pts[m - 1];
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
        int b = free_pts[j];
        free_pts[j] = free_pts[m - 2];
        arcs.push_back({std::min(a, b), std::max(a, b)});
    }
    return arcs;
}

inline std::vector<int> sample_ff_involution_word(int n, Rng& rng) {
    auto arcs = sample_matching_arcs(n, rng);
    std::vector<int> w(n);
    for (auto [a, b] : arcs) {
        w[a - 1] = b;
        w[b - 1] = a;
    }
    return w;
}

enum class SampleKind { perm, involution, ffinvolution, matching };

inline SampleKind parse_kind(const std::string& s) {
    if (s == "perm") return SampleKind::perm;
    if (s == "involution") return SampleKind::involution;
    if (s == "ffinvolution") return SampleKind::ffinvolution;
    if (s == "matching") return SampleKind::matching;
    throw std::invalid_argument("unknown sample kind: " + s);
}

}  // namespace subseq
