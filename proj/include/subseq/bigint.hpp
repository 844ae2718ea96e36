#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace subseq {

// Exact arithmetic backbone. Counts overflow 64 bits early (f^lambda at
// n ~ 25), so everything countable is a BigInt from the start.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Desk-scale guard rails (exhaustive sweeps, exponential oracles) throw
// this rather than a plain invalid_argument so callers can tell a size
// limitation from a malformed request.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

// m!! with the convention (-1)!! = 0!! = 1.
inline BigInt double_factorial(int m) {
    BigInt r = 1;
    for (int i = m; i > 1; i -= 2) r *= i;
    return r;
}

inline BigInt catalan(int n) {
    return binomial(2 * n, n) / (n + 1);
}

// F(1) = F(2) = 1.
inline BigInt fibonacci(int n) {
    if (n <= 0) return 0;
    BigInt a = 1, b = 1;
    for (int i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

inline BigInt bell_number(int n) {
    // Bell triangle
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

// Exact integer extraction from a rational; throws if not integral.
inline BigInt to_integer(const BigRat& x, const char* what = "rational") {
    if (denominator(x) != 1)
        throw std::domain_error(std::string(what) + " is not an integer");
    return numerator(x);
}

}  // namespace subseq
