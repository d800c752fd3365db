#include "panto/numerics.hpp"

#include <stdexcept>
#include <string>

namespace panto {

BigInt factorial(int n, int bound) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n > bound)
        throw std::invalid_argument("factorial: argument " + std::to_string(n) + " exceeds bound " +
                                    std::to_string(bound));
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) * i! / i!
    }
    return r;
}

Rational pow_int(int base, long long e) {
    if (base < 1) throw std::invalid_argument("pow_int: base must be >= 1");
    BigInt p = 1;
    const long long n = e < 0 ? -e : e;
    for (long long i = 0; i < n; ++i) p *= base;
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

double trapezoid(std::span<const double> samples, double h) {
    if (samples.size() < 2) throw std::invalid_argument("trapezoid: needs at least two samples");
    double s = 0.0;
    for (double v : samples) s += v;
    s -= 0.5 * (samples.front() + samples.back());
    return s * h;
}

Rational trapezoid_exact(std::span<const Rational> samples, const Rational& h) {
    if (samples.size() < 2) throw std::invalid_argument("trapezoid: needs at least two samples");
    Rational s;
    for (const Rational& v : samples) s += v;
    s -= (samples.front() + samples.back()) / 2;
    return s * h;
}

}  // namespace panto
