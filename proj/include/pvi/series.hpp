#ifndef PVI_SERIES_HPP
#define PVI_SERIES_HPP

#include <pvi/core.hpp>

#include <algorithm>
#include <array>

namespace pvi
{

// Truncated Taylor series sum c[k] t^k, k < n, in a local variable t = x - x0.
// n is carried so that differentiation can drop the top coefficient honestly.
inline constexpr int max_series_order = 10;

struct Taylor {
    std::array<cplx, max_series_order> c{};
    int n = max_series_order;

    Taylor() = default;
    Taylor(cplx v, int order = max_series_order) : n(order) { c[0] = v; }
    Taylor(double v) { c[0] = v; }

    static Taylor variable(cplx x0, int order = max_series_order)
    {
        Taylor t(x0, order);
        if (order > 1) {
            t.c[1] = 1.0;
        }
        return t;
    }

    cplx value() const { return c[0]; }
    // k-th derivative at t = 0
    cplx derivative_at(int k) const
    {
        double f = 1.0;
        for (int j = 2; j <= k; ++j) {
            f *= j;
        }
        return c[k] * f;
    }
    Taylor derivative() const
    {
        Taylor r;
        r.n = std::max(n - 1, 1);
        for (int k = 0; k + 1 < n; ++k) {
            r.c[k] = static_cast<double>(k + 1) * c[k + 1];
        }
        return r;
    }
    cplx eval(cplx t) const
    {
        cplx s = 0.0;
        for (int k = n - 1; k >= 0; --k) {
            s = s * t + c[k];
        }
        return s;
    }

    Taylor operator-() const
    {
        Taylor r = *this;
        for (auto &v : r.c) {
            v = -v;
        }
        return r;
    }
    Taylor &operator+=(const Taylor &o)
    {
        n = std::min(n, o.n);
        for (int k = 0; k < n; ++k) {
            c[k] += o.c[k];
        }
        return *this;
    }
    Taylor &operator-=(const Taylor &o) { return *this += -o; }
    Taylor &operator*=(const Taylor &o)
    {
        Taylor r;
        r.n = std::min(n, o.n);
        for (int i = 0; i < r.n; ++i) {
            for (int j = 0; i + j < r.n; ++j) {
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return *this = r;
    }
    Taylor &operator/=(const Taylor &o)
    {
        Taylor r;
        r.n = std::min(n, o.n);
        for (int k = 0; k < r.n; ++k) {
            cplx s = c[k];
            for (int j = 1; j <= k; ++j) {
                s -= o.c[j] * r.c[k - j];
            }
            r.c[k] = s / o.c[0];
        }
        return *this = r;
    }
};

inline Taylor operator+(Taylor a, const Taylor &b) { return a += b; }
inline Taylor operator-(Taylor a, const Taylor &b) { return a -= b; }
inline Taylor operator*(Taylor a, const Taylor &b) { return a *= b; }
inline Taylor operator/(Taylor a, const Taylor &b) { return a /= b; }
inline Taylor operator+(Taylor a, cplx b) { a.c[0] += b; return a; }
inline Taylor operator+(cplx b, Taylor a) { a.c[0] += b; return a; }
inline Taylor operator-(Taylor a, cplx b) { a.c[0] -= b; return a; }
inline Taylor operator-(cplx b, const Taylor &a) { return -a + b; }
inline Taylor operator*(Taylor a, cplx b)
{
    for (auto &v : a.c) {
        v *= b;
    }
    return a;
}
inline Taylor operator*(cplx b, Taylor a) { return a * b; }
inline Taylor operator/(Taylor a, cplx b) { return a * (1.0 / b); }
inline Taylor operator/(cplx b, const Taylor &a) { return Taylor(b, a.n) / a; }
// double overloads keep expressions like 2.0 * t unambiguous
inline Taylor operator+(Taylor a, double b) { return a + cplx(b); }
inline Taylor operator+(double b, Taylor a) { return a + cplx(b); }
inline Taylor operator-(Taylor a, double b) { return a - cplx(b); }
inline Taylor operator-(double b, const Taylor &a) { return cplx(b) - a; }
inline Taylor operator*(Taylor a, double b) { return a * cplx(b); }
inline Taylor operator*(double b, Taylor a) { return a * cplx(b); }
inline Taylor operator/(Taylor a, double b) { return a * cplx(1.0 / b); }
inline Taylor operator/(double b, const Taylor &a) { return cplx(b) / a; }

inline Taylor exp(const Taylor &a)
{
    // r' = a' r
    Taylor r;
    r.n = a.n;
    r.c[0] = std::exp(a.c[0]);
    for (int k = 1; k < r.n; ++k) {
        cplx s = 0.0;
        for (int j = 1; j <= k; ++j) {
            s += static_cast<double>(j) * a.c[j] * r.c[k - j];
        }
        r.c[k] = s / static_cast<double>(k);
    }
    return r;
}

inline Taylor cos(const Taylor &a)
{
    const cplx I(0.0, 1.0);
    return (exp(I * a) + exp(-I * a)) * 0.5;
}

inline Taylor sin(const Taylor &a)
{
    const cplx I(0.0, 1.0);
    return (exp(I * a) - exp(-I * a)) * (-0.5 * I);
}

inline Taylor sqrt(const Taylor &a)
{
    // r^2 = a, principal branch at the constant term
    Taylor r;
    r.n = a.n;
    r.c[0] = std::sqrt(a.c[0]);
    for (int k = 1; k < r.n; ++k) {
        cplx s = a.c[k];
        for (int j = 1; j < k; ++j) {
            s -= r.c[j] * r.c[k - j];
        }
        r.c[k] = s / (2.0 * r.c[0]);
    }
    return r;
}

inline cplx value_of(cplx v) { return v; }
inline cplx value_of(const Taylor &t) { return t.value(); }

} // namespace pvi

#endif
