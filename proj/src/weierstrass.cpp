#include <pvi/weierstrass.hpp>

#include <cmath>

namespace pvi
{

namespace
{

constexpr double pole_tol = 1e-12;
constexpr double q_eps = 1e-18;
constexpr int wp_cap = 10000;
constexpr double q_margin = 0.05;

template <class T>
struct Pair {
    T w1, w2;
};

template <class T>
Pair<T> normalize_t(Pair<T> p)
{
    cplx w1 = value_of(p.w1);
    if (w1 == cplx(0.0)) {
        throw DegenerateLattice("omega1 = 0");
    }
    cplx tau = value_of(p.w2) / w1;
    if (std::abs(tau.imag()) <= 1e-14 * std::abs(tau)) {
        throw DegenerateLattice("periods are linearly dependent over the reals");
    }
    if (tau.imag() < 0) {
        p.w2 = -p.w2;
    }
    return p;
}

template <class T>
Pair<T> reduce_lattice_t(Pair<T> p)
{
    p = normalize_t(p);
    for (int it = 0; it < 1000; ++it) {
        cplx tau = value_of(p.w2) / value_of(p.w1);
        double n = std::round(tau.real());
        if (n != 0.0) {
            p.w2 = p.w2 - n * p.w1;
            tau -= n;
        }
        if (std::norm(tau) < 1.0 - 1e-14) {
            // tau -> -1/tau keeps the orientation
            p = Pair<T>{p.w2, -p.w1};
            continue;
        }
        return p;
    }
    throw NonConvergence("lattice reduction did not terminate");
}

template <class T>
T reduce_argument_t(T u, const Pair<T> &p)
{
    cplx w1 = value_of(p.w1);
    cplx tau = value_of(p.w2) / w1;
    cplx v = value_of(u) / w1;
    double n = std::round(v.imag() / (2.0 * tau.imag()));
    v -= 2.0 * n * tau;
    double m = std::round(v.real() / 2.0);
    v -= 2.0 * m;
    if (std::abs(v) < pole_tol) {
        throw PoleError("argument is a lattice point");
    }
    return u - 2.0 * n * p.w2 - 2.0 * m * p.w1;
}

int order_of(cplx) { return 1; }
int order_of(const Taylor &t) { return t.n; }

template <class T>
T wp_t(T u, Pair<T> p)
{
    p = reduce_lattice_t(p);
    T ur = reduce_argument_t(u, p);
    const cplx I(0.0, 1.0);
    const T tau = p.w2 / p.w1;
    const T q = exp(I * pi * tau);
    const double aq = std::abs(value_of(q));
    if (aq >= 1.0 - q_margin) {
        throw DomainError("nome too close to the unit circle");
    }
    const T v = ur / p.w1;
    const double iv = std::abs(value_of(v).imag());
    // derivatives in the local variable bring polynomial factors in k
    const int extra = order_of(u) - 1;

    T sum = T(0.0);
    T q2 = q * q, q2k = T(1.0);
    for (int k = 1; k <= wp_cap; ++k) {
        q2k = q2k * q2;
        sum = sum + static_cast<double>(k) * q2k / (1.0 - q2k) * (1.0 - cos(static_cast<double>(k) * pi * v));
        // Tail bound: k|q|^{2k}(1+cosh(k pi Im v))/(1-|q|^{2k}) decays at least like |q|^k
        // because |Im v| <= Im tau after reduction.
        double a2k = std::pow(aq, 2.0 * k);
        double bound = std::pow(k, 1 + extra) * a2k * (1.0 + std::cosh(k * pi * iv)) / (1.0 - a2k);
        double ratio = aq * std::pow((k + 1.0) / k, 1 + extra);
        if (ratio < 1.0 && bound * ratio / (1.0 - ratio) <= q_eps * (1.0 + std::abs(value_of(sum)))) {
            T s = sin(v * (pi / 2.0));
            T pre = (pi * pi) / (p.w1 * p.w1);
            return pre * (2.0 * sum + 0.25 / (s * s) - 1.0 / 12.0);
        }
    }
    throw NonConvergence("q-series exceeded the term cap");
}

} // namespace

PeriodPair normalize(const PeriodPair &p)
{
    auto r = normalize_t(Pair<cplx>{p.omega1, p.omega2});
    return {r.w1, r.w2};
}

PeriodPair reduce_lattice(const PeriodPair &p)
{
    auto r = reduce_lattice_t(Pair<cplx>{p.omega1, p.omega2});
    return {r.w1, r.w2};
}

cplx reduce_argument(cplx u, const PeriodPair &p0)
{
    auto p = normalize_t(Pair<cplx>{p0.omega1, p0.omega2});
    return reduce_argument_t(u, p);
}

cplx wp(cplx u, const PeriodPair &p)
{
    return wp_t<cplx>(u, Pair<cplx>{p.omega1, p.omega2});
}

Taylor wp(const Taylor &u, const Taylor &omega1, const Taylor &omega2)
{
    return wp_t<Taylor>(u, Pair<Taylor>{omega1, omega2});
}

EllipticInvariants picard_invariants(cplx x)
{
    cplx s = (x + 1.0) / 3.0;
    return {1.0 - s, x - s, -s};
}

} // namespace pvi
