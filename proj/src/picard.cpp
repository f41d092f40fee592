#include <pvi/picard.hpp>
#include <pvi/weierstrass.hpp>

#include <cmath>
#include <numeric>

namespace pvi
{

namespace
{

cplx shift_even(cplx v)
{
    double k = std::floor(v.real() / 2.0);
    cplx r = v - 2.0 * k;
    if (r.real() >= 2.0) { // rounding at the upper edge
        r -= 2.0;
    }
    return r;
}

cplx fold(cplx v)
{
    return v.real() <= 1.0 ? v : 2.0 - v;
}

} // namespace

void require_nonzero(const PicardParams &p)
{
    if (p.nu1 == cplx(0.0) && p.nu2 == cplx(0.0)) {
        throw DomainError("Picard parameters (0, 0) are excluded");
    }
}

PicardParams normalize_params(const PicardParams &p)
{
    return {shift_even(p.nu1), shift_even(p.nu2)};
}

cplx picard_from_basis(const BasisValue &b, const PicardParams &p)
{
    require_nonzero(p);
    cplx u = p.nu1 * b.omega1 + p.nu2 * b.omega2;
    return wp(u, PeriodPair{b.omega1, b.omega2}) + (b.x + 1.0) / 3.0;
}

cplx picard_eval(cplx x, const PicardParams &p, Chart chart)
{
    require_nonzero(p);
    return picard_from_basis(basis_at(x, chart), p);
}

Taylor picard_series(const BasisValue &b, const PicardParams &p, int order)
{
    require_nonzero(p);
    auto w = basis_series(b, order);
    Taylor u = p.nu1 * w[0] + p.nu2 * w[1];
    Taylor x = Taylor::variable(b.x, order);
    return wp(u, w[0], w[1]) + (x + 1.0) / 3.0;
}

Exponents picard_exponents(const PicardParams &p0)
{
    PicardParams p = normalize_params(p0);
    cplx t = p.nu2 - p.nu1;
    if (t.real() < 0.0) {
        t += 2.0;
    }
    return {fold(p.nu2), fold(p.nu1), fold(t)};
}

PicardParams gamma2_act_params(const Gamma2Element &A, const PicardParams &p, bool normalize)
{
    PicardParams r{static_cast<double>(A.a) * p.nu1 + static_cast<double>(A.c) * p.nu2,
                   static_cast<double>(A.b) * p.nu1 + static_cast<double>(A.d) * p.nu2};
    return normalize ? normalize_params(r) : r;
}

AlgebraicLabel algebraic_label(const Rational &nu1, const Rational &nu2)
{
    if (nu1 == Rational(0) && nu2 == Rational(0)) {
        throw DomainError("Picard parameters (0, 0) are excluded");
    }
    std::int64_t N = std::lcm(nu1.den(), nu2.den());
    std::int64_t M = std::gcd(std::abs(nu1.num()) * (N / nu1.den()), std::abs(nu2.num()) * (N / nu2.den()));
    return {M, N};
}

} // namespace pvi
