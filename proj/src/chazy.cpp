#include <pvi/chazy.hpp>
#include <pvi/picard.hpp>
#include <pvi/symmetry.hpp>

#include <cmath>
#include <sstream>

namespace pvi
{

namespace
{

constexpr double pole_tol = 1e-12;

// w_mag, wp_mag: sizes of the terms that make up W and W', so that a factor is called
// zero only when it cancels relative to its own ingredients.
template <class T>
T chazy_formula(const T &x, T W, T Wp, double w_mag, double wp_mag)
{
    // homogeneous of degree 0 in (W, W'): rescale to keep the quartics in range
    double s = std::max(std::abs(value_of(W)), std::abs(value_of(Wp)));
    if (s == 0.0) {
        throw PoleError("W and W' both vanish");
    }
    W = W / s;
    Wp = Wp / s;
    w_mag /= s;
    wp_mag /= s;
    const cplx xv = value_of(x);
    T f1 = W, f2 = Wp, f3 = 2.0 * (x - 1.0) * Wp + W, f4 = W + 2.0 * x * Wp;
    const double mags[4] = {w_mag, wp_mag, 2.0 * std::abs(xv - 1.0) * wp_mag + w_mag, w_mag + 2.0 * std::abs(xv) * wp_mag};
    const T *fs[4] = {&f1, &f2, &f3, &f4};
    int cancelled = 0;
    for (int k = 0; k < 4; ++k) {
        if (std::abs(value_of(*fs[k])) < pole_tol * mags[k]) {
            ++cancelled;
        }
    }
    // one vanishing factor is a pole; several at once (nu = 1 near infinity) is 0/0 in floating point
    if (cancelled == 1) {
        throw PoleError("denominator factor of the Chazy formula vanishes");
    }
    if (cancelled > 1) {
        throw NonConvergence("Chazy closed form cancels to rounding level");
    }
    // (W + 2xW')^2 - 4xW'^2 expanded; the unexpanded form cancels near x = 1
    T a = W * W + 4.0 * x * W * Wp + 4.0 * x * (x - 1.0) * Wp * Wp;
    return a * a / (8.0 * f1 * f2 * f3 * f4);
}

double combo_mag(const ChazyParam &nu, cplx w1, cplx w2)
{
    return nu.infinite ? std::abs(w2) : std::abs(nu.nu * w2) + std::abs(w1);
}

} // namespace

std::string to_string(const ChazyParam &p)
{
    if (p.infinite) {
        return "inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << p.nu.real() << (p.nu.imag() < 0 ? "-" : "+") << std::abs(p.nu.imag()) << "i";
    return os.str();
}

cplx chazy_from_basis(const BasisValue &b, const ChazyParam &nu)
{
    cplx W = nu.infinite ? b.omega2 : nu.nu * b.omega2 + b.omega1;
    cplx Wp = nu.infinite ? b.omega2_prime : nu.nu * b.omega2_prime + b.omega1_prime;
    return chazy_formula<cplx>(b.x, W, Wp, combo_mag(nu, b.omega1, b.omega2), combo_mag(nu, b.omega1_prime, b.omega2_prime));
}

cplx chazy_eval(cplx x, const ChazyParam &nu, Chart chart)
{
    return chazy_from_basis(basis_at(x, chart), nu);
}

Taylor chazy_series(const BasisValue &b, const ChazyParam &nu, int order)
{
    // W' costs one order, so expand the basis one order further
    auto w = basis_series(b, std::min(order + 1, max_series_order));
    Taylor W = nu.infinite ? w[1] : nu.nu * w[1] + w[0];
    Taylor Wp = W.derivative();
    Taylor x = Taylor::variable(b.x, Wp.n);
    return chazy_formula<Taylor>(x, W, Wp, combo_mag(nu, b.omega1, b.omega2), combo_mag(nu, b.omega1_prime, b.omega2_prime));
}

std::string to_string(SingularPoint p)
{
    switch (p) {
    case SingularPoint::Zero:
        return "0";
    case SingularPoint::One:
        return "1";
    case SingularPoint::Infinity:
        return "inf";
    }
    return "?";
}

SingularPoint singular_point_from_string(const std::string &s)
{
    if (s == "0" || s == "zero") {
        return SingularPoint::Zero;
    }
    if (s == "1" || s == "one") {
        return SingularPoint::One;
    }
    if (s == "inf" || s == "infinity") {
        return SingularPoint::Infinity;
    }
    throw DomainError("unknown singular point '" + s + "'");
}

ChazyAsymptotics chazy_asymptotics(const ChazyParam &nu, SingularPoint p)
{
    const cplx I(0.0, 1.0);
    const double l4 = 4.0 * ln2;
    switch (p) {
    case SingularPoint::Zero:
        if (!nu.infinite && nu.nu == cplx(0.0)) {
            throw DomainError("b0 is undefined at nu = 0");
        }
        return {"-log(x)^-2", nu.infinite ? cplx(1.0 - l4) : 1.0 + I * pi / nu.nu - l4};
    case SingularPoint::One:
        if (nu.infinite) {
            throw DomainError("b1 is undefined at nu = infinity");
        }
        return {"1+log(1-x)^-2", 2.0 * (I * pi * (nu.nu - 1.0) - 1.0 + l4)};
    case SingularPoint::Infinity:
        if (nu.infinite) {
            throw DomainError("binf is undefined at nu = infinity");
        }
        return {"-x*log(1/x)^-2", 2.0 * ((nu.nu - 1.0) * (1.0 - l4) + I * pi)};
    }
    throw DomainError("unknown singular point");
}

cplx chazy_b_coefficient(const ChazyParam &nu, SingularPoint p)
{
    const cplx I(0.0, 1.0);
    const double l4 = 4.0 * ln2;
    switch (p) {
    case SingularPoint::Zero:
        if (!nu.infinite && nu.nu == cplx(0.0)) {
            throw DomainError("b0 is undefined at nu = 0");
        }
        return 2.0 * (1.0 + (nu.infinite ? cplx(0.0) : I * pi / nu.nu) - l4);
    case SingularPoint::One:
        if (nu.infinite) {
            throw DomainError("b1 is undefined at nu = infinity");
        }
        return 2.0 * (I * pi * nu.nu - 1.0 + l4);
    case SingularPoint::Infinity:
        if (!nu.infinite && nu.nu == cplx(1.0)) {
            throw DomainError("binf is undefined at nu = 1");
        }
        return 2.0 * (1.0 - l4 + (nu.infinite ? cplx(0.0) : I * pi / (nu.nu - 1.0)));
    }
    throw DomainError("unknown singular point");
}

ChazyParam gamma2_act_moebius(const Gamma2Element &A, const ChazyParam &nu)
{
    const double a = A.a, b = A.b, c = A.c, d = A.d;
    if (nu.infinite) {
        return c == 0.0 ? ChazyParam::at_infinity() : ChazyParam::finite(a / c);
    }
    cplx den = c * nu.nu + d;
    if (den == cplx(0.0)) {
        return ChazyParam::at_infinity();
    }
    return ChazyParam::finite((a * nu.nu + b) / den);
}

LimitCheck picard_limit_check(const ChazyParam &nu, cplx x, std::vector<double> eps)
{
    LimitCheck r;
    r.eps = eps;
    const Chart chart = choose_chart(x);
    const BasisValue b = basis_at(x, chart);
    const cplx target = chazy_from_basis(b, nu);
    const Taylor X = Taylor::variable(x, 2);
    for (double e : eps) {
        PicardParams p = nu.infinite ? PicardParams{0.0, e} : PicardParams{e, e * nu.nu};
        Taylor y = picard_series(b, p, 2);
        cplx img = s1_transform(X, y, Rational(1, 2)).value();
        r.discrepancy.push_back(std::abs(img - target));
    }
    r.monotone = true;
    for (std::size_t k = 1; k < r.discrepancy.size(); ++k) {
        if (!(r.discrepancy[k] < r.discrepancy[k - 1])) {
            r.monotone = false;
        }
    }
    return r;
}

} // namespace pvi
