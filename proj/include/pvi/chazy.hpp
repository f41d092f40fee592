#ifndef PVI_CHAZY_HPP
#define PVI_CHAZY_HPP

#include <pvi/core.hpp>
#include <pvi/hypergeom.hpp>
#include <pvi/series.hpp>

#include <string>
#include <vector>

namespace pvi
{

// Projective parameter of the mu = -1/2 family built from W = nu*omega2 + omega1;
// the point at infinity means W = omega2.
struct ChazyParam {
    cplx nu;
    bool infinite = false;

    static ChazyParam finite(cplx v) { return {v, false}; }
    static ChazyParam at_infinity() { return {0.0, true}; }
    friend bool operator==(const ChazyParam &, const ChazyParam &) = default;
};

std::string to_string(const ChazyParam &p);

// y = [(W + 2xW')^2 - 4xW'^2]^2 / (8 W W' (2(x-1)W' + W)(W + 2xW')).
// PoleError when a denominator factor vanishes.
cplx chazy_from_basis(const BasisValue &b, const ChazyParam &nu);
cplx chazy_eval(cplx x, const ChazyParam &nu, Chart chart);
Taylor chazy_series(const BasisValue &b, const ChazyParam &nu, int order = max_series_order);

enum class SingularPoint { Zero, One, Infinity };
std::string to_string(SingularPoint p);
SingularPoint singular_point_from_string(const std::string &s);

struct ChazyAsymptotics {
    std::string leading; // ν-independent leading form
    cplx b;              // coefficient of the third-order log term
};

// Coefficients as stated with the leading forms
//   y ~ -log(x)^-2 + b0 log(x)^-3,  y ~ 1 + log(1-x)^-2 + b1 log(1-x)^-3,
//   y ~ -x log(1/x)^-2 + binf x log(1/x)^-3,
// b0 = 1 + i pi/nu - 4 log 2, b1 = 2[i pi (nu-1) - 1 + 4 log 2],
// binf = 2[(nu-1)(1 - 4 log 2) + i pi].
ChazyAsymptotics chazy_asymptotics(const ChazyParam &nu, SingularPoint p);

// Third-order coefficients of the same expansions computed from the basis:
// y = -1/((L+a)(L+a+2)) + O(x) near 0 with a = i pi/nu - 4 log 2, so b0 = 2(1 + i pi/nu - 4 log 2);
// likewise b1 = 2(i pi nu - 1 + 4 log 2) and binf = 2(1 - 4 log 2 + i pi/(nu-1)).
cplx chazy_b_coefficient(const ChazyParam &nu, SingularPoint p);

// nu -> (a nu + b)/(c nu + d) on the projective line.
ChazyParam gamma2_act_moebius(const Gamma2Element &A, const ChazyParam &nu);

struct LimitCheck {
    std::vector<double> eps;
    std::vector<double> discrepancy;
    bool monotone = false;
};

// Birational image (parameter 1/2) of the Picard branch (nu1, nu2) = (eps, eps nu),
// or (0, eps) for the point at infinity, compared with the Chazy value at x.
LimitCheck picard_limit_check(const ChazyParam &nu, cplx x, std::vector<double> eps = {1e-2, 1e-3, 1e-4});

} // namespace pvi

#endif
