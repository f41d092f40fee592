#ifndef PVI_HYPERGEOM_HPP
#define PVI_HYPERGEOM_HPP

#include <pvi/core.hpp>
#include <pvi/series.hpp>

#include <array>
#include <string>
#include <vector>

namespace pvi
{

// Solutions of x(1-x)w'' + (1-2x)w' - w/4 = 0 near 0, 1 and infinity.

enum class Chart { Zero, One, Infinity };

std::string to_string(Chart c);
Chart chart_from_string(const std::string &s);

// Series are only summed for |z| <= 1 - series_margin.
inline constexpr double series_margin = 0.05;

struct BasisValue {
    cplx omega1, omega2;
    cplx omega1_prime, omega2_prime;
    Chart chart = Chart::Zero;
    cplx x;

    cplx wronskian() const { return omega1 * omega2_prime - omega2 * omega1_prime; }
};

// F(1/2,1/2;1;x) and the logarithmic companion
// g(x) = sum ((1/2)_k/k!)^2 x^k [ln x + 2psi(k+1/2) - 2psi(k+1)].
cplx eval_F(cplx x);
cplx eval_F_prime(cplx x);
cplx eval_g(cplx x);
cplx eval_g_prime(cplx x);

// |x(1-x)w'' + (1-2x)w' - w/4| for component 0 or 1 of the basis on b.chart, with w''
// taken from a 5-point difference of the series derivative w'.
double ode_residual(const BasisValue &b, int component, double h = 1e-3);

BasisValue basis_at(cplx x, Chart chart);

// Taylor expansions of omega1, omega2 about b.x generated by the ODE recurrence.
std::array<Taylor, 2> basis_series(const BasisValue &b, int order = max_series_order);

// The branch of b carried to a nearby point z by one re-expansion step; keeps b.chart
// as a label so stencils and contour sums can straddle a branch cut of the chart.
BasisValue basis_shift(const BasisValue &b, cplx z);

// Margin of x inside each chart disc; negative when outside.
double chart_margin(cplx x, Chart chart);
// Chart with the largest margin, ties in the order Zero, One, Infinity.
// DomainError when no disc contains x with at least series_margin to spare.
Chart choose_chart(cplx x);

using Mat2 = std::array<std::array<cplx, 2>, 2>;

Mat2 mat_mul(const Mat2 &a, const Mat2 &b);
Mat2 mat_identity();

enum class Loop { gamma0, gamma1 };

std::string to_string(Loop l);
Loop loop_from_string(const std::string &s);

// Closed polygonal loop: circle of the given radius around centre, starting and ending at
// the point of the circle at angle theta0, traversed counter-clockwise.
std::vector<cplx> circle_path(cplx centre, double radius, double theta0, int steps = 64);

// Default loops: radius 1/2 around 0 (resp. 1), based at x = 1/2.
std::vector<cplx> loop_path(Loop l);

// Carries the basis (values and first derivatives) along a polygonal path by local Taylor
// re-expansion of the ODE. path.front() must equal start.x. The returned chart field is
// the chart of start (the branch label is meaningless after continuation).
BasisValue continue_along(const BasisValue &start, const std::vector<cplx> &path);

// M with (w1~, w2~)^T = M (w1, w2)^T after continuation of the chart-Zero basis along
// the loop. Traversing A then B gives M_A * M_B.
Mat2 continue_basis(Loop l);
Mat2 continue_basis(const std::vector<cplx> &closed_path, Chart chart);

// Matrix relating two bases at the same point: rows of b equal M times rows of a.
Mat2 relate_bases(const BasisValue &a, const BasisValue &b);

} // namespace pvi

#endif
