#ifndef PVI_VERIFY_HPP
#define PVI_VERIFY_HPP

#include <pvi/chazy.hpp>
#include <pvi/core.hpp>
#include <pvi/hypergeom.hpp>
#include <pvi/monodromy.hpp>
#include <pvi/picard.hpp>
#include <pvi/symmetry.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pvi
{

enum class SolutionKind { Picard, Chazy, RationalFamily, ParametricAlgebraic };
std::string to_string(SolutionKind k);
SolutionKind solution_kind_from_string(const std::string &s);

// Parametric algebraic solutions of PVI(1/2) with (M,N) = (2,3), (1,2), (1,3).
enum class ParametricFamily { a2, b2, g2 };
std::string to_string(ParametricFamily f);
ParametricFamily parametric_family_from_string(const std::string &s);

struct ParametricPoint {
    cplx x, y;
};
ParametricPoint parametric_point(ParametricFamily f, cplx s);
Taylor parametric_x(ParametricFamily f, const Taylor &s);
Taylor parametric_y(ParametricFamily f, const Taylor &s);

struct SolutionHandle {
    SolutionKind kind = SolutionKind::Picard;
    PicardParams picard{};
    ChazyParam chazy{};
    cplx a = 0.0; // rational family
    ParametricFamily family = ParametricFamily::a2;
    std::optional<cplx> s_hint; // parametric branch: the root of x(s) = x nearest to this
    std::vector<LadderStep> ladder;
    Rational mu{1, 2};

    static SolutionHandle make_picard(const PicardParams &p);
    static SolutionHandle make_chazy(const ChazyParam &nu);
    static SolutionHandle make_rational(cplx a);
    static SolutionHandle make_parametric(ParametricFamily f, std::optional<cplx> s_hint = std::nullopt);
    // Picard and Chazy only: composes with mu_ladder from the current mu
    SolutionHandle with_target_mu(const Rational &target) const;
    // throws DomainError if kind, mu and ladder disagree
    void validate() const;
};

// y'' prescribed by PVI(mu)
cplx pvi_rhs(cplx x, cplx y, cplx yp, const Rational &mu);

// Branch of y near x0, consistent across a small neighbourhood (stencil points re-expand from x0).
std::function<cplx(cplx)> local_branch(const SolutionHandle &h, cplx x0);

struct StencilJet {
    cplx y, y1, y2;
};
// 5-point central differences at steps h and h/2, Richardson-combined
StencilJet stencil_derivatives(const std::function<cplx(cplx)> &f, cplx x, double h);

struct ResidualReport {
    StencilJet jet;
    cplx rhs;
    double residual;
    double step;
};
inline constexpr double singular_guard = 1e-6;
// step <= 0 selects 1e-3 times the distance from x to {0, 1}
ResidualReport pvi_residual_report(const SolutionHandle &h, cplx x, double step = 0.0);
double pvi_residual(const SolutionHandle &h, cplx x, double step = 0.0);

// The same residual for parametric families on every branch over x0 (s recovered by Newton).
struct BranchResidual {
    cplx s, y;
    double residual;
};
std::vector<BranchResidual> parametric_residuals(ParametricFamily f, cplx x0);
// roots of x(s) = x0: damped Newton from 8 seeded random starts, deduplicated, sorted
std::vector<cplx> recover_parameter(ParametricFamily f, cplx x0);

// Least-squares exponent over >= 8 radii in [rmin, rmax]. Picard: observable y at 0, 1 - y at 1,
// y / x at infinity (radial coordinate 1/|x|), so the result is l0, l1, l_inf. Chazy: returns the
// fitted 1/log^3 coefficient of the -1/log^2 leading form.
struct Window {
    double rmin, rmax;
};
cplx fit_exponent(const SolutionHandle &h, SingularPoint point, Window w);

// Polynomial sum c_ij x^i y^j
struct Monomial {
    int i, j;
    cplx c;
};
using Relation = std::vector<Monomial>;
// (y - x)^2 - x(x - 1)
Relation square_root_relation();
// max |F(x~, y~)| / sum |c_ij| over the samples, where (x~, y~) is the optional symmetry image
double check_relation(const SolutionHandle &h, const Relation &F, const std::vector<cplx> &samples,
                      std::optional<ElementarySymmetry> sym = std::nullopt);

enum class LoopChoice { gamma0, gamma1, trivial };
std::string to_string(LoopChoice l);
LoopChoice loop_choice_from_string(const std::string &s);
// max over 8 base points near 1/2 of |continued - transformed| / (1 + |transformed|)
double loop_consistency(const SolutionHandle &h, LoopChoice loop);

// fixed interior sample set: 12 points on |x - 1/2| = 0.3, 4 on |x| = 2.5, 4 on |x| = 0.3
std::vector<cplx> interior_samples();

} // namespace pvi

#endif
