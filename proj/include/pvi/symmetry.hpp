#ifndef PVI_SYMMETRY_HPP
#define PVI_SYMMETRY_HPP

#include <pvi/core.hpp>
#include <pvi/series.hpp>

#include <array>
#include <string>
#include <vector>

namespace pvi
{

// Point of a solution curve: (x, y, y') of PVI with parameter mu (2 mu integral).
struct JetPoint {
    cplx x, y, yprime;
    Rational mu;
};

// Singular-solution guard for jets: x away from {0, 1}, y away from {0, 1, x}.
inline constexpr double jet_guard = 1e-10;
void require_regular(const JetPoint &j);

// The seven coefficient polynomials of the birational map: numerator factor
// p0 y'^2 + p1 y' + p2 and denominator q0 y'^4 + ... + q4.
struct S1Polynomials {
    std::array<cplx, 3> p;
    std::array<cplx, 5> q;
};

// From the expanded monomial tables, coefficients combined exactly in mu.
S1Polynomials s1_polynomials(cplx x, cplx y, const Rational &mu);
// From the factored expressions; used to cross-check the tables.
S1Polynomials s1_polynomials_factored(cplx x, cplx y, const Rational &mu);

// y~ = y (p0 y'^2 + p1 y' + p2)^2 / Q. Lands in PVI(-mu).
// DenominatorZero when |Q| < 1e-10 (1 + |numerator|).
cplx s1_transform(const JetPoint &j);
// Same map on a Taylor expansion of y; y' is taken from the series, so the result
// carries one order less.
Taylor s1_transform(const Taylor &x, const Taylor &y, const Rational &mu);

cplx q_denominator(const JetPoint &j);
// |Q| / sum_k |q_k y'^(4-k)|: scale-free size of the denominator.
double q_normalized(const JetPoint &j);

// The four y' solving Q = 0 at mu = -1/2, in this order, each over x(x-1):
//   y(y-1) - s(y-x) + tA,  y(y-1) - s(y-x) - tA,  y(y-1) + s(y-x) + tB,  y(y-1) + s(y-x) - tB
// with s = sqrt(y(y-1)), t = sqrt(y(y-1)(y-x)), A = sqrt(2y-1+2s), B = sqrt(2y-1-2s),
// principal square roots throughout.
std::array<cplx, 4> q_branch_roots(cplx x, cplx y);

// Factors whose nonvanishing keeps Q away from zero on the image of a Picard solution.
cplx obstruction_q1(cplx x, cplx y, cplx yx);
cplx obstruction_q2(cplx x, cplx y, cplx yx);
cplx obstruction_q3(cplx x, cplx y, cplx yx);

enum class ElementarySymmetry {
    T01,          // (1-x, 1-y)
    T0inf,        // (1/x, y/x)
    T01_T0inf,    // T01 first, then T0inf: (1/(1-x), (1-y)/(1-x))
    T0inf_T01,    // T0inf first, then T01: (1-1/x, 1-y/x)
};

std::string to_string(ElementarySymmetry s);
ElementarySymmetry symmetry_from_string(const std::string &s);

struct XY {
    cplx x, y;
};
XY elementary_symmetry(ElementarySymmetry s, cplx x, cplx y);
// Jet version: also maps y' = dy/dx to dy~/dx~. mu is carried unchanged.
JetPoint elementary_symmetry(ElementarySymmetry s, const JetPoint &j);

struct LadderStep {
    enum class Kind { S1, Relabel } kind;
    Rational mu; // S1: the parameter used; Relabel: the new label
    friend bool operator==(const LadderStep &, const LadderStep &) = default;
};

std::string to_string(const LadderStep &s);

// Steps taking solutions of PVI(start) to PVI(target). S1 with parameter m moves the class
// |2mu - 1| to |2m + 1|; Relabel switches mu <-> 1 - mu (the same equation) and leaves
// solutions unchanged. UnreachableTarget across the half-integer / integer divide.
std::vector<LadderStep> mu_ladder(const Rational &start, const Rational &target);

// Applies the ladder to a Taylor expansion of a solution.
Taylor apply_ladder(const Taylor &x, const Taylor &y, const std::vector<LadderStep> &steps);

} // namespace pvi

#endif
