#ifndef PVI_WEIERSTRASS_HPP
#define PVI_WEIERSTRASS_HPP

#include <pvi/core.hpp>
#include <pvi/series.hpp>

namespace pvi
{

// Half-periods; the period lattice is 2m*omega1 + 2n*omega2.
struct PeriodPair {
    cplx omega1, omega2;
};

struct EllipticInvariants {
    cplx e1, e2, e3;
};

// Negates omega2 when Im(omega2/omega1) < 0. DegenerateLattice on a real ratio.
PeriodPair normalize(const PeriodPair &p);

// Equivalent basis of the same lattice with tau = omega2/omega1 in the standard
// fundamental domain |tau| >= 1, |Re tau| <= 1/2.
PeriodPair reduce_lattice(const PeriodPair &p);

// u shifted by lattice periods so that |Im(u/omega1)| <= Im(omega2/omega1) and
// |Re(u/omega1)| <= 1, computed for the pair as given (after normalize).
// PoleError when the result is a lattice point.
cplx reduce_argument(cplx u, const PeriodPair &p);

// Weierstrass wp by its q-expansion in the reduced lattice.
cplx wp(cplx u, const PeriodPair &p);

// Same function with u and both half-periods given as Taylor series in a common local
// variable; all integer reductions are decided on the constant terms.
Taylor wp(const Taylor &u, const Taylor &omega1, const Taylor &omega2);

// e1 = 1 - (x+1)/3, e2 = x - (x+1)/3, e3 = -(x+1)/3.
EllipticInvariants picard_invariants(cplx x);

} // namespace pvi

#endif
