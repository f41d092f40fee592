#ifndef PVI_PICARD_HPP
#define PVI_PICARD_HPP

#include <pvi/core.hpp>
#include <pvi/hypergeom.hpp>

namespace pvi
{

// y = wp(nu1*omega1 + nu2*omega2; omega1, omega2) + (x+1)/3, a solution of PVI at mu = 1/2.
struct PicardParams {
    cplx nu1, nu2;
};

struct Exponents {
    cplx l0, l1, linf;
};

// N = lcm of the denominators, M = gcd of the numerators over N.
struct AlgebraicLabel {
    std::int64_t M = 0, N = 1;
    friend bool operator==(const AlgebraicLabel &, const AlgebraicLabel &) = default;
};

// DomainError for (0, 0).
void require_nonzero(const PicardParams &p);

// Even-integer shifts so that 0 <= Re nu_i < 2.
PicardParams normalize_params(const PicardParams &p);

// Evaluation on an explicit basis (any branch, including a continued one).
cplx picard_from_basis(const BasisValue &b, const PicardParams &p);
cplx picard_eval(cplx x, const PicardParams &p, Chart chart);
// Taylor expansion of the same branch about b.x.
Taylor picard_series(const BasisValue &b, const PicardParams &p, int order = max_series_order);

// Leading exponents at 0, 1 and infinity: y ~ x^l0, 1 - y ~ (1-x)^l1, y ~ x^(1-linf).
// l0 and l1 fold nu2 and nu1 into [0, 1]; linf folds nu2 - nu1 after lifting its real
// part into [0, 2).
Exponents picard_exponents(const PicardParams &p);

// (nu1, nu2) -> (a nu1 + c nu2, b nu1 + d nu2), then normalized unless told otherwise.
PicardParams gamma2_act_params(const Gamma2Element &A, const PicardParams &p, bool normalize = true);

// Not both zero. Parameters outside [0, 2) are labelled as given: the even shifts of
// normalize_params change numerators by multiples of 2N and can change M, while the
// unshifted Gamma(2) action preserves it.
AlgebraicLabel algebraic_label(const Rational &nu1, const Rational &nu2);

} // namespace pvi

#endif
