#ifndef PVI_MONODROMY_HPP
#define PVI_MONODROMY_HPP

#include <pvi/core.hpp>
#include <pvi/hypergeom.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pvi
{

// Element of Z[zeta_m] with zeta_m = exp(2 pi i / m), kept reduced modulo the m-th cyclotomic
// polynomial so that equality is coefficient equality.
class Cyclotomic
{
public:
    Cyclotomic() = default;
    Cyclotomic(int m, std::int64_t k); // the integer k
    static Cyclotomic zeta_power(int m, std::int64_t e);
    // -2 cos(pi r) for rational r whose denominator divides m/2 (m even)
    static Cyclotomic minus_two_cos(int m, const Rational &r);

    int order() const { return m_; }
    const std::vector<std::int64_t> &coeffs() const { return c_; }
    bool is_zero() const;
    cplx value() const;
    // same element in Z[zeta_L], m | L
    Cyclotomic lift(int L) const;

    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    Cyclotomic operator-() const;
    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
    // total order on coefficient vectors (same order required); used only for canonical forms
    friend bool operator<(const Cyclotomic &a, const Cyclotomic &b);

private:
    int m_ = 2;
    std::vector<std::int64_t> c_ = {0};
    void reduce(std::vector<std::int64_t> raw);
};

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t> &cyclotomic_polynomial(int m);

struct TriangleAngles {
    Rational r1, r2, r3;

    std::array<Rational, 3> as_array() const { return {r1, r2, r3}; }
    static TriangleAngles from_array(const std::array<Rational, 3> &a) { return {a[0], a[1], a[2]}; }
    bool flat() const { return r1 + r2 + r3 == Rational(1); }
    // lcm of the reduced denominators
    std::int64_t denominator() const;
    friend bool operator==(const TriangleAngles &, const TriangleAngles &) = default;
};
std::string to_string(const TriangleAngles &t);

// (x1, x2, x3). Exact when built from rational angles or integers (all three in one Z[zeta_m]),
// otherwise complex numbers.
struct MonodromyTriple {
    std::optional<std::array<Cyclotomic, 3>> exact;
    std::array<cplx, 3> approx{};

    static MonodromyTriple from_exact(const std::array<Cyclotomic, 3> &x);
    static MonodromyTriple from_complex(const std::array<cplx, 3> &x);
    static MonodromyTriple from_integers(std::int64_t a, std::int64_t b, std::int64_t c);

    std::array<cplx, 3> values() const;
    bool admissible() const;
    // angles in [0,1] when every coordinate is -2 cos(pi r) with r of denominator dividing m/2
    std::optional<TriangleAngles> angles() const;
};

bool equivalent(const MonodromyTriple &a, const MonodromyTriple &b);

struct AnglesTriple {
    MonodromyTriple triple;
    Cyclotomic constraint; // x1^2 + x2^2 + x3^2 - x1 x2 x3 = 4 sin^2(pi mu)
    double constraint_value;
    bool half_integer_mu; // constraint == 4
    bool integer_mu;      // constraint == 0
};
AnglesTriple triple_from_angles(const TriangleAngles &t);

Cyclotomic constraint_value(const std::array<Cyclotomic, 3> &x);
cplx constraint_value(const std::array<cplx, 3> &x);

enum class Braid { b1, b2, b1_inv, b2_inv };
std::string to_string(Braid g);
Braid braid_from_string(const std::string &s);
inline constexpr Braid all_braids[4] = {Braid::b1, Braid::b2, Braid::b1_inv, Braid::b2_inv};

MonodromyTriple braid_act(Braid g, const MonodromyTriple &t);

// Angle-level action on triangles whose triple satisfies the half-integer constraint. The input is
// first replaced by a flat member of its sign class (flips r_i -> 1 - r_i in pairs) if it is not
// flat. DomainError when no flat member exists or an angle is outside [0,1].
TriangleAngles braid_act_angles(Braid g, const TriangleAngles &t);

// flat member of the class, if any (the input itself when flat)
std::optional<TriangleAngles> flat_representative(const TriangleAngles &t);
// 4 sign-pattern members (and the 6 permutations of each when requested); lexicographic minimum
TriangleAngles canonical(const TriangleAngles &t, bool permutations = false);
MonodromyTriple canonical(const MonodromyTriple &t, bool permutations = false);

template <class T>
struct Orbit {
    std::vector<T> classes; // canonical representatives in discovery order
    bool finite = true;     // false when the cap was reached before closing
};

inline constexpr std::size_t default_orbit_cap = 1000000;

Orbit<TriangleAngles> orbit(const TriangleAngles &t, std::size_t cap = default_orbit_cap, bool permutations = false);
// exact triples only; complex triples raise DomainError
Orbit<MonodromyTriple> orbit(const MonodromyTriple &t, std::size_t cap = default_orbit_cap,
                             bool permutations = false);

// (nu1, nu2) <-> angles. Rows split on nu1 > nu2 / nu1 < nu2; equal values are rejected.
TriangleAngles angles_from_nu(const Rational &nu1, const Rational &nu2);
// returns (2 - 2 r2, 2 r1) reduced into [0, 2)
std::pair<Rational, Rational> nu_from_angles(const TriangleAngles &t);

struct MatrixTriple {
    Mat2 M1, M2, M3;
    Mat2 Minf() const; // (M3 M2 M1)^-1
};

MatrixTriple picard_monodromy_matrices(cplx nu1, cplx nu2);
MatrixTriple chazy_monodromy_matrices();
// triple read off from traces: x_k^2 = 2 - Tr(M_i M_j)
std::array<cplx, 3> trace_squares(const MatrixTriple &m);

MatrixTriple commuting_family(cplx a);
cplx rational_solution_eval(cplx a, cplx x);
// y, y', y'' of the rational family
std::array<cplx, 3> rational_solution_jet(cplx a, cplx x);

struct DihedralLabel {
    std::int64_t Nhat, Mhat;
    std::string group;    // "D(Nhat)"
    std::string coxeter;  // A2 / B2 / G2 for the crystallographic cases, else empty
    TriangleAngles angles; // (0, M/2N, 1 - M/2N)
    std::array<std::array<cplx, 3>, 3> gram;
    bool gram_singular; // exact
};
DihedralLabel dihedral_classify(std::int64_t M, std::int64_t N);

std::array<std::array<Cyclotomic, 3>, 3> gram_matrix(const std::array<Cyclotomic, 3> &x);
Cyclotomic gram_determinant(const std::array<Cyclotomic, 3> &x);

} // namespace pvi

#endif
