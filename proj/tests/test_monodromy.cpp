#include "orbit_oracle.hpp"
#include "pvi_oracle.hpp"

#include <pvi/monodromy.hpp>
#include <pvi/picard.hpp>

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace pvi;
using oracle::flat_triangles;
using oracle::grid_orbit_size;

namespace
{

TriangleAngles angles(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n)
{
    return {Rational(a, n), Rational(b, n), Rational(c, n)};
}

bool same(const MonodromyTriple &a, const MonodromyTriple &b)
{
    for (int i = 0; i < 3; ++i) {
        if (!((*a.exact)[i] == (*b.exact)[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("cyclotomic ring")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(105).size() == 49);
    // -2cos(pi/3) = -1, -2cos(pi/4)^2 = 2
    CHECK(Cyclotomic::minus_two_cos(6, Rational(1, 3)) == Cyclotomic(6, -1));
    auto c4 = Cyclotomic::minus_two_cos(8, Rational(1, 4));
    CHECK(c4 * c4 == Cyclotomic(8, 2));
    CHECK(std::abs(c4.value() + std::sqrt(2.0)) < 1e-15);
    CHECK(c4.lift(24) * c4 == Cyclotomic(3, 2));
    CHECK(Cyclotomic::minus_two_cos(10, Rational(1, 5)) + Cyclotomic::minus_two_cos(10, Rational(3, 5)) ==
          Cyclotomic(10, -1));
}

TEST_CASE("triples from angles")
{
    auto a = triple_from_angles(angles(0, 1, 2, 3));
    auto v = a.triple.values();
    CHECK(std::abs(v[0] + 2.0) < 1e-15);
    CHECK(std::abs(v[1] + 1.0) < 1e-15);
    CHECK(std::abs(v[2] - 1.0) < 1e-15);
    CHECK(a.half_integer_mu);
    CHECK(a.constraint_value == doctest::Approx(4.0));

    // (-2,-2,-2): 12 - (-8) = 20, not a half-integer class
    auto z = triple_from_angles(angles(0, 0, 0, 1));
    CHECK(z.constraint == Cyclotomic(2, 20));
    CHECK(!z.half_integer_mu);
    CHECK(std::abs(z.triple.values()[0] + 2.0) < 1e-15);

    auto h = triple_from_angles(angles(1, 1, 1, 2));
    CHECK(h.integer_mu);
    CHECK(!h.half_integer_mu);
    CHECK(!h.triple.admissible());

    // flat means constraint 4, and only flat classes give it
    for (auto &t : flat_triangles(8)) {
        CHECK(triple_from_angles(t).half_integer_mu);
    }
    CHECK(!triple_from_angles(angles(1, 1, 1, 4)).half_integer_mu);
    CHECK_THROWS_AS(triple_from_angles({Rational(3, 2), Rational(0), Rational(0)}), DomainError);
}

TEST_CASE("angles recovered from exact triples")
{
    for (auto &t : flat_triangles(8)) {
        auto back = triple_from_angles(t).triple.angles();
        REQUIRE(back);
        CHECK(*back == t);
    }
    CHECK(!MonodromyTriple::from_integers(3, 3, 3).angles());
}

TEST_CASE("braid action on triples")
{
    auto zero = MonodromyTriple::from_integers(0, 0, 0);
    CHECK(same(braid_act(Braid::b1, zero), zero));

    auto two = MonodromyTriple::from_integers(2, 2, 2);
    auto img = braid_act(Braid::b1, two);
    CHECK(same(img, MonodromyTriple::from_integers(-2, -2, 2)));
    CHECK(equivalent(img, two));

    auto t = triple_from_angles(angles(0, 1, 2, 3)).triple;
    for (Braid g : {Braid::b1, Braid::b2}) {
        Braid inv = g == Braid::b1 ? Braid::b1_inv : Braid::b2_inv;
        CHECK(same(braid_act(inv, braid_act(g, t)), t));
        CHECK(same(braid_act(g, braid_act(inv, t)), t));
    }

    auto num = braid_act(Braid::b2, MonodromyTriple::from_complex({0.3, cplx(0.1, 1.0), -1.2}));
    CHECK(!num.exact);
    CHECK(std::abs(num.approx[2] - (0.3 - cplx(0.1, 1.0) * -1.2)) < 1e-15);
}

TEST_CASE("braid relation and class compatibility on all flat triangles up to denominator 8")
{
    auto all = flat_triangles(8);
    CHECK(all.size() > 50);
    for (auto &t : all) {
        auto x = triple_from_angles(t).triple;
        auto lhs = braid_act(Braid::b1, braid_act(Braid::b2, braid_act(Braid::b1, x)));
        auto rhs = braid_act(Braid::b2, braid_act(Braid::b1, braid_act(Braid::b2, x)));
        CHECK(same(lhs, rhs));
        auto c = constraint_value(*x.exact);
        for (Braid g : all_braids) {
            auto y = braid_act(g, x);
            CHECK(constraint_value(*y.exact) == c);
            // flipping two signs before acting lands in the same class
            auto flipped = MonodromyTriple::from_exact({-(*x.exact)[0], -(*x.exact)[1], (*x.exact)[2]});
            CHECK(equivalent(braid_act(g, flipped), y));
        }
    }
}

TEST_CASE("angle-level action")
{
    CHECK(braid_act_angles(Braid::b1, angles(0, 1, 2, 3)) == angles(3, 1, 1, 3));
    CHECK(braid_act_angles(Braid::b2, angles(0, 1, 2, 3)) == angles(2, 2, 1, 3));
    for (auto &t : flat_triangles(8)) {
        for (Braid g : all_braids) {
            auto img = braid_act_angles(g, t);
            // agrees with the triple-level action up to class
            CHECK(equivalent(triple_from_angles(img).triple, braid_act(g, triple_from_angles(t).triple)));
            CHECK(t.denominator() % img.denominator() == 0);
        }
    }
    // a non-flat member of a flat class is accepted
    CHECK(equivalent(triple_from_angles(braid_act_angles(Braid::b1, angles(3, 1, 1, 3))).triple,
                     triple_from_angles(braid_act_angles(Braid::b1, angles(0, 2, 1, 3))).triple));
    CHECK_THROWS_AS(braid_act_angles(Braid::b1, angles(1, 1, 1, 4)), DomainError);
}

TEST_CASE("orbit sizes match the brute-force grid")
{
    struct Case {
        std::array<std::int64_t, 3> p;
        std::int64_t n;
        std::size_t size;
    };
    const Case cases[] = {{{0, 1, 3}, 4, 6}, {{0, 1, 2}, 3, 4}, {{1, 2, 2}, 5, 12}, {{0, 1, 5}, 6, 12}};
    for (auto &c : cases) {
        auto t = angles(c.p[0], c.p[1], c.p[2], c.n);
        auto o = orbit(t);
        CHECK(o.finite);
        CHECK(o.classes.size() == c.size);
        CHECK(grid_orbit_size(c.n, c.p) == c.size);
        auto ox = orbit(triple_from_angles(t).triple);
        CHECK(ox.finite);
        CHECK(ox.classes.size() == c.size);
        // the exact constraint is the same at every class
        auto c0 = constraint_value(*ox.classes.front().exact);
        for (auto &x : ox.classes) {
            CHECK(constraint_value(*x.exact) == c0);
        }
    }
    // every flat class up to denominator 6 against the grid
    for (auto &t : flat_triangles(6)) {
        int halves = (t.r1 == Rational(1, 2)) + (t.r2 == Rational(1, 2)) + (t.r3 == Rational(1, 2));
        if (halves > 1) {
            continue;
        }
        const std::int64_t n = t.denominator();
        std::array<std::int64_t, 3> p{t.r1.num() * (n / t.r1.den()), t.r2.num() * (n / t.r2.den()),
                                      t.r3.num() * (n / t.r3.den())};
        CHECK(orbit(t).classes.size() == grid_orbit_size(n, p));
    }
}

TEST_CASE("the class [2,2,2] is fixed")
{
    auto o = orbit(MonodromyTriple::from_integers(2, 2, 2));
    CHECK(o.finite);
    CHECK(o.classes.size() == 1);
    auto oa = orbit(angles(1, 1, 1, 1));
    CHECK(oa.classes.size() == 1);
}

TEST_CASE("orbit cap")
{
    // integer-mu triple (constraint 0): infinite orbit
    auto t = MonodromyTriple::from_integers(3, 3, 3);
    CHECK(constraint_value(*t.exact).is_zero());
    auto o = orbit(t, 200);
    CHECK(!o.finite);
    CHECK(o.classes.size() == 200);
    CHECK_THROWS_AS(orbit(MonodromyTriple::from_complex({1.0, 1.0, 1.0})), DomainError);
    CHECK_THROWS_AS(orbit(MonodromyTriple::from_integers(0, 0, 1)), DomainError);
}

TEST_CASE("permutation-aware canonical form")
{
    auto a = canonical(angles(0, 1, 2, 3), true);
    auto b = canonical(angles(1, 0, 2, 3), true);
    CHECK(a == b);
    auto o = orbit(angles(0, 1, 3, 4), default_orbit_cap, true);
    CHECK(o.classes.size() <= 6);
}

TEST_CASE("nu-angle dictionaries")
{
    CHECK(angles_from_nu(Rational(2, 3), Rational(0)) == angles(0, 2, 1, 3));
    auto nu = nu_from_angles(angles(0, 2, 1, 3));
    CHECK(nu.first == Rational(2, 3));
    CHECK(nu.second == Rational(0));
    auto rt = nu_from_angles(angles_from_nu(Rational(1, 2), Rational(1, 3)));
    CHECK(rt.first == Rational(1, 2));
    CHECK(rt.second == Rational(1, 3));
    // second row comes back as (-nu1, -nu2) mod 2
    auto rt2 = nu_from_angles(angles_from_nu(Rational(1, 3), Rational(1, 2)));
    CHECK(rt2.first == Rational(5, 3));
    CHECK(rt2.second == Rational(3, 2));
    for (auto t : {angles_from_nu(Rational(1, 2), Rational(1, 3)), angles_from_nu(Rational(1, 3), Rational(1, 2))}) {
        CHECK(t.flat());
    }
    CHECK_THROWS_AS(angles_from_nu(Rational(1, 2), Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(angles_from_nu(Rational(2), Rational(1, 2)), DomainError);
}

TEST_CASE("monodromy matrices of Picard solutions")
{
    auto limit = chazy_monodromy_matrices();
    auto z = picard_monodromy_matrices(0.0, 0.0);
    for (auto [a, b] : {std::pair{z.M1, limit.M1}, {z.M2, limit.M2}, {z.M3, limit.M3}}) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(std::abs(a[i][j] - b[i][j]) < 1e-15);
            }
        }
    }
    const std::pair<cplx, cplx> params[] = {{0.5, 1.0 / 3.0}, {cplx(0.3, 0.1), 0.7}, {1.7, cplx(0.2, -0.4)}};
    for (auto [n1, n2] : params) {
        auto m = picard_monodromy_matrices(n1, n2);
        for (auto &M : {m.M1, m.M2, m.M3}) {
            CHECK(std::abs(M[0][0] * M[1][1] - M[0][1] * M[1][0] - 1.0) < 1e-13);
            CHECK(std::abs(M[0][0] + M[1][1] - 2.0) < 1e-13);
        }
        auto P = mat_mul(mat_mul(mat_mul(m.Minf(), m.M3), m.M2), m.M1);
        CHECK(std::abs(P[0][0] - 1.0) + std::abs(P[0][1]) + std::abs(P[1][0]) + std::abs(P[1][1] - 1.0) < 1e-12);
    }
    // Tr(M_i M_j) = 2 - x_k^2 through the angle dictionary
    const std::pair<Rational, Rational> rat[] = {
        {Rational(1), Rational(1, 3)}, {Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(3, 4)}};
    for (auto [n1, n2] : rat) {
        auto m = picard_monodromy_matrices(n1.to_double(), n2.to_double());
        auto ts = trace_squares(m);
        auto x = triple_from_angles(angles_from_nu(n1, n2)).triple.values();
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(ts[k] - x[k] * x[k]) < 1e-12);
        }
    }
    auto m = picard_monodromy_matrices(1.0, 1.0 / 3.0);
    auto M12 = mat_mul(m.M1, m.M2);
    CHECK(std::abs(M12[0][0] + M12[1][1] + 1.0) < 1e-14);
    CHECK_THROWS_AS(picard_monodromy_matrices(0.3, 1.0), DegenerateDenominator);
}

TEST_CASE("Picard matrices approach the Chazy triple")
{
    auto limit = chazy_monodromy_matrices();
    double prev = 1e300;
    for (double e : {1e-2, 1e-3, 1e-4}) {
        auto m = picard_monodromy_matrices(e, 0.5 * e);
        double d = 0;
        for (auto [a, b] : {std::pair{m.M1, limit.M1}, {m.M2, limit.M2}, {m.M3, limit.M3}}) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    d = std::max(d, std::abs(a[i][j] - b[i][j]));
                }
            }
        }
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("commuting family and rational solutions")
{
    for (cplx a : {cplx(2.0), cplx(-1.0), cplx(0.5), cplx(0.3, 0.7)}) {
        auto m = commuting_family(a);
        for (auto [A, B] : {std::pair{m.M1, m.M2}, {m.M1, m.M3}, {m.M2, m.M3}}) {
            auto AB = mat_mul(A, B), BA = mat_mul(B, A);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    CHECK(std::abs(AB[i][j] - BA[i][j]) < 1e-15);
                }
            }
        }
        CHECK(std::abs(m.M3[0][1] - m.M1[0][1] - m.M2[0][1]) < 1e-15);
    }
    CHECK(std::abs(rational_solution_eval(2.0, 0.5) - 2.0 / 3.0) < 1e-16);
    CHECK_THROWS_AS(rational_solution_eval(2.0, -1.0), PoleError);
    CHECK_THROWS_AS(rational_solution_eval(0.0, 0.3), DomainError);
    for (cplx x : {cplx(0.2), cplx(0.3, 0.1), cplx(-0.4)}) {
        auto f = [](cplx z) { return rational_solution_eval(2.0, z); };
        auto j = oracle::cauchy_jet(f, x, 0.05);
        CHECK(oracle::pvi_defect(j, x, 1.0) < 1e-10);
        auto e = rational_solution_jet(2.0, x);
        CHECK(std::abs(e[1] - j.y1) < 1e-11);
        CHECK(std::abs(e[2] - j.y2) < 1e-10);
    }
}

TEST_CASE("dihedral table")
{
    auto a2 = dihedral_classify(2, 3);
    CHECK(a2.Nhat == 3);
    CHECK(a2.Mhat == 1);
    CHECK(a2.group == "D(3)");
    CHECK(a2.coxeter == "A2");
    auto b2 = dihedral_classify(1, 2);
    CHECK(b2.Nhat == 4);
    CHECK(b2.Mhat == 1);
    CHECK(b2.coxeter == "B2");
    auto g2 = dihedral_classify(1, 3);
    CHECK(g2.Nhat == 6);
    CHECK(g2.Mhat == 1);
    CHECK(g2.coxeter == "G2");
    CHECK(dihedral_classify(3, 5).coxeter.empty());
    for (auto l : {a2, b2, g2}) {
        CHECK(l.gram_singular);
    }
    CHECK_THROWS_AS(dihedral_classify(2, 4), DomainError);
    CHECK_THROWS_AS(dihedral_classify(7, 3), DomainError);
}

TEST_CASE("Gram determinant")
{
    for (auto &t : flat_triangles(8)) {
        auto x = *triple_from_angles(t).triple.exact;
        auto det = gram_determinant(x);
        CHECK(det.is_zero());
        CHECK(det == Cyclotomic(x[0].order(), 8) - Cyclotomic(x[0].order(), 2) * constraint_value(x));
    }
    // non-flat: nonzero
    CHECK(!gram_determinant(*triple_from_angles(angles(1, 1, 1, 4)).triple.exact).is_zero());
}

TEST_CASE("polygon size is constant along orbits, density is not")
{
    const std::pair<std::int64_t, std::int64_t> labels[] = {{2, 3}, {1, 2}, {1, 3}, {3, 5}, {2, 5}, {1, 4}, {3, 4}};
    for (auto [M, N] : labels) {
        const std::int64_t Nhat = dihedral_classify(M, N).Nhat;
        auto o = orbit(dihedral_classify(M, N).angles);
        CHECK(o.finite);
        for (auto &c : o.classes) {
            auto f = flat_representative(c);
            REQUIRE(f);
            auto [nu1, nu2] = nu_from_angles(*f);
            if (nu1 == Rational(0) && nu2 == Rational(0)) {
                continue;
            }
            auto l = algebraic_label(nu1, nu2);
            std::int64_t m = l.M % (2 * l.N);
            if (std::gcd(m, l.N) != 1) {
                continue;
            }
            CHECK(dihedral_classify(m, l.N).Nhat == Nhat);
        }
    }
    // the orbit of the {10/3} triangle contains the {10/1} triangle
    auto o = orbit(dihedral_classify(3, 5).angles);
    auto target = canonical(dihedral_classify(1, 5).angles);
    CHECK(std::find(o.classes.begin(), o.classes.end(), target) != o.classes.end());
    CHECK(dihedral_classify(3, 5).Mhat == 3);
    CHECK(dihedral_classify(1, 5).Mhat == 1);
}
