#include "pvi_oracle.hpp"

#include <pvi/chazy.hpp>
#include <pvi/picard.hpp>
#include <pvi/symmetry.hpp>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <random>

using namespace pvi;

namespace
{

oracle::Jet2 jet_of(const Taylor &t)
{
    return {t.value(), t.derivative_at(1), t.derivative_at(2)};
}

JetPoint jet_point(cplx x, const Taylor &t, Rational mu)
{
    return {x, t.value(), t.derivative_at(1), mu};
}

// Rational family y = a x / (1 - (1-a) x) as a Taylor series about x0.
Taylor rational_series(cplx a, cplx x0, int order = max_series_order)
{
    Taylor X = Taylor::variable(x0, order);
    return a * X / (1.0 - (1.0 - a) * X);
}

bool same_set(std::array<cplx, 4> a, std::array<cplx, 4> b, double tol)
{
    std::array<bool, 4> used{};
    for (auto v : a) {
        bool hit = false;
        for (int k = 0; k < 4; ++k) {
            if (!used[k] && std::abs(v - b[k]) < tol * (1 + std::abs(v))) {
                used[k] = hit = true;
                break;
            }
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("monomial tables reproduce the factored polynomials")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        cplx x(U(rng), U(rng)), y(U(rng), U(rng));
        Rational mu(static_cast<std::int64_t>(trial % 9) - 4, 2);
        auto a = s1_polynomials(x, y, mu), b = s1_polynomials_factored(x, y, mu);
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(a.p[k] - b.p[k]) <= 1e-11 * (1 + std::abs(b.p[k])));
        }
        for (int k = 0; k < 5; ++k) {
            CHECK(std::abs(a.q[k] - b.q[k]) <= 1e-11 * (1 + std::abs(b.q[k])));
        }
    }
}

TEST_CASE("Picard image solves PVI at mu = -1/2")
{
    const PicardParams p{0.5, 1.0 / 3.0};
    for (cplx x : {cplx(0.4), cplx(0.3, 0.2), cplx(-0.6, 0.3), cplx(2.2, -0.7)}) {
        auto b = basis_at(x, choose_chart(x));
        Taylor y = picard_series(b, p, 5);
        Taylor img = s1_transform(Taylor::variable(x, 5), y, Rational(1, 2));
        CHECK(oracle::pvi_defect(jet_of(img), x, -0.5) < 1e-9);
        // independent route: contour derivatives of the pointwise map
        auto f = [&](cplx z) {
            Taylor yz = picard_series(basis_shift(b, z), p, 2);
            return s1_transform(JetPoint{z, yz.value(), yz.derivative_at(1), Rational(1, 2)});
        };
        auto j = oracle::cauchy_jet(f, x, 0.01 * std::min(std::abs(x), std::abs(1.0 - x)));
        CHECK(std::abs(j.y - img.value()) < 1e-10 * (1 + std::abs(j.y)));
        CHECK(oracle::pvi_defect(j, x, -0.5) < 1e-7);
    }
}

TEST_CASE("rational family image solves PVI at mu = -1")
{
    const cplx x = 0.3;
    Taylor y = rational_series(2.0, x, 5);
    CHECK(std::abs(y.value() - 2.0 * x / (1.0 + x)) < 1e-15);
    Taylor img = s1_transform(Taylor::variable(x, 5), y, Rational(1));
    CHECK(std::isfinite(std::abs(img.value())));
    CHECK(oracle::pvi_defect(jet_of(img), x, -1.0) < 1e-10);
    cplx direct = s1_transform(jet_point(x, y, Rational(1)));
    CHECK(std::abs(direct - img.value()) < 1e-13);
}

TEST_CASE("Chazy jets annihilate the denominator")
{
    for (double nu : {0.5, 1.0, 2.0}) {
        for (cplx x : {cplx(0.35), cplx(0.2, 0.3), cplx(0.7, -0.2)}) {
            auto s = chazy_series(basis_at(x, choose_chart(x)), ChazyParam::finite(nu));
            JetPoint j = jet_point(x, s, Rational(-1, 2));
            CHECK(q_normalized(j) < 1e-8);
            CHECK_THROWS_AS(s1_transform(j), DenominatorZero);
        }
    }
}

TEST_CASE("singular jets are rejected")
{
    CHECK_THROWS_AS(s1_transform(JetPoint{0.3, 0.3, 0.0, Rational(1, 2)}), DomainError);
    CHECK_THROWS_AS(s1_transform(JetPoint{0.3, 1.0, 0.2, Rational(1, 2)}), DomainError);
    CHECK_THROWS_AS(s1_transform(JetPoint{0.0, 0.5, 0.2, Rational(1, 2)}), DomainError);
    CHECK_THROWS_AS(s1_transform(JetPoint{0.3, 0.5, 0.2, Rational(1, 3)}), DomainError);
}

TEST_CASE("listed roots of the quartic")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        cplx x(U(rng), U(rng)), y(U(rng), U(rng));
        for (auto r : q_branch_roots(x, y)) {
            CHECK(q_normalized(JetPoint{x, y, r, Rational(-1, 2)}) < 1e-8);
        }
    }
}

TEST_CASE("listed roots agree with a companion-matrix solver")
{
    const cplx x = 0.25, y = 0.5;
    auto P = s1_polynomials(x, y, Rational(-1, 2));
    Eigen::Matrix4cd C = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) {
        C(0, k) = -P.q[k + 1] / P.q[0];
    }
    for (int k = 1; k < 4; ++k) {
        C(k, k - 1) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(C);
    std::array<cplx, 4> ev;
    for (int k = 0; k < 4; ++k) {
        ev[k] = es.eigenvalues()(k);
    }
    CHECK(same_set(q_branch_roots(x, y), ev, 1e-10));
}

TEST_CASE("Chazy derivative is one of the listed roots")
{
    for (cplx nu : {cplx(0.5), cplx(2.0), cplx(1.0, 1.0)}) {
        cplx x(0.3, 0.1);
        auto s = chazy_series(basis_at(x, Chart::Zero), ChazyParam::finite(nu));
        auto roots = q_branch_roots(x, s.value());
        double d = 1e300;
        for (auto r : roots) {
            d = std::min(d, std::abs(r - s.derivative_at(1)));
        }
        CHECK(d < 1e-6);
    }
}

TEST_CASE("root sets are permuted by the elementary symmetries")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
        cplx x(U(rng), U(rng)), y(U(rng), U(rng));
        for (auto s : {ElementarySymmetry::T01, ElementarySymmetry::T0inf, ElementarySymmetry::T01_T0inf}) {
            std::array<cplx, 4> mapped;
            auto roots = q_branch_roots(x, y);
            JetPoint img{};
            for (int k = 0; k < 4; ++k) {
                img = elementary_symmetry(s, JetPoint{x, y, roots[k], Rational(-1, 2)});
                mapped[k] = img.yprime;
            }
            CHECK(same_set(mapped, q_branch_roots(img.x, img.y), 1e-8));
        }
    }
}

TEST_CASE("first root goes to the third under x -> 1-x")
{
    const cplx x(0.3, 0.2), y(0.6, -0.1);
    auto r = q_branch_roots(x, y);
    auto t = elementary_symmetry(ElementarySymmetry::T01, JetPoint{x, y, r[0], Rational(-1, 2)});
    auto r2 = q_branch_roots(t.x, t.y);
    CHECK(std::abs(r2[2] - t.yprime) < 1e-10);
}

TEST_CASE("obstruction factors stay away from zero on Picard jets")
{
    const PicardParams ps[] = {{0.5, 1.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0}, {cplx(0.3, 0.1), 0.7}};
    for (auto &p : ps) {
        for (cplx x : {cplx(0.4), cplx(0.2, 0.3), cplx(0.6, -0.4), cplx(-0.5, 0.2)}) {
            auto s = picard_series(basis_at(x, choose_chart(x)), p, 3);
            cplx y = s.value(), v = s.derivative_at(1);
            CHECK(std::abs(obstruction_q1(x, y, v)) > 1e-6);
            CHECK(std::abs(obstruction_q2(x, y, v)) > 1e-6);
            CHECK(std::abs(obstruction_q3(x, y, v)) > 1e-6);
        }
    }
}

// Q at the image equals x^10 (x-1)^10 Q1^4 Q2^4 Q3^4 / (brace * D^4), with D the map's own
// denominator at mu = 1/2 evaluated on the Picard jet.
cplx image_q_prediction(cplx x, cplx y, cplx v)
{
    cplx q1 = obstruction_q1(x, y, v), q2 = obstruction_q2(x, y, v), q3 = obstruction_q3(x, y, v);
    cplx brace = y * y * (y - 1.0) * (y - 1.0) - 4.0 * y * y * (y - 1.0) * (y - 1.0) * v +
                 2.0 * (y - 1.0) * y * v * v * (4.0 * x * y - x - x * x - 2.0 * y) -
                 4.0 * (x - 1.0) * x * (y - 1.0) * y * v * v * v + (x - 1.0) * (x - 1.0) * x * x * v * v * v * v;
    auto P = s1_polynomials(x, y, Rational(1, 2));
    cplx D = (((P.q[0] * v + P.q[1]) * v + P.q[2]) * v + P.q[3]) * v + P.q[4];
    cplx a = x * (x - 1.0);
    return a * a * std::pow(a, 8) * std::pow(q1 * q2 * q3, 4) / (brace * std::pow(D, 4));
}

TEST_CASE("denominator of the image factors through the obstruction polynomials")
{
    const PicardParams ps[] = {{0.5, 1.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0}, {cplx(0.3, 0.1), 0.7}};
    for (auto &p : ps) {
        for (cplx x : {cplx(0.4), cplx(0.2, 0.3), cplx(0.6, -0.4), cplx(2.4, -0.9)}) {
            auto s = picard_series(basis_at(x, choose_chart(x)), p, 4);
            cplx y = s.value(), v = s.derivative_at(1);
            Taylor img = s1_transform(Taylor::variable(x, 4), s, Rational(1, 2));
            cplx Q = q_denominator(JetPoint{x, img.value(), img.derivative_at(1), Rational(-1, 2)});
            cplx pred = image_q_prediction(x, y, v);
            CHECK(std::abs(Q - pred) < 1e-7 * std::abs(pred));
        }
    }
}

TEST_CASE("Picard images mapped to mu = -1/2 stay off the Chazy branches")
{
    const PicardParams ps[] = {{0.5, 1.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0}, {cplx(0.3, 0.1), 0.7}};
    auto ladder = mu_ladder(Rational(1, 2), Rational(-1, 2));
    for (auto &p : ps) {
        for (cplx x : {cplx(0.4), cplx(0.2, 0.3), cplx(0.6, -0.4), cplx(-2.31, -0.957)}) {
            auto s = picard_series(basis_at(x, choose_chart(x)), p, 3);
            Taylor img = apply_ladder(Taylor::variable(x, 3), s, ladder);
            JetPoint j{x, img.value(), img.derivative_at(1), Rational(-1, 2)};
            // far above the rounding level of a Chazy jet (~1e-16)
            CHECK(q_normalized(j) > 1e-10);
            double gap = 1e300;
            for (auto r : q_branch_roots(x, j.y)) {
                gap = std::min(gap, std::abs(r - j.yprime) / (std::abs(r) + std::abs(j.yprime)));
            }
            CHECK(gap > 1e-4);
        }
    }
}

TEST_CASE("elementary symmetries")
{
    auto a = elementary_symmetry(ElementarySymmetry::T01, 0.3, 0.7);
    CHECK(std::abs(a.x - 0.7) < 1e-15);
    CHECK(std::abs(a.y - 0.3) < 1e-15);
    auto b = elementary_symmetry(ElementarySymmetry::T0inf, 2.0, 3.0);
    CHECK(b.x == cplx(0.5));
    CHECK(b.y == cplx(1.5));
    auto c = elementary_symmetry(ElementarySymmetry::T01, cplx(0.3, 0.1), 0.2);
    auto d = elementary_symmetry(ElementarySymmetry::T01, c.x, c.y);
    CHECK(std::abs(d.x - cplx(0.3, 0.1)) < 1e-15);
    CHECK(std::abs(d.y - 0.2) < 1e-15);
    CHECK_THROWS_AS(elementary_symmetry(ElementarySymmetry::T0inf, 0.0, 0.5), DomainError);
}

TEST_CASE("symmetries map solutions to solutions")
{
    // mu = 1/2 is preserved by both generators
    const PicardParams p{0.5, 1.0 / 3.0};
    const cplx x(0.3, 0.2);
    auto b = basis_at(x, Chart::Zero);
    for (auto s : {ElementarySymmetry::T01, ElementarySymmetry::T0inf, ElementarySymmetry::T01_T0inf,
                   ElementarySymmetry::T0inf_T01}) {
        auto f = [&](cplx xt) {
            // invert the x map, evaluate, and map y
            cplx xo;
            switch (s) {
            case ElementarySymmetry::T01: xo = 1.0 - xt; break;
            case ElementarySymmetry::T0inf: xo = 1.0 / xt; break;
            case ElementarySymmetry::T01_T0inf: xo = 1.0 - 1.0 / xt; break;
            case ElementarySymmetry::T0inf_T01: xo = 1.0 / (1.0 - xt); break;
            }
            cplx yo = picard_from_basis(basis_shift(b, xo), p);
            return elementary_symmetry(s, xo, yo).y;
        };
        cplx xt = elementary_symmetry(s, x, 0.5).x;
        auto j = oracle::cauchy_jet(f, xt, 1e-3);
        CHECK(oracle::pvi_defect(j, xt, 0.5) < 1e-7);
    }
}

TEST_CASE("mu ladder")
{
    using K = LadderStep::Kind;
    CHECK(mu_ladder(Rational(-1, 2), Rational(-1, 2)).empty());
    CHECK(mu_ladder(Rational(1, 2), Rational(-1, 2)) == std::vector<LadderStep>{{K::S1, Rational(1, 2)}});
    CHECK(mu_ladder(Rational(3, 2), Rational(-1, 2)) == std::vector<LadderStep>{{K::Relabel, Rational(-1, 2)}});
    CHECK(mu_ladder(Rational(5, 2), Rational(1, 2)) ==
          std::vector<LadderStep>{{K::Relabel, Rational(-3, 2)}, {K::S1, Rational(-3, 2)}, {K::Relabel, Rational(-1, 2)}, {K::S1, Rational(-1, 2)}});
    CHECK_THROWS_AS(mu_ladder(Rational(1, 2), Rational(1)), UnreachableTarget);
    CHECK_THROWS_AS(mu_ladder(Rational(1, 3), Rational(1)), DomainError);
}

TEST_CASE("ladder images solve the target equation")
{
    const cplx x(0.35, 0.15);
    auto s = picard_series(basis_at(x, Chart::Zero), {0.5, 1.0 / 3.0}, 6);
    for (auto target : {Rational(-1, 2), Rational(3, 2), Rational(5, 2), Rational(-5, 2)}) {
        auto steps = mu_ladder(Rational(1, 2), target);
        Taylor img = apply_ladder(Taylor::variable(x, 6), s, steps);
        CHECK(img.n >= 3);
        CHECK(oracle::pvi_defect(jet_of(img), x, target.to_double()) < 1e-8);
    }
    auto r = rational_series(-1.0, x, 6);
    for (auto target : {Rational(-1), Rational(2), Rational(3), Rational(0)}) {
        Taylor img = apply_ladder(Taylor::variable(x, 6), r, mu_ladder(Rational(1), target));
        CHECK(oracle::pvi_defect(jet_of(img), x, target.to_double()) < 1e-8);
    }
}
