#include <pvi/symmetry.hpp>

#include <cmath>
#include <map>
#include <utility>

namespace pvi
{

namespace
{

// coefficient * x^i y^j mu^k
struct Term {
    int i, j, k;
    long long c;
};

// p0: 3 terms
constexpr Term p0_terms[] = {
    {2, 0, 0, 1}, {3, 0, 0, -2}, {4, 0, 0, 1},
};
// p1: 10 terms
constexpr Term p1_terms[] = {
    {1, 1, 0, -2}, {1, 1, 1, 4}, {1, 2, 0, 2}, {1, 2, 1, -4}, {2, 0, 1, -4}, {2, 1, 0, 2},
    {2, 2, 0, -2}, {2, 2, 1, 4}, {3, 0, 1, 4}, {3, 1, 1, -4},
};
// p2: 17 terms
constexpr Term p2_terms[] = {
    {0, 2, 0, 1}, {0, 2, 1, -4}, {0, 2, 2, 4}, {0, 3, 0, -2}, {0, 3, 1, 8}, {0, 3, 2, -8},
    {0, 4, 0, 1}, {0, 4, 1, -4}, {0, 4, 2, 4}, {1, 1, 1, 4}, {1, 1, 2, -4}, {1, 2, 1, -8},
    {1, 2, 2, 12}, {1, 3, 1, 4}, {1, 3, 2, -8}, {2, 1, 2, -4}, {2, 2, 2, 4},
};
// q0: 5 terms
constexpr Term q0_terms[] = {
    {4, 0, 0, 1}, {5, 0, 0, -4}, {6, 0, 0, 6}, {7, 0, 0, -4}, {8, 0, 0, 1},
};
// q1: 8 terms
constexpr Term q1_terms[] = {
    {3, 1, 0, -4}, {3, 2, 0, 4}, {4, 1, 0, 12}, {4, 2, 0, -12}, {5, 1, 0, -12}, {5, 2, 0, 12},
    {6, 1, 0, 4}, {6, 2, 0, -4},
};
// q2: 25 terms
constexpr Term q2_terms[] = {
    {2, 2, 0, 6}, {2, 2, 2, -8}, {2, 3, 0, -12}, {2, 3, 2, 32}, {2, 4, 0, 6}, {2, 4, 2, -24},
    {3, 1, 2, 8}, {3, 2, 0, -12}, {3, 2, 2, -24}, {3, 3, 0, 24}, {3, 3, 2, -32}, {3, 4, 0, -12},
    {3, 4, 2, 48}, {4, 1, 2, -8}, {4, 2, 0, 6}, {4, 2, 2, 64}, {4, 3, 0, -12}, {4, 3, 2, -32},
    {4, 4, 0, 6}, {4, 4, 2, -24}, {5, 1, 2, -8}, {5, 2, 2, -24}, {5, 3, 2, 32}, {6, 1, 2, 8},
    {6, 2, 2, -8},
};
// q3: 35 terms
constexpr Term q3_terms[] = {
    {1, 3, 0, -4}, {1, 3, 2, 16}, {1, 4, 0, 12}, {1, 4, 2, -80}, {1, 4, 3, 64}, {1, 5, 0, -12},
    {1, 5, 2, 112}, {1, 5, 3, -128}, {1, 6, 0, 4}, {1, 6, 2, -48}, {1, 6, 3, 64}, {2, 2, 2, -16},
    {2, 3, 0, 4}, {2, 3, 2, 80}, {2, 3, 3, -128}, {2, 4, 0, -12}, {2, 4, 2, -64}, {2, 4, 3, 192},
    {2, 5, 0, 12}, {2, 5, 2, -48}, {2, 6, 0, -4}, {2, 6, 2, 48}, {2, 6, 3, -64}, {3, 2, 3, 64},
    {3, 3, 2, -64}, {3, 4, 2, 128}, {3, 4, 3, -192}, {3, 5, 2, -64}, {3, 5, 3, 128}, {4, 2, 2, 16},
    {4, 2, 3, -64}, {4, 3, 2, -32}, {4, 3, 3, 128}, {4, 4, 2, 16}, {4, 4, 3, -64},
};
// q4: 51 terms
constexpr Term q4_terms[] = {
    {0, 4, 0, 1}, {0, 4, 2, -8}, {0, 4, 4, 16}, {0, 5, 0, -4}, {0, 5, 2, 48}, {0, 5, 3, -64},
    {0, 6, 0, 6}, {0, 6, 2, -96}, {0, 6, 3, 192}, {0, 6, 4, -96}, {0, 7, 0, -4}, {0, 7, 2, 80},
    {0, 7, 3, -192}, {0, 7, 4, 128}, {0, 8, 0, 1}, {0, 8, 2, -24}, {0, 8, 3, 64}, {0, 8, 4, -48},
    {1, 3, 2, 8}, {1, 3, 4, -32}, {1, 4, 2, -56}, {1, 4, 3, 128}, {1, 4, 4, -32}, {1, 5, 2, 120},
    {1, 5, 3, -384}, {1, 5, 4, 288}, {1, 6, 2, -104}, {1, 6, 3, 384}, {1, 6, 4, -352}, {1, 7, 2, 32},
    {1, 7, 3, -128}, {1, 7, 4, 128}, {2, 2, 4, 16}, {2, 3, 2, 8}, {2, 3, 3, -64}, {2, 3, 4, 64},
    {2, 4, 2, -24}, {2, 4, 3, 192}, {2, 4, 4, -272}, {2, 5, 2, 24}, {2, 5, 3, -192}, {2, 5, 4, 288},
    {2, 6, 2, -8}, {2, 6, 3, 64}, {2, 6, 4, -96}, {3, 2, 4, -32}, {3, 3, 4, 64}, {3, 4, 4, -32},
    {4, 2, 4, 16}, {4, 3, 4, -32}, {4, 4, 4, 16},
};

template <std::size_t K>
std::vector<std::pair<std::pair<int, int>, double>> combine(const Term (&terms)[K], const Rational &mu)
{
    std::map<std::pair<int, int>, Rational> acc;
    for (const auto &t : terms) {
        Rational m(1);
        for (int e = 0; e < t.k; ++e) {
            m = m * mu;
        }
        auto &slot = acc[{t.i, t.j}];
        slot = slot + Rational(t.c) * m;
    }
    std::vector<std::pair<std::pair<int, int>, double>> out;
    for (const auto &[ij, r] : acc) {
        if (r.num() != 0) {
            out.push_back({ij, r.to_double()});
        }
    }
    return out;
}

template <class T>
struct Powers {
    std::array<T, 9> xp, yp;
    Powers(const T &x, const T &y)
    {
        xp[0] = T(1.0);
        yp[0] = T(1.0);
        for (int k = 1; k < 9; ++k) {
            xp[k] = xp[k - 1] * x;
            yp[k] = yp[k - 1] * y;
        }
    }
};

template <class T, std::size_t K>
T eval_table(const Term (&terms)[K], const Powers<T> &pw, const Rational &mu)
{
    T s = T(0.0);
    for (const auto &[ij, c] : combine(terms, mu)) {
        s = s + c * (pw.xp[ij.first] * pw.yp[ij.second]);
    }
    return s;
}

template <class T>
struct PolysT {
    std::array<T, 3> p;
    std::array<T, 5> q;
};

template <class T>
PolysT<T> polys_from_tables(const T &x, const T &y, const Rational &mu)
{
    Powers<T> pw(x, y);
    return {{eval_table(p0_terms, pw, mu), eval_table(p1_terms, pw, mu), eval_table(p2_terms, pw, mu)},
            {eval_table(q0_terms, pw, mu), eval_table(q1_terms, pw, mu), eval_table(q2_terms, pw, mu),
             eval_table(q3_terms, pw, mu), eval_table(q4_terms, pw, mu)}};
}

template <class T>
T combine_s1(const T &y, const T &yp, const PolysT<T> &P, T *den_out = nullptr)
{
    T num = P.p[0] * yp * yp + P.p[1] * yp + P.p[2];
    T den = (((P.q[0] * yp + P.q[1]) * yp + P.q[2]) * yp + P.q[3]) * yp + P.q[4];
    if (den_out) {
        *den_out = den;
    }
    return y * num * num / den;
}

void check_denominator(cplx num, cplx den)
{
    if (std::abs(den) < 1e-10 * (1.0 + std::abs(num))) {
        throw DenominatorZero("denominator of the birational map vanishes");
    }
}

} // namespace

void require_regular(const JetPoint &j)
{
    auto near = [](cplx a, cplx b) { return std::abs(a - b) < jet_guard * (1.0 + std::abs(b)); };
    if (near(j.x, 0.0) || near(j.x, 1.0)) {
        throw DomainError("jet at a fixed singular point");
    }
    if (near(j.y, 0.0) || near(j.y, 1.0) || near(j.y, j.x)) {
        throw DomainError("jet on a singular solution y in {0, 1, x}");
    }
    if (2 * j.mu.num() % j.mu.den() != 0) {
        throw DomainError("2 mu must be an integer");
    }
}

S1Polynomials s1_polynomials(cplx x, cplx y, const Rational &mu)
{
    auto P = polys_from_tables<cplx>(x, y, mu);
    return {P.p, P.q};
}

S1Polynomials s1_polynomials_factored(cplx x, cplx y, const Rational &mu_r)
{
    const cplx m = mu_r.to_double();
    const cplx a = x * (x - 1.0), b = y * (y - 1.0), d = y - x;
    S1Polynomials P;
    P.p[0] = a * a;
    P.p[1] = 2.0 * a * (y - 1.0) * (2.0 * m * d - y);
    P.p[2] = b * (b - 4.0 * m * (y - 1.0) * d + 4.0 * m * m * d * (d - 1.0));
    P.q[0] = a * a * a * a;
    P.q[1] = -4.0 * a * a * a * b;
    P.q[2] = 2.0 * a * a * b * (3.0 * b + 4.0 * m * m * d * (1.0 + x - 3.0 * y));
    P.q[3] = 4.0 * a * b * b * (-b - 16.0 * m * m * m * d * d + 4.0 * m * m * d * (3.0 * y - x - 1.0));
    P.q[4] = b * b *
             (b * b + 64.0 * m * m * m * b * d * d - 8.0 * m * m * b * d * (3.0 * y - x - 1.0) +
              16.0 * m * m * m * m * d * d * ((x - 1.0) * (x - 1.0) + y * (2.0 + 2.0 * x - 3.0 * y)));
    return P;
}

cplx s1_transform(const JetPoint &j)
{
    require_regular(j);
    auto P = polys_from_tables<cplx>(j.x, j.y, j.mu);
    cplx num = P.p[0] * j.yprime * j.yprime + P.p[1] * j.yprime + P.p[2];
    cplx den;
    cplx r = combine_s1<cplx>(j.y, j.yprime, P, &den);
    check_denominator(j.y * num * num, den);
    return r;
}

Taylor s1_transform(const Taylor &x, const Taylor &y, const Rational &mu)
{
    JetPoint j{x.value(), y.value(), y.n > 1 ? y.c[1] : cplx(0.0), mu};
    require_regular(j);
    Taylor yp = y.derivative();
    auto P = polys_from_tables<Taylor>(x, y, mu);
    Taylor den;
    Taylor r = combine_s1<Taylor>(y, yp, P, &den);
    Taylor num = P.p[0] * yp * yp + P.p[1] * yp + P.p[2];
    check_denominator((y * num * num).value(), den.value());
    return r;
}

cplx q_denominator(const JetPoint &j)
{
    auto P = polys_from_tables<cplx>(j.x, j.y, j.mu);
    const cplx v = j.yprime;
    return (((P.q[0] * v + P.q[1]) * v + P.q[2]) * v + P.q[3]) * v + P.q[4];
}

double q_normalized(const JetPoint &j)
{
    auto P = polys_from_tables<cplx>(j.x, j.y, j.mu);
    const cplx v = j.yprime;
    double scale = 0.0;
    cplx vp = 1.0;
    for (int k = 4; k >= 0; --k) {
        scale += std::abs(P.q[k] * vp);
        vp *= v;
    }
    cplx Q = (((P.q[0] * v + P.q[1]) * v + P.q[2]) * v + P.q[3]) * v + P.q[4];
    return scale == 0.0 ? 0.0 : std::abs(Q) / scale;
}

std::array<cplx, 4> q_branch_roots(cplx x, cplx y)
{
    const cplx b = y * (y - 1.0);
    const cplx s = std::sqrt(b);
    const cplx t = std::sqrt(b * (y - x));
    const cplx A = std::sqrt(2.0 * y - 1.0 + 2.0 * s);
    const cplx B = std::sqrt(2.0 * y - 1.0 - 2.0 * s);
    const cplx a = x * (x - 1.0);
    return {(b - s * (y - x) + t * A) / a, (b - s * (y - x) - t * A) / a, (b + s * (y - x) + t * B) / a,
            (b + s * (y - x) - t * B) / a};
}

cplx obstruction_q1(cplx x, cplx y, cplx v)
{
    return y - y * y - x * v * v + x * x * v * v;
}

cplx obstruction_q2(cplx x, cplx y, cplx v)
{
    return y * y - y - 2.0 * x * v * (y - 1.0) - x * v * v + x * x * v * v;
}

cplx obstruction_q3(cplx x, cplx y, cplx v)
{
    return y * y - y - 2.0 * y * v * (x - 1.0) - x * v * v + x * x * v * v;
}

std::string to_string(ElementarySymmetry s)
{
    switch (s) {
    case ElementarySymmetry::T01:
        return "T01";
    case ElementarySymmetry::T0inf:
        return "T0inf";
    case ElementarySymmetry::T01_T0inf:
        return "T01_T0inf";
    case ElementarySymmetry::T0inf_T01:
        return "T0inf_T01";
    }
    return "?";
}

ElementarySymmetry symmetry_from_string(const std::string &s)
{
    for (auto e : {ElementarySymmetry::T01, ElementarySymmetry::T0inf, ElementarySymmetry::T01_T0inf,
                   ElementarySymmetry::T0inf_T01}) {
        if (to_string(e) == s) {
            return e;
        }
    }
    throw DomainError("unknown symmetry '" + s + "'");
}

JetPoint elementary_symmetry(ElementarySymmetry s, const JetPoint &j)
{
    auto t01 = [](JetPoint p) { return JetPoint{1.0 - p.x, 1.0 - p.y, p.yprime, p.mu}; };
    auto t0inf = [](JetPoint p) {
        if (p.x == cplx(0.0)) {
            throw DomainError("x -> 1/x at x = 0");
        }
        // y~(x~) = x~ y(1/x~):  dy~/dx~ = y - x y'
        return JetPoint{1.0 / p.x, p.y / p.x, p.y - p.x * p.yprime, p.mu};
    };
    switch (s) {
    case ElementarySymmetry::T01:
        return t01(j);
    case ElementarySymmetry::T0inf:
        return t0inf(j);
    case ElementarySymmetry::T01_T0inf:
        return t0inf(t01(j));
    case ElementarySymmetry::T0inf_T01:
        return t01(t0inf(j));
    }
    return j;
}

XY elementary_symmetry(ElementarySymmetry s, cplx x, cplx y)
{
    auto r = elementary_symmetry(s, JetPoint{x, y, 0.0, Rational(0)});
    return {r.x, r.y};
}

std::string to_string(const LadderStep &s)
{
    return (s.kind == LadderStep::Kind::S1 ? "S1(" : "Relabel(") + s.mu.str() + ")";
}

std::vector<LadderStep> mu_ladder(const Rational &start, const Rational &target)
{
    auto twice = [](const Rational &m) {
        Rational t = m * Rational(2);
        if (!t.is_integer()) {
            throw DomainError("2 mu must be an integer");
        }
        return t.num();
    };
    const std::int64_t s2 = twice(start), t2 = twice(target);
    if (((s2 % 2) + 2) % 2 != ((t2 % 2) + 2) % 2) {
        throw UnreachableTarget("half-integer and integer mu lie on different ladders");
    }
    auto cls = [](const Rational &m) { return std::abs((Rational(2) * m - Rational(1)).num()); };
    std::vector<LadderStep> steps;
    Rational cur = start;
    const std::int64_t goal = cls(target);
    while (cls(cur) != goal) {
        std::int64_t c = cls(cur);
        // up: 2m - 1 = c; down: 2m - 1 = -c
        Rational m = c < goal ? Rational(c + 1, 2) : Rational(1 - c, 2);
        if (cur != m) {
            steps.push_back({LadderStep::Kind::Relabel, m});
        }
        steps.push_back({LadderStep::Kind::S1, m});
        cur = -m;
    }
    if (cur != target) {
        steps.push_back({LadderStep::Kind::Relabel, target});
    }
    return steps;
}

Taylor apply_ladder(const Taylor &x, const Taylor &y, const std::vector<LadderStep> &steps)
{
    Taylor cur = y;
    for (const auto &s : steps) {
        if (s.kind == LadderStep::Kind::S1) {
            cur = s1_transform(x, cur, s.mu);
        }
    }
    return cur;
}

} // namespace pvi
