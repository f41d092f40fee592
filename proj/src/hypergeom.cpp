#include <pvi/hypergeom.hpp>

#include <algorithm>
#include <cmath>

namespace pvi
{

namespace
{

constexpr double series_eps = 1e-18;
constexpr int series_cap = 100000;

void require_disc(cplx z, const char *what)
{
    if (std::abs(z) > 1.0 - series_margin) {
        throw DomainError(std::string(what) + ": argument outside the series disc");
    }
}

// Sums F (deriv = false) or F' (deriv = true).
cplx sum_F(cplx x, bool deriv)
{
    require_disc(x, "F");
    const double r = std::abs(x);
    cplx sum = deriv ? cplx(0.25) : cplx(1.0);
    double c = 1.0;      // ((1/2)_k / k!)^2
    cplx xp = 1.0;       // x^k (F) or x^(k-1) (F')
    if (deriv) {
        c = 0.25;
    }
    for (int k = 1; k < series_cap; ++k) {
        double f = (k - 0.5) / k;
        if (!deriv) {
            c *= f * f;
            xp *= x;
            cplx term = c * xp;
            sum += term;
            if (std::abs(term) * r / (1.0 - r) <= series_eps * std::abs(sum)) {
                return sum;
            }
        } else {
            // term_k = k c_k x^(k-1), k >= 2 here (k=1 seeded as 1/4)
            int kk = k + 1;
            double g = (kk - 0.5) / kk;
            c *= g * g;
            xp *= x;
            cplx term = static_cast<double>(kk) * c * xp;
            sum += term;
            double rho = r * (kk + 1.0) / kk;
            if (rho < 1.0 && std::abs(term) * rho / (1.0 - rho) <= series_eps * std::abs(sum)) {
                return sum;
            }
        }
    }
    throw NonConvergence("F series exceeded the term cap");
}

cplx sum_g(cplx x, bool deriv)
{
    if (x == cplx(0.0)) {
        throw DomainError("g: logarithmic singularity at 0");
    }
    require_disc(x, "g");
    const double r = std::abs(x);
    const cplx L = std::log(x);
    double c = 1.0;
    double psi_half = -euler_gamma - 2.0 * ln2; // psi(k + 1/2)
    double psi_one = -euler_gamma;              // psi(k + 1)
    cplx xp = 1.0;
    // g  = sum c_k x^k (L + d_k)
    // g' = (1/x) sum c_k x^k (k (L + d_k) + 1)
    cplx sum = deriv ? cplx(1.0) : L + 2.0 * (psi_half - psi_one);
    for (int k = 1; k < series_cap; ++k) {
        double f = (k - 0.5) / k;
        c *= f * f;
        psi_half += 1.0 / (k - 0.5);
        psi_one += 1.0 / k;
        xp *= x;
        double d = 2.0 * (psi_half - psi_one);
        cplx term = deriv ? c * xp * (static_cast<double>(k) * (L + d) + 1.0) : c * xp * (L + d);
        sum += term;
        double rho = deriv ? r * (k + 1.0) / k : r;
        if (rho < 1.0) {
            double bound = c * std::pow(r, k) * (std::abs(L) + std::abs(d) + 1.0) * (deriv ? k + 1.0 : 1.0);
            if (bound * rho / (1.0 - rho) <= series_eps * std::abs(sum)) {
                return deriv ? sum / x : sum;
            }
        }
    }
    throw NonConvergence("g series exceeded the term cap");
}

} // namespace

std::string to_string(Chart c)
{
    switch (c) {
    case Chart::Zero:
        return "zero";
    case Chart::One:
        return "one";
    case Chart::Infinity:
        return "infinity";
    }
    return "?";
}

Chart chart_from_string(const std::string &s)
{
    if (s == "zero" || s == "0") {
        return Chart::Zero;
    }
    if (s == "one" || s == "1") {
        return Chart::One;
    }
    if (s == "infinity" || s == "inf") {
        return Chart::Infinity;
    }
    throw DomainError("unknown chart '" + s + "'");
}

std::string to_string(Loop l)
{
    return l == Loop::gamma0 ? "gamma0" : "gamma1";
}

Loop loop_from_string(const std::string &s)
{
    if (s == "gamma0") {
        return Loop::gamma0;
    }
    if (s == "gamma1") {
        return Loop::gamma1;
    }
    throw DomainError("unknown loop '" + s + "'");
}

cplx eval_F(cplx x)
{
    return sum_F(x, false);
}

cplx eval_F_prime(cplx x)
{
    return sum_F(x, true);
}

cplx eval_g(cplx x)
{
    return sum_g(x, false);
}

cplx eval_g_prime(cplx x)
{
    return sum_g(x, true);
}

double chart_margin(cplx x, Chart chart)
{
    switch (chart) {
    case Chart::Zero:
        return 1.0 - std::abs(x);
    case Chart::One:
        return 1.0 - std::abs(1.0 - x);
    case Chart::Infinity:
        return std::abs(x) == 0.0 ? -1.0 : 1.0 - 1.0 / std::abs(x);
    }
    return -1.0;
}

Chart choose_chart(cplx x)
{
    Chart best = Chart::Zero;
    double m = chart_margin(x, Chart::Zero);
    for (Chart c : {Chart::One, Chart::Infinity}) {
        double mc = chart_margin(x, c);
        if (mc > m) {
            m = mc;
            best = c;
        }
    }
    if (m < series_margin) {
        throw DomainError("no chart contains x with enough margin");
    }
    return best;
}

BasisValue basis_at(cplx x, Chart chart)
{
    const cplx I(0.0, 1.0);
    BasisValue b;
    b.x = x;
    b.chart = chart;
    switch (chart) {
    case Chart::Zero: {
        cplx F = eval_F(x), Fp = eval_F_prime(x);
        cplx g = eval_g(x), gp = eval_g_prime(x);
        b.omega1 = pi / 2 * F;
        b.omega1_prime = pi / 2 * Fp;
        b.omega2 = -I / 2.0 * g;
        b.omega2_prime = -I / 2.0 * gp;
        break;
    }
    case Chart::One: {
        cplx z = 1.0 - x;
        cplx F = eval_F(z), Fp = eval_F_prime(z);
        cplx g = eval_g(z), gp = eval_g_prime(z);
        b.omega1 = -0.5 * g;
        b.omega1_prime = 0.5 * gp;
        b.omega2 = I * pi / 2.0 * F;
        b.omega2_prime = -I * pi / 2.0 * Fp;
        break;
    }
    case Chart::Infinity: {
        if (x == cplx(0.0)) {
            throw DomainError("infinity chart: x = 0");
        }
        cplx z = 1.0 / x;
        cplx s = std::sqrt(x);
        cplx F = eval_F(z), Fp = eval_F_prime(z);
        cplx g = eval_g(z), gp = eval_g_prime(z);
        // d/dx [h(1/x) / (2 sqrt x)] = -h'(z) z^2 / (2s) - h / (4 s x)
        auto val = [&](cplx h) { return h / (2.0 * s); };
        auto der = [&](cplx h, cplx hp) { return -hp * z * z / (2.0 * s) - h / (4.0 * s * x); };
        cplx h1 = I * g + pi * F, h1p = I * gp + pi * Fp;
        cplx h2 = -I * g, h2p = -I * gp;
        b.omega1 = val(h1);
        b.omega1_prime = der(h1, h1p);
        b.omega2 = val(h2);
        b.omega2_prime = der(h2, h2p);
        break;
    }
    }
    return b;
}

double ode_residual(const BasisValue &b, int component, double h)
{
    auto wp = [&](cplx x) {
        auto v = basis_at(x, b.chart);
        return component == 0 ? v.omega1_prime : v.omega2_prime;
    };
    const cplx x = b.x;
    cplx d2 = (-wp(x + 2.0 * h) + 8.0 * wp(x + h) - 8.0 * wp(x - h) + wp(x - 2.0 * h)) / (12.0 * h);
    cplx w = component == 0 ? b.omega1 : b.omega2;
    cplx w1 = component == 0 ? b.omega1_prime : b.omega2_prime;
    return std::abs(x * (1.0 - x) * d2 + (1.0 - 2.0 * x) * w1 - 0.25 * w);
}

Mat2 mat_mul(const Mat2 &a, const Mat2 &b)
{
    Mat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return r;
}

Mat2 mat_identity()
{
    return Mat2{{{cplx(1.0), cplx(0.0)}, {cplx(0.0), cplx(1.0)}}};
}

std::vector<cplx> circle_path(cplx centre, double radius, double theta0, int steps)
{
    std::vector<cplx> p;
    p.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        p.push_back(centre + std::polar(radius, theta0 + 2.0 * pi * k / steps));
    }
    p.back() = p.front();
    return p;
}

std::vector<cplx> loop_path(Loop l)
{
    return l == Loop::gamma0 ? circle_path(0.0, 0.5, 0.0) : circle_path(1.0, 0.5, pi);
}

namespace
{

// Taylor step of one solution from centre c (value a0, slope a1) to z.
std::pair<cplx, cplx> taylor_step(cplx c, cplx a0, cplx a1, cplx z)
{
    const double R = std::min(std::abs(c), std::abs(1.0 - c));
    const cplx t = z - c;
    const double rt = std::abs(t);
    if (!(rt <= 0.5 * R)) {
        throw NonConvergence("continuation step leaves the local disc");
    }
    const cplx A = c * (1.0 - c), B = 1.0 - 2.0 * c;
    cplx an = a0, an1 = a1;
    cplx val = a0 + a1 * t, der = a1;
    cplx tp = t; // t^(n+1)
    const double q = rt / R;
    double prev = std::abs(a1 * t);
    for (int n = 0; n < series_cap; ++n) {
        double nn = n;
        cplx an2 = ((nn + 0.5) * (nn + 0.5) * an - B * (nn + 1.0) * (nn + 1.0) * an1) / (A * (nn + 1.0) * (nn + 2.0));
        der += (nn + 2.0) * an2 * tp;
        tp *= t;
        cplx term = an2 * tp;
        val += term;
        an = an1;
        an1 = an2;
        // two consecutive small terms: the recurrence couples neighbours, so one tiny
        // term alone can be an accidental cancellation
        double cur = std::abs(term);
        if (std::max(cur, prev) * (nn + 3.0) / (1.0 - q) <= 1e-18 * (std::abs(val) + std::abs(der) * rt)) {
            return {val, der};
        }
        prev = cur;
    }
    throw NonConvergence("continuation series exceeded the term cap");
}

} // namespace

BasisValue continue_along(const BasisValue &start, const std::vector<cplx> &path)
{
    if (path.empty() || std::abs(path.front() - start.x) > 1e-14 * (1.0 + std::abs(start.x))) {
        throw DomainError("path must start at the basis point");
    }
    BasisValue cur = start;
    for (std::size_t k = 1; k < path.size(); ++k) {
        cplx z = path[k];
        auto [w1, d1] = taylor_step(cur.x, cur.omega1, cur.omega1_prime, z);
        auto [w2, d2] = taylor_step(cur.x, cur.omega2, cur.omega2_prime, z);
        cur.omega1 = w1;
        cur.omega1_prime = d1;
        cur.omega2 = w2;
        cur.omega2_prime = d2;
        cur.x = z;
    }
    return cur;
}

std::array<Taylor, 2> basis_series(const BasisValue &b, int order)
{
    const cplx c = b.x;
    if (c == cplx(0.0) || c == cplx(1.0)) {
        throw DomainError("basis_series at a singular point");
    }
    const cplx A = c * (1.0 - c), B = 1.0 - 2.0 * c;
    std::array<Taylor, 2> r;
    const cplx v[2] = {b.omega1, b.omega2}, d[2] = {b.omega1_prime, b.omega2_prime};
    for (int i = 0; i < 2; ++i) {
        Taylor t;
        t.n = order;
        t.c[0] = v[i];
        if (order > 1) {
            t.c[1] = d[i];
        }
        for (int k = 0; k + 2 < order; ++k) {
            double kk = k;
            t.c[k + 2] = ((kk + 0.5) * (kk + 0.5) * t.c[k] - B * (kk + 1.0) * (kk + 1.0) * t.c[k + 1]) / (A * (kk + 1.0) * (kk + 2.0));
        }
        r[i] = t;
    }
    return r;
}

BasisValue basis_shift(const BasisValue &b, cplx z)
{
    if (z == b.x) {
        return b;
    }
    return continue_along(b, {b.x, z});
}

Mat2 relate_bases(const BasisValue &a, const BasisValue &b)
{
    // Phi rows (w_i, w_i'); Phi_b = M Phi_a.
    cplx det = a.omega1 * a.omega2_prime - a.omega1_prime * a.omega2;
    Mat2 inv{{{a.omega2_prime / det, -a.omega1_prime / det}, {-a.omega2 / det, a.omega1 / det}}};
    Mat2 pb{{{b.omega1, b.omega1_prime}, {b.omega2, b.omega2_prime}}};
    return mat_mul(pb, inv);
}

Mat2 continue_basis(const std::vector<cplx> &closed_path, Chart chart)
{
    BasisValue start = basis_at(closed_path.front(), chart);
    BasisValue end = continue_along(start, closed_path);
    return relate_bases(start, end);
}

Mat2 continue_basis(Loop l)
{
    return continue_basis(loop_path(l), Chart::Zero);
}

} // namespace pvi
