#include <pvi/verify.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <random>

namespace pvi
{

namespace
{

int series_order_for(const std::vector<LadderStep> &ladder)
{
    int s1 = 0;
    for (auto &st : ladder) {
        s1 += st.kind == LadderStep::Kind::S1;
    }
    return std::min(max_series_order, s1 + 2);
}

// y on the branch carried by basis b
cplx value_on_basis(const SolutionHandle &h, const BasisValue &b)
{
    if (h.ladder.empty()) {
        return h.kind == SolutionKind::Picard ? picard_from_basis(b, h.picard) : chazy_from_basis(b, h.chazy);
    }
    const int order = series_order_for(h.ladder);
    Taylor y = h.kind == SolutionKind::Picard ? picard_series(b, h.picard, order) : chazy_series(b, h.chazy, order);
    return apply_ladder(Taylor::variable(b.x, order), y, h.ladder).value();
}

SolutionHandle transformed(const SolutionHandle &h, const Gamma2Element &A)
{
    SolutionHandle out = h;
    if (h.kind == SolutionKind::Picard) {
        out.picard = gamma2_act_params(A, h.picard);
    } else {
        out.chazy = gamma2_act_moebius(A, h.chazy);
    }
    return out;
}

// Newton with step halving on x(s) = x0
std::optional<cplx> newton_parameter(ParametricFamily f, cplx x0, cplx s)
{
    auto resid = [&](cplx t) {
        Taylor xs = parametric_x(f, Taylor::variable(t, 2));
        return std::pair{xs.value() - x0, xs.derivative_at(1)};
    };
    const double tol = 1e-14 * (1.0 + std::abs(x0));
    for (int it = 0; it < 200; ++it) {
        cplx r, d;
        try {
            std::tie(r, d) = resid(s);
        } catch (const Error &) {
            return std::nullopt;
        }
        if (!std::isfinite(std::abs(r))) {
            return std::nullopt;
        }
        if (std::abs(r) < tol) {
            return s;
        }
        if (d == 0.0) {
            return std::nullopt;
        }
        const cplx step = r / d;
        double lam = 1.0;
        cplx next = s - step;
        for (int k = 0; k < 30; ++k) {
            next = s - lam * step;
            try {
                if (std::abs(resid(next).first) < std::abs(r)) {
                    break;
                }
            } catch (const Error &) {
            }
            lam *= 0.5;
        }
        s = next;
    }
    return std::nullopt;
}

cplx parametric_root(const SolutionHandle &h, cplx x0)
{
    if (h.s_hint) {
        auto s = newton_parameter(h.family, x0, *h.s_hint);
        if (s) {
            return *s;
        }
    }
    auto roots = recover_parameter(h.family, x0);
    if (roots.empty()) {
        throw NonConvergence("no parameter value found for x");
    }
    if (!h.s_hint) {
        return roots.front();
    }
    return *std::min_element(roots.begin(), roots.end(), [&](cplx a, cplx b) {
        return std::abs(a - *h.s_hint) < std::abs(b - *h.s_hint);
    });
}

double distance_to_singular(cplx x) { return std::min(std::abs(x), std::abs(x - 1.0)); }

} // namespace

std::string to_string(SolutionKind k)
{
    switch (k) {
    case SolutionKind::Picard:
        return "picard";
    case SolutionKind::Chazy:
        return "chazy";
    case SolutionKind::RationalFamily:
        return "rational";
    case SolutionKind::ParametricAlgebraic:
        return "parametric";
    }
    return "?";
}

SolutionKind solution_kind_from_string(const std::string &s)
{
    for (auto k : {SolutionKind::Picard, SolutionKind::Chazy, SolutionKind::RationalFamily,
                   SolutionKind::ParametricAlgebraic}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw DomainError("unknown solution kind '" + s + "'");
}

std::string to_string(ParametricFamily f)
{
    switch (f) {
    case ParametricFamily::a2:
        return "a2";
    case ParametricFamily::b2:
        return "b2";
    case ParametricFamily::g2:
        return "g2";
    }
    return "?";
}

ParametricFamily parametric_family_from_string(const std::string &s)
{
    for (auto f : {ParametricFamily::a2, ParametricFamily::b2, ParametricFamily::g2}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw DomainError("unknown parametric family '" + s + "'");
}

Taylor parametric_x(ParametricFamily f, const Taylor &s)
{
    switch (f) {
    case ParametricFamily::a2: {
        Taylor m = s - 1.0, p = s + 1.0;
        return m * m * m * (s + 3.0) / ((s - 3.0) * p * p * p);
    }
    case ParametricFamily::b2:
        return (s + 2.0) * (s + 2.0) / (8.0 * s);
    case ParametricFamily::g2: {
        Taylor m = 3.0 - s, p = s + 3.0;
        return m * m * m * (1.0 + s) / ((1.0 - s) * p * p * p);
    }
    }
    throw DomainError("unknown parametric family");
}

Taylor parametric_y(ParametricFamily f, const Taylor &s)
{
    switch (f) {
    case ParametricFamily::a2:
        return (s - 1.0) * (s - 1.0) / ((s - 3.0) * (s + 1.0));
    case ParametricFamily::b2:
        return (s + 2.0) / 4.0;
    case ParametricFamily::g2:
        return 3.0 * (3.0 - s) * (1.0 + s) / ((s + 3.0) * (s + 3.0));
    }
    throw DomainError("unknown parametric family");
}

ParametricPoint parametric_point(ParametricFamily f, cplx s)
{
    Taylor t = Taylor::variable(s, 1);
    return {parametric_x(f, t).value(), parametric_y(f, t).value()};
}

SolutionHandle SolutionHandle::make_picard(const PicardParams &p)
{
    require_nonzero(p);
    SolutionHandle h;
    h.kind = SolutionKind::Picard;
    h.picard = p;
    h.mu = Rational(1, 2);
    return h;
}

SolutionHandle SolutionHandle::make_chazy(const ChazyParam &nu)
{
    SolutionHandle h;
    h.kind = SolutionKind::Chazy;
    h.chazy = nu;
    h.mu = Rational(-1, 2);
    return h;
}

SolutionHandle SolutionHandle::make_rational(cplx a)
{
    if (a == 0.0) {
        throw DomainError("rational family needs a != 0");
    }
    SolutionHandle h;
    h.kind = SolutionKind::RationalFamily;
    h.a = a;
    h.mu = Rational(1);
    return h;
}

SolutionHandle SolutionHandle::make_parametric(ParametricFamily f, std::optional<cplx> s_hint)
{
    SolutionHandle h;
    h.kind = SolutionKind::ParametricAlgebraic;
    h.family = f;
    h.s_hint = s_hint;
    h.mu = Rational(1, 2);
    return h;
}

SolutionHandle SolutionHandle::with_target_mu(const Rational &target) const
{
    if (kind != SolutionKind::Picard && kind != SolutionKind::Chazy) {
        throw DomainError("only Picard and Chazy handles can be moved along the ladder");
    }
    SolutionHandle h = *this;
    auto steps = mu_ladder(mu, target);
    h.ladder.insert(h.ladder.end(), steps.begin(), steps.end());
    h.mu = target;
    return h;
}

void SolutionHandle::validate() const
{
    Rational base;
    switch (kind) {
    case SolutionKind::Picard:
    case SolutionKind::ParametricAlgebraic:
        base = Rational(1, 2);
        break;
    case SolutionKind::Chazy:
        base = Rational(-1, 2);
        break;
    case SolutionKind::RationalFamily:
        base = Rational(1);
        break;
    }
    if (ladder.empty()) {
        if (!(mu == base)) {
            throw DomainError(to_string(kind) + " solutions need mu = " + base.str());
        }
        return;
    }
    if (kind != SolutionKind::Picard && kind != SolutionKind::Chazy) {
        throw DomainError("ladder only supported for Picard and Chazy handles");
    }
    // replay the labels
    Rational cur = base;
    for (auto &st : ladder) {
        cur = st.kind == LadderStep::Kind::Relabel ? st.mu : -st.mu;
    }
    const Rational one(1);
    if (!(cur == mu) && !(one - cur == mu)) {
        throw DomainError("ladder ends at mu = " + cur.str() + ", handle says " + mu.str());
    }
}

cplx pvi_rhs(cplx x, cplx y, cplx yp, const Rational &mu)
{
    const double a = (2.0 * mu.to_double() - 1.0) * (2.0 * mu.to_double() - 1.0);
    const cplx yx = y - x;
    return 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / yx) * yp * yp - (1.0 / x + 1.0 / (x - 1.0) + 1.0 / yx) * yp +
           0.5 * y * (y - 1.0) * yx / (x * x * (x - 1.0) * (x - 1.0)) * (a + x * (x - 1.0) / (yx * yx));
}

std::function<cplx(cplx)> local_branch(const SolutionHandle &h, cplx x0)
{
    h.validate();
    switch (h.kind) {
    case SolutionKind::Picard:
    case SolutionKind::Chazy: {
        BasisValue b0 = basis_at(x0, choose_chart(x0));
        return [h, b0](cplx z) { return value_on_basis(h, z == b0.x ? b0 : basis_shift(b0, z)); };
    }
    case SolutionKind::RationalFamily:
        return [a = h.a](cplx z) { return rational_solution_eval(a, z); };
    case SolutionKind::ParametricAlgebraic: {
        const cplx s0 = parametric_root(h, x0);
        return [f = h.family, s0](cplx z) {
            auto s = newton_parameter(f, z, s0);
            if (!s) {
                throw NonConvergence("parameter lost near the base point");
            }
            return parametric_point(f, *s).y;
        };
    }
    }
    throw DomainError("unknown solution kind");
}

StencilJet stencil_derivatives(const std::function<cplx(cplx)> &f, cplx x, double h)
{
    const cplx f0 = f(x);
    auto at = [&](double s) {
        cplx p1 = f(x + s), m1 = f(x - s), p2 = f(x + 2.0 * s), m2 = f(x - 2.0 * s);
        cplx d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * s);
        cplx d2 = (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12.0 * s * s);
        return std::pair{d1, d2};
    };
    auto [a1, a2] = at(h);
    auto [b1, b2] = at(0.5 * h);
    return {f0, (16.0 * b1 - a1) / 15.0, (16.0 * b2 - a2) / 15.0};
}

ResidualReport pvi_residual_report(const SolutionHandle &h, cplx x, double step)
{
    h.validate();
    const double d = distance_to_singular(x);
    if (d < 1e-12) {
        throw DomainError("x is a singular point of the equation");
    }
    ResidualReport r;
    r.step = step > 0.0 ? step : 1e-3 * d;
    auto f = local_branch(h, x);
    const cplx y = f(x);
    if (std::abs(y) < singular_guard || std::abs(y - 1.0) < singular_guard || std::abs(y - x) < singular_guard) {
        throw NearSingular("y is within the guard radius of {0, 1, x}");
    }
    if (h.kind == SolutionKind::RationalFamily) {
        auto e = rational_solution_jet(h.a, x);
        r.jet = StencilJet{e[0], e[1], e[2]};
    } else {
        r.jet = stencil_derivatives(f, x, r.step);
    }
    r.rhs = pvi_rhs(x, r.jet.y, r.jet.y1, h.mu);
    r.residual = std::abs(r.jet.y2 - r.rhs) / (1.0 + std::abs(r.rhs));
    return r;
}

double pvi_residual(const SolutionHandle &h, cplx x, double step)
{
    return pvi_residual_report(h, x, step).residual;
}

std::vector<cplx> recover_parameter(ParametricFamily f, cplx x0)
{
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> g(0.0, 3.0);
    std::vector<cplx> roots;
    for (int k = 0; k < 8; ++k) {
        cplx start(g(rng), g(rng));
        auto s = newton_parameter(f, x0, start);
        if (!s) {
            continue;
        }
        bool dup = std::any_of(roots.begin(), roots.end(),
                               [&](cplx r) { return std::abs(r - *s) < 1e-8 * (1.0 + std::abs(r)); });
        if (!dup) {
            roots.push_back(*s);
        }
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    return roots;
}

std::vector<BranchResidual> parametric_residuals(ParametricFamily f, cplx x0)
{
    std::vector<BranchResidual> out;
    for (cplx s : recover_parameter(f, x0)) {
        auto h = SolutionHandle::make_parametric(f, s);
        auto rep = pvi_residual_report(h, x0);
        out.push_back({s, rep.jet.y, rep.residual});
    }
    return out;
}

namespace
{

Eigen::VectorXcd least_squares(const Eigen::MatrixXcd &A, const Eigen::VectorXcd &b)
{
    return A.colPivHouseholderQr().solve(b);
}

std::vector<double> radii(Window w, int count)
{
    if (!(w.rmin > 0.0 && w.rmax > w.rmin)) {
        throw DomainError("fit window needs 0 < rmin < rmax");
    }
    std::vector<double> r(count);
    for (int k = 0; k < count; ++k) {
        r[k] = std::exp(std::log(w.rmin) + (std::log(w.rmax) - std::log(w.rmin)) * k / (count - 1));
    }
    return r;
}

Chart chart_of(SingularPoint p)
{
    switch (p) {
    case SingularPoint::Zero:
        return Chart::Zero;
    case SingularPoint::One:
        return Chart::One;
    case SingularPoint::Infinity:
        return Chart::Infinity;
    }
    return Chart::Zero;
}

cplx x_at_radius(SingularPoint p, double r)
{
    switch (p) {
    case SingularPoint::Zero:
        return r;
    case SingularPoint::One:
        return 1.0 - r;
    case SingularPoint::Infinity:
        return 1.0 / r;
    }
    return r;
}

} // namespace

cplx fit_exponent(const SolutionHandle &h, SingularPoint point, Window w)
{
    h.validate();
    if (h.kind != SolutionKind::Picard && h.kind != SolutionKind::Chazy) {
        throw DomainError("exponent fits are defined for Picard and Chazy handles");
    }
    constexpr int count = 12;
    const auto rs = radii(w, count);
    const Chart chart = chart_of(point);
    std::vector<double> logr(count);
    std::vector<cplx> obs(count);
    for (int k = 0; k < count; ++k) {
        const cplx x = x_at_radius(point, rs[k]);
        const cplx y = value_on_basis(h, basis_at(x, chart));
        if (h.kind == SolutionKind::Picard) {
            obs[k] = point == SingularPoint::Zero ? y : point == SingularPoint::One ? 1.0 - y : y / x;
            logr[k] = std::log(rs[k]);
        } else {
            // corr = (y - lead) L^3 with lead = -1/L^2 (0), 1 + 1/L^2 (1), -x/L^2 (infinity), where
            // L is the log of the local coordinate as actually represented
            double L;
            cplx c;
            if (point == SingularPoint::Zero) {
                L = std::log(x.real());
                c = y + 1.0 / (L * L);
            } else if (point == SingularPoint::One) {
                L = std::log(1.0 - x.real());
                c = y - 1.0 - 1.0 / (L * L);
            } else {
                L = std::log(1.0 / x.real());
                c = y / x + 1.0 / (L * L);
            }
            obs[k] = c * L * L * L;
            logr[k] = L;
        }
    }
    if (h.kind == SolutionKind::Chazy) {
        Eigen::MatrixXcd A(count, 3);
        Eigen::VectorXcd b(count);
        for (int k = 0; k < count; ++k) {
            A(k, 0) = 1.0;
            A(k, 1) = 1.0 / logr[k];
            A(k, 2) = 1.0 / (logr[k] * logr[k]);
            b(k) = obs[k];
        }
        return least_squares(A, b)(0);
    }
    // complex log, unwrapped along the ray
    std::vector<cplx> lg(count);
    for (int k = 0; k < count; ++k) {
        if (obs[k] == 0.0) {
            throw DomainError("observable vanishes on the fit ray");
        }
        lg[k] = std::log(obs[k]);
        if (k > 0) {
            double jump = lg[k].imag() - lg[k - 1].imag();
            lg[k] -= cplx(0.0, 2.0 * pi * std::round(jump / (2.0 * pi)));
        }
    }
    cplx l = 0.0;
    for (int pass = 0; pass < 6; ++pass) {
        std::vector<cplx> extra;
        if (pass > 0) {
            for (cplx e : {l, 1.0 - l, cplx(1.0)}) {
                if (e.real() > 0.05 && e.real() < 3.0 &&
                    std::none_of(extra.begin(), extra.end(), [&](cplx o) { return std::abs(o - e) < 0.05; })) {
                    extra.push_back(e);
                }
            }
        }
        Eigen::MatrixXcd A(count, 2 + static_cast<int>(extra.size()));
        Eigen::VectorXcd b(count);
        for (int k = 0; k < count; ++k) {
            A(k, 0) = 1.0;
            A(k, 1) = logr[k];
            for (std::size_t j = 0; j < extra.size(); ++j) {
                A(k, 2 + static_cast<int>(j)) = std::exp(extra[j] * logr[k]);
            }
            b(k) = lg[k];
        }
        l = least_squares(A, b)(1);
    }
    return l;
}

Relation square_root_relation()
{
    // (y - x)^2 - x(x - 1) = y^2 - 2xy + x
    return {{0, 2, 1.0}, {1, 1, -2.0}, {1, 0, 1.0}};
}

double check_relation(const SolutionHandle &h, const Relation &F, const std::vector<cplx> &samples,
                      std::optional<ElementarySymmetry> sym)
{
    h.validate();
    double norm = 0.0;
    for (auto &m : F) {
        if (!std::isfinite(std::abs(m.c)) || m.i < 0 || m.j < 0) {
            throw DomainError("relation coefficients must be finite with non-negative powers");
        }
        norm += std::abs(m.c);
    }
    if (norm == 0.0) {
        throw DomainError("zero relation");
    }
    double worst = 0.0;
    for (cplx x : samples) {
        cplx y = local_branch(h, x)(x);
        cplx X = x, Y = y;
        if (sym) {
            auto t = elementary_symmetry(*sym, x, y);
            X = t.x;
            Y = t.y;
        }
        cplx v = 0.0;
        for (auto &m : F) {
            v += m.c * std::pow(X, m.i) * std::pow(Y, m.j);
        }
        worst = std::max(worst, std::abs(v) / norm);
    }
    return worst;
}

std::string to_string(LoopChoice l)
{
    switch (l) {
    case LoopChoice::gamma0:
        return "gamma0";
    case LoopChoice::gamma1:
        return "gamma1";
    case LoopChoice::trivial:
        return "trivial";
    }
    return "?";
}

LoopChoice loop_choice_from_string(const std::string &s)
{
    for (auto l : {LoopChoice::gamma0, LoopChoice::gamma1, LoopChoice::trivial}) {
        if (to_string(l) == s) {
            return l;
        }
    }
    throw DomainError("unknown loop '" + s + "'");
}

double loop_consistency(const SolutionHandle &h, LoopChoice loop)
{
    h.validate();
    if (h.kind != SolutionKind::Picard && h.kind != SolutionKind::Chazy) {
        throw DomainError("loop consistency is defined for Picard and Chazy handles");
    }
    Gamma2Element A = Gamma2Element::identity();
    if (loop == LoopChoice::gamma0) {
        A = Gamma2Element::gamma0();
    } else if (loop == LoopChoice::gamma1) {
        A = Gamma2Element::gamma1();
    }
    const SolutionHandle target = transformed(h, A);
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double th = 2.0 * pi * k / 8.0;
        const cplx x0 = 0.5 + std::polar(0.05, th);
        std::vector<cplx> path;
        switch (loop) {
        case LoopChoice::gamma0:
            path = circle_path(0.0, std::abs(x0), std::arg(x0));
            break;
        case LoopChoice::gamma1:
            path = circle_path(1.0, std::abs(x0 - 1.0), std::arg(x0 - 1.0));
            break;
        case LoopChoice::trivial:
            path = circle_path(x0 - std::polar(0.2, th), 0.2, th);
            break;
        }
        path.front() = path.back() = x0;
        const BasisValue start = basis_at(x0, Chart::Zero);
        const cplx continued = value_on_basis(h, continue_along(start, path));
        const cplx expected = value_on_basis(target, start);
        worst = std::max(worst, std::abs(continued - expected) / (1.0 + std::abs(expected)));
    }
    return worst;
}

std::vector<cplx> interior_samples()
{
    std::vector<cplx> xs;
    for (int k = 0; k < 12; ++k) {
        xs.push_back(0.5 + std::polar(0.3, pi / 12 + 2 * pi * k / 12));
    }
    for (int k = 0; k < 4; ++k) {
        xs.push_back(std::polar(2.5, pi / 8 + 2 * pi * k / 4));
    }
    for (int k = 0; k < 4; ++k) {
        xs.push_back(std::polar(0.3, pi / 8 + 2 * pi * k / 4));
    }
    return xs;
}

} // namespace pvi
