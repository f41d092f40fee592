#include <pvi/monodromy.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace pvi
{

namespace
{

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw DomainError("cyclotomic coefficient overflow");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw DomainError("cyclotomic coefficient overflow");
    }
    return r;
}

using Poly = std::vector<std::int64_t>;

// exact division by a monic polynomial; the remainder must vanish
Poly divide_monic(Poly num, const Poly &den)
{
    const std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        std::int64_t t = num[k];
        q[k - dn] = t;
        for (std::size_t j = 0; j <= dn; ++j) {
            num[k - dn + j] = checked_add(num[k - dn + j], -checked_mul(t, den[j]));
        }
    }
    for (std::size_t j = 0; j < dn; ++j) {
        if (num[j] != 0) {
            throw DomainError("cyclotomic division left a remainder");
        }
    }
    return q;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.order() == b.order()) {
        return {a, b};
    }
    int L = static_cast<int>(lcm64(a.order(), b.order()));
    return {a.lift(L), b.lift(L)};
}

} // namespace

const std::vector<std::int64_t> &cyclotomic_polynomial(int m)
{
    static std::recursive_mutex mu;
    static std::map<int, Poly> cache;
    if (m < 1 || m > 100000) {
        throw DomainError("cyclotomic order out of range");
    }
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) {
        return it->second;
    }
    // x^m - 1 divided by Phi_d for the proper divisors d
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        p = divide_monic(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(m, std::move(p)).first->second;
}

void Cyclotomic::reduce(std::vector<std::int64_t> raw)
{
    // zeta^m = 1 first, then the cyclotomic relation
    Poly folded(m_, 0);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        folded[k % m_] = checked_add(folded[k % m_], raw[k]);
    }
    const Poly &phi = cyclotomic_polynomial(m_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = folded.size(); k-- > deg;) {
        std::int64_t t = folded[k];
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= deg; ++j) {
            folded[k - deg + j] = checked_add(folded[k - deg + j], -checked_mul(t, phi[j]));
        }
    }
    folded.resize(deg);
    c_ = std::move(folded);
}

Cyclotomic::Cyclotomic(int m, std::int64_t k) : m_(m)
{
    reduce({k});
}

Cyclotomic Cyclotomic::zeta_power(int m, std::int64_t e)
{
    Cyclotomic z;
    z.m_ = m;
    e %= m;
    if (e < 0) {
        e += m;
    }
    Poly raw(e + 1, 0);
    raw[e] = 1;
    z.reduce(std::move(raw));
    return z;
}

Cyclotomic Cyclotomic::minus_two_cos(int m, const Rational &r)
{
    if (m % 2 != 0) {
        throw DomainError("minus_two_cos needs an even order");
    }
    const std::int64_t n = m / 2;
    if (n % r.den() != 0) {
        throw DomainError("angle denominator does not divide the order");
    }
    const std::int64_t k = r.num() * (n / r.den());
    return -(zeta_power(m, k) + zeta_power(m, -k));
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

cplx Cyclotomic::value() const
{
    cplx s = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != 0) {
            s += static_cast<double>(c_[k]) * std::polar(1.0, 2.0 * pi * static_cast<double>(k) / m_);
        }
    }
    return s;
}

Cyclotomic Cyclotomic::lift(int L) const
{
    if (L % m_ != 0) {
        throw DomainError("lift target is not a multiple of the order");
    }
    const int s = L / m_;
    Cyclotomic out;
    out.m_ = L;
    Poly raw(c_.empty() ? 1 : (c_.size() - 1) * s + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        raw[k * s] = c_[k];
    }
    out.reduce(std::move(raw));
    return out;
}

Cyclotomic operator+(const Cyclotomic &a0, const Cyclotomic &b0)
{
    auto [a, b] = common(a0, b0);
    Cyclotomic r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        r.c_[k] = checked_add(r.c_[k], b.c_[k]);
    }
    return r;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto &v : r.c_) {
        v = -v;
    }
    return r;
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic &a0, const Cyclotomic &b0)
{
    auto [a, b] = common(a0, b0);
    Poly raw(a.c_.size() + b.c_.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            raw[i + j] = checked_add(raw[i + j], checked_mul(a.c_[i], b.c_[j]));
        }
    }
    Cyclotomic r;
    r.m_ = a.m_;
    r.reduce(std::move(raw));
    return r;
}

bool operator==(const Cyclotomic &a0, const Cyclotomic &b0)
{
    auto [a, b] = common(a0, b0);
    return a.c_ == b.c_;
}

bool operator<(const Cyclotomic &a0, const Cyclotomic &b0)
{
    auto [a, b] = common(a0, b0);
    return a.c_ < b.c_;
}

std::int64_t TriangleAngles::denominator() const
{
    return lcm64(lcm64(r1.den(), r2.den()), r3.den());
}

std::string to_string(const TriangleAngles &t)
{
    return "(" + t.r1.str() + ", " + t.r2.str() + ", " + t.r3.str() + ")";
}

MonodromyTriple MonodromyTriple::from_exact(const std::array<Cyclotomic, 3> &x)
{
    int L = 1;
    for (auto &v : x) {
        L = static_cast<int>(lcm64(L, v.order()));
    }
    MonodromyTriple t;
    t.exact = std::array<Cyclotomic, 3>{x[0].lift(L), x[1].lift(L), x[2].lift(L)};
    for (int i = 0; i < 3; ++i) {
        t.approx[i] = (*t.exact)[i].value();
    }
    return t;
}

MonodromyTriple MonodromyTriple::from_complex(const std::array<cplx, 3> &x)
{
    MonodromyTriple t;
    t.approx = x;
    return t;
}

MonodromyTriple MonodromyTriple::from_integers(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return from_exact({Cyclotomic(2, a), Cyclotomic(2, b), Cyclotomic(2, c)});
}

std::array<cplx, 3> MonodromyTriple::values() const
{
    return approx;
}

bool MonodromyTriple::admissible() const
{
    int zeros = 0;
    for (int i = 0; i < 3; ++i) {
        zeros += exact ? (*exact)[i].is_zero() : approx[i] == 0.0;
    }
    return zeros <= 1;
}

std::optional<TriangleAngles> MonodromyTriple::angles() const
{
    if (!exact) {
        return std::nullopt;
    }
    std::array<Rational, 3> r;
    for (int i = 0; i < 3; ++i) {
        const Cyclotomic &x = (*exact)[i];
        cplx v = x.value();
        if (std::abs(v.imag()) > 1e-9 || std::abs(v.real()) > 2.0 + 1e-9) {
            return std::nullopt;
        }
        const double guess = std::acos(std::clamp(-v.real() / 2.0, -1.0, 1.0)) / pi;
        bool found = false;
        // -2cos(pi p/q) lies in Z[zeta_2q]; q up to the order covers everything reachable
        for (std::int64_t q = 1; q <= 2 * x.order() && !found; ++q) {
            std::int64_t p = std::llround(guess * static_cast<double>(q));
            if (p < 0 || p > q || std::gcd(p, q) != 1) {
                continue;
            }
            Rational cand(p, q);
            int L = static_cast<int>(lcm64(x.order(), 2 * q));
            if (Cyclotomic::minus_two_cos(L, cand) == x) {
                r[i] = cand;
                found = true;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return TriangleAngles::from_array(r);
}

namespace
{

template <class T>
std::array<std::array<T, 3>, 4> sign_class(const std::array<T, 3> &x)
{
    return {{{x[0], x[1], x[2]}, {-x[0], -x[1], x[2]}, {-x[0], x[1], -x[2]}, {x[0], -x[1], -x[2]}}};
}

std::array<std::array<Rational, 3>, 4> angle_class(const std::array<Rational, 3> &r)
{
    const Rational one(1);
    return {{{r[0], r[1], r[2]},
             {one - r[0], one - r[1], r[2]},
             {one - r[0], r[1], one - r[2]},
             {r[0], one - r[1], one - r[2]}}};
}

template <class T>
std::array<T, 3> braid_apply(Braid g, const std::array<T, 3> &x)
{
    switch (g) {
    case Braid::b1:
        return {-x[0], x[2] - x[0] * x[1], x[1]};
    case Braid::b2:
        return {x[2], -x[1], x[0] - x[1] * x[2]};
    case Braid::b1_inv:
        return {-x[0], x[2], x[1] - x[0] * x[2]};
    case Braid::b2_inv:
        return {x[2] - x[0] * x[1], -x[1], x[0]};
    }
    throw DomainError("unknown braid generator");
}

template <class T, class Less>
std::array<T, 3> lex_min(const std::vector<std::array<T, 3>> &cands, Less less)
{
    auto lex = [&](const std::array<T, 3> &a, const std::array<T, 3> &b) {
        for (int i = 0; i < 3; ++i) {
            if (less(a[i], b[i])) {
                return true;
            }
            if (less(b[i], a[i])) {
                return false;
            }
        }
        return false;
    };
    return *std::min_element(cands.begin(), cands.end(), lex);
}

template <class T>
std::vector<std::array<T, 3>> class_members(const std::array<std::array<T, 3>, 4> &signs, bool permutations)
{
    std::vector<std::array<T, 3>> out;
    for (auto s : signs) {
        if (!permutations) {
            out.push_back(s);
            continue;
        }
        std::array<int, 3> idx{0, 1, 2};
        do {
            out.push_back({s[idx[0]], s[idx[1]], s[idx[2]]});
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

void check_unit_interval(const TriangleAngles &t)
{
    for (auto &r : t.as_array()) {
        if (r < Rational(0) || r > Rational(1)) {
            throw DomainError("angle " + r.str() + " outside [0,1]");
        }
    }
}

Cyclotomic det3(const std::array<std::array<Cyclotomic, 3>, 3> &g)
{
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

Mat2 mat_inverse(const Mat2 &m)
{
    cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

cplx trace(const Mat2 &m) { return m[0][0] + m[1][1]; }

} // namespace

bool equivalent(const MonodromyTriple &a, const MonodromyTriple &b)
{
    if (a.exact && b.exact) {
        for (auto &s : sign_class(*a.exact)) {
            if (s[0] == (*b.exact)[0] && s[1] == (*b.exact)[1] && s[2] == (*b.exact)[2]) {
                return true;
            }
        }
        return false;
    }
    for (auto &s : sign_class(a.approx)) {
        if (std::abs(s[0] - b.approx[0]) + std::abs(s[1] - b.approx[1]) + std::abs(s[2] - b.approx[2]) <
            1e-9 * (1 + std::abs(b.approx[0]) + std::abs(b.approx[1]) + std::abs(b.approx[2]))) {
            return true;
        }
    }
    return false;
}

Cyclotomic constraint_value(const std::array<Cyclotomic, 3> &x)
{
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[0] * x[1] * x[2];
}

cplx constraint_value(const std::array<cplx, 3> &x)
{
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[0] * x[1] * x[2];
}

AnglesTriple triple_from_angles(const TriangleAngles &t)
{
    check_unit_interval(t);
    const int m = static_cast<int>(2 * t.denominator());
    std::array<Cyclotomic, 3> x{Cyclotomic::minus_two_cos(m, t.r1), Cyclotomic::minus_two_cos(m, t.r2),
                                Cyclotomic::minus_two_cos(m, t.r3)};
    AnglesTriple out;
    out.triple = MonodromyTriple::from_exact(x);
    out.constraint = constraint_value(x);
    out.constraint_value = out.constraint.value().real();
    out.half_integer_mu = out.constraint == Cyclotomic(m, 4);
    out.integer_mu = out.constraint.is_zero();
    return out;
}

std::string to_string(Braid g)
{
    switch (g) {
    case Braid::b1:
        return "b1";
    case Braid::b2:
        return "b2";
    case Braid::b1_inv:
        return "b1^-1";
    case Braid::b2_inv:
        return "b2^-1";
    }
    return "?";
}

Braid braid_from_string(const std::string &s)
{
    for (Braid g : all_braids) {
        if (to_string(g) == s) {
            return g;
        }
    }
    if (s == "b1inv" || s == "b1-") {
        return Braid::b1_inv;
    }
    if (s == "b2inv" || s == "b2-") {
        return Braid::b2_inv;
    }
    throw DomainError("unknown braid generator '" + s + "'");
}

MonodromyTriple braid_act(Braid g, const MonodromyTriple &t)
{
    if (t.exact) {
        return MonodromyTriple::from_exact(braid_apply(g, *t.exact));
    }
    return MonodromyTriple::from_complex(braid_apply(g, t.approx));
}

std::optional<TriangleAngles> flat_representative(const TriangleAngles &t)
{
    for (auto &c : angle_class(t.as_array())) {
        auto cand = TriangleAngles::from_array(c);
        if (cand.flat()) {
            return cand;
        }
    }
    return std::nullopt;
}

TriangleAngles braid_act_angles(Braid g, const TriangleAngles &t)
{
    check_unit_interval(t);
    auto f = flat_representative(t);
    if (!f) {
        throw DomainError("triangle " + to_string(t) + " has no flat member in its class");
    }
    const Rational one(1);
    const Rational r1 = f->r1, r2 = f->r2, r3 = f->r3;
    switch (g) {
    case Braid::b1:
        return {abs(one - r1), abs(r1 - r2), r2};
    case Braid::b2:
        return {r3, abs(one - r2), abs(r3 - r2)};
    case Braid::b1_inv:
        return {abs(one - r1), r3, abs(r1 - r3)};
    case Braid::b2_inv:
        return {abs(r1 - r2), abs(one - r2), r1};
    }
    throw DomainError("unknown braid generator");
}

TriangleAngles canonical(const TriangleAngles &t, bool permutations)
{
    auto members = class_members(angle_class(t.as_array()), permutations);
    return TriangleAngles::from_array(lex_min(members, std::less<Rational>()));
}

MonodromyTriple canonical(const MonodromyTriple &t, bool permutations)
{
    if (t.exact) {
        auto members = class_members(sign_class(*t.exact), permutations);
        return MonodromyTriple::from_exact(lex_min(members, std::less<Cyclotomic>()));
    }
    auto members = class_members(sign_class(t.approx), permutations);
    auto less = [](const cplx &a, const cplx &b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    };
    return MonodromyTriple::from_complex(lex_min(members, less));
}

Orbit<TriangleAngles> orbit(const TriangleAngles &t, std::size_t cap, bool permutations)
{
    check_unit_interval(t);
    int halves = 0;
    for (auto &r : t.as_array()) {
        halves += r == Rational(1, 2);
    }
    if (halves > 1) {
        throw DomainError("inadmissible triangle: more than one right angle");
    }
    if (!flat_representative(t)) {
        throw DomainError("triangle " + to_string(t) + " has no flat member in its class");
    }
    Orbit<TriangleAngles> out;
    std::set<std::array<Rational, 3>> seen;
    std::deque<TriangleAngles> todo;
    auto start = canonical(t, permutations);
    seen.insert(start.as_array());
    out.classes.push_back(start);
    todo.push_back(start);
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        for (Braid g : all_braids) {
            auto img = canonical(braid_act_angles(g, cur), permutations);
            if (seen.insert(img.as_array()).second) {
                if (out.classes.size() >= cap) {
                    out.finite = false;
                    return out;
                }
                out.classes.push_back(img);
                todo.push_back(img);
            }
        }
    }
    return out;
}

Orbit<MonodromyTriple> orbit(const MonodromyTriple &t, std::size_t cap, bool permutations)
{
    if (!t.exact) {
        throw DomainError("orbit enumeration needs an exact triple");
    }
    if (!t.admissible()) {
        throw DomainError("inadmissible triple: more than one zero coordinate");
    }
    auto key = [](const MonodromyTriple &x) {
        std::vector<std::int64_t> k;
        k.push_back((*x.exact)[0].order());
        for (auto &c : *x.exact) {
            k.insert(k.end(), c.coeffs().begin(), c.coeffs().end());
        }
        return k;
    };
    Orbit<MonodromyTriple> out;
    std::set<std::vector<std::int64_t>> seen;
    std::deque<MonodromyTriple> todo;
    auto start = canonical(t, permutations);
    seen.insert(key(start));
    out.classes.push_back(start);
    todo.push_back(start);
    while (!todo.empty()) {
        auto cur = todo.front();
        todo.pop_front();
        for (Braid g : all_braids) {
            auto img = canonical(braid_act(g, cur), permutations);
            if (seen.insert(key(img)).second) {
                if (out.classes.size() >= cap) {
                    out.finite = false;
                    return out;
                }
                out.classes.push_back(img);
                todo.push_back(img);
            }
        }
    }
    return out;
}

TriangleAngles angles_from_nu(const Rational &nu1, const Rational &nu2)
{
    for (auto &v : {nu1, nu2}) {
        if (v < Rational(0) || v >= Rational(2)) {
            throw DomainError("nu = " + v.str() + " outside [0,2)");
        }
    }
    const Rational one(1), two(2);
    if (nu1 > nu2) {
        return {nu2 / two, one - nu1 / two, (nu1 - nu2) / two};
    }
    if (nu1 < nu2) {
        return {one - nu2 / two, nu1 / two, (nu2 - nu1) / two};
    }
    throw DomainError("nu1 = nu2 is not covered by the angle dictionary");
}

std::pair<Rational, Rational> nu_from_angles(const TriangleAngles &t)
{
    check_unit_interval(t);
    auto wrap = [](Rational v) { return v == Rational(2) ? Rational(0) : v; };
    return {wrap(Rational(2) - Rational(2) * t.r2), wrap(Rational(2) * t.r1)};
}

Mat2 MatrixTriple::Minf() const
{
    return mat_inverse(mat_mul(mat_mul(M3, M2), M1));
}

MatrixTriple picard_monodromy_matrices(cplx nu1, cplx nu2)
{
    const cplx c1 = std::cos(pi * nu1 / 2.0), c2 = std::cos(pi * nu2 / 2.0), c12 = std::cos(pi * (nu1 - nu2) / 2.0);
    if (std::abs(c2) < 1e-12) {
        throw DegenerateDenominator("cos(pi nu2 / 2) = 0");
    }
    MatrixTriple m;
    m.M1 = {{{1.0, -2.0 * c2}, {0.0, 1.0}}};
    m.M2 = {{{1.0, 0.0}, {2.0 * c2, 1.0}}};
    const cplx d = 2.0 * c1 * c12 / c2;
    m.M3 = {{{1.0 + d, -2.0 * c1 * c1 / c2}, {2.0 * c12 * c12 / c2, 1.0 - d}}};
    return m;
}

MatrixTriple chazy_monodromy_matrices()
{
    MatrixTriple m;
    m.M1 = {{{1.0, -2.0}, {0.0, 1.0}}};
    m.M2 = {{{1.0, 0.0}, {2.0, 1.0}}};
    m.M3 = {{{3.0, -2.0}, {2.0, -1.0}}};
    return m;
}

std::array<cplx, 3> trace_squares(const MatrixTriple &m)
{
    return {2.0 - trace(mat_mul(m.M1, m.M2)), 2.0 - trace(mat_mul(m.M3, m.M2)), 2.0 - trace(mat_mul(m.M1, m.M3))};
}

MatrixTriple commuting_family(cplx a)
{
    const cplx I(0.0, 1.0);
    MatrixTriple m;
    m.M1 = {{{1.0, I * pi * a}, {0.0, 1.0}}};
    m.M2 = {{{1.0, I * pi * (1.0 - a)}, {0.0, 1.0}}};
    m.M3 = {{{1.0, I * pi}, {0.0, 1.0}}};
    return m;
}

namespace
{

cplx rational_denominator(cplx a, cplx x)
{
    if (a == 0.0) {
        throw DomainError("a = 0 gives the constant y = 0, excluded");
    }
    const cplx D = 1.0 - (1.0 - a) * x;
    if (std::abs(D) <= 1e-14 * (1.0 + std::abs((1.0 - a) * x))) {
        throw PoleError("x = 1/(1-a)");
    }
    return D;
}

} // namespace

cplx rational_solution_eval(cplx a, cplx x)
{
    return a * x / rational_denominator(a, x);
}

std::array<cplx, 3> rational_solution_jet(cplx a, cplx x)
{
    const cplx D = rational_denominator(a, x);
    return {a * x / D, a / (D * D), 2.0 * a * (1.0 - a) / (D * D * D)};
}

std::array<std::array<Cyclotomic, 3>, 3> gram_matrix(const std::array<Cyclotomic, 3> &x)
{
    const Cyclotomic two(x[0].order(), 2);
    return {{{two, x[0], x[2]}, {x[0], two, x[1]}, {x[2], x[1], two}}};
}

Cyclotomic gram_determinant(const std::array<Cyclotomic, 3> &x)
{
    return det3(gram_matrix(x));
}

DihedralLabel dihedral_classify(std::int64_t M, std::int64_t N)
{
    if (N < 1 || M < 0 || M >= 2 * N || std::gcd(M, N) != 1) {
        throw DomainError("dihedral label needs gcd(M,N) = 1 and 0 <= M < 2N");
    }
    DihedralLabel out;
    const bool even = M % 2 == 0;
    out.Nhat = even ? N : 2 * N;
    out.Mhat = even ? M / 2 : M;
    out.group = "D(" + std::to_string(out.Nhat) + ")";
    if (out.Mhat == 1) {
        if (out.Nhat == 3) {
            out.coxeter = "A2";
        } else if (out.Nhat == 4) {
            out.coxeter = "B2";
        } else if (out.Nhat == 6) {
            out.coxeter = "G2";
        }
    }
    const Rational half_angle(M, 2 * N);
    out.angles = {Rational(0), half_angle, Rational(1) - half_angle};
    auto t = triple_from_angles(out.angles);
    auto g = gram_matrix(*t.triple.exact);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.gram[i][j] = g[i][j].value();
        }
    }
    out.gram_singular = det3(g).is_zero();
    return out;
}

} // namespace pvi
