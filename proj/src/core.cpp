#include <pvi/core.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

namespace pvi
{

namespace
{

std::int64_t checked(__int128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("rational overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make_reduced(__int128 n, __int128 d)
{
    if (d == 0) {
        throw DomainError("zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    return Rational(checked(n), checked(d));
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) {
        throw DomainError("zero denominator");
    }
    auto g = std::gcd(n, d);
    if (g == 0) {
        g = 1;
    }
    n /= g;
    d /= g;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    num_ = n;
    den_ = d;
}

Rational operator+(const Rational &a, const Rational &b)
{
    return make_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b)
{
    return a + (-b);
}

Rational operator*(const Rational &a, const Rational &b)
{
    return make_reduced(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b)
{
    if (b.num_ == 0) {
        throw DomainError("division by zero rational");
    }
    return make_reduced(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    auto lhs = static_cast<__int128>(a.num_) * b.den_;
    auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational abs(const Rational &r)
{
    return r.num() < 0 ? -r : r;
}

Rational Rational::parse(std::string_view s)
{
    auto parse_int = [](std::string_view t) {
        std::int64_t v = 0;
        if (!t.empty() && t.front() == '+') {
            t.remove_prefix(1);
        }
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
            throw DomainError("malformed rational '" + std::string(t) + "'");
        }
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s));
    }
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Gamma2Element Gamma2Element::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    Gamma2Element g{a, b, c, d};
    if (!g.valid()) {
        throw DomainError("matrix is not in Gamma(2)");
    }
    return g;
}

bool Gamma2Element::valid() const
{
    auto odd = [](std::int64_t v) { return (v % 2 + 2) % 2 == 1; };
    return static_cast<__int128>(a) * d - static_cast<__int128>(b) * c == 1 && odd(a) && odd(d) && !odd(b) && !odd(c);
}

Gamma2Element Gamma2Element::operator*(const Gamma2Element &o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

cplx parse_complex(std::string_view s)
{
    std::string t;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            t.push_back(ch);
        }
    }
    if (t.empty()) {
        throw DomainError("empty complex literal");
    }
    auto to_double = [&](const std::string &part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        char *end = nullptr;
        double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size()) {
            throw DomainError("malformed complex literal '" + std::string(s) + "'");
        }
        return v;
    };
    bool imag_unit = t.back() == 'i' || t.back() == 'j';
    if (!imag_unit) {
        return {to_double(t), 0.0};
    }
    t.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, to_double(t)};
    }
    return {to_double(t.substr(0, split)), to_double(t.substr(split))};
}

} // namespace pvi
