#ifndef PVI_CORE_HPP
#define PVI_CORE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pvi
{

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double ln2 = 0.69314718055994530941723212145817657;

// Error hierarchy. Every failure the library reports is one of these.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};
struct DegenerateLattice : Error {
    using Error::Error;
};
struct DenominatorZero : Error {
    using Error::Error;
};
struct DegenerateDenominator : Error {
    using Error::Error;
};
struct UnreachableTarget : Error {
    using Error::Error;
};
struct NearSingular : Error {
    using Error::Error;
};

// Exact rational with 64-bit parts, always stored reduced with a positive denominator.
class Rational
{
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    // Accepts "p/q", "p" or a plain integer with optional sign.
    static Rational parse(std::string_view s);
    std::string str() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational &r);

// Integer 2x2 matrix of determinant 1, congruent to the identity mod 2.
struct Gamma2Element {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    // Throws DomainError unless the element lies in Gamma(2).
    static Gamma2Element make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    static Gamma2Element identity() { return {}; }
    // Analytic-continuation matrices of the hypergeometric basis around 0 and 1.
    static Gamma2Element gamma0() { return {1, 0, 2, 1}; }
    static Gamma2Element gamma1() { return {1, -2, 0, 1}; }

    bool valid() const;
    Gamma2Element operator*(const Gamma2Element &o) const;
    Gamma2Element inverse() const { return {d, -b, -c, a}; }
    friend bool operator==(const Gamma2Element &, const Gamma2Element &) = default;
};

// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (also accepts j). Throws DomainError.
cplx parse_complex(std::string_view s);

} // namespace pvi

#endif
