#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthochroma::numtheory {

// Arbitrary-precision integers and gcd-reduced rationals (denominator > 0,
// canonical zero 0/1) are provided by Boost.Multiprecision.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a runtime parameter that must be prime is not.
class not_prime_error : public std::invalid_argument {
public:
    explicit not_prime_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Deterministic primality test for 64-bit integers (trial division for small
/// n, Miller-Rabin with a fixed witness set otherwise).
bool is_prime_u64(std::uint64_t n);

/// Throws not_prime_error unless p is prime.
void require_prime(std::uint64_t p);

/// Exact integer square root: returns s with s*s == n when n is a perfect
/// square, empty otherwise. Negative input is rejected.
std::optional<BigInt> int_sqrt_exact(const BigInt& n);

int sgn(const BigInt& v);
int sgn(const BigRational& v);
double to_double(const BigRational& q);

/// Parses "n" or "n/m" with arbitrary-precision parts. Throws on malformed
/// input or zero denominator.
BigRational parse_rational(const std::string& text);
std::string rational_str(const BigRational& q);

/// A valuation value nu = 2^(-n), stored as the exponent n; infinity() encodes
/// nu(0) = 0. Comparison operators order by exponent with infinity greatest,
/// so valuation comparisons come out reversed:
///   nu(x) > nu(y)   <=>   exponent(x) < exponent(y).
class ValExponent {
public:
    explicit ValExponent(BigInt n) : finite_(true), exponent_(std::move(n)) {}

    static ValExponent infinity() { return ValExponent(); }

    bool is_infinite() const { return !finite_; }

    /// Exponent of a finite value; throws std::logic_error for infinity.
    const BigInt& exponent() const;

    friend bool operator==(const ValExponent& a, const ValExponent& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.exponent_ == b.exponent_;
    }

    friend std::strong_ordering operator<=>(const ValExponent& a, const ValExponent& b) {
        if (a.finite_ && b.finite_) {
            if (a.exponent_ < b.exponent_) return std::strong_ordering::less;
            if (a.exponent_ > b.exponent_) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        if (a.finite_) return std::strong_ordering::less;
        if (b.finite_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;

private:
    ValExponent() : finite_(false), exponent_(0) {}

    bool finite_;
    BigInt exponent_;
};

/// Exponent of the largest power of p dividing n; infinity for n = 0.
ValExponent p_valuation_int(const BigInt& n, std::uint64_t p);

/// p-adic valuation of a rational q = a * p^n with a p-free; returns n,
/// infinity for q = 0. p must be prime (not_prime_error otherwise).
ValExponent p_valuation(const BigRational& q, std::uint64_t p);

/// Element a + b*sqrt(2) of the field Q(sqrt(2)). The representation is
/// unique, so equality and sign tests are exact.
class QSqrt2 {
public:
    QSqrt2() : rat_(0), sq2_(0) {}
    QSqrt2(BigRational rational_part, BigRational sqrt2_coeff)
        : rat_(std::move(rational_part)), sq2_(std::move(sqrt2_coeff)) {}

    static QSqrt2 from_rational(BigRational q) { return QSqrt2(std::move(q), BigRational(0)); }

    const BigRational& rat() const { return rat_; }
    const BigRational& sqrt2_coeff() const { return sq2_; }

    bool is_zero() const { return rat_ == 0 && sq2_ == 0; }
    bool is_rational() const { return sq2_ == 0; }

    /// Exact sign in the real embedding sqrt(2) > 0.
    int sgn() const;

    /// Field norm a^2 - 2 b^2; zero only for the zero element.
    BigRational norm() const { return rat_ * rat_ - 2 * sq2_ * sq2_; }

    QSqrt2 conjugate() const { return QSqrt2(rat_, -sq2_); }

    /// (a + b sqrt2)^-1 = (a - b sqrt2) / (a^2 - 2 b^2); throws on zero.
    QSqrt2 inverse() const;

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.rat_ + y.rat_, x.sq2_ + y.sq2_);
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.rat_ - y.rat_, x.sq2_ - y.sq2_);
    }
    friend QSqrt2 operator-(const QSqrt2& x) { return QSqrt2(-x.rat_, -x.sq2_); }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.rat_ * y.rat_ + 2 * x.sq2_ * y.sq2_,
                      x.rat_ * y.sq2_ + x.sq2_ * y.rat_);
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.rat_ == y.rat_ && x.sq2_ == y.sq2_;
    }

    std::string str() const;

private:
    BigRational rat_;
    BigRational sq2_;
};

}  // namespace orthochroma::numtheory
