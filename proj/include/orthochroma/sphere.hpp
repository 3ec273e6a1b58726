#pragma once

#include "orthochroma/numtheory.hpp"
#include "orthochroma/projective.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace orthochroma::sphere {

using numtheory::BigInt;
using numtheory::BigRational;
using numtheory::QSqrt2;
using projective::Colour3;
using projective::PrimitiveTriple;

/// Rational unit vector (a/d, b/d, c/d) stored as a primitive quadruple:
/// a^2 + b^2 + c^2 = d^2, gcd(|a|,|b|,|c|) = 1, d > 0. Primitivity forces d
/// odd and exactly one of a, b, c odd (squares are 0 or 1 mod 4); both facts
/// are asserted at construction. Antipodal points are distinct values: signs
/// are kept, only the gcd is removed.
class SpherePoint {
public:
    /// Validates a^2+b^2+c^2 = d^2 and reduces to the primitive quadruple.
    static SpherePoint from_quadruple(BigInt a, BigInt b, BigInt c, BigInt d);

    /// Unit vector in the direction of t, when one with rational coordinates
    /// exists (x^2+y^2+z^2 a perfect square); empty otherwise.
    static std::optional<SpherePoint> from_projective(const PrimitiveTriple& t);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    BigRational x() const { return BigRational(a_, d_); }
    BigRational y() const { return BigRational(b_, d_); }
    BigRational z() const { return BigRational(c_, d_); }

    PrimitiveTriple triple() const { return PrimitiveTriple::normalize(a_, b_, c_); }

    SpherePoint antipode() const { return SpherePoint(-a_, -b_, -c_, d_); }

    friend bool operator==(const SpherePoint& p, const SpherePoint& q) {
        return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
    }
    friend std::strong_ordering operator<=>(const SpherePoint& p, const SpherePoint& q);

    std::string str() const;

private:
    SpherePoint(BigInt a, BigInt b, BigInt c, BigInt d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    BigInt a_, b_, c_, d_;
};

/// Parity colouring: red if a odd, white if b odd, black if c odd. Exactly
/// one coordinate is odd, so the cases are exclusive, and the colour agrees
/// with the 2-adic valuation colouring of the underlying triple.
Colour3 colour3(const SpherePoint& p);

struct InnerProduct {
    BigRational value;  // inner product of the unit vectors
    BigInt form;        // a a' + b b' + c c' of the primitive quadruples
    bool orthogonal() const { return form == 0; }
};

InnerProduct inner(const SpherePoint& p, const SpherePoint& q);

/// Stereographic projection from the north pole (0,0,1) onto the plane z = 0.
/// The inverse map sends (u, v) to
///   ( 2u, 2v, u^2+v^2-1 ) / (1 + u^2 + v^2),
/// which is never the north pole; the forward map is undefined exactly there.
SpherePoint stereo_inverse(const BigRational& u, const BigRational& v);
std::optional<std::pair<BigRational, BigRational>> stereo_project(const SpherePoint& p);

/// Unit vector with coordinates in Q(sqrt2); the squared-coordinate sum is
/// exactly 1.
class AlgSpherePoint {
public:
    /// Unit vector in the direction (x, y, z), exact in Q(sqrt2); defined
    /// precisely when x^2+y^2+z^2 is s^2 or 2 s^2 for an integer s. The input
    /// direction is preserved (no sign normalization).
    static std::optional<AlgSpherePoint> from_direction(const BigInt& x, const BigInt& y,
                                                       const BigInt& z);

    static AlgSpherePoint from_sphere(const SpherePoint& p);

    /// Adopts the coordinates as given; rejects anything off the unit sphere.
    static AlgSpherePoint from_coords(std::array<QSqrt2, 3> c);

    const QSqrt2& x() const { return c_[0]; }
    const QSqrt2& y() const { return c_[1]; }
    const QSqrt2& z() const { return c_[2]; }
    const std::array<QSqrt2, 3>& coords() const { return c_; }

    bool is_rational() const;

    QSqrt2 inner(const AlgSpherePoint& o) const;

    friend bool operator==(const AlgSpherePoint& p, const AlgSpherePoint& q) {
        return p.c_ == q.c_;
    }

    std::string str() const;

private:
    explicit AlgSpherePoint(std::array<QSqrt2, 3> c) : c_(std::move(c)) {}

    std::array<QSqrt2, 3> c_;
};

std::optional<AlgSpherePoint> alg_point(const PrimitiveTriple& t);
bool alg_orthogonal(const AlgSpherePoint& p, const AlgSpherePoint& q);

/// Primitive quadruple for an algebraic point with rational coordinates
/// (direction and sign preserved); empty when a sqrt2 part is nonzero.
std::optional<SpherePoint> to_sphere(const AlgSpherePoint& p);

}  // namespace orthochroma::sphere
