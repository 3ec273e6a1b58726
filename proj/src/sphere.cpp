#include "orthochroma/sphere.hpp"

#include <sstream>

namespace orthochroma::sphere {

SpherePoint SpherePoint::from_quadruple(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (d == 0) throw std::invalid_argument("SpherePoint: d must be positive");
    if (d < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    if (a * a + b * b + c * c != d * d) {
        throw std::invalid_argument("SpherePoint: a^2+b^2+c^2 != d^2");
    }
    BigInt g = gcd(gcd(abs(a), abs(b)), abs(c));
    a /= g;
    b /= g;
    c /= g;
    d /= g;
    // Primitivity theorems: d odd, exactly one of a, b, c odd.
    int odd = int(bit_test(a, 0)) + int(bit_test(b, 0)) + int(bit_test(c, 0));
    if (!bit_test(d, 0) || odd != 1) {
        throw std::logic_error("SpherePoint: parity invariant violated");
    }
    return SpherePoint(std::move(a), std::move(b), std::move(c), std::move(d));
}

std::optional<SpherePoint> SpherePoint::from_projective(const PrimitiveTriple& t) {
    BigInt n = t.x() * t.x() + t.y() * t.y() + t.z() * t.z();
    auto s = numtheory::int_sqrt_exact(n);
    if (!s) return std::nullopt;
    return from_quadruple(t.x(), t.y(), t.z(), *s);
}

std::strong_ordering operator<=>(const SpherePoint& p, const SpherePoint& q) {
    auto cmp = [](const BigInt& u, const BigInt& v) {
        return u < v ? std::strong_ordering::less
                     : (u > v ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (auto c = cmp(p.d_, q.d_); c != 0) return c;
    if (auto c = cmp(p.a_, q.a_); c != 0) return c;
    if (auto c = cmp(p.b_, q.b_); c != 0) return c;
    return cmp(p.c_, q.c_);
}

std::string SpherePoint::str() const {
    std::ostringstream os;
    os << "(" << a_ << "," << b_ << "," << c_ << ";" << d_ << ")";
    return os.str();
}

Colour3 colour3(const SpherePoint& p) {
    if (bit_test(p.a(), 0)) return Colour3::Red;
    if (bit_test(p.b(), 0)) return Colour3::White;
    return Colour3::Black;
}

InnerProduct inner(const SpherePoint& p, const SpherePoint& q) {
    BigInt form = p.a() * q.a() + p.b() * q.b() + p.c() * q.c();
    return {BigRational(form, p.d() * q.d()), std::move(form)};
}

SpherePoint stereo_inverse(const BigRational& u, const BigRational& v) {
    BigRational denom = 1 + u * u + v * v;
    BigRational x = 2 * u / denom;
    BigRational y = 2 * v / denom;
    BigRational z = (u * u + v * v - 1) / denom;
    // Scale by the lcm of the denominators; the result is automatically
    // primitive (a common factor would allow a smaller common denominator).
    BigInt l = lcm(lcm(denominator(x), denominator(y)), denominator(z));
    return SpherePoint::from_quadruple(numerator(x) * (l / denominator(x)),
                                       numerator(y) * (l / denominator(y)),
                                       numerator(z) * (l / denominator(z)), l);
}

std::optional<std::pair<BigRational, BigRational>> stereo_project(const SpherePoint& p) {
    if (p.c() == p.d()) return std::nullopt;  // north pole
    BigInt w = p.d() - p.c();
    return std::make_pair(BigRational(p.a(), w), BigRational(p.b(), w));
}

std::optional<AlgSpherePoint> AlgSpherePoint::from_direction(const BigInt& x, const BigInt& y,
                                                             const BigInt& z) {
    if (x == 0 && y == 0 && z == 0) {
        throw std::invalid_argument("AlgSpherePoint: zero direction");
    }
    BigInt n = x * x + y * y + z * z;
    // sqrt(n) lies in Q(sqrt2) for integer n exactly when n = s^2 or n = 2 s^2.
    if (auto s = numtheory::int_sqrt_exact(n)) {
        std::array<QSqrt2, 3> c = {QSqrt2(BigRational(x, *s), 0), QSqrt2(BigRational(y, *s), 0),
                                   QSqrt2(BigRational(z, *s), 0)};
        return AlgSpherePoint(std::move(c));
    }
    if (bit_test(n, 0) == 0) {
        if (auto s = numtheory::int_sqrt_exact(n >> 1)) {
            // 1/(s*sqrt2) = sqrt2/(2s)
            BigInt t = 2 * *s;
            std::array<QSqrt2, 3> c = {QSqrt2(0, BigRational(x, t)), QSqrt2(0, BigRational(y, t)),
                                       QSqrt2(0, BigRational(z, t))};
            return AlgSpherePoint(std::move(c));
        }
    }
    return std::nullopt;
}

AlgSpherePoint AlgSpherePoint::from_sphere(const SpherePoint& p) {
    std::array<QSqrt2, 3> c = {QSqrt2(p.x(), 0), QSqrt2(p.y(), 0), QSqrt2(p.z(), 0)};
    return AlgSpherePoint(std::move(c));
}

AlgSpherePoint AlgSpherePoint::from_coords(std::array<QSqrt2, 3> c) {
    QSqrt2 n = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    if (!(n == QSqrt2(1, 0))) {
        throw std::invalid_argument("AlgSpherePoint: coordinates are not a unit vector");
    }
    return AlgSpherePoint(std::move(c));
}

bool AlgSpherePoint::is_rational() const {
    return c_[0].is_rational() && c_[1].is_rational() && c_[2].is_rational();
}

QSqrt2 AlgSpherePoint::inner(const AlgSpherePoint& o) const {
    return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2];
}

std::string AlgSpherePoint::str() const {
    std::ostringstream os;
    os << "(" << c_[0].str() << "," << c_[1].str() << "," << c_[2].str() << ")";
    return os.str();
}

std::optional<AlgSpherePoint> alg_point(const PrimitiveTriple& t) {
    return AlgSpherePoint::from_direction(t.x(), t.y(), t.z());
}

bool alg_orthogonal(const AlgSpherePoint& p, const AlgSpherePoint& q) {
    return p.inner(q).is_zero();
}

std::optional<SpherePoint> to_sphere(const AlgSpherePoint& p) {
    if (!p.is_rational()) return std::nullopt;
    const BigRational x = p.x().rat(), y = p.y().rat(), z = p.z().rat();
    BigInt l = lcm(lcm(denominator(x), denominator(y)), denominator(z));
    return SpherePoint::from_quadruple(numerator(x) * (l / denominator(x)),
                                       numerator(y) * (l / denominator(y)),
                                       numerator(z) * (l / denominator(z)), l);
}

}  // namespace orthochroma::sphere
