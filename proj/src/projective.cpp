#include "orthochroma/projective.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orthochroma::projective {

using numtheory::ValExponent;

const char* to_string(Colour3 c) {
    switch (c) {
        case Colour3::Red: return "red";
        case Colour3::White: return "white";
        case Colour3::Black: return "black";
    }
    return "?";
}

Colour3 colour3_from_string(const std::string& name) {
    if (name == "red") return Colour3::Red;
    if (name == "white") return Colour3::White;
    if (name == "black") return Colour3::Black;
    throw std::invalid_argument("unknown colour '" + name + "'");
}

PrimitiveTriple PrimitiveTriple::normalize(BigInt x, BigInt y, BigInt z) {
    if (x == 0 && y == 0 && z == 0) {
        throw std::invalid_argument("PrimitiveTriple: zero vector");
    }
    BigInt g = gcd(gcd(abs(x), abs(y)), abs(z));
    x /= g;
    y /= g;
    z /= g;
    int lead = x != 0 ? x.sign() : (y != 0 ? y.sign() : z.sign());
    if (lead < 0) {
        x = -x;
        y = -y;
        z = -z;
    }
    return PrimitiveTriple(std::move(x), std::move(y), std::move(z));
}

const BigInt& PrimitiveTriple::coord(int i) const {
    switch (i) {
        case 0: return x_;
        case 1: return y_;
        case 2: return z_;
    }
    throw std::out_of_range("PrimitiveTriple::coord");
}

std::strong_ordering operator<=>(const PrimitiveTriple& a, const PrimitiveTriple& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y_ != b.y_) return a.y_ < b.y_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.z_ != b.z_) return a.z_ < b.z_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string PrimitiveTriple::str() const {
    std::ostringstream os;
    os << "(" << x_ << "," << y_ << "," << z_ << ")";
    return os.str();
}

namespace {

Colour3 colour_from_exponents(const ValExponent& nx, const ValExponent& ny, const ValExponent& nz) {
    if (nx < ny && nx < nz) return Colour3::Red;
    if (nx >= ny && ny < nz) return Colour3::White;
    return Colour3::Black;
}

}  // namespace

Colour3 colour_valuation(const PrimitiveTriple& t, std::uint64_t p) {
    return colour_valuation_raw(t.x(), t.y(), t.z(), p);
}

Colour3 colour_valuation_raw(const BigInt& x, const BigInt& y, const BigInt& z, std::uint64_t p) {
    numtheory::require_prime(p);
    if (x == 0 && y == 0 && z == 0) {
        throw std::invalid_argument("colour_valuation: zero vector");
    }
    return colour_from_exponents(numtheory::p_valuation_int(x, p),
                                 numtheory::p_valuation_int(y, p),
                                 numtheory::p_valuation_int(z, p));
}

LineScanResult line_scan(const BigInt& a, const BigInt& b, const BigInt& c,
                         std::int64_t height, std::uint64_t p) {
    numtheory::require_prime(p);
    if (a == 0 && b == 0 && c == 0) {
        throw std::invalid_argument("line_scan: zero line");
    }
    if (height < 1) throw std::invalid_argument("line_scan: height must be >= 1");

    // Solve for the coordinate with the largest |coefficient|; the other two
    // range over [-H, H] and the pivot value is forced by the line equation.
    std::array<BigInt, 3> coeff = {a, b, c};
    int pivot = 0;
    for (int i = 1; i < 3; ++i) {
        if (abs(coeff[i]) > abs(coeff[pivot])) pivot = i;
    }
    const int f0 = pivot == 0 ? 1 : 0;
    const int f1 = pivot == 2 ? 1 : 2;

    std::set<PrimitiveTriple> found;
    const BigInt& cp = coeff[pivot];
    const BigInt& c0 = coeff[f0];
    const BigInt& c1 = coeff[f1];

    // Inner loop in int64 when the products cannot overflow.
    const bool small = abs(c0) <= 1'000'000 && abs(c1) <= 1'000'000 && abs(cp) <= 1'000'000 &&
                       height <= 1'000'000;
    auto emit = [&](const BigInt& u, const BigInt& v, const BigInt& w) {
        std::array<BigInt, 3> coords;
        coords[f0] = u;
        coords[f1] = v;
        coords[pivot] = w;
        found.insert(PrimitiveTriple::normalize(coords[0], coords[1], coords[2]));
    };

    if (small) {
        const std::int64_t k0 = c0.convert_to<std::int64_t>();
        const std::int64_t k1 = c1.convert_to<std::int64_t>();
        const std::int64_t kp = cp.convert_to<std::int64_t>();
        for (std::int64_t u = -height; u <= height; ++u) {
            for (std::int64_t v = -height; v <= height; ++v) {
                std::int64_t t = -(k0 * u + k1 * v);
                if (t % kp != 0) continue;
                std::int64_t w = t / kp;
                if (w < -height || w > height) continue;
                if (u == 0 && v == 0 && w == 0) continue;
                emit(BigInt(u), BigInt(v), BigInt(w));
            }
        }
    } else {
        for (BigInt u = -height; u <= height; ++u) {
            for (BigInt v = -height; v <= height; ++v) {
                BigInt t = -(c0 * u + c1 * v);
                BigInt w, r;
                divide_qr(t, cp, w, r);
                if (r != 0) continue;
                if (w < -height || w > height) continue;
                if (u == 0 && v == 0 && w == 0) continue;
                emit(u, v, w);
            }
        }
    }

    LineScanResult result;
    result.points.reserve(found.size());
    for (const auto& t : found) {
        Colour3 col = colour_valuation(t, p);
        result.seen[static_cast<int>(col)] = true;
        result.points.push_back({t, col});
    }
    return result;
}

}  // namespace orthochroma::projective
