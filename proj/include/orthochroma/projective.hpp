#pragma once

#include "orthochroma/numtheory.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace orthochroma::projective {

using numtheory::BigInt;

enum class Colour3 { Red, White, Black };

const char* to_string(Colour3 c);
Colour3 colour3_from_string(const std::string& name);

/// Integer representative (x, y, z) of a rational projective point:
/// not all zero, gcd 1, first nonzero coordinate positive. The sign
/// normalization fixes a canonical representative for identity and storage;
/// the valuation colouring does not depend on it.
class PrimitiveTriple {
public:
    static PrimitiveTriple normalize(BigInt x, BigInt y, BigInt z);

    const BigInt& x() const { return x_; }
    const BigInt& y() const { return y_; }
    const BigInt& z() const { return z_; }
    const BigInt& coord(int i) const;

    friend bool operator==(const PrimitiveTriple& a, const PrimitiveTriple& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }
    friend std::strong_ordering operator<=>(const PrimitiveTriple& a, const PrimitiveTriple& b);

    std::string str() const;

private:
    PrimitiveTriple(BigInt x, BigInt y, BigInt z)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    BigInt x_, y_, z_;
};

/// Valuation colouring of the projective plane for the p-adic valuation.
/// With nu = 2^(-n) the rules become exponent comparisons:
///   red:    n(x) < n(y)  and  n(x) < n(z)
///   white:  n(x) >= n(y) and  n(y) < n(z)
///   black:  n(x) >= n(z) and  n(y) >= n(z)
/// The three cases partition all inputs.
Colour3 colour_valuation(const PrimitiveTriple& t, std::uint64_t p);

/// Same colouring evaluated on a raw (not necessarily primitive) nonzero
/// triple. Scaling all coordinates shifts every exponent equally, so the
/// result matches the normalized triple's colour.
Colour3 colour_valuation_raw(const BigInt& x, const BigInt& y, const BigInt& z, std::uint64_t p);

struct LineScanEntry {
    PrimitiveTriple point;
    Colour3 colour;
};

struct LineScanResult {
    std::vector<LineScanEntry> points;  // sorted by (x, y, z)
    std::array<bool, 3> seen{false, false, false};

    int colour_count() const { return int(seen[0]) + int(seen[1]) + int(seen[2]); }
    bool has(Colour3 c) const { return seen[static_cast<int>(c)]; }
};

/// All primitive triples with max(|x|,|y|,|z|) <= height on the line
/// a x + b y + c z = 0, with their colours. (a,b,c) must be nonzero and
/// height >= 1.
LineScanResult line_scan(const BigInt& a, const BigInt& b, const BigInt& c,
                         std::int64_t height, std::uint64_t p);

}  // namespace orthochroma::projective
