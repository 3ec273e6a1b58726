#pragma once

#include "orthochroma/numtheory.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace orthochroma::fourcolor {

using numtheory::BigRational;
using numtheory::QSqrt2;

enum class Colour4 { Red, White, Black, Blue };

const char* to_string(Colour4 c);
Colour4 colour4_from_string(const std::string& name);

enum class CellKind { Axis, Arc, Octant };

/// Coordinate-wise sign classification of a nonzero vector: three entries
/// from {-1, 0, +1}, not all zero, 26 values in total. Two zeros mark an
/// axis, one zero a great-circle quadrant arc, none an open octant.
class SignPattern {
public:
    SignPattern(int sx, int sy, int sz);

    int operator[](int i) const { return s_[i]; }

    CellKind kind() const;

    /// Dense code in 0..26: (sx+1)*9 + (sy+1)*3 + (sz+1). Code 13 is the
    /// excluded all-zero pattern.
    int code() const { return (s_[0] + 1) * 9 + (s_[1] + 1) * 3 + (s_[2] + 1); }

    SignPattern antipode() const { return SignPattern(-s_[0], -s_[1], -s_[2]); }

    std::string str() const;  // e.g. "+-0"
    static SignPattern parse(std::string_view text);

    /// All 26 patterns in code order.
    static const std::vector<SignPattern>& all();

    friend bool operator==(const SignPattern& a, const SignPattern& b) { return a.s_ == b.s_; }
    friend std::strong_ordering operator<=>(const SignPattern& a, const SignPattern& b) {
        return a.code() <=> b.code();
    }

private:
    std::array<int, 3> s_;
};

SignPattern sign_pattern(const std::array<QSqrt2, 3>& v);
SignPattern sign_pattern(const std::array<BigRational, 3>& v);

/// Colour lookup indexed by SignPattern::code(); entry 13 is unused.
using ColourTable = std::array<Colour4, 27>;

/// The fixed sphere 4-colouring: axes x red / y white / z black, quadrant
/// arcs in the two colours of the axes they join, upper octants red, white,
/// black, blue, lower octants by antipode. verify_table certifies it proper.
const ColourTable& colour4_table();

Colour4 colour4(const SignPattern& p);
Colour4 colour4(const SignPattern& p, const ColourTable& table);

enum class OrthoClass { Always, Possible, Never };

const char* to_string(OrthoClass c);

/// Whether vectors with these sign patterns can be orthogonal: Always when
/// every coordinate product sign is 0, Possible when the product signs mix
/// + and -, Never when the inner product is sign-definite.
OrthoClass ortho_class(const SignPattern& p1, const SignPattern& p2);

struct PairCheck {
    SignPattern a, b;
    OrthoClass cls;
    Colour4 colour_a, colour_b;
    bool ok;  // cls == Never, or the colours differ
};

/// Finite properness certificate: all 26 x 26 ordered pattern pairs, with a
/// violation recorded wherever an Always/Possible pair is monochromatic.
struct TableReport {
    int pairs_checked = 0;
    std::vector<PairCheck> checks;
    std::vector<PairCheck> violations;
    bool pass() const { return violations.empty(); }
};

TableReport verify_table();
TableReport verify_table(const ColourTable& table);

/// Approximate front-end: coordinates within tol of zero snap to 0, the rest
/// keep their sign. Vectors with norm below 10*tol are rejected
/// (classification would be unreliable).
Colour4 colour4_float(double x, double y, double z, double tol = 1e-9);

}  // namespace orthochroma::fourcolor
