#include "orthochroma/fourcolor.hpp"

#include <cmath>
#include <stdexcept>

namespace orthochroma::fourcolor {

const char* to_string(Colour4 c) {
    switch (c) {
        case Colour4::Red: return "red";
        case Colour4::White: return "white";
        case Colour4::Black: return "black";
        case Colour4::Blue: return "blue";
    }
    return "?";
}

Colour4 colour4_from_string(const std::string& name) {
    if (name == "red") return Colour4::Red;
    if (name == "white") return Colour4::White;
    if (name == "black") return Colour4::Black;
    if (name == "blue") return Colour4::Blue;
    throw std::invalid_argument("unknown colour '" + name + "'");
}

const char* to_string(OrthoClass c) {
    switch (c) {
        case OrthoClass::Always: return "always";
        case OrthoClass::Possible: return "possible";
        case OrthoClass::Never: return "never";
    }
    return "?";
}

SignPattern::SignPattern(int sx, int sy, int sz) : s_{sx, sy, sz} {
    for (int v : s_) {
        if (v < -1 || v > 1) throw std::invalid_argument("SignPattern: entries must be -1, 0 or 1");
    }
    if (sx == 0 && sy == 0 && sz == 0) {
        throw std::invalid_argument("SignPattern: zero vector has no pattern");
    }
}

CellKind SignPattern::kind() const {
    int zeros = int(s_[0] == 0) + int(s_[1] == 0) + int(s_[2] == 0);
    if (zeros == 2) return CellKind::Axis;
    if (zeros == 1) return CellKind::Arc;
    return CellKind::Octant;
}

std::string SignPattern::str() const {
    std::string out;
    for (int v : s_) out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    return out;
}

SignPattern SignPattern::parse(std::string_view text) {
    if (text.size() != 3) throw std::invalid_argument("SignPattern: expected 3 characters");
    int s[3];
    for (int i = 0; i < 3; ++i) {
        switch (text[i]) {
            case '+': s[i] = 1; break;
            case '-': s[i] = -1; break;
            case '0': s[i] = 0; break;
            default: throw std::invalid_argument("SignPattern: bad character");
        }
    }
    return SignPattern(s[0], s[1], s[2]);
}

const std::vector<SignPattern>& SignPattern::all() {
    static const std::vector<SignPattern> patterns = [] {
        std::vector<SignPattern> out;
        for (int sx = -1; sx <= 1; ++sx)
            for (int sy = -1; sy <= 1; ++sy)
                for (int sz = -1; sz <= 1; ++sz)
                    if (sx != 0 || sy != 0 || sz != 0) out.emplace_back(sx, sy, sz);
        return out;
    }();
    return patterns;
}

SignPattern sign_pattern(const std::array<QSqrt2, 3>& v) {
    return SignPattern(v[0].sgn(), v[1].sgn(), v[2].sgn());
}

SignPattern sign_pattern(const std::array<BigRational, 3>& v) {
    return SignPattern(numtheory::sgn(v[0]), numtheory::sgn(v[1]), numtheory::sgn(v[2]));
}

const ColourTable& colour4_table() {
    static const ColourTable table = [] {
        ColourTable t{};
        auto set = [&t](const char* pat, Colour4 c) { t[SignPattern::parse(pat).code()] = c; };
        // axes
        set("+00", Colour4::Red);
        set("-00", Colour4::Red);
        set("0+0", Colour4::White);
        set("0-0", Colour4::White);
        set("00+", Colour4::Black);
        set("00-", Colour4::Black);
        // z = 0 circle, quadrant arcs in red/white
        set("++0", Colour4::Red);
        set("-+0", Colour4::White);
        set("--0", Colour4::Red);
        set("+-0", Colour4::White);
        // y = 0 circle, red/black
        set("+0+", Colour4::Red);
        set("-0+", Colour4::Black);
        set("-0-", Colour4::Red);
        set("+0-", Colour4::Black);
        // x = 0 circle, white/black
        set("0++", Colour4::White);
        set("0-+", Colour4::Black);
        set("0--", Colour4::White);
        set("0+-", Colour4::Black);
        // upper octants, lower octants antipodal
        set("+++", Colour4::Red);
        set("-++", Colour4::White);
        set("--+", Colour4::Black);
        set("+-+", Colour4::Blue);
        set("---", Colour4::Red);
        set("+--", Colour4::White);
        set("++-", Colour4::Black);
        set("-+-", Colour4::Blue);
        return t;
    }();
    return table;
}

Colour4 colour4(const SignPattern& p) { return colour4_table()[p.code()]; }

Colour4 colour4(const SignPattern& p, const ColourTable& table) { return table[p.code()]; }

OrthoClass ortho_class(const SignPattern& p1, const SignPattern& p2) {
    bool pos = false, neg = false;
    for (int i = 0; i < 3; ++i) {
        int s = p1[i] * p2[i];
        if (s > 0) pos = true;
        if (s < 0) neg = true;
    }
    if (!pos && !neg) return OrthoClass::Always;
    if (pos && neg) return OrthoClass::Possible;
    return OrthoClass::Never;
}

TableReport verify_table() { return verify_table(colour4_table()); }

TableReport verify_table(const ColourTable& table) {
    TableReport report;
    const auto& pats = SignPattern::all();
    report.checks.reserve(pats.size() * pats.size());
    for (const auto& a : pats) {
        for (const auto& b : pats) {
            PairCheck check{a, b, ortho_class(a, b), colour4(a, table), colour4(b, table), true};
            if (check.cls != OrthoClass::Never) {
                check.ok = check.colour_a != check.colour_b;
            }
            if (!check.ok) report.violations.push_back(check);
            report.checks.push_back(check);
            ++report.pairs_checked;
        }
    }
    return report;
}

Colour4 colour4_float(double x, double y, double z, double tol) {
    if (tol < 0 || !std::isfinite(tol)) throw std::invalid_argument("colour4_float: bad tolerance");
    double norm = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(norm) || norm < 10 * tol) {
        throw std::invalid_argument("colour4_float: norm below 10*tol, classification unreliable");
    }
    auto snap = [tol](double v) { return std::fabs(v) <= tol ? 0 : (v > 0 ? 1 : -1); };
    return colour4(SignPattern(snap(x), snap(y), snap(z)));
}

}  // namespace orthochroma::fourcolor
